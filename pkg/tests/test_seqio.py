import pytest
from hypothesis import given
from hypothesis import strategies as st

from approxlcs import DistanceMetric, IndeterminateString, edit_distance, validate_string_set
from approxlcs.errors import EmptySequence, ParseError, UnknownIUPACCode
from approxlcs.seqio import emit, expand_iupac, ingest, parse, parse_cost_table, read_records


def test_lines_skip_blank(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("aabcf\nfabcd\n\ndgiabc\nahabch\n")
    S = ingest(path)
    assert S.m == 4 and S[2] == b"dgiabc"


def test_fasta_names_and_lowercasing():
    S, names = parse(">one desc\nACG\nT\n>two\nacgg\n", "fasta")
    assert names == ["one desc", "two"] and S.names == ("one desc", "two")
    assert S[0] == b"acgt"
    S, _ = parse(">a\nACG\n>b\nAC\n", "fasta", normalize=False)
    assert S[0] == b"ACG"


def test_fasta_protein_kept():
    S, _ = parse(">a\nMKV\n>b\nMKL\n", "fasta")
    assert S[0] == b"MKV"


def test_fasta_errors():
    with pytest.raises(ParseError) as err:
        read_records("ACG\n>x\nA\n", "fasta")
    assert err.value.line == 1
    with pytest.raises(EmptySequence):
        read_records(">x\n>y\nA\n", "fasta")


def test_iupac_expansion():
    s = expand_iupac("ARG")
    assert s.positions == (b"A", b"AG", b"G")
    assert expand_iupac("n").positions == (b"ACGT",)
    assert expand_iupac("[AT]C").positions == (b"AT", b"C")
    with pytest.raises(UnknownIUPACCode):
        expand_iupac("AXG", lineno=3)


def test_indeterminate_fasta():
    ind, names = parse(">r\nARG\n>s\nNNA\n", "fasta", indeterminate=True)
    assert isinstance(ind[0], IndeterminateString) and names == ["r", "s"]


@given(st.lists(st.text("acgt", min_size=1, max_size=12), min_size=2, max_size=5), st.sampled_from(["lines", "fasta"]))
def test_roundtrip(raw, fmt):
    S = validate_string_set(raw)
    back, _ = parse(emit(S, fmt), fmt)
    assert tuple(back) == tuple(S)


def test_indeterminate_roundtrip():
    ind = [IndeterminateString.parse("[AT]G[CG]T"), IndeterminateString.parse("CA")]
    back, _ = parse(emit(ind), "lines", indeterminate=True)
    assert back == ind


def test_cost_table():
    metric = parse_cost_table("# costs\nsub\ta\tb\t3\nins\t-\tc\t2\ndel\ta\t-\t4\n")
    assert metric.kind == "weighted"
    assert edit_distance("a", "b", metric) == 3
    assert edit_distance("", "c", metric) == 2
    assert edit_distance("a", "", metric) == 4
    assert edit_distance("x", "y", metric) == 1


@pytest.mark.parametrize(
    "text",
    ["sub\ta\tb\n", "sub\ta\tb\tx\n", "mov\ta\tb\t1\n", "ins\ta\tb\t1\n", "sub\ta\tb\t0\n"],
)
def test_cost_table_errors(text):
    with pytest.raises(ParseError):
        parse_cost_table(text)


def test_cost_table_default_is_unit_edit():
    metric = parse_cost_table("")
    assert edit_distance("kitten", "sitting", metric) == edit_distance("kitten", "sitting", DistanceMetric.edit())
