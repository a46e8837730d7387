import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import numpy as np
import pytest

from approxlcs import cli, validate_string_set
from approxlcs.oracle import OracleBudget
from approxlcs.seqio import emit

from support import reference_distance


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("approxlcs").joinpath("report_schema.json").read_text())


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text("aabcf\nfabcd\ndgiabc\nahabch\n")
    return path


def run_cli(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_worked_example_json(example_file, capsys, schema):
    code, out, _ = run_cli(["--problem", "rkt-lcs", "--metric", "hamming", "--k", 2, "--t", 3, example_file], capsys)
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert code == 0
    assert (report["length"], report["answer"]) == (5, "aabcf")
    assert (report["source_index_1based"], report["offset_1based"]) == (1, 1)
    strings = example_file.read_text().split()
    for w in report["witnesses"]:
        text = strings[w["string_index_1based"] - 1][w["start_1based"] - 1 : w["end_1based"]]
        assert reference_distance(b"aabcf", text.encode(), None) == w["distance"] <= 2


def test_no_solution_exit_code(tmp_path, capsys, schema):
    path = tmp_path / "d.txt"
    path.write_text("abc\nxyz\n")
    code, out, _ = run_cli(["--problem", "rk-lcs", "--k", 0, path], capsys)
    assert code == 3
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report["found"] is False and report["length"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["--k", "-1"],
        ["--metric", "weighted"],
        ["--problem", "rk-lcss", "--metric", "edit"],
        ["--t", "9"],
        ["--solver", "maxlcp", "--t", "2"],
        ["--problem", "bogus"],
    ],
)
def test_usage_errors(argv, example_file, capsys):
    try:
        code = cli.main(argv + [str(example_file)])
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_missing_file(capsys, tmp_path):
    assert cli.main([str(tmp_path / "nope.txt")]) == 2
    assert "error" in capsys.readouterr().err


def test_bad_fasta_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.fa"
    path.write_text("ACGT\n")
    assert cli.main(["--format", "fasta", str(path)]) == 2


@pytest.mark.parametrize("solver", ["lengthstat", "maxlcp", "subsets", "oracle"])
@pytest.mark.parametrize("metric", ["hamming", "edit"])
def test_solvers_report_same_length(solver, metric, tmp_path, capsys, schema):
    rng = np.random.default_rng(7)
    for trial in range(5):
        raw = ["".join(rng.choice(list("ab"), int(rng.integers(3, 9)))) for _ in range(3)]
        path = tmp_path / f"r{trial}.txt"
        path.write_text("\n".join(raw) + "\n")
        lengths = set()
        for s in ("lengthstat", solver):
            code, out, _ = run_cli(["--k", 1, "--metric", metric, "--solver", s, path], capsys)
            report = json.loads(out)
            jsonschema.validate(report, schema)
            lengths.add(report["length"])
        assert len(lengths) == 1


def test_weighted_costs_flag(tmp_path, capsys, schema):
    costs = tmp_path / "c.tsv"
    costs.write_text("sub\ta\tb\t3\nsub\tb\ta\t3\ndel\ta\t-\t3\ndel\tb\t-\t3\n")
    path = tmp_path / "w.txt"
    path.write_text("aaa\nbbb\n")
    code, out, _ = run_cli(["--metric", "weighted", "--costs", costs, "--k", 2, path], capsys)
    report = json.loads(out)
    jsonschema.validate(report, schema)
    # under unit costs "aa" -> "bb" fits k=2; here placing either letter costs 3
    assert code == 3 and not report["found"]
    code, out, _ = run_cli(["--metric", "edit", "--k", 2, path], capsys)
    assert code == 0 and json.loads(out)["length"] == 2


def test_lcss_and_indeterminate(tmp_path, capsys, schema):
    path = tmp_path / "x.fa"
    path.write_text(">p\nARGT\n>q\nGGTA\n")
    code, out, _ = run_cli(["--format", "fasta", "--indeterminate", "--k", 0, path], capsys)
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report["names"] == ["p", "q"] and report["length"] == 3 and report["answer"] == "[AG]GT"
    code, out, _ = run_cli(["--problem", "rk-lcss", "--k", 1, "--format", "fasta", path], capsys)
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report["answer"] is None and len(report["answers"]) == 2


def test_elcs_ignores_k(example_file, capsys):
    code, out, _ = run_cli(["--problem", "elcs", "--k", 3, example_file], capsys)
    report = json.loads(out)
    assert report["k"] == 0 and report["length"] == 3


@pytest.mark.parametrize("fmt", ["tsv", "human"])
def test_text_outputs(fmt, example_file, capsys):
    code, out, _ = run_cli(["--k", 2, "--t", 3, "--output", fmt, example_file], capsys)
    assert code == 0
    if fmt == "tsv":
        assert out.splitlines()[1] == "string\tstart\tend\tdistance\tempty"
        assert len(out.splitlines()) == 5
    else:
        assert "length 5" in out and "'aabcf'" in out


def test_oracle_budget_from_env(example_file, capsys, monkeypatch):
    monkeypatch.setenv("APPROXLCS_ORACLE_MAX_ELL", "3")
    code, _, err = run_cli(["--solver", "oracle", example_file], capsys)
    assert code == 2 and "cap" in err


def test_gen_gadget_rklcs(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run_cli(["gen-gadget", "rklcs", "--M", 2, "--d", 2, "--nv", 2, "--q", 1, "--plant", "--out", out], capsys)
    side = json.loads((tmp_path / "g.txt.json").read_text())
    assert code == 0 and len(out.read_text().split()) == 3
    assert (side["k"], side["threshold"], side["planted"]) == (2, 42, True)


def test_gen_gadget_rklcss(tmp_path, capsys):
    out = tmp_path / "h.txt"
    code, _, _ = run_cli(["gen-gadget", "rklcss", "--m", 2, "--d", 1, "--nv", 2, "--q", 1, "--out", out], capsys)
    side = json.loads((tmp_path / "h.txt.json").read_text())
    assert code == 0 and len(out.read_text().split()) == 2
    assert (side["k"], side["threshold"]) == (3, 33)


def test_gen_gadget_zero_dimension(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["gen-gadget", "rklcs", "--M", "2", "--d", "0", "--nv", "2"])
    assert exc.value.code == 2


def test_gadget_file_feeds_solver(tmp_path, capsys):
    out = tmp_path / "g.txt"
    run_cli(["gen-gadget", "rklcss", "--m", 2, "--d", 1, "--nv", 2, "--plant", "--out", out], capsys)
    side = json.loads((tmp_path / "g.txt.json").read_text())
    code, report, _ = run_cli(["--problem", "rk-lcss", "--k", side["k"], out], capsys)
    assert json.loads(report)["length"] >= side["threshold"]


def test_run_config_direct(example_file):
    cfg = cli.RunConfig(input=example_file, k=2, t=3, oracle_budget=OracleBudget())
    stream = io.StringIO()
    assert cli.run(cfg, stream) == 0
    assert json.loads(stream.getvalue())["length"] == 5


def test_console_script_entry(example_file):
    proc = subprocess.run(
        [sys.executable, "-m", "approxlcs.cli", "--k", "2", "--t", "3", "--output", "human", str(example_file)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "aabcf" in proc.stdout
