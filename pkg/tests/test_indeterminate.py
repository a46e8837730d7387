import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from approxlcs import (
    DNA,
    BitMatrix,
    IndeterminateString,
    compatibility_matrix,
    encode_boolean_matrix,
    lcp_hk_indet,
    lcp_hk_table,
    solve_rkt_lcs,
    solve_rkt_lcs_indet,
    validate_string_set,
)
from approxlcs.errors import TooFewStrings
from approxlcs.indeterminate import letter_masks
from approxlcs.strings import Alphabet, indeterminate_mismatches

from support import witness_failures

METHODS = ("naive", "blocked", "bitmask")

position = st.sets(st.sampled_from(b"ACGT"), min_size=1, max_size=3).map(lambda s: bytes(sorted(s)))
indet = st.lists(position, min_size=1, max_size=9).map(lambda ps: IndeterminateString(tuple(ps)))


def test_encoding_rows():
    s = IndeterminateString.parse("[A,T]G[CG]T")
    dense = encode_boolean_matrix(s, DNA).to_dense().astype(int).tolist()
    assert dense == [[1, 0, 0, 1], [0, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]


def test_bitmatrix_roundtrip_and_transpose():
    rng = np.random.default_rng(0)
    dense = rng.random((5, 130)) < 0.3
    bm = BitMatrix.from_dense(dense)
    assert bm.shape == (5, 130)
    assert np.array_equal(bm.to_dense(), dense)
    assert np.array_equal(bm.transpose().to_dense(), dense.T)
    assert bm[2, 129] == int(dense[2, 129])


@given(indet, indet, st.sampled_from(METHODS))
def test_paths_match_definition(s_i, s_j, method):
    got = compatibility_matrix(s_i, s_j, DNA, method).to_dense()
    want = [[bool(set(a) & set(b)) for b in s_j.positions] for a in s_i.positions]
    assert got.tolist() == want


def test_blocked_path_with_large_alphabet():
    letters = bytes(range(40, 140))  # 100 letters: no single-word mask
    alpha = Alphabet(letters)
    rng = np.random.default_rng(1)
    mk = lambda n: IndeterminateString(tuple(bytes(rng.choice(list(letters), 3, replace=False).astype(np.uint8)) for _ in range(n)))  # noqa: E731
    s_i, s_j = mk(7), mk(11)
    blocked = compatibility_matrix(s_i, s_j, alpha)
    assert blocked == compatibility_matrix(s_i, s_j, alpha, "naive")
    with pytest.raises(ValueError):
        letter_masks(s_i, alpha)


def test_determinate_strings_reduce_to_plain_lcp():
    u, v = "GTACAAT", "CTTGTA"
    s_i, s_j = IndeterminateString.from_determinate(u), IndeterminateString.from_determinate(v)
    I = compatibility_matrix(s_i, s_j)
    assert np.array_equal(lcp_hk_indet(s_i, s_j, 2, I).values, lcp_hk_table(u, v, 2).values)


@given(st.lists(st.text("ACGT", min_size=1, max_size=8), min_size=2, max_size=4), st.integers(0, 2), st.data())
def test_determinate_solver_agrees(raw, k, data):
    t = data.draw(st.integers(1, len(raw)))
    S = validate_string_set(raw)
    ind = [IndeterminateString.from_determinate(s) for s in raw]
    assert solve_rkt_lcs_indet(ind, k, t).length == solve_rkt_lcs(S, k, t).length


def brute_indet(strings, k, t):
    best = 0
    for s in strings:
        for p in range(len(s)):
            for e in range(p + 1, len(s) + 1):
                u = s.positions[p:e]
                hits = sum(
                    any(indeterminate_mismatches(u, x.positions[q : q + len(u)]) <= k for q in range(len(x) - len(u) + 1))
                    for x in strings
                )
                if hits >= t:
                    best = max(best, len(u))
    return best


@given(st.lists(indet, min_size=2, max_size=3), st.integers(0, 2), st.data())
def test_indeterminate_solver_matches_brute(strings, k, data):
    t = data.draw(st.integers(1, len(strings)))
    sol = solve_rkt_lcs_indet(strings, k, t)
    assert sol.length == brute_indet(strings, k, t)
    if sol.found:
        assert not witness_failures(strings, sol, k, t)


def test_exact_lcs_of_degenerate_strings():
    sol = solve_rkt_lcs_indet(["A[CG]GT", "TTCGG"], 0)
    assert sol.length == 2 and str(sol.answer) == "[CG]G"
    sol = solve_rkt_lcs_indet(["A[CG]GT", "TAGGT"], 0)
    assert sol.length == 4 and sol.witnesses[1].start == 1


def test_needs_two_strings():
    with pytest.raises(TooFewStrings):
        solve_rkt_lcs_indet(["ACGT"], 0)
