import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from approxlcs import lcp_hk_table, lcp_tables_for, max_lcp_h, validate_string_set
from approxlcs.errors import EmptyString, IndexOutOfRange, NegativeBudget

from conftest import strings_over


def brute_lcp(u, v, k):
    mism = n = 0
    for a, b in zip(u, v):
        mism += a != b
        if mism > k:
            break
        n += 1
    return n


def test_entry_from_caption():
    t = lcp_hk_table("GTACAAT", "CTTGTA", 2)
    assert t[1, 2] == 4  # TACAAT vs TGTA


def test_identical_strings_k0_diagonal():
    s = "abcab"
    t = lcp_hk_table(s, s, 0)
    assert [t[p, p] for p in range(len(s))] == [len(s) - p for p in range(len(s))]


@given(strings_over("ab", 1, 12), strings_over("ab", 1, 12), st.integers(0, 3))
def test_table_matches_direct_scan(u, v, k):
    t = lcp_hk_table(u, v, k)
    want = [[brute_lcp(u[p:], v[q:], k) for q in range(len(v))] for p in range(len(u))]
    assert t.values.tolist() == want


@given(strings_over("abc", 1, 10), strings_over("abc", 1, 10), st.integers(0, 2))
def test_monotone_in_k(u, v, k):
    assert np.all(lcp_hk_table(u, v, k).values <= lcp_hk_table(u, v, k + 1).values)


def test_errors():
    with pytest.raises(NegativeBudget):
        lcp_hk_table("a", "b", -1)
    with pytest.raises(EmptyString):
        lcp_hk_table("", "b", 1)
    with pytest.raises(IndexOutOfRange):
        lcp_tables_for(5, validate_string_set(["a", "b"]), 0)


def test_tables_for_pairs_every_string():
    S = validate_string_set(["ab", "abc", "b"])
    tables = lcp_tables_for(1, S, 0)
    assert [t.pair for t in tables] == [(1, 0), (1, 1), (1, 2)]
    assert [t.shape for t in tables] == [(3, 2), (3, 3), (3, 1)]


def test_max_lcp_identical():
    s = "abab"
    arr = max_lcp_h(lcp_hk_table(s, s, 0))
    assert arr.values.tolist() == [4, 3, 2, 1]
    assert arr.positions.tolist() == [0, 1, 0, 1]


def test_to_tsv_shape():
    text = lcp_hk_table("ab", "ab", 0).to_tsv()
    assert text == "2\t0\n0\t1\n"
