"""k-mismatch longest-common-prefix tables and their row maxima."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptyString, IndexOutOfRange, NegativeBudget
from .strings import StringSet, as_bytes

HAMMING_TAG = "H"
EDIT_TAG = "E"


@dataclass(frozen=True, eq=False)
class LcpTable:
    """``values[p, q]``: length of the longest common prefix of ``s_i[p:]`` and
    ``s_j[q:]`` with at most k mismatches (0-based p, q)."""

    values: np.ndarray
    k: int
    pair: tuple = None

    @property
    def shape(self):
        return self.values.shape

    def __getitem__(self, idx):
        return self.values[idx]

    def to_tsv(self) -> str:
        return "\n".join("\t".join(str(int(v)) for v in row) for row in self.values) + "\n"


@dataclass(frozen=True, eq=False)
class MaxLcpArray:
    """Per-suffix maximum of an LCP table over all partner positions.

    ``positions[p]`` is the smallest partner start reaching the maximum and
    ``ends[p]`` the exclusive end of that occurrence.
    """

    values: np.ndarray
    positions: np.ndarray
    ends: np.ndarray
    tag: str

    def __len__(self):
        return len(self.values)

    def __getitem__(self, idx):
        return self.values[idx]


def _check_budget(k):
    if k < 0:
        raise NegativeBudget(f"budget must be non-negative, got {k}")


def lcp_from_match(match: np.ndarray, k: int) -> np.ndarray:
    """Table for an arbitrary position-match matrix (also used for indeterminate strings)."""
    _check_budget(k)
    match = np.ascontiguousarray(match, dtype=np.bool_)
    return _kernels.lcp_diagonals(match, int(k))


def match_matrix(s_i, s_j) -> np.ndarray:
    a = np.frombuffer(as_bytes(s_i), dtype=np.uint8)
    b = np.frombuffer(as_bytes(s_j), dtype=np.uint8)
    return a[:, None] == b[None, :]


def lcp_hk_table(s_i, s_j, k: int, pair=None) -> LcpTable:
    """k-mismatch LCP of every pair of suffixes in O(|s_i| |s_j|) time."""
    _check_budget(k)
    if not s_i or not s_j:
        raise EmptyString("LCP tables need non-empty strings")
    return LcpTable(lcp_from_match(match_matrix(s_i, s_j), k), k, pair)


def lcp_tables_for(i: int, S: StringSet, k: int) -> list:
    """The m tables pairing ``S[i]`` with every string of S, itself included."""
    if not 0 <= i < S.m:
        raise IndexOutOfRange(f"string index {i} outside 0..{S.m - 1}")
    return [lcp_hk_table(S[i], S[j], k, pair=(i, j)) for j in range(S.m)]


def max_lcp_h(table: LcpTable) -> MaxLcpArray:
    values = table.values
    if values.shape[1] == 0:
        zero = np.zeros(values.shape[0], dtype=np.int32)
        return MaxLcpArray(zero, zero.copy(), zero.copy(), HAMMING_TAG)
    positions = values.argmax(axis=1)
    best = values[np.arange(values.shape[0]), positions]
    return MaxLcpArray(best, positions, positions + best, HAMMING_TAG)
