"""Longest approximate prefix tables under (weighted) edit distance.

For a pattern slice ``s1[a:b+1]`` and a target start ``a2`` the table stores
the largest exclusive end ``e >= a2`` with ``d(s1[a:b+1], s2[a2:e]) <= k``,
or -1 when no end qualifies. ``e == a2`` is the empty occurrence. With
0-based starts the stored end equals the 1-based inclusive end index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import NegativeBudget, WrongMetric
from .hamming_lcp import EDIT_TAG, MaxLcpArray
from .strings import DistanceMetric, as_bytes


@dataclass(frozen=True, eq=False)
class PrefixTable:
    ends: np.ndarray  # shape (|s1|, |s1|, |s2| + 1)
    k: int
    metric: DistanceMetric
    band: int

    @property
    def n1(self) -> int:
        return self.ends.shape[0]

    @property
    def n2(self) -> int:
        return self.ends.shape[2] - 1

    def __getitem__(self, idx):
        return self.ends[idx]

    def end(self, a: int, b: int, a2: int) -> int:
        """Largest exclusive end for pattern ``s1[a:b+1]`` starting at ``a2``."""
        if not (0 <= a <= b < self.n1 and 0 <= a2 <= self.n2):
            raise IndexError((a, b, a2))
        return int(self.ends[a, b, a2])

    def reachable(self) -> np.ndarray:
        """``out[a, b]``: pattern ``s1[a:b+1]`` occurs starting at some target position."""
        return (self.ends[:, :, : self.n2] >= 0).any(axis=2)


def band_width(k: int, metric: DistanceMetric, letters) -> int:
    return k // metric.min_cost(letters)


def edit_prefix_table(s1, s2, k: int, metric: DistanceMetric | None = None) -> PrefixTable:
    metric = metric or DistanceMetric.edit()
    if not metric.is_edit_like:
        raise WrongMetric("prefix tables need an edit or weighted metric")
    if k < 0:
        raise NegativeBudget(f"budget must be non-negative, got {k}")
    s1, s2 = as_bytes(s1), as_bytes(s2)
    band = band_width(k, metric, set(s1) | set(s2))
    a = np.frombuffer(s1, dtype=np.uint8)
    b = np.frombuffer(s2, dtype=np.uint8)
    ends = _kernels.prefix_ends(a, b, int(k), metric.sub, metric.ins, metric.dele, int(band))
    return PrefixTable(ends, k, metric, band)


def max_lcp_e(P: PrefixTable) -> MaxLcpArray:
    """Longest pattern prefix of each suffix of s1 with a k-approximate occurrence.

    Length is measured on the s1 side; ``positions``/``ends`` give the
    smallest target start realising it and the matching exclusive end.
    """
    n1, n2 = P.n1, P.n2
    values = np.zeros(n1, dtype=np.int32)
    positions = np.zeros(n1, dtype=np.int32)
    ends = np.zeros(n1, dtype=np.int32)
    ok = (P.ends >= 0).any(axis=2)  # over every start, including a2 == n2
    for a in range(n1):
        hits = np.flatnonzero(ok[a, a:])
        if hits.size == 0:
            continue
        length = int(hits[-1]) + 1
        b = a + length - 1
        a2 = int(np.flatnonzero(P.ends[a, b] >= 0)[0])
        values[a] = length
        positions[a] = a2
        ends[a] = P.ends[a, b, a2]
    return MaxLcpArray(values, positions, ends, EDIT_TAG)
