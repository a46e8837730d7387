"""Per-suffix occurrence tables ("lengthStat").

For an anchor (p, i) row l-1 (0-based) says, for each string j, whether
``s_i[p:p+l]`` has a k-approximate occurrence in ``s_j``; the frequency
column counts the strings, s_i itself included.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange
from .hamming_lcp import EDIT_TAG, HAMMING_TAG


@dataclass(frozen=True, eq=False)
class LengthStatTable:
    flags: np.ndarray  # bool, (|s_i| - p) x m
    anchor: tuple  # (p, i), 0-based
    tag: str
    k: int

    @property
    def frequency(self) -> np.ndarray:
        return self.flags.sum(axis=1)

    @property
    def rows(self) -> int:
        return self.flags.shape[0]

    def longest(self, t: int) -> int:
        """Largest prefix length occurring in at least t strings (0 if none)."""
        hits = np.flatnonzero(self.frequency >= t)
        return int(hits[-1]) + 1 if hits.size else 0

    def to_tsv(self) -> str:
        m = self.flags.shape[1]
        head = ["l"] + [f"s{j + 1}" for j in range(m)] + ["frequency"]
        lines = ["\t".join(head)]
        for r, (row, f) in enumerate(zip(self.flags, self.frequency)):
            lines.append("\t".join([str(r + 1)] + [str(int(v)) for v in row] + [str(int(f))]))
        return "\n".join(lines) + "\n"


def _check_anchor(n_i, p):
    if not 0 <= p < n_i:
        raise IndexOutOfRange(f"suffix start {p} outside 0..{n_i - 1}")


def length_stat_hamming(tables, p: int, i: int) -> LengthStatTable:
    """Seed each string's column at its LCP values from row p, then OR rows downward."""
    n_i = tables[i].shape[0]
    _check_anchor(n_i, p)
    rows = n_i - p
    flags = np.zeros((rows, len(tables)), dtype=bool)
    for j, table in enumerate(tables):
        seeds = table.values[p]
        seeds = seeds[seeds >= 1]  # a zero LCP seeds nothing
        flags[seeds - 1, j] = True
    # row r-1 |= row r, from the bottom up
    flags = np.logical_or.accumulate(flags[::-1], axis=0)[::-1]
    return LengthStatTable(np.ascontiguousarray(flags), (p, i), HAMMING_TAG, tables[i].k)


def length_stat_edit(ptables, p: int, i: int) -> LengthStatTable:
    """Row l-1, column j is set iff some start q in s_j gives a defined end for s_i[p:p+l]."""
    n_i = ptables[i].n1
    _check_anchor(n_i, p)
    rows = n_i - p
    flags = np.zeros((rows, len(ptables)), dtype=bool)
    for j, P in enumerate(ptables):
        flags[:, j] = (P.ends[p, p:, : P.n2] >= 0).any(axis=1)
    return LengthStatTable(flags, (p, i), EDIT_TAG, ptables[i].k)
