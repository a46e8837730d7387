"""Exact solvers for the restricted approximate-LCS problems.

All public indices are 0-based; occurrence ends are exclusive.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .edit_prefix import edit_prefix_table, max_lcp_e
from .errors import (
    NegativeBudget,
    SubsetExplosion,
    ThresholdOutOfRange,
    UnsupportedMetric,
)
from .hamming_lcp import lcp_from_match, lcp_hk_table, match_matrix, max_lcp_h
from .strings import HAMMING, DistanceMetric, StringSet, distance, hamming_distance

RK_LCS = "rk-lcs"
RKT_LCS = "rkt-lcs"
RK_LCSS = "rk-lcss"


@dataclass(frozen=True)
class Witness:
    """Occurrence ``S[string][start:end]`` at the recorded distance."""

    string: int
    start: int
    end: int
    distance: int

    @property
    def empty(self) -> bool:
        return self.end == self.start


@dataclass(frozen=True)
class Candidate:
    i: int
    p: int
    length: int
    frequency: int
    witnesses: tuple = ()


@dataclass(frozen=True)
class Solution:
    problem: str
    length: int
    answer: object
    source: tuple | None
    witnesses: tuple
    k: int
    t: int
    metric: str
    maximizers: int = 1
    found = True

    @property
    def answers(self) -> tuple:
        return self.answer if isinstance(self.answer, tuple) else (self.answer,)


@dataclass(frozen=True)
class NoSolution:
    problem: str
    k: int
    t: int
    metric: str
    reason: str = "no non-empty substring qualifies"
    found = False
    length = 0
    witnesses: tuple = field(default=())

    def __bool__(self):
        return False


def check_params(m: int, k: int, t: int | None) -> int:
    """Validate budget and threshold; returns t with the default (m) applied."""
    if k < 0:
        raise NegativeBudget(f"budget must be non-negative, got {k}")
    t = m if t is None else t
    if not 1 <= t <= m:
        raise ThresholdOutOfRange(f"threshold t={t} outside 1..{m}")
    return t


def _check(S: StringSet, k: int, t: int | None) -> int:
    return check_params(S.m, k, t)


def _tth_largest(per_string: np.ndarray, t: int) -> np.ndarray:
    """Column-wise t-th largest value of an (m, n) array."""
    return -np.partition(-per_string, t - 1, axis=0)[t - 1]


def _best_anchor(lens: np.ndarray, t: int):
    """Longest prefix per anchor reaching frequency t; returns (p, length)."""
    cand = _tth_largest(lens, t)
    p = int(np.argmax(cand))
    return p, int(cand[p])


def _hamming_maxima(lengths, match_of, i, k):
    """Row maxima (and where they are reached) of every table for anchor string i."""
    values, positions = [], []
    for j in range(len(lengths)):
        table = lcp_from_match(match_of(i, j), k)
        pos = table.argmax(axis=1)
        values.append(table[np.arange(table.shape[0]), pos])
        positions.append(pos)
        del table  # only one table is alive at a time
    return np.stack(values), np.stack(positions)


def _hamming_candidate(lengths, match_of, i, k, t) -> Candidate:
    lens, pos = _hamming_maxima(lengths, match_of, i, k)
    p, length = _best_anchor(lens, t)
    witnesses = []
    if length:
        for j in range(len(lengths)):
            if lens[j, p] >= length:
                q = int(pos[j, p])
                witnesses.append((j, q, q + length))
    return Candidate(i, p, length, len(witnesses), tuple(witnesses))


def _edit_occurrence_lengths(ptables, n_i):
    """For every anchor p and string j: longest prefix of s_i[p:] occurring in s_j."""
    cols = np.arange(n_i)
    out = np.zeros((len(ptables), n_i), dtype=np.int64)
    for j, P in enumerate(ptables):
        reach = P.reachable()
        last = np.where(reach, cols[None, :], -1).max(axis=1)
        out[j] = np.maximum(last - cols + 1, 0)
    return out


def _edit_candidate(S, i, k, t, metric) -> Candidate:
    ptables = [edit_prefix_table(S[i], S[j], k, metric) for j in range(S.m)]
    lens = _edit_occurrence_lengths(ptables, len(S[i]))
    p, length = _best_anchor(lens, t)
    witnesses = []
    if length:
        b = p + length - 1
        for j, P in enumerate(ptables):
            if lens[j, p] >= length:
                q = int(np.flatnonzero(P.ends[p, b, : P.n2] >= 0)[0])
                witnesses.append((j, q, int(P.ends[p, b, q])))
    return Candidate(i, p, length, len(witnesses), tuple(witnesses))


def anchor_lengths(S: StringSet, i: int, k: int, t: int, metric: DistanceMetric | None = None) -> np.ndarray:
    """Longest prefix length of every suffix of ``S[i]`` occurring in >= t strings."""
    metric = metric or DistanceMetric.hamming()
    t = _check(S, k, t)
    if metric.kind == HAMMING:
        lens, _ = _hamming_maxima([len(s) for s in S], lambda a, b: match_matrix(S[a], S[b]), i, k)
    else:
        ptables = [edit_prefix_table(S[i], S[j], k, metric) for j in range(S.m)]
        lens = _edit_occurrence_lengths(ptables, len(S[i]))
    return _tth_largest(lens, t)


def _map_workers(fn, items, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _pick(candidates) -> Candidate:
    # longest first, then smallest (i, p)
    return max(candidates, key=lambda c: (c.length, -c.i, -c.p))


def _finish(S, cand, problem, k, t, metric, maximizers=1):
    if cand.length == 0:
        return NoSolution(problem, k, t, metric.kind)
    answer = S[cand.i][cand.p : cand.p + cand.length]
    witnesses = tuple(
        Witness(j, q, e, distance(answer, S[j][q:e], metric)) for j, q, e in cand.witnesses
    )
    return Solution(problem, cand.length, answer, (cand.i, cand.p), witnesses, k, t, metric.kind, maximizers)


def solve_rkt_lcs(
    S: StringSet,
    k: int,
    t: int | None = None,
    metric: DistanceMetric | None = None,
    workers: int = 1,
):
    """Longest substring of some ``S[i]`` with a k-approximate occurrence in at least t strings.

    One candidate per source string, each from that string's occurrence
    tables, then the longest candidate wins (ties: smallest (i, p)).
    Returns :class:`NoSolution` when nothing of length 1 qualifies.
    """
    metric = metric or DistanceMetric.hamming()
    t = _check(S, k, t)
    problem = RK_LCS if t == S.m else RKT_LCS
    if metric.kind == HAMMING:
        lengths = [len(s) for s in S]

        def one(i):
            return _hamming_candidate(lengths, lambda a, b: match_matrix(S[a], S[b]), i, k, t)

    else:

        def one(i):
            return _edit_candidate(S, i, k, t, metric)

    candidates = _map_workers(one, range(S.m), workers)
    return _finish(S, _pick(candidates), problem, k, t, metric)


def solve_rk_lcs(S: StringSet, k: int, metric: DistanceMetric | None = None, workers: int = 1):
    return solve_rkt_lcs(S, k, S.m, metric, workers)


def _max_lcp_arrays(strings, i, k, metric):
    if metric.kind == HAMMING:
        return [max_lcp_h(lcp_hk_table(strings[i], s, k)) for s in strings]
    return [max_lcp_e(edit_prefix_table(strings[i], s, k, metric)) for s in strings]


def _maxlcp_core(strings, k, metric):
    """Max over (i, i') of min over j of MaxLCP; returns (T, i, i', arrays, count)."""
    best = (-1, None, None, None)
    count = 0
    for i in range(len(strings)):
        arrays = _max_lcp_arrays(strings, i, k, metric)
        mins = np.min(np.stack([a.values for a in arrays]), axis=0)
        top = int(mins.max())
        if top > best[0]:
            p = int(np.argmax(mins))
            best = (top, i, p, arrays)
            count = int((mins == top).sum())
        elif top == best[0]:
            count += int((mins == top).sum())
    return best + (count,)


def solve_rk_lcs_maxlcp(S: StringSet, k: int, metric: DistanceMetric | None = None):
    """Rk-LCS as the max over anchors of the min over strings of MaxLCP arrays."""
    metric = metric or DistanceMetric.hamming()
    _check(S, k, None)
    T, i, p, arrays, count = _maxlcp_core(list(S), k, metric)
    if T <= 0:
        return NoSolution(RK_LCS, k, S.m, metric.kind)
    answer = S[i][p : p + T]
    witnesses = []
    for j, arr in enumerate(arrays):
        q, e = _occurrence_in(arr, p, T, S[i], S[j], k, metric)
        witnesses.append(Witness(j, q, e, distance(answer, S[j][q:e], metric)))
    return Solution(RK_LCS, T, answer, (i, p), tuple(witnesses), k, S.m, metric.kind, count)


def _occurrence_in(arr, p, length, s_i, s_j, k, metric):
    """An occurrence of ``s_i[p:p+length]`` in s_j, given that MaxLCP at p reaches length."""
    q = int(arr.positions[p])
    if metric.kind == HAMMING:
        return q, q + length
    if arr.values[p] == length:
        return q, int(arr.ends[p])
    P = edit_prefix_table(s_i[p : p + length], s_j, k, metric)
    q = int(np.flatnonzero(P.ends[0, length - 1] >= 0)[0])
    return q, int(P.ends[0, length - 1, q])


def solve_rkt_lcs_via_subsets(
    S: StringSet,
    k: int,
    t: int | None = None,
    metric: DistanceMetric | None = None,
    max_m: int = 12,
    max_subsets: int = 5000,
):
    """Rkt-LCS by running the MaxLCP solver on every t-subset of S."""
    metric = metric or DistanceMetric.hamming()
    t = _check(S, k, t)
    if S.m > max_m:
        raise SubsetExplosion(f"m={S.m} exceeds the subset limit {max_m}")
    n_sub = math.comb(S.m, t)
    if n_sub > max_subsets:
        raise SubsetExplosion(f"C({S.m},{t})={n_sub} subsets exceeds the limit {max_subsets}")
    problem = RK_LCS if t == S.m else RKT_LCS
    best = None
    for subset in itertools.combinations(range(S.m), t):
        T, i, p, arrays, _ = _maxlcp_core([S[j] for j in subset], k, metric)
        key = (T, -subset[i], -p)
        if best is None or key > best[0]:
            best = (key, subset, i, p, arrays)
    (T, _, _), subset, i, p, arrays = best
    if T <= 0:
        return NoSolution(problem, k, t, metric.kind)
    src = subset[i]
    answer = S[src][p : p + T]
    witnesses = []
    for pos, j in enumerate(subset):
        q, e = _occurrence_in(arrays[pos], p, T, S[src], S[j], k, metric)
        witnesses.append(Witness(j, q, e, distance(answer, S[j][q:e], metric)))
    return Solution(problem, T, answer, (src, p), tuple(witnesses), k, t, metric.kind)


# -- Rk-LCSS ---------------------------------------------------------------


def _window_counters(S: StringSet):
    """Diagonal mismatch suffix counts for every ordered pair of strings."""
    out = {}
    for a in range(S.m):
        for b in range(a + 1, S.m):
            out[a, b] = _kernels.diagonal_mismatch_suffix(match_matrix(S[a], S[b]))
    return out


def _adjacency(counters, a, b, L, k):
    C = counters[a, b] if a < b else counters[b, a].T
    n_a, n_b = C.shape[0] - 1, C.shape[1] - 1
    dist = C[: n_a - L + 1, : n_b - L + 1] - C[L:, L:]
    return dist <= k


def _find_clique(m, adj, sizes):
    """One vertex per part, pairwise adjacent; None when no such choice exists."""
    order = sorted(range(m), key=lambda part: sizes[part])

    def extend(depth, chosen, candidates):
        if depth == m:
            return dict(chosen)
        part = order[depth]
        cand = candidates[part]
        verts = np.flatnonzero(cand)
        if verts.size == 0:
            return None
        rest = order[depth + 1 :]
        # most-connected vertices first
        degree = sum(adj[part, r][verts].sum(axis=1) for r in rest) if rest else np.zeros(verts.size)
        for v in verts[np.argsort(-degree, kind="stable")]:
            narrowed = dict(candidates)
            dead = False
            for r in rest:
                narrowed[r] = candidates[r] & adj[part, r][v]
                if not narrowed[r].any():
                    dead = True
                    break
            if dead:
                continue
            chosen[part] = int(v)
            found = extend(depth + 1, chosen, narrowed)
            if found is not None:
                return found
            del chosen[part]
        return None

    start = {part: np.ones(sizes[part], dtype=bool) for part in range(m)}
    return extend(0, {}, start)


def _lcss_at(S, counters, L, k):
    sizes = [len(s) - L + 1 for s in S]
    adj = {}
    for a in range(S.m):
        for b in range(S.m):
            if a != b:
                adj[a, b] = _adjacency(counters, a, b, L, k)
    return _find_clique(S.m, adj, sizes)


def rk_lcss_feasible(S: StringSet, L: int, k: int, counters=None):
    """Offsets of equal-length-L substrings, one per string, pairwise within k; or None."""
    if L < 1 or L > min(len(s) for s in S):
        return None
    counters = counters or _window_counters(S)
    found = _lcss_at(S, counters, L, k)
    return None if found is None else [found[j] for j in range(S.m)]


def solve_rk_lcss(S: StringSet, k: int, metric: DistanceMetric | None = None):
    """Longest common length L of substrings u_1..u_m (u_j from S[j]) pairwise within k mismatches.

    Feasibility is monotone in L (prefixes of a feasible family stay
    feasible), so L is found by binary search; each probe is a clique search
    in the m-partite graph of length-L windows.
    """
    metric = metric or DistanceMetric.hamming()
    if metric.kind != HAMMING:
        raise UnsupportedMetric("Rk-LCSS is only defined here for Hamming distance")
    if k < 0:
        raise NegativeBudget(f"budget must be non-negative, got {k}")
    counters = _window_counters(S)
    lo, hi = 0, min(len(s) for s in S)
    best = None
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = rk_lcss_feasible(S, mid, k, counters)
        if found is None:
            hi = mid - 1
        else:
            lo, best = mid, found
    if lo == 0:
        return NoSolution(RK_LCSS, k, S.m, HAMMING)
    L = lo
    answer = tuple(S[j][x : x + L] for j, x in enumerate(best))
    witnesses = tuple(
        Witness(j, x, x + L, max(hamming_distance(answer[j], u) for u in answer))
        for j, x in enumerate(best)
    )
    return Solution(RK_LCSS, L, answer, None, witnesses, k, S.m, HAMMING)
