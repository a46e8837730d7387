"""Compiled inner loops. Every function here works on plain numpy arrays.

Indices are 0-based throughout; callers own validation.
"""

import numpy as np
from numba import njit

INF = np.int64(1) << 60


@njit(cache=True, nogil=True)
def lcp_diagonals(match, k):
    """k-mismatch LCP of every suffix pair, one pass per diagonal.

    ``match[p, q]`` says whether position p of the first string matches
    position q of the second. Along each diagonal the mismatch offsets are
    collected once; the answer for offset x is the offset of the (k+1)-th
    mismatch at or after x (or the diagonal length) minus x.
    """
    n1, n2 = match.shape
    out = np.empty((n1, n2), dtype=np.int32)
    buf = np.empty(min(n1, n2) + 1, dtype=np.int64)
    for d in range(-(n2 - 1), n1):
        p0 = d if d > 0 else 0
        q0 = p0 - d
        length = min(n1 - p0, n2 - q0)
        cnt = 0
        for x in range(length):
            if not match[p0 + x, q0 + x]:
                buf[cnt] = x
                cnt += 1
        before = 0
        for x in range(length):
            idx = before + k
            end = buf[idx] if idx < cnt else length
            out[p0 + x, q0 + x] = end - x
            if before < cnt and buf[before] == x:
                before += 1
    return out


@njit(cache=True, nogil=True)
def diagonal_mismatch_suffix(match):
    """``out[p, q]`` = mismatches from (p, q) to the end of its diagonal.

    Padded with a zero row and column so window counts are
    ``out[p, q] - out[p + L, q + L]``.
    """
    n1, n2 = match.shape
    out = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    for p in range(n1 - 1, -1, -1):
        for q in range(n2 - 1, -1, -1):
            out[p, q] = out[p + 1, q + 1] + (0 if match[p, q] else 1)
    return out


@njit(cache=True, nogil=True)
def edit_distance(u, v, sub, ins, dele):
    n, m = len(u), len(v)
    prev = np.empty(m + 1, dtype=np.int64)
    cur = np.empty(m + 1, dtype=np.int64)
    prev[0] = 0
    for y in range(1, m + 1):
        prev[y] = prev[y - 1] + ins[v[y - 1]]
    for x in range(1, n + 1):
        a = u[x - 1]
        cur[0] = prev[0] + dele[a]
        for y in range(1, m + 1):
            b = v[y - 1]
            best = prev[y - 1] + sub[a, b]
            t = prev[y] + dele[a]
            if t < best:
                best = t
            t = cur[y - 1] + ins[b]
            if t < best:
                best = t
            cur[y] = best
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True, nogil=True)
def prefix_ends(s1, s2, k, sub, ins, dele, band):
    """Longest-approximate-prefix table as exclusive end positions.

    ``out[a, b, a2]`` is the largest ``e >= a2`` with
    ``d(s1[a:b+1], s2[a2:e]) <= k``, or -1. One banded DP per start pair
    (a, a2); rows are pattern prefix lengths, columns target prefix lengths,
    and only ``|x - y| <= band`` is evaluated.
    """
    n1, n2 = len(s1), len(s2)
    out = np.full((n1, n1, n2 + 1), -1, dtype=np.int32)
    prev = np.empty(n2 + 2, dtype=np.int64)
    cur = np.empty(n2 + 2, dtype=np.int64)
    for a in range(n1):
        for a2 in range(n2 + 1):
            width = n2 - a2
            for y in range(width + 2):
                prev[y] = INF
                cur[y] = INF
            prev[0] = 0
            hi = band if band < width else width
            for y in range(1, hi + 1):
                prev[y] = prev[y - 1] + ins[s2[a2 + y - 1]]
            for x in range(1, n1 - a + 1):
                lo = x - band
                if lo < 0:
                    lo = 0
                hi = x + band
                if hi > width:
                    hi = width
                if lo > hi:
                    break
                if lo >= 1:
                    cur[lo - 1] = INF
                c = s1[a + x - 1]
                rowmin = INF
                last = -1
                for y in range(lo, hi + 1):
                    best = prev[y] + dele[c]
                    if y >= 1:
                        b = s2[a2 + y - 1]
                        t = prev[y - 1] + sub[c, b]
                        if t < best:
                            best = t
                        t = cur[y - 1] + ins[b]
                        if t < best:
                            best = t
                    cur[y] = best
                    if best < rowmin:
                        rowmin = best
                    if best <= k:
                        last = y
                if hi + 1 <= width:
                    cur[hi + 1] = INF
                if last >= 0:
                    out[a, a + x - 1, a2] = a2 + last
                if rowmin > k:
                    # row minima never decrease with non-negative costs
                    break
                prev, cur = cur, prev
    return out


@njit(cache=True, nogil=True)
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True, nogil=True)
def blocked_and_popcount(a_words, b_words, block):
    """Integer product A @ B.T of two row-packed 0/1 matrices, tile by tile.

    Rows of both operands are padded to a multiple of ``block``; each
    (block x block) output tile is the product of one row block of A with
    the transpose of one row block of B, computed as AND + popcount per
    word and accumulated over words.
    """
    ra, nw = a_words.shape
    rb = b_words.shape[0]
    out = np.zeros((ra, rb), dtype=np.int64)
    for bi in range(0, ra, block):
        for bj in range(0, rb, block):
            for x in range(bi, bi + block):
                for y in range(bj, bj + block):
                    acc = 0
                    for w in range(nw):
                        acc += popcount64(a_words[x, w] & b_words[y, w])
                    out[x, y] += acc
    return out
