"""Approximate LCS over indeterminate (degenerate) strings under Hamming distance.

Two positions match when their letter-sets intersect. The position-match
matrix I of a string pair can be built three ways, all returning the same
:class:`BitMatrix`: a naive sorted-merge intersection per cell, a blocked
Boolean product of the letter-encoding matrices, and (alphabets of at most
64 letters) one AND per cell on 64-bit letter masks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import TooFewStrings
from .hamming_lcp import LcpTable, lcp_from_match
from .solver import (
    RK_LCS,
    RKT_LCS,
    NoSolution,
    Solution,
    Witness,
    check_params,
    _hamming_candidate,
    _map_workers,
    _pick,
)
from .strings import HAMMING, Alphabet, IndeterminateString, indeterminate_mismatches

WORD = 64


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """0/1 matrix with each row packed into 64-bit words (bit c of word c // 64)."""

    words: np.ndarray  # uint64, rows x ceil(cols / 64)
    cols: int

    @property
    def rows(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        dense = np.asarray(dense, dtype=bool)
        rows, cols = dense.shape
        nw = max(1, -(-cols // WORD))
        padded = np.zeros((rows, nw * WORD), dtype=np.uint64)
        padded[:, :cols] = dense
        shifts = np.arange(WORD, dtype=np.uint64)
        words = (padded.reshape(rows, nw, WORD) << shifts).sum(axis=2, dtype=np.uint64)
        return cls(words, cols)

    def to_dense(self) -> np.ndarray:
        shifts = np.arange(WORD, dtype=np.uint64)
        bits = (self.words[:, :, None] >> shifts) & np.uint64(1)
        return bits.reshape(self.rows, -1)[:, : self.cols].astype(bool)

    def __getitem__(self, idx) -> int:
        r, c = idx
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(idx)
        return int((int(self.words[r, c // WORD]) >> (c % WORD)) & 1)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.to_dense(), other.to_dense())

    def tolist(self):
        return self.to_dense().astype(int).tolist()


def _alphabet_for(strings, alphabet):
    if alphabet is not None:
        return alphabet
    letters = set()
    for s in strings:
        letters |= s.letters()
    return Alphabet(bytes(sorted(letters)))


def encode_boolean_matrix(s: IndeterminateString, alphabet: Alphabet) -> BitMatrix:
    """|s| x sigma matrix: entry (x, c) is 1 iff the c-th alphabet letter is in position x."""
    dense = np.zeros((len(s), alphabet.size), dtype=bool)
    for x, pos in enumerate(s.positions):
        for letter in pos:
            dense[x, alphabet.index(letter)] = True
    return BitMatrix.from_dense(dense)


def _naive(s_i, s_j):
    out = np.zeros((len(s_i), len(s_j)), dtype=bool)
    for x, a in enumerate(s_i.positions):
        for y, b in enumerate(s_j.positions):
            # both letter-sets are sorted: merge walk
            u = v = 0
            while u < len(a) and v < len(b):
                if a[u] == b[v]:
                    out[x, y] = True
                    break
                if a[u] < b[v]:
                    u += 1
                else:
                    v += 1
    return out


def _pad_rows(words, block):
    rows = words.shape[0]
    target = -(-rows // block) * block if rows else block
    if target == rows:
        return words
    out = np.zeros((target, words.shape[1]), dtype=np.uint64)
    out[:rows] = words
    return out


def _blocked(s_i, s_j, alphabet):
    sigma = alphabet.size
    a = _pad_rows(encode_boolean_matrix(s_i, alphabet).words, sigma)
    b = _pad_rows(encode_boolean_matrix(s_j, alphabet).words, sigma)
    counts = _kernels.blocked_and_popcount(a, b, sigma)
    # binarize after accumulation, then drop padded rows and columns
    return counts[: len(s_i), : len(s_j)] > 0


def letter_masks(s: IndeterminateString, alphabet: Alphabet) -> np.ndarray:
    if alphabet.size > WORD:
        raise ValueError(f"bitmask encoding needs at most {WORD} letters, got {alphabet.size}")
    masks = np.zeros(len(s), dtype=np.uint64)
    for x, pos in enumerate(s.positions):
        m = 0
        for letter in pos:
            m |= 1 << alphabet.index(letter)
        masks[x] = m
    return masks


def _bitmask(s_i, s_j, alphabet):
    mi = letter_masks(s_i, alphabet)
    mj = letter_masks(s_j, alphabet)
    return (mi[:, None] & mj[None, :]) != 0


def compatibility_dense(s_i, s_j, alphabet=None, method: str | None = None) -> np.ndarray:
    alphabet = _alphabet_for((s_i, s_j), alphabet)
    method = method or ("bitmask" if alphabet.size <= WORD else "blocked")
    if method == "naive":
        return _naive(s_i, s_j)
    if method == "blocked":
        return _blocked(s_i, s_j, alphabet)
    if method == "bitmask":
        return _bitmask(s_i, s_j, alphabet)
    raise ValueError(f"unknown method {method!r}")


def compatibility_matrix(s_i, s_j, alphabet: Alphabet | None = None, method: str | None = None) -> BitMatrix:
    """I[x, y] = 1 iff position x of s_i and position y of s_j share a letter.

    ``method`` is ``"naive"``, ``"blocked"`` or ``"bitmask"``; the default is
    the bitmask path when the alphabet fits in one word, else blocked.
    """
    return BitMatrix.from_dense(compatibility_dense(s_i, s_j, alphabet, method))


def lcp_hk_indet(s_i, s_j, k: int, I: BitMatrix) -> LcpTable:
    """k-mismatch LCP table where a mismatch is a zero of I."""
    if I.shape != (len(s_i), len(s_j)):
        raise ValueError(f"compatibility matrix shape {I.shape} does not fit the strings")
    return LcpTable(lcp_from_match(I.to_dense(), k), k)


def solve_rkt_lcs_indet(strings, k: int, t: int | None = None, alphabet=None, method=None, workers=1):
    """Rkt-LCS of indeterminate strings; k = 0 gives their exact LCS."""
    strings = [s if isinstance(s, IndeterminateString) else IndeterminateString.parse(s) for s in strings]
    if len(strings) < 2:
        raise TooFewStrings(f"need at least 2 strings, got {len(strings)}")
    m = len(strings)
    t = check_params(m, k, t)
    alphabet = _alphabet_for(strings, alphabet)
    lengths = [len(s) for s in strings]

    def match_of(a, b):
        return compatibility_dense(strings[a], strings[b], alphabet, method)

    problem = RK_LCS if t == m else RKT_LCS
    cands = _map_workers(lambda i: _hamming_candidate(lengths, match_of, i, k, t), range(m), workers)
    best = _pick(cands)
    if best.length == 0:
        return NoSolution(problem, k, t, HAMMING)
    answer = strings[best.i][best.p : best.p + best.length]
    witnesses = tuple(
        Witness(j, q, e, indeterminate_mismatches(answer.positions, strings[j].positions[q:e]))
        for j, q, e in best.witnesses
    )
    return Solution(problem, best.length, answer, (best.i, best.p), witnesses, k, t, HAMMING)
