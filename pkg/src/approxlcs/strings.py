"""Alphabets, string sets, indeterminate strings and distance metrics.

Letters are single bytes. Determinate strings are ``bytes``; an
indeterminate string is a tuple of letter-sets, each stored as a sorted
``bytes`` object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import (
    EmptyLetterSet,
    EmptyString,
    LengthMismatch,
    LetterOutOfAlphabet,
    TooFewStrings,
    WrongMetric,
)

HAMMING = "hamming"
EDIT = "edit"
WEIGHTED = "weighted"
METRIC_KINDS = (HAMMING, EDIT, WEIGHTED)


def as_bytes(s) -> bytes:
    if isinstance(s, str):
        return s.encode("latin-1")
    return bytes(s)


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct single-byte letters."""

    symbols: bytes

    def __post_init__(self):
        symbols = as_bytes(self.symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet letters must be distinct")
        object.__setattr__(self, "symbols", bytes(sorted(symbols)))

    @classmethod
    def of(cls, letters) -> "Alphabet":
        """Alphabet from any iterable of letters, duplicates allowed."""
        return cls(bytes(sorted(set(as_bytes(letters)))))

    @classmethod
    def covering(cls, strings: Iterable) -> "Alphabet":
        seen = set()
        for s in strings:
            seen.update(as_bytes(s))
        return cls(bytes(sorted(seen)))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, letter) -> bool:
        if isinstance(letter, (str, bytes)):
            letter = as_bytes(letter)
            return len(letter) == 1 and letter[0] in self.symbols
        return letter in self.symbols

    def index(self, letter: int) -> int:
        return self.symbols.index(letter)


LOWERCASE = Alphabet(b"abcdefghijklmnopqrstuvwxyz")
DNA = Alphabet(b"ACGT")
BINARY = Alphabet(b"01")


@dataclass(frozen=True)
class StringSet:
    """A validated collection of m >= 2 non-empty strings over an alphabet."""

    strings: tuple
    alphabet: Alphabet
    names: tuple = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return len(self.strings)

    @property
    def N(self) -> int:
        return sum(len(s) for s in self.strings)

    @property
    def ell(self) -> int:
        return max(len(s) for s in self.strings)

    def __len__(self):
        return len(self.strings)

    def __getitem__(self, i) -> bytes:
        return self.strings[i]

    def __iter__(self):
        return iter(self.strings)

    def arrays(self) -> list:
        return [np.frombuffer(s, dtype=np.uint8) for s in self.strings]


def validate_string_set(raw: Sequence, alphabet: Alphabet | None = None, names=None) -> StringSet:
    """Check and wrap raw strings; the alphabet defaults to the letters used."""
    strings = tuple(as_bytes(s) for s in raw)
    for idx, s in enumerate(strings):
        if not s:
            raise EmptyString(f"string {idx} is empty")
    if len(strings) < 2:
        raise TooFewStrings(f"need at least 2 strings, got {len(strings)}")
    if alphabet is None:
        alphabet = Alphabet.covering(strings)
    allowed = set(alphabet.symbols)
    for idx, s in enumerate(strings):
        bad = set(s) - allowed
        if bad:
            letter = bytes([min(bad)]).decode("latin-1")
            raise LetterOutOfAlphabet(f"string {idx} contains {letter!r}, not in alphabet")
    if names is not None:
        names = tuple(names)
        if len(names) != len(strings):
            raise ValueError("names must match strings one to one")
    return StringSet(strings, alphabet, names)


_BRACKET = re.compile(r"\[([^\]]*)\]|(.)", re.S)


@dataclass(frozen=True)
class IndeterminateString:
    """Sequence of non-empty letter-sets; positions match when they intersect."""

    positions: tuple

    def __post_init__(self):
        canon = []
        for pos in self.positions:
            letters = bytes(sorted(set(as_bytes(pos))))
            if not letters:
                raise EmptyLetterSet("indeterminate position has no letters")
            canon.append(letters)
        object.__setattr__(self, "positions", tuple(canon))

    @classmethod
    def parse(cls, text: str) -> "IndeterminateString":
        """Parse ``[AT]G[C,G]T`` style notation; commas inside brackets are ignored."""
        positions = []
        for group, single in _BRACKET.findall(text):
            if single:
                if single.isspace():
                    continue
                positions.append(single)
            else:
                positions.append(group.replace(",", "").replace(" ", ""))
        return cls(tuple(positions))

    @classmethod
    def from_determinate(cls, s) -> "IndeterminateString":
        return cls(tuple(bytes([c]) for c in as_bytes(s)))

    @property
    def is_indeterminate(self) -> bool:
        """True when at least one position holds more than one letter."""
        return any(len(p) > 1 for p in self.positions)

    def letters(self) -> set:
        out = set()
        for p in self.positions:
            out.update(p)
        return out

    def __len__(self):
        return len(self.positions)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return IndeterminateString(self.positions[idx])
        return self.positions[idx]

    def __str__(self):
        parts = []
        for p in self.positions:
            text = p.decode("latin-1")
            parts.append(text if len(p) == 1 else f"[{text}]")
        return "".join(parts)


class DistanceMetric:
    """Hamming, unit-cost edit, or weighted edit distance.

    Weighted costs are integer tables indexed by byte value: ``sub[a, b]``
    rewrites a into b, ``dele[a]`` deletes a, ``ins[b]`` inserts b. Costs may
    be asymmetric, in which case the weighted distance is not a metric.
    """

    def __init__(self, kind: str, sub=None, ins=None, dele=None):
        if kind not in METRIC_KINDS:
            raise ValueError(f"unknown metric kind {kind!r}")
        self.kind = kind
        if kind == HAMMING:
            self.sub = self.ins = self.dele = None
            return
        if kind == EDIT:
            sub = 1 - np.eye(256, dtype=np.int64)
            ins = np.ones(256, dtype=np.int64)
            dele = np.ones(256, dtype=np.int64)
        self.sub = np.ascontiguousarray(sub, dtype=np.int64)
        self.ins = np.ascontiguousarray(ins, dtype=np.int64)
        self.dele = np.ascontiguousarray(dele, dtype=np.int64)
        if self.sub.shape != (256, 256) or self.ins.shape != (256,) or self.dele.shape != (256,):
            raise ValueError("cost tables must be indexed by all 256 byte values")
        if np.any(np.diag(self.sub) != 0):
            raise ValueError("substituting a letter by itself must cost 0")
        off = self.sub[~np.eye(256, dtype=bool)]
        if off.min() < 1 or self.ins.min() < 1 or self.dele.min() < 1:
            raise ValueError("every true edit operation must cost at least 1")

    @classmethod
    def hamming(cls) -> "DistanceMetric":
        return cls(HAMMING)

    @classmethod
    def edit(cls) -> "DistanceMetric":
        return cls(EDIT)

    @classmethod
    def weighted(
        cls,
        sub: Mapping | None = None,
        ins: Mapping | None = None,
        dele: Mapping | None = None,
        default: int = 1,
    ) -> "DistanceMetric":
        """Weighted edit distance; unlisted operations cost ``default``.

        ``sub`` maps (from, to) letter pairs to costs, ``ins``/``dele`` map
        single letters to costs. Letters may be given as str, bytes or int.
        """
        s = np.full((256, 256), default, dtype=np.int64)
        np.fill_diagonal(s, 0)
        i = np.full(256, default, dtype=np.int64)
        d = np.full(256, default, dtype=np.int64)
        for (a, b), cost in (sub or {}).items():
            s[_code(a), _code(b)] = _int_cost(cost)
        for a, cost in (ins or {}).items():
            i[_code(a)] = _int_cost(cost)
        for a, cost in (dele or {}).items():
            d[_code(a)] = _int_cost(cost)
        return cls(WEIGHTED, s, i, d)

    @property
    def is_edit_like(self) -> bool:
        return self.kind in (EDIT, WEIGHTED)

    def min_cost(self, letters: Iterable[int] | None = None) -> int:
        """Smallest positive operation cost among the given letters."""
        if self.kind != WEIGHTED:
            return 1
        idx = np.arange(256) if letters is None else np.fromiter(set(letters), dtype=np.int64)
        if idx.size == 0:
            return 1
        sub = self.sub[np.ix_(idx, idx)]
        costs = [self.ins[idx].min(), self.dele[idx].min()]
        positive = sub[sub > 0]
        if positive.size:
            costs.append(positive.min())
        return int(min(costs))

    def __repr__(self):
        return f"DistanceMetric({self.kind!r})"


def _code(letter) -> int:
    if isinstance(letter, int):
        return letter
    b = as_bytes(letter)
    if len(b) != 1:
        raise ValueError(f"letter must be a single byte, got {letter!r}")
    return b[0]


def _int_cost(cost) -> int:
    if int(cost) != cost:
        raise ValueError(f"costs must be integers, got {cost!r}")
    return int(cost)


def hamming_distance(u, v) -> int:
    u, v = as_bytes(u), as_bytes(v)
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def edit_distance(u, v, metric: DistanceMetric | None = None) -> int:
    """Edit distance transforming u into v under unit or weighted costs."""
    metric = metric or DistanceMetric.edit()
    if not metric.is_edit_like:
        raise WrongMetric("edit_distance needs an edit or weighted metric")
    ua = np.frombuffer(as_bytes(u), dtype=np.uint8)
    va = np.frombuffer(as_bytes(v), dtype=np.uint8)
    return int(_kernels.edit_distance(ua, va, metric.sub, metric.ins, metric.dele))


def distance(u, v, metric: DistanceMetric) -> int:
    if metric.kind == HAMMING:
        return hamming_distance(u, v)
    return edit_distance(u, v, metric)


def letters_match(a, b) -> bool:
    a, b = as_bytes(a), as_bytes(b)
    if not a or not b:
        raise EmptyLetterSet("letter-sets must be non-empty")
    return not set(a).isdisjoint(b)


def indeterminate_mismatches(u: Sequence, v: Sequence) -> int:
    """Number of aligned positions whose letter-sets do not intersect."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return sum(not letters_match(a, b) for a, b in zip(u, v))
