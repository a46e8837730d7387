"""String instances encoding orthogonal-vector problems.

Two constructions, both over the binary alphabet {0, 1}:

* ``build_rklcs_instance``: one string of mu-images of every vector plus one
  string of tau-images per vector set, separated by walls ``G^q`` with
  ``G = gamma^d``. Budget k = d.
* ``build_rklcss_instance``: string i holds the tau_i-images of set i,
  with the same wall layout. Budget k = 3d.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange
from .strings import BINARY, StringSet, validate_string_set

_MU = {0: b"0111000", 1: b"0001000"}
_TAU = {0: b"0011000", 1: b"1111000"}
_GAMMA = b"1001000"

# per-index prefixes for the multi-string morphisms; see tau_indexed
_PREFIX_ODD = {0: b"011", 1: b"000"}
_PREFIX_EVEN = {0: b"001", 1: b"111"}


def _bit(bit) -> int:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit!r}")
    return int(bit)


def mu(bit) -> bytes:
    return _MU[_bit(bit)]


def tau(bit) -> bytes:
    return _TAU[_bit(bit)]


def gamma() -> bytes:
    return _GAMMA


def tau_indexed(m: int, i: int, bit) -> bytes:
    """(2m+7)-letter image of ``bit`` for string i (1-based, 1 <= i <= m).

    Layout: 3-letter prefix, unit vector e_i of length m, then ``1 0^{m+3}``.
    Odd indices use prefixes 011/000, even indices 001/111, so strings i and
    i+1 reproduce the two displayed families exactly.
    """
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"index {i} outside 1..{m}")
    prefix = (_PREFIX_ODD if i % 2 else _PREFIX_EVEN)[_bit(bit)]
    unit = b"0" * (i - 1) + b"1" + b"0" * (m - i)
    return prefix + unit + b"1" + b"0" * (m + 3)


def gamma_indexed(m: int) -> bytes:
    return b"1" + b"0" * (m + 2) + b"1" + b"0" * (m + 3)


@dataclass(frozen=True)
class GadgetInstance:
    strings: StringSet
    k: int
    kind: str  # "rklcs" or "rklcss"
    d: int
    q: int
    set_sizes: tuple
    lower: int  # answer length at least this when the vector problem has a solution
    upper: int  # answer length below this otherwise
    planted: bool | None = None
    vectors: tuple = field(default=(), repr=False)

    def sidecar(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "m": self.strings.m,
            "set_sizes": list(self.set_sizes),
            "threshold": self.lower,
            "threshold_lower": self.lower,
            "threshold_upper": self.upper,
            "planted": self.planted,
            "vectors": [[list(v) for v in X] for X in self.vectors],
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar(), indent=2) + "\n"


def _dimension(sets) -> int:
    dims = {len(v) for X in sets for v in X}
    if len(dims) != 1:
        raise DimensionMismatch(f"all vectors must share one dimension, got {sorted(dims)}")
    d = dims.pop()
    if d < 1:
        raise DimensionMismatch("vectors must have dimension >= 1")
    return d


def _walled(images, wall: bytes) -> bytes:
    """``wall img_1 wall img_2 ... img_n wall``."""
    return wall + b"".join(img + wall for img in images)


def _image(vector, morph) -> bytes:
    return b"".join(morph(int(b)) for b in vector)


def build_rklcs_instance(sets, q: int = 1, planted: bool | None = None) -> GadgetInstance:
    """Rk-LCS instance for an M-OV question over vector sets X_1..X_M."""
    sets = [tuple(tuple(int(b) for b in v) for v in X) for X in sets]
    if not sets or any(not X for X in sets):
        raise ValueError("need at least one non-empty vector set")
    if q < 1:
        raise ValueError("q must be >= 1")
    d = _dimension(sets)
    wall = (_GAMMA * d) * q
    first = _walled([_image(v, mu) for X in sets for v in X], wall)
    rest = [_walled([_image(v, tau) for v in X], wall) for X in sets]
    S = validate_string_set([first] + rest, BINARY)
    return GadgetInstance(
        S, d, "rklcs", d, q, tuple(len(X) for X in sets),
        (14 * q + 7) * d, (7 * q + 14) * d, planted, tuple(sets),
    )


def build_rklcss_instance(sets, q: int = 1, planted: bool | None = None) -> GadgetInstance:
    """Rk-LCSS instance for a Complete K-OV question, one string per vector set."""
    sets = [tuple(tuple(int(b) for b in v) for v in X) for X in sets]
    m = len(sets)
    if m < 2:
        raise ValueError("need at least two vector sets")
    if len({len(X) for X in sets}) != 1 or not sets[0]:
        raise ValueError("every set must hold the same positive number of vectors")
    if q < 1:
        raise ValueError("q must be >= 1")
    d = _dimension(sets)
    wall = (gamma_indexed(m) * d) * q
    strings = [
        _walled([_image(v, lambda b, i=i: tau_indexed(m, i, b)) for v in X], wall)
        for i, X in enumerate(sets, start=1)
    ]
    S = validate_string_set(strings, BINARY)
    g = 2 * m + 7
    return GadgetInstance(
        S, 3 * d, "rklcss", d, q, tuple(len(X) for X in sets),
        g * (2 * q + 1) * d, g * (q + 2) * d, planted, tuple(sets),
    )


def random_family(rng: np.random.Generator, n_sets: int, n_v: int, d: int, plant: str | None = None):
    """Random 0/1 vector sets; ``plant`` may be "m-ov" or "complete-k-ov".

    "m-ov" makes the first vector of X_1 orthogonal to one vector of every
    other set; "complete-k-ov" makes one vector per set pairwise orthogonal
    by giving each coordinate to at most one of them.
    """
    sets = [[tuple(int(b) for b in rng.integers(0, 2, d)) for _ in range(n_v)] for _ in range(n_sets)]
    if plant == "m-ov":
        u = sets[0][0]
        for X in sets[1:]:
            slot = int(rng.integers(len(X)))
            X[slot] = tuple(0 if u[c] else int(rng.integers(2)) for c in range(d))
    elif plant == "complete-k-ov":
        owner = rng.integers(-1, n_sets, d)
        for idx, X in enumerate(sets):
            slot = int(rng.integers(len(X)))
            X[slot] = tuple(int(owner[c] == idx and rng.integers(2)) for c in range(d))
    elif plant is not None:
        raise ValueError(f"unknown plant kind {plant!r}")
    return [tuple(X) for X in sets]


def vector_sets(d: int, max_size: int):
    """Every set of 1..max_size distinct 0/1 vectors of dimension d, in canonical order."""
    vectors = [tuple(int(b) for b in format(x, f"0{d}b")) for x in range(2**d)]
    out = []
    for size in range(1, max_size + 1):
        out.extend(itertools.combinations(vectors, size))
    return out


def desk_families(n_sets: int, d: int, max_size: int, equal_sizes: bool = False):
    """All tuples of n_sets vector sets (see :func:`vector_sets`); optionally equal-sized only."""
    pool = vector_sets(d, max_size)
    for family in itertools.product(pool, repeat=n_sets):
        if equal_sizes and len({len(X) for X in family}) != 1:
            continue
        yield family
