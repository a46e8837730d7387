"""Brute-force reference implementations.

Everything here follows the problem definitions literally and shares no
code with the table-based solvers; only the input types are common. Each
oracle refuses inputs beyond its :class:`OracleBudget`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import BudgetExceeded, DimensionMismatch, UnsupportedMetric

_ENV_PREFIX = "APPROXLCS_ORACLE_"


@dataclass(frozen=True)
class OracleBudget:
    max_ell: int = 64
    max_m: int = 8
    max_k: int = 16
    max_enum_length: int = 12
    max_enumeration: int = 1 << 22

    def __post_init__(self):
        for name in ("max_ell", "max_m", "max_k", "max_enum_length", "max_enumeration"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, environ=None) -> "OracleBudget":
        """Defaults overridden by ``APPROXLCS_ORACLE_MAX_ELL`` and friends."""
        environ = os.environ if environ is None else environ
        kwargs = {}
        for name in cls.__dataclass_fields__:
            raw = environ.get(_ENV_PREFIX + name.upper())
            if raw is not None:
                kwargs[name] = int(raw)
        return cls(**kwargs)

    def check(self, strings, k):
        if len(strings) > self.max_m:
            raise BudgetExceeded(f"m={len(strings)} exceeds oracle cap {self.max_m}")
        longest = max(len(s) for s in strings)
        if longest > self.max_ell:
            raise BudgetExceeded(f"string length {longest} exceeds oracle cap {self.max_ell}")
        if k > self.max_k:
            raise BudgetExceeded(f"k={k} exceeds oracle cap {self.max_k}")


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class OracleAnswer:
    """Brute-force result: the answer string(s) and one witness per supporting string."""

    length: int
    answer: object
    source: tuple | None
    witnesses: tuple  # (string index, start, end exclusive, distance)

    @property
    def found(self) -> bool:
        return self.length > 0


def _kind(metric) -> str:
    return "hamming" if metric is None else metric.kind


def _costs(metric):
    """(substitution, deletion, insertion) cost functions."""
    if metric is None or metric.kind != "weighted":
        return (lambda a, b: 0 if a == b else 1), (lambda a: 1), (lambda b: 1)
    sub, dele, ins = metric.sub, metric.dele, metric.ins
    return (lambda a, b: int(sub[a, b])), (lambda a: int(dele[a])), (lambda b: int(ins[b]))


def dp_distance(u: bytes, v: bytes, metric=None) -> int:
    """Textbook full-table edit distance from u to v."""
    sub, dele, ins = _costs(metric)
    table = [[0] * (len(v) + 1) for _ in range(len(u) + 1)]
    for x in range(1, len(u) + 1):
        table[x][0] = table[x - 1][0] + dele(u[x - 1])
    for y in range(1, len(v) + 1):
        table[0][y] = table[0][y - 1] + ins(v[y - 1])
    for x in range(1, len(u) + 1):
        for y in range(1, len(v) + 1):
            table[x][y] = min(
                table[x - 1][y - 1] + sub(u[x - 1], v[y - 1]),
                table[x - 1][y] + dele(u[x - 1]),
                table[x][y - 1] + ins(v[y - 1]),
            )
    return table[len(u)][len(v)]


def _distances_from(u: bytes, s: bytes, start: int, metric):
    """Distances from u to every ``s[start:end]``, end = start..len(s), in one DP."""
    sub, dele, ins = _costs(metric)
    n = len(s) - start
    prev = [0] * (n + 1)
    for y in range(1, n + 1):
        prev[y] = prev[y - 1] + ins(s[start + y - 1])
    for x in range(1, len(u) + 1):
        a = u[x - 1]
        cur = [prev[0] + dele(a)] + [0] * n
        for y in range(1, n + 1):
            b = s[start + y - 1]
            cur[y] = min(prev[y - 1] + sub(a, b), prev[y] + dele(a), cur[y - 1] + ins(b))
        prev = cur
    return prev


def _occurs_somewhere(u: bytes, s: bytes, k: int, metric) -> bool:
    """Free-start DP: min over substrings of s of the distance from u, compared with k."""
    if metric is None or metric.kind != "weighted":
        return _occurs_somewhere_unit(u, s, k)
    sub, dele, ins = _costs(metric)
    prev = [0] * (len(s) + 1)
    for a in u:
        cur = [prev[0] + dele(a)] + [0] * len(s)
        for y in range(1, len(s) + 1):
            b = s[y - 1]
            cur[y] = min(prev[y - 1] + sub(a, b), prev[y] + dele(a), cur[y - 1] + ins(b))
        if min(cur) > k:
            return False
        prev = cur
    return min(prev) <= k


def _occurs_somewhere_unit(u: bytes, s: bytes, k: int) -> bool:
    prev = [0] * (len(s) + 1)
    for a in u:
        cur = [prev[0] + 1]
        for y, b in enumerate(s):
            cur.append(min(prev[y] + (a != b), prev[y + 1] + 1, cur[y] + 1))
        if min(cur) > k:
            return False
        prev = cur
    return min(prev) <= k


def _mismatches(u, v) -> int:
    return sum(a != b for a, b in zip(u, v))


def brute_k_approx_occurs(u, s, k: int, metric=None):
    """First k-approximate occurrence of u in s as (start, end, distance), or None.

    Hamming scans every window of length |u|; edit metrics try every
    substring of s, the empty one included.
    """
    u, s = bytes(u), bytes(s)
    if not u:
        raise ValueError("pattern must be non-empty")
    if _kind(metric) == "hamming":
        for x in range(len(s) - len(u) + 1):
            dist = _mismatches(u, s[x : x + len(u)])
            if dist <= k:
                return (x, x + len(u), dist)
        return None
    if not _occurs_somewhere(u, s, k, metric):
        return None
    for x in range(len(s) + 1):
        row = _distances_from(u, s, x, metric)
        for offset, dist in enumerate(row):
            if dist <= k:
                return (x, x + offset, dist)
    return None


def _substrings_longest_first(strings):
    longest = max(len(s) for s in strings)
    for length in range(longest, 0, -1):
        for i, s in enumerate(strings):
            for p in range(len(s) - length + 1):
                yield i, p, s[p : p + length]


def brute_rkt_lcs(S, k: int, t: int | None = None, metric=None, budget: OracleBudget = DEFAULT_BUDGET):
    """Longest substring of any input string occurring within k in at least t strings."""
    strings = [bytes(s) for s in S]
    budget.check(strings, k)
    t = len(strings) if t is None else t
    seen = {}
    for i, p, u in _substrings_longest_first(strings):
        if u in seen:
            continue
        witnesses = []
        for j, s in enumerate(strings):
            hit = brute_k_approx_occurs(u, s, k, metric)
            if hit is not None:
                witnesses.append((j,) + hit)
            # stop once the remaining strings cannot reach t
            if len(witnesses) + (len(strings) - j - 1) < t:
                break
        seen[u] = True
        if len(witnesses) >= t:
            return OracleAnswer(len(u), u, (i, p), tuple(witnesses))
    return OracleAnswer(0, b"", None, ())


def brute_kt_lcs(S, k: int, t: int | None, alphabet, max_length: int, metric=None, budget: OracleBudget = DEFAULT_BUDGET):
    """Longest string over the alphabet (length <= max_length) occurring within k in t strings."""
    strings = [bytes(s) for s in S]
    budget.check(strings, k)
    t = len(strings) if t is None else t
    letters = bytes(alphabet.symbols if hasattr(alphabet, "symbols") else alphabet)
    if max_length > budget.max_enum_length or len(letters) ** max_length > budget.max_enumeration:
        raise BudgetExceeded(f"{len(letters)}^{max_length} strings exceeds the enumeration cap")
    for length in range(max_length, 0, -1):
        for letters_tuple in itertools.product(letters, repeat=length):
            u = bytes(letters_tuple)
            witnesses = []
            for j, s in enumerate(strings):
                hit = brute_k_approx_occurs(u, s, k, metric)
                if hit is not None:
                    witnesses.append((j,) + hit)
            if len(witnesses) >= t:
                return OracleAnswer(length, u, None, tuple(witnesses))
    return OracleAnswer(0, b"", None, ())


def brute_rk_lcss(S, k: int, metric=None, budget: OracleBudget = DEFAULT_BUDGET):
    """Largest L with one length-L substring per string, pairwise within k mismatches."""
    if _kind(metric) != "hamming":
        raise UnsupportedMetric("the set variant is defined for Hamming distance only")
    strings = [bytes(s) for s in S]
    budget.check(strings, k)
    for length in range(min(len(s) for s in strings), 0, -1):
        total = 1
        for s in strings:
            total *= len(s) - length + 1
        if total > budget.max_enumeration:
            raise BudgetExceeded(f"{total} tuples at length {length} exceeds the enumeration cap")
        windows = [[s[x : x + length] for x in range(len(s) - length + 1)] for s in strings]
        for starts in itertools.product(*(range(len(w)) for w in windows)):
            chosen = [windows[j][x] for j, x in enumerate(starts)]
            if all(
                _mismatches(chosen[a], chosen[b]) <= k
                for a, b in itertools.combinations(range(len(chosen)), 2)
            ):
                witnesses = tuple(
                    (j, x, x + length, max(_mismatches(chosen[j], w) for w in chosen))
                    for j, x in enumerate(starts)
                )
                return OracleAnswer(length, tuple(chosen), None, witnesses)
    return OracleAnswer(0, (), None, ())


def brute_rk_lcss_at(S, length: int, k: int):
    """Is there a pairwise-within-k family of length-``length`` windows? Returns starts or None."""
    strings = [bytes(s) for s in S]
    if length < 1 or length > min(len(s) for s in strings):
        return None
    windows = [[s[x : x + length] for x in range(len(s) - length + 1)] for s in strings]
    for starts in itertools.product(*(range(len(w)) for w in windows)):
        chosen = [windows[j][x] for j, x in enumerate(starts)]
        if all(
            _mismatches(chosen[a], chosen[b]) <= k
            for a, b in itertools.combinations(range(len(chosen)), 2)
        ):
            return starts
    return None


# -- orthogonal-vector problems ---------------------------------------------


def _dimension(*families) -> int:
    dims = {len(v) for fam in families for v in fam}
    if len(dims) > 1:
        raise DimensionMismatch(f"vectors have differing dimensions {sorted(dims)}")
    return dims.pop() if dims else 0


def orthogonal(u, v) -> bool:
    return sum(a * b for a, b in zip(u, v)) == 0


def has_ov(A) -> bool:
    """Does A contain two orthogonal vectors (taken at distinct positions)?"""
    A = list(A)
    _dimension(A)
    return any(orthogonal(A[x], A[y]) for x, y in itertools.combinations(range(len(A)), 2))


def find_m_ov(*sets):
    """Some u in X_i and, for every other set X_j, a v_j orthogonal to u.

    Returns ``(i, u, {j: v_j})`` or None.
    """
    _dimension(*sets)
    for i, X in enumerate(sets):
        for u in X:
            partners = {}
            for j, Y in enumerate(sets):
                if j == i:
                    continue
                v = next((v for v in Y if orthogonal(u, v)), None)
                if v is None:
                    break
                partners[j] = v
            else:
                return i, u, partners
    return None


def has_m_ov(*sets) -> bool:
    return find_m_ov(*sets) is not None


def find_k_ov(*sets):
    """x_1..x_K, one per set, with no coordinate where all of them are 1."""
    d = _dimension(*sets)
    for combo in itertools.product(*sets):
        if all(not all(x[c] for x in combo) for c in range(d)):
            return combo
    return None


def has_k_ov(*sets) -> bool:
    return find_k_ov(*sets) is not None


def find_complete_k_ov(*sets):
    """x_1..x_K, one per set, pairwise orthogonal; or None."""
    _dimension(*sets)
    for combo in itertools.product(*sets):
        if all(orthogonal(a, b) for a, b in itertools.combinations(combo, 2)):
            return combo
    return None


def has_complete_k_ov(*sets) -> bool:
    return find_complete_k_ov(*sets) is not None
