"""Helpers shared by the test modules."""

import numpy as np

from approxlcs import IndeterminateString, validate_string_set
from approxlcs.oracle import dp_distance
from approxlcs.strings import indeterminate_mismatches


def random_set(rng, m, lo, hi, letters=b"ab"):
    return validate_string_set(
        [bytes(rng.choice(list(letters), int(rng.integers(lo, hi + 1))).astype(np.uint8)) for _ in range(m)]
    )


def reference_distance(u, v, metric):
    """Direct distance, independent of the compiled kernels."""
    if isinstance(u, IndeterminateString):
        return indeterminate_mismatches(u.positions, v.positions)
    if metric is None or metric.kind == "hamming":
        assert len(u) == len(v)
        return sum(a != b for a, b in zip(u, v))
    return dp_distance(bytes(u), bytes(v), metric)


def witness_failures(S, sol, k, t, metric=None):
    """Reasons the reported witnesses fail to support the answer (empty when sound)."""
    problems = []
    strings = list(S)
    if sol.problem == "rk-lcss":
        answers = sol.answers
        if len(answers) != len(strings):
            return ["one substring per input string expected"]
        for w, u in zip(sol.witnesses, answers):
            if strings[w.string][w.start : w.end] != u or len(u) != sol.length:
                problems.append(f"answer {u!r} is not s{w.string}[{w.start}:{w.end}]")
        for a in range(len(answers)):
            for b in range(a + 1, len(answers)):
                if reference_distance(answers[a], answers[b], None) > k:
                    problems.append(f"pair {a},{b} exceeds k")
        return problems
    i, p = sol.source
    answer = sol.answer
    if strings[i][p : p + sol.length] != answer:
        problems.append("answer is not the reported source substring")
    seen = set()
    for w in sol.witnesses:
        got = reference_distance(answer, strings[w.string][w.start : w.end], metric)
        if got != w.distance or got > k:
            problems.append(f"witness {w} has distance {got}")
        seen.add(w.string)
    if len(seen) < t:
        problems.append(f"only {len(seen)} supporting strings, need {t}")
    return problems
