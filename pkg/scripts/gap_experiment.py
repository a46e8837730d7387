"""Check the length-threshold gap of both hardness constructions on every small vector family.

    python scripts/gap_experiment.py --dmax 2 --nvmax 3 --show 5
"""

import argparse
import time

from approxlcs import build_rklcs_instance, build_rklcss_instance, rk_lcss_feasible, solve_rk_lcs
from approxlcs.gadgets import desk_families
from approxlcs.oracle import has_complete_k_ov, has_m_ov


def rklcs_rows(n_sets, dmax, nvmax):
    for d in range(1, dmax + 1):
        for family in desk_families(n_sets, d, nvmax):
            inst = build_rklcs_instance(family)
            length = solve_rk_lcs(inst.strings, inst.k).length
            yield family, length, length >= inst.lower, has_m_ov(*family)


def rklcss_rows(m, dmax, nvmax):
    for d in range(1, dmax + 1):
        for family in desk_families(m, d, nvmax, equal_sizes=True):
            inst = build_rklcss_instance(family)
            reaches = rk_lcss_feasible(inst.strings, inst.lower, inst.k) is not None
            yield family, inst.lower, reaches, has_complete_k_ov(*family)


def report(title, rows, show):
    total = bad = 0
    examples = []
    for family, value, reaches, truth in rows:
        total += 1
        if reaches != truth:
            bad += 1
            if len(examples) < show:
                examples.append((family, value, reaches, truth))
    print(f"{title}: {bad}/{total} families disagree")
    for family, value, reaches, truth in examples:
        sets = " ".join("{" + ",".join("".join(map(str, v)) for v in X) + "}" for X in family)
        print(f"    {sets}  value={value} reaches={reaches} orthogonal={truth}")
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=2)
    ap.add_argument("--nvmax", type=int, default=3)
    ap.add_argument("--show", type=int, default=3, help="disagreeing families to print per row")
    args = ap.parse_args()
    start = time.perf_counter()
    for M in (2, 3):
        report(f"rklcs  M={M}", rklcs_rows(M, args.dmax, args.nvmax), args.show)
    for m in (2, 3):
        report(f"rklcss m={m}", rklcss_rows(m, args.dmax, args.nvmax), args.show)
    print(f"done in {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
