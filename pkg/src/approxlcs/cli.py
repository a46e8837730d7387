"""Command-line entry point.

    approxlcs solve --problem rkt-lcs --metric hamming --k 2 --t 3 strings.txt
    approxlcs gen-gadget rklcs --M 2 --d 2 --nv 2 --q 1 --plant --out inst.txt

Exit status: 0 when a solution exists, 3 for NoSolution, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gadgets, oracle, seqio
from .errors import ALCSError
from .indeterminate import solve_rkt_lcs_indet
from .solver import (
    RK_LCS,
    RK_LCSS,
    RKT_LCS,
    NoSolution,
    solve_rk_lcs_maxlcp,
    solve_rk_lcss,
    solve_rkt_lcs,
    solve_rkt_lcs_via_subsets,
)
from .strings import DistanceMetric, IndeterminateString

SCHEMA = "approxlcs.report"
SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_NO_SOLUTION = 0, 2, 3

PROBLEMS = ("rk-lcs", "rkt-lcs", "rk-lcss", "elcs")
METRICS = ("hamming", "edit", "weighted")
SOLVERS = ("lengthstat", "maxlcp", "subsets", "oracle")

log = logging.getLogger("approxlcs")


class UsageError(ALCSError):
    pass


@dataclass
class RunConfig:
    input: Path
    problem: str = "rkt-lcs"
    metric: str = "hamming"
    k: int = 0
    t: int | None = None
    solver: str = "lengthstat"
    format: str = "lines"
    indeterminate: bool = False
    costs: Path | None = None
    output: str = "json"
    threads: int = 1
    normalize: bool = True
    oracle_budget: oracle.OracleBudget = None

    def validate(self):
        if self.problem not in PROBLEMS:
            raise UsageError(f"--problem must be one of {PROBLEMS}")
        if self.metric not in METRICS:
            raise UsageError(f"--metric must be one of {METRICS}")
        if self.solver not in SOLVERS:
            raise UsageError(f"--solver must be one of {SOLVERS}")
        if self.k < 0:
            raise UsageError("--k must be >= 0")
        if self.t is not None and self.t < 1:
            raise UsageError("--t must be >= 1")
        if self.metric == "weighted" and self.costs is None:
            raise UsageError("--metric weighted needs --costs")
        if self.metric != "weighted" and self.costs is not None:
            raise UsageError("--costs only applies to --metric weighted")
        if self.problem == "rk-lcss" and self.metric != "hamming":
            raise UsageError("rk-lcss supports --metric hamming only")
        if self.problem == "rk-lcss" and self.solver not in ("lengthstat", "oracle"):
            raise UsageError("rk-lcss runs with the default clique solver or --solver oracle")
        if self.indeterminate and self.metric != "hamming":
            raise UsageError("--indeterminate supports --metric hamming only")
        if self.indeterminate and self.solver != "lengthstat":
            raise UsageError("--indeterminate runs with --solver lengthstat only")
        if self.indeterminate and self.problem == "rk-lcss":
            raise UsageError("--indeterminate does not support rk-lcss")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if self.output not in ("json", "tsv", "human"):
            raise UsageError("--output must be json, tsv or human")


def _metric(cfg: RunConfig) -> DistanceMetric:
    if cfg.metric == "weighted":
        return seqio.parse_cost_table(Path(cfg.costs).read_text())
    return DistanceMetric(cfg.metric)


def _text(x) -> str:
    if isinstance(x, bytes):
        return x.decode("latin-1")
    return str(x)


def _from_oracle(ans, problem, k, t, metric_kind):
    """Oracle answers in the same report shape as solver results."""
    from .solver import Solution, Witness

    if not ans.found:
        return NoSolution(problem, k, t, metric_kind)
    witnesses = tuple(Witness(*w) for w in ans.witnesses)
    return Solution(problem, ans.length, ans.answer, ans.source, witnesses, k, t, metric_kind)


def solve(cfg: RunConfig):
    """Run the configured solver; returns (result, input names, m)."""
    cfg.validate()
    data, names = seqio.parse(
        Path(cfg.input).read_text(encoding="latin-1"), cfg.format, cfg.indeterminate, cfg.normalize
    )
    m = len(data)
    k = 0 if cfg.problem == "elcs" else cfg.k
    t = cfg.t
    if cfg.problem in ("rk-lcs", "rk-lcss"):
        if t is not None and t != m:
            raise UsageError(f"{cfg.problem} fixes t = m = {m}")
        t = m
    if t is not None and t > m:
        raise UsageError(f"--t {t} exceeds the number of strings ({m})")
    if cfg.indeterminate:
        if m < 2:
            raise UsageError("need at least 2 strings")
        return solve_rkt_lcs_indet(data, k, t, workers=cfg.threads), names, m
    metric = _metric(cfg)
    S = data
    if cfg.problem == "rk-lcss":
        if cfg.solver == "oracle":
            return _from_oracle(oracle.brute_rk_lcss(S, k, metric, cfg.oracle_budget), RK_LCSS, k, m, "hamming"), names, m
        return solve_rk_lcss(S, k, metric), names, m
    t = m if t is None else t
    problem = RK_LCS if t == m else RKT_LCS
    if cfg.solver == "lengthstat":
        return solve_rkt_lcs(S, k, t, metric, workers=cfg.threads), names, m
    if cfg.solver == "maxlcp":
        if t != m:
            raise UsageError("--solver maxlcp solves t = m only; use subsets for t < m")
        return solve_rk_lcs_maxlcp(S, k, metric), names, m
    if cfg.solver == "subsets":
        return solve_rkt_lcs_via_subsets(S, k, t, metric), names, m
    ans = oracle.brute_rkt_lcs(S, k, t, metric, cfg.oracle_budget)
    return _from_oracle(ans, problem, k, t, metric.kind), names, m


def build_report(cfg: RunConfig, result, names, m, wall: float) -> dict:
    report = {
        "schema": SCHEMA,
        "schema_version": SCHEMA_VERSION,
        "problem": cfg.problem,
        "metric": cfg.metric,
        "solver": cfg.solver,
        "k": result.k,
        "t": result.t,
        "m": m,
        "indeterminate": cfg.indeterminate,
        "input": str(cfg.input),
        "names": list(names),
        "found": bool(result.found),
        "length": int(result.length),
        "answer": None,
        "answers": [],
        "source_index_1based": None,
        "offset_1based": None,
        "maximizers": 0,
        "witnesses": [],
        "wall_time_s": wall,
    }
    if result.found:
        report["answers"] = [_text(a) for a in result.answers]
        report["answer"] = report["answers"][0] if result.problem != RK_LCSS else None
        if result.source is not None:
            report["source_index_1based"] = result.source[0] + 1
            report["offset_1based"] = result.source[1] + 1
        report["maximizers"] = result.maximizers
        report["witnesses"] = [
            {
                "string_index_1based": w.string + 1,
                "start_1based": w.start + 1,
                "end_1based": w.end,
                "distance": w.distance,
                "empty": w.end == w.start,
            }
            for w in result.witnesses
        ]
    return report


def format_tsv(report: dict) -> str:
    lines = ["#" + "\t".join(f"{key}={report[key]}" for key in ("problem", "metric", "k", "t", "found", "length"))]
    lines.append("string\tstart\tend\tdistance\tempty")
    for w in report["witnesses"]:
        lines.append(
            f"{w['string_index_1based']}\t{w['start_1based']}\t{w['end_1based']}\t{w['distance']}\t{int(w['empty'])}"
        )
    return "\n".join(lines) + "\n"


def format_human(report: dict) -> str:
    if not report["found"]:
        return f"{report['problem']}: no solution (k={report['k']}, t={report['t']})\n"
    out = [f"{report['problem']} ({report['metric']}, k={report['k']}, t={report['t']}): length {report['length']}"]
    if report["answer"] is not None:
        out.append(
            f"answer {report['answer']!r} from string {report['source_index_1based']}"
            f" at offset {report['offset_1based']}"
        )
    else:
        out.append("answers " + ", ".join(repr(a) for a in report["answers"]))
    for w in report["witnesses"]:
        name = report["names"][w["string_index_1based"] - 1]
        out.append(f"  {name}[{w['start_1based']}..{w['end_1based']}] distance {w['distance']}")
    out.append(f"({report['wall_time_s']:.3f} s)")
    return "\n".join(out) + "\n"


def run(cfg: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    start = time.perf_counter()
    result, names, m = solve(cfg)
    wall = time.perf_counter() - start
    report = build_report(cfg, result, names, m, wall)
    if cfg.output == "json":
        stream.write(json.dumps(report, indent=2) + "\n")
    elif cfg.output == "tsv":
        stream.write(format_tsv(report))
    else:
        stream.write(format_human(report))
    return EXIT_OK if result.found else EXIT_NO_SOLUTION


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="approxlcs", description="Exact restricted approximate LCS of multiple strings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command")

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("input", type=Path)
    s.add_argument("--problem", choices=PROBLEMS, default="rkt-lcs")
    s.add_argument("--metric", choices=METRICS, default="hamming")
    s.add_argument("--k", type=_non_negative, default=0)
    s.add_argument("--t", type=_positive, default=None, help="defaults to the number of strings")
    s.add_argument("--solver", choices=SOLVERS, default="lengthstat")
    s.add_argument("--format", choices=("lines", "fasta"), default="lines")
    s.add_argument("--indeterminate", action="store_true", help="expand IUPAC codes into letter-sets")
    s.add_argument("--costs", type=Path, help="weighted cost table (TSV)")
    s.add_argument("--output", choices=("json", "tsv", "human"), default="json")
    s.add_argument("--threads", type=_positive, default=1)
    s.add_argument("--no-normalize", action="store_true", help="keep FASTA letter case")

    g = sub.add_parser("gen-gadget", help="write a hardness instance and its JSON sidecar")
    gsub = g.add_subparsers(dest="gadget", required=True)
    for name, count_flag in (("rklcs", "--M"), ("rklcss", "--m")):
        gp = gsub.add_parser(name)
        gp.add_argument(count_flag, dest="sets", type=_positive, required=True)
        gp.add_argument("--d", type=_positive, required=True)
        gp.add_argument("--nv", type=_positive, required=True, help="vectors per set")
        gp.add_argument("--q", type=_positive, default=1)
        gp.add_argument("--plant", action="store_true", help="plant an orthogonal family")
        gp.add_argument("--seed", type=int, default=0)
        gp.add_argument("--out", type=Path, help="instance path (default: stdout, no sidecar)")
        gp.add_argument("--format", choices=("lines", "fasta"), default="lines")
    return parser


def gen_gadget(args, stream=None) -> int:
    stream = stream or sys.stdout
    if args.gadget == "rklcss" and args.sets < 2:
        raise UsageError("--m must be >= 2")
    rng = np.random.default_rng(args.seed)
    if args.gadget == "rklcs":
        plant = "m-ov" if args.plant else None
        sets = gadgets.random_family(rng, args.sets, args.nv, args.d, plant)
        inst = gadgets.build_rklcs_instance(sets, args.q, planted=args.plant)
    else:
        plant = "complete-k-ov" if args.plant else None
        sets = gadgets.random_family(rng, args.sets, args.nv, args.d, plant)
        inst = gadgets.build_rklcss_instance(sets, args.q, planted=args.plant)
    text = seqio.emit(inst.strings, args.format)
    if args.out is None:
        stream.write(text)
        return EXIT_OK
    args.out.write_text(text)
    sidecar = args.out.with_name(args.out.name + ".json")
    sidecar.write_text(inst.sidecar_json())
    log.info("wrote %s and %s", args.out, sidecar)
    return EXIT_OK


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in ("solve", "gen-gadget", "-h", "--help", "-v", "--verbose"):
        argv.insert(0, "solve")
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "gen-gadget":
            return gen_gadget(args)
        cfg = RunConfig(
            input=args.input,
            problem=args.problem,
            metric=args.metric,
            k=args.k,
            t=args.t,
            solver=args.solver,
            format=args.format,
            indeterminate=args.indeterminate,
            costs=args.costs,
            output=args.output,
            threads=args.threads,
            normalize=not args.no_normalize,
            oracle_budget=oracle.OracleBudget.from_env(),
        )
        return run(cfg)
    except (ALCSError, OSError) as exc:
        print(f"approxlcs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
