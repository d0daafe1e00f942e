from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .claw import is_feasible, is_minimal
from .constants import (
    DEFAULT_T,
    EXIT_INFEASIBLE,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_ORACLE,
    EXIT_PARSE,
    GEN_RETRY_CAP,
    ORACLE_MAX_DEPTH,
)
from .errors import (
    ClawdelError,
    GenerationError,
    GraphError,
    InfeasibleSolutionError,
    NonCanonicalSolutionError,
    OracleTooLargeError,
    ParseError,
    ShadowMismatchError,
)
from .formats import decode_text, parse_any, parse_solution, serialize
from .generate import Family, GenSpec, WeightMode, generate_text
from .models import Algorithm, BipartiteGraph, Hypergraph, SplitGraph
from .oracle import exact_min_osbcd, exact_report
from .reductions import ReductionKind, apply_reduction, serialize_map
from .render import BENCH_COLUMNS, fmt_ms, fmt_q, report_dict, report_lines, trace_lines, verify_line
from .solvers import (
    SolveReport,
    local_ratio_solve,
    max_subgraph_report,
    primal_dual_solve,
    split_solve,
)

logger = logging.getLogger(__name__)

USER_ERRORS = (ParseError, GraphError, GenerationError, NonCanonicalSolutionError)


def _read(path: str) -> str:
    try:
        return decode_text(Path(path).read_bytes())
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc.strerror}") from exc


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def _load_instance(path: str):
    graph = parse_any(_read(path))
    if isinstance(graph, Hypergraph):
        raise GraphError(f"{path}: expected a 'p bip' or 'p split' instance, got a hypergraph")
    return graph


def run_algorithm(graph, algorithm: Algorithm, max_depth: int = ORACLE_MAX_DEPTH) -> SolveReport:
    if algorithm is Algorithm.PRIMAL_DUAL:
        if isinstance(graph, SplitGraph):
            return split_solve(graph, algorithm)
        return primal_dual_solve(graph)
    if algorithm is Algorithm.LOCAL_RATIO:
        return local_ratio_solve(graph)
    if algorithm is Algorithm.EXACT:
        return exact_report(graph, max_depth)
    return max_subgraph_report(graph)


# ----- subcommands -----
def cmd_gen(args: argparse.Namespace) -> int:
    lo, _, hi = args.weight_range.partition(":")
    try:
        weight_range = (int(lo), int(hi or lo))
    except ValueError:
        raise GenerationError(f"bad weight range {args.weight_range!r}, expected LO:HI")
    spec = GenSpec(
        family=Family(args.family),
        t=args.t,
        seed=args.seed,
        n_a=args.n_a,
        n_b=args.n_b,
        n=args.n,
        m=args.m,
        n_c=args.n_c,
        n_i=args.n_i,
        p=args.p,
        weight_mode=WeightMode(args.weights),
        weight_range=weight_range,
        retries=args.retries,
    )
    _write(args.output, generate_text(spec))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    kind = ReductionKind(args.kind)
    source = parse_any(_read(args.input))
    graph, rmap = apply_reduction(kind, source)
    _write(args.output, serialize(graph, [f"reduce {kind.value} from {Path(args.input).name}"]))
    if args.map:
        _write(args.map, serialize_map(rmap))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    graph = _load_instance(args.input)
    report = run_algorithm(graph, Algorithm(args.alg), args.max_depth)
    with_time = not args.no_time
    if args.json:
        sys.stdout.write(json.dumps(report_dict(report, with_time)) + "\n")
    else:
        sys.stdout.write("\n".join(report_lines(report, with_time)) + "\n")
    if args.trace:
        if report.trace is None:
            logger.warning("%s keeps no dual trace; %s not written", report.algorithm.value, args.trace)
        else:
            _write(args.trace, "\n".join(trace_lines(report.trace)) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_instance(args.input)
    solution = parse_solution(_read(args.solution))
    feasible = is_feasible(graph, solution)
    minimal = feasible and is_minimal(graph, solution)
    sys.stdout.write(verify_line(feasible, minimal, graph.total_weight(solution)) + "\n")
    return EXIT_OK if feasible else EXIT_INFEASIBLE


def _ratio(algorithm: Algorithm, value: Fraction, opt: Optional[Fraction]) -> Optional[Fraction]:
    """Achieved ratio, always >= 1: cost/OPT for deletion, OPT_max/weight for max-subgraph."""
    if opt is None:
        return None
    num, den = (opt, value) if algorithm is Algorithm.MAX_SUBGRAPH else (value, opt)
    if den == 0:
        return Fraction(1) if num == 0 else None
    return num / den


def _bench_instance(path: str, algorithms: Sequence[str], max_depth: int,
                    with_time: bool) -> List[Dict[str, str]]:
    graph = parse_any(_read(path))
    try:
        _, opt = exact_min_osbcd(graph, max_depth)
    except OracleTooLargeError as exc:
        logger.info("%s: %s", path, exc)
        opt = None
    rows = []
    for name in algorithms:
        algorithm = Algorithm(name)
        target = opt
        if algorithm is Algorithm.MAX_SUBGRAPH and opt is not None:
            target = graph.total_weight() - opt
        row = {
            "instance": Path(path).name,
            "algorithm": algorithm.value,
            "t": str(graph.t),
            "opt": fmt_q(target),
        }
        try:
            report = run_algorithm(graph, algorithm, max_depth)
        except ShadowMismatchError as exc:
            logger.warning("%s: %s: %s", Path(path).name, algorithm.value, exc)
            rows.append({column: row.get(column, "") for column in BENCH_COLUMNS})
            continue
        rows.append({
            **row,
            "cost": fmt_q(report.cost),
            "lower_bound": fmt_q(report.lower_bound),
            "ratio": fmt_q(_ratio(algorithm, report.cost, target)),
            "theta": fmt_q(report.theta),
            "time_ms": fmt_ms(report.elapsed) if with_time else "",
        })
    return rows


def _suite(directory: str) -> List[str]:
    root = Path(directory)
    if not root.is_dir():
        raise ParseError(0, f"{directory} is not a directory")
    paths = []
    for path in sorted(p for p in root.iterdir() if p.is_file()):
        if not isinstance(parse_any(_read(str(path))), (BipartiteGraph, SplitGraph)):
            logger.warning("skipping %s: hypergraph files are not solved", path.name)
            continue
        paths.append(str(path))
    return paths


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = [a.strip() for a in args.algs.split(",") if a.strip()]
    for name in algorithms:
        Algorithm(name)
    paths = _suite(args.suite)
    with_time = not args.no_time
    jobs = [(p, algorithms, args.max_depth, with_time) for p in paths]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_bench_instance, *zip(*jobs))) if jobs else []
    else:
        results = [_bench_instance(*job) for job in jobs]
    order = {name: i for i, name in enumerate(algorithms)}
    rows = sorted((row for rs in results for row in rs),
                  key=lambda r: (r["instance"], order[r["algorithm"]]))
    target = sys.stdout if args.csv in (None, "-") else open(args.csv, "w", newline="", encoding="utf-8")
    try:
        writer = csv.DictWriter(target, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if target is not sys.stdout:
            target.close()
    logger.info("bench: %d rows from %d instances", len(rows), len(paths))
    return EXIT_OK


# ----- argument parsing -----
def _choices(enum_cls) -> List[str]:
    return [e.value for e in enum_cls]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clawdel", description="One-sided and split claw deletion toolkit")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded random instance")
    gen.add_argument("--family", required=True, choices=_choices(Family))
    gen.add_argument("--t", type=int, default=DEFAULT_T)
    gen.add_argument("--seed", type=int, default=0)
    for flag in ("--n-a", "--n-b", "--n", "--m", "--n-c", "--n-i"):
        gen.add_argument(flag, type=int, default=0)
    gen.add_argument("--p", type=Fraction, default=Fraction(1, 2), help="edge probability, e.g. 1/2")
    gen.add_argument("--weights", choices=_choices(WeightMode), default=WeightMode.UNIT.value)
    gen.add_argument("--weight-range", default="1:1", help="LO:HI for uniform-integer weights")
    gen.add_argument("--retries", type=int, default=GEN_RETRY_CAP)
    gen.add_argument("--output", default=None)
    gen.set_defaults(handler=cmd_gen)

    red = sub.add_parser("reduce", help="build a reduced instance and its map")
    red.add_argument("--kind", required=True, choices=_choices(ReductionKind))
    red.add_argument("--input", required=True)
    red.add_argument("--output", required=True)
    red.add_argument("--map", default=None)
    red.set_defaults(handler=cmd_reduce)

    solve = sub.add_parser("solve", help="solve a bip or split instance")
    solve.add_argument("--alg", required=True, choices=_choices(Algorithm))
    solve.add_argument("--input", required=True)
    solve.add_argument("--json", action="store_true")
    solve.add_argument("--trace", default=None, help="write the dual trace here")
    solve.add_argument("--max-depth", type=int, default=ORACLE_MAX_DEPTH)
    solve.add_argument("--no-time", action="store_true", help="omit timings for reproducible output")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="check a deletion set")
    verify.add_argument("--input", required=True)
    verify.add_argument("--solution", required=True)
    verify.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", help="run algorithms and the oracle over a directory")
    bench.add_argument("--suite", required=True)
    bench.add_argument("--algs", default="primal-dual,local-ratio")
    bench.add_argument("--csv", default=None)
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--max-depth", type=int, default=ORACLE_MAX_DEPTH)
    bench.add_argument("--no-time", action="store_true")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("clawdel").setLevel(level)
    try:
        return args.handler(args)
    except USER_ERRORS as exc:
        logger.error("%s", exc)
        return EXIT_PARSE
    except OracleTooLargeError as exc:
        logger.error("%s", exc)
        return EXIT_ORACLE
    except InfeasibleSolutionError as exc:
        logger.error("%s", exc)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        # enum lookups on user-supplied names
        logger.error("%s", exc)
        return EXIT_PARSE
    except (ClawdelError, RuntimeError) as exc:
        logger.error("internal error: %s", exc)
        return EXIT_INTERNAL
