from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Union

from .solvers import DualTrace, SolveReport

BENCH_COLUMNS = ("instance", "algorithm", "t", "cost", "lower_bound", "opt", "ratio", "theta", "time_ms")

JsonNumber = Union[int, str, None]


def fmt_q(q: Optional[Fraction]) -> str:
    """'3', '7/2', or '' for a missing value."""
    if q is None:
        return ""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def json_q(q: Optional[Fraction]) -> JsonNumber:
    if q is None:
        return None
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_ms(seconds: float) -> str:
    return f"{seconds * 1000:.3f}"


def fmt_ids(ids) -> str:
    return " ".join(str(v) for v in ids)


def report_dict(report: SolveReport, with_time: bool = True) -> Dict[str, object]:
    return {
        "algorithm": report.algorithm.value,
        "solution": list(report.solution),
        "cost": json_q(report.cost),
        "lower_bound": json_q(report.lower_bound),
        "theta": json_q(report.theta),
        "guarantee": json_q(report.guarantee),
        "trace_bound": json_q(report.trace_bound),
        "iterations": report.iterations,
        "time_ms": round(report.elapsed * 1000, 3) if with_time else None,
    }


def report_lines(report: SolveReport, with_time: bool = True) -> List[str]:
    """Plain-text report, one 'key: value' per line (no printing)."""
    def show(q: Optional[Fraction]) -> str:
        return fmt_q(q) if q is not None else "-"

    return [
        f"algorithm: {report.algorithm.value}",
        f"solution: {fmt_ids(report.solution)}",
        f"cost: {fmt_q(report.cost)}",
        f"lower_bound: {fmt_q(report.lower_bound)}",
        f"theta: {show(report.theta)}",
        f"guarantee: {show(report.guarantee)}",
        f"trace_bound: {show(report.trace_bound)}",
        f"iterations: {report.iterations}",
        f"time_ms: {fmt_ms(report.elapsed) if with_time else '-'}",
    ]


def trace_lines(trace: DualTrace) -> List[str]:
    lines = ["# step raise tight dual active"]
    for k, entry in enumerate(trace, start=1):
        lines.append(
            f"{k} {fmt_q(entry.raise_amount)} {entry.tight} {entry.dual_value} "
            f"{fmt_ids(sorted(entry.active))}"
        )
    lines.append(f"# objective {fmt_q(trace.objective())}")
    return lines


def verify_line(feasible: bool, minimal: bool, cost: Fraction) -> str:
    return f"feasible={str(feasible).lower()} minimal={str(minimal).lower()} cost={fmt_q(cost)}"
