from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

from .claw import find_witness, is_feasible, is_minimal, reverse_delete
from .errors import GraphError, ShadowMismatchError
from .models import Algorithm, BipartiteGraph, SplitGraph
from .polymatroid import PolymatroidContext, dual_of_delta, f_t_dual

logger = logging.getLogger(__name__)

ClawGraph = Union[BipartiteGraph, SplitGraph]
ZERO = Fraction(0)


@dataclass(frozen=True)
class TraceEntry:
    active: FrozenSet[int]
    raise_amount: Fraction
    tight: int
    coefficients: Mapping[int, int]
    dual_value: int


@dataclass
class DualTrace:
    """Primal-dual raises, one per iteration; only the current S is ever raised."""

    entries: List[TraceEntry] = field(default_factory=list)

    def __iter__(self) -> Iterator[TraceEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def load(self, v: int) -> Fraction:
        """Left-hand side of the dual constraint for v."""
        return sum((e.raise_amount * e.coefficients[v] for e in self.entries if v in e.active), ZERO)

    def objective(self) -> Fraction:
        return sum((e.raise_amount * e.dual_value for e in self.entries), ZERO)


@dataclass
class SolveReport:
    algorithm: Algorithm
    solution: Tuple[int, ...]
    cost: Fraction
    lower_bound: Fraction
    theta: Optional[Fraction]
    iterations: int
    elapsed: float
    guarantee: Optional[Fraction] = None
    trace_bound: Optional[Fraction] = None
    trace: Optional[DualTrace] = None


class MaxSubgraphResult(NamedTuple):
    vertices: Tuple[int, ...]
    weight: Fraction


def theta_of_solution(g: BipartiteGraph, solution: Iterable[int]) -> Fraction:
    """Sum of f^d(delta(v)) over a minimal solution, divided by f^d(E)."""
    s = g.check_vertices(solution)
    if not is_minimal(g, s):
        raise GraphError("theta is defined for minimal solutions only")
    ctx = PolymatroidContext.of(g)
    total = f_t_dual(ctx, ctx.edges)
    if total == 0:
        if s:
            raise GraphError("theta undefined: f^d(E) = 0 for a nonempty solution")
        return ZERO
    return Fraction(sum(dual_of_delta(ctx, v) for v in s), total)


def theta_certificate(graph: ClawGraph, solution: Iterable[int]) -> Optional[Fraction]:
    """theta on the bipartite shadow, or None where the set is not minimal there."""
    g = graph.shadow() if isinstance(graph, SplitGraph) else graph
    s = g.check_vertices(solution)
    if not is_feasible(g, s) or not is_minimal(g, s):
        return None
    return theta_of_solution(g, s)


def trace_bound(trace: DualTrace, solution: Iterable[int]) -> Optional[Fraction]:
    """Largest per-step ratio sum_{v in F and S} c_v / f^d(E[S]) over steps that raised."""
    chosen = frozenset(solution)
    ratios = [
        Fraction(sum(e.coefficients[v] for v in chosen & e.active), e.dual_value)
        for e in trace
        if e.raise_amount > 0
    ]
    return max(ratios) if ratios else None


def primal_dual_solve(g: BipartiteGraph) -> SolveReport:
    started = time.perf_counter()
    active = set(g.vertices)
    residual: Dict[int, Fraction] = {v: g.weight(v) for v in g.vertices}
    added: List[int] = []
    trace = DualTrace()

    while not is_feasible(g, added):
        ctx = PolymatroidContext.of(g, active)
        coefficients = {v: dual_of_delta(ctx, v) for v in sorted(active)}
        positive = [v for v in sorted(active) if coefficients[v] > 0]
        if not positive:
            raise RuntimeError("residual graph has a claw but no vertex can become tight")
        raise_amount = min(residual[v] / coefficients[v] for v in positive)
        tight = next(v for v in positive if residual[v] / coefficients[v] == raise_amount)
        for v in positive:
            residual[v] -= raise_amount * coefficients[v]
        trace.entries.append(
            TraceEntry(frozenset(active), raise_amount, tight, coefficients, f_t_dual(ctx, ctx.edges))
        )
        logger.debug("|S|=%d raise=%s tight=%d", len(active), raise_amount, tight)
        added.append(tight)
        active.discard(tight)

    solution = reverse_delete(g, added)
    report = SolveReport(
        algorithm=Algorithm.PRIMAL_DUAL,
        solution=tuple(sorted(solution)),
        cost=g.total_weight(solution),
        lower_bound=trace.objective(),
        theta=theta_of_solution(g, solution),
        iterations=len(trace),
        elapsed=time.perf_counter() - started,
        guarantee=Fraction(2) if g.is_dense() else Fraction(g.t),
        trace_bound=trace_bound(trace, solution),
        trace=trace,
    )
    logger.info("primal-dual: cost %s, dual bound %s, %d iterations",
                report.cost, report.lower_bound, report.iterations)
    return report


def local_ratio_solve(graph: ClawGraph) -> SolveReport:
    """Local ratio on claw witnesses: each round zeroes a vertex of one t+1 set."""
    started = time.perf_counter()
    residual: Dict[int, Fraction] = {v: graph.weight(v) for v in graph.vertices}
    added: List[int] = []
    lower = ZERO
    rounds = 0
    while True:
        witness = find_witness(graph, added)
        if witness is None:
            break
        amount = min(residual[v] for v in witness.vertices)
        for v in witness.vertices:
            residual[v] -= amount
        added.extend(v for v in witness.vertices if residual[v] == 0)
        lower += amount
        rounds += 1

    solution = reverse_delete(graph, added)
    return SolveReport(
        algorithm=Algorithm.LOCAL_RATIO,
        solution=tuple(sorted(solution)),
        cost=graph.total_weight(solution),
        lower_bound=lower,
        theta=theta_certificate(graph, solution),
        iterations=rounds,
        elapsed=time.perf_counter() - started,
        guarantee=Fraction(graph.t + 1),
    )


def split_solve(h: SplitGraph, algorithm: Algorithm = Algorithm.PRIMAL_DUAL) -> SolveReport:
    """Solve on the cross-edge shadow, then re-check the answer on the split graph."""
    shadow = h.shadow()
    if algorithm is Algorithm.PRIMAL_DUAL:
        report = primal_dual_solve(shadow)
    elif algorithm is Algorithm.LOCAL_RATIO:
        report = local_ratio_solve(shadow)
    else:
        raise GraphError(f"split_solve does not run {algorithm.value}")
    witness = find_witness(h, report.solution)
    if witness is not None:
        raise ShadowMismatchError(report.solution, witness)
    return report


def _deletion_report(graph: ClawGraph) -> SolveReport:
    if isinstance(graph, SplitGraph):
        return split_solve(graph, Algorithm.PRIMAL_DUAL)
    return primal_dual_solve(graph)


def _sides(graph: ClawGraph) -> Tuple[range, range]:
    if isinstance(graph, SplitGraph):
        return graph.clique, graph.independent
    return graph.a_side, graph.b_side


def max_subgraph_report(graph: ClawGraph) -> SolveReport:
    """Heaviest of V minus a primal-dual deletion set, the A side and the B side.

    Ties keep the earlier candidate. The report's cost is the kept weight.
    """
    started = time.perf_counter()
    deletion = _deletion_report(graph)
    removed = frozenset(deletion.solution)
    side_a, side_b = _sides(graph)
    candidates = [
        tuple(v for v in graph.vertices if v not in removed),
        tuple(side_a),
        tuple(side_b),
    ]
    best = candidates[0]
    best_weight = graph.total_weight(best)
    for cand in candidates[1:]:
        w = graph.total_weight(cand)
        if w > best_weight:
            best, best_weight = cand, w
    t = graph.t
    return SolveReport(
        algorithm=Algorithm.MAX_SUBGRAPH,
        solution=best,
        cost=best_weight,
        lower_bound=best_weight,
        theta=None,
        iterations=deletion.iterations,
        elapsed=time.perf_counter() - started,
        guarantee=Fraction(3, 2) if graph.is_dense() else 2 - Fraction(1, t),
    )


def max_subgraph_solve(graph: ClawGraph) -> MaxSubgraphResult:
    report = max_subgraph_report(graph)
    return MaxSubgraphResult(report.solution, report.cost)
