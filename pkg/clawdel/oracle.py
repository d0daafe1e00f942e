"""Exact solvers for desk-scale instances.

Everything here is exponential and guarded; the guards raise
OracleTooLargeError naming the bound that was hit.
"""
from __future__ import annotations

import logging
import time
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .claw import find_witness, is_feasible, reverse_delete
from .constants import (
    ENUMERATION_LIMIT,
    EXHAUSTIVE_LIMIT,
    ORACLE_MAX_DEPTH,
    VC_ADVISORY_LIMIT,
)
from .errors import GraphError, OracleTooLargeError
from .formats import serialize_split
from .models import Algorithm, BipartiteGraph, ClawWitness, Hypergraph, SplitGraph
from .solvers import (
    SolveReport,
    local_ratio_solve,
    primal_dual_solve,
    theta_certificate,
    theta_of_solution,
)

logger = logging.getLogger(__name__)

ClawGraph = Union[BipartiteGraph, SplitGraph]
ZERO = Fraction(0)


class _ClawBranchAndBound:
    """Branch on the vertices of one claw; the i-th branch forbids the earlier ones."""

    def __init__(self, graph: ClawGraph, max_depth: int) -> None:
        self.graph = graph
        self.max_depth = max_depth
        self.nodes = 0
        self.best: Tuple[int, ...] = ()
        self.best_cost: Optional[Fraction] = None

    def seed(self, solution: Sequence[int]) -> None:
        self.best = tuple(sorted(solution))
        self.best_cost = self.graph.total_weight(solution)

    def _disjoint_claw_bound(self, removed: FrozenSet[int], forbidden: FrozenSet[int]) -> Optional[Fraction]:
        """Greedy packing of vertex-disjoint claws; None when some claw cannot be hit."""
        used = set(removed)
        bound = ZERO
        while True:
            witness = find_witness(self.graph, used)
            if witness is None:
                return bound
            open_vertices = [v for v in witness.vertices if v not in forbidden]
            if not open_vertices:
                return None
            bound += min(self.graph.weight(v) for v in open_vertices)
            used.update(witness.vertices)

    def search(self, removed: FrozenSet[int], forbidden: FrozenSet[int], cost: Fraction) -> None:
        self.nodes += 1
        lower = self._disjoint_claw_bound(removed, forbidden)
        if lower is None:
            return
        if self.best_cost is not None and cost + lower >= self.best_cost:
            return
        witness = find_witness(self.graph, removed)
        if witness is None:
            self.best, self.best_cost = tuple(sorted(removed)), cost
            logger.debug("oracle: improved to %s after %d nodes", cost, self.nodes)
            return
        if len(removed) >= self.max_depth:
            raise OracleTooLargeError("branching depth", self.max_depth)
        blocked = set(forbidden)
        for v in witness.vertices:
            if v in forbidden:
                continue
            self.search(removed | {v}, frozenset(blocked), cost + self.graph.weight(v))
            blocked.add(v)


def _initial_solution(graph: ClawGraph) -> Tuple[int, ...]:
    if isinstance(graph, SplitGraph):
        return local_ratio_solve(graph).solution
    return primal_dual_solve(graph).solution


def _solve_exact(graph: ClawGraph, max_depth: int) -> Tuple[Tuple[int, ...], Fraction, int]:
    bnb = _ClawBranchAndBound(graph, max_depth)
    bnb.seed(_initial_solution(graph))
    bnb.search(frozenset(), frozenset(), ZERO)
    # zero-weight branch vertices can leave redundant members
    solution = tuple(sorted(reverse_delete(graph, bnb.best)))
    logger.debug("oracle: %d nodes, optimum %s", bnb.nodes, bnb.best_cost)
    return solution, graph.total_weight(solution), bnb.nodes


def exact_min_osbcd(graph: ClawGraph, max_depth: int = ORACLE_MAX_DEPTH) -> Tuple[Tuple[int, ...], Fraction]:
    solution, cost, _ = _solve_exact(graph, max_depth)
    return solution, cost


def exact_report(graph: ClawGraph, max_depth: int = ORACLE_MAX_DEPTH) -> SolveReport:
    started = time.perf_counter()
    solution, cost, nodes = _solve_exact(graph, max_depth)
    return SolveReport(
        algorithm=Algorithm.EXACT,
        solution=solution,
        cost=cost,
        lower_bound=cost,
        theta=theta_certificate(graph, solution),
        iterations=nodes,
        elapsed=time.perf_counter() - started,
        guarantee=Fraction(1),
    )


def exact_max_subgraph(graph: ClawGraph, max_depth: int = ORACLE_MAX_DEPTH) -> Tuple[Tuple[int, ...], Fraction]:
    deleted, cost = exact_min_osbcd(graph, max_depth)
    kept = tuple(v for v in graph.vertices if v not in set(deleted))
    return kept, graph.total_weight() - cost


def exhaustive_min_osbcd(graph: ClawGraph, limit: int = EXHAUSTIVE_LIMIT) -> Tuple[Tuple[int, ...], Fraction]:
    """Minimum-weight deletion set by trying every subset; ties go to the smaller, then lexicographically first."""
    if graph.n > limit:
        raise OracleTooLargeError("vertex count", limit)
    best: Optional[Tuple[int, ...]] = None
    best_cost: Optional[Fraction] = None
    for size in range(graph.n + 1):
        for subset in combinations(graph.vertices, size):
            cost = graph.total_weight(subset)
            if best_cost is not None and cost >= best_cost:
                continue
            if is_feasible(graph, subset):
                best, best_cost = subset, cost
    assert best is not None and best_cost is not None
    return best, best_cost


# ----- vertex cover -----
class _CoverSearch:
    def __init__(self, hy: Hypergraph) -> None:
        self.edges = hy.hyperedges
        self.nodes = 0
        self.best: FrozenSet[int] = self._greedy()

    def _greedy(self) -> FrozenSet[int]:
        cover: set = set()
        open_edges = list(self.edges)
        while open_edges:
            counts = {}
            for e in open_edges:
                for v in e:
                    counts[v] = counts.get(v, 0) + 1
            pick = min(counts, key=lambda v: (-counts[v], v))
            cover.add(pick)
            open_edges = [e for e in open_edges if pick not in e]
        return frozenset(cover)

    def _uncovered(self, cover: FrozenSet[int]) -> List[FrozenSet[int]]:
        return [e for e in self.edges if not e & cover]

    def search(self, cover: FrozenSet[int], forbidden: FrozenSet[int]) -> None:
        self.nodes += 1
        open_edges = self._uncovered(cover)
        if not open_edges:
            if len(cover) < len(self.best):
                self.best = cover
            return
        packed: set = set()
        lower = 0
        for e in open_edges:
            if e <= forbidden:
                return
            if not e & packed:
                packed |= e
                lower += 1
        if len(cover) + lower >= len(self.best):
            return
        blocked = set(forbidden)
        for v in sorted(open_edges[0]):
            if v in forbidden:
                continue
            self.search(cover | {v}, frozenset(blocked))
            blocked.add(v)


def exact_min_vc_hypergraph(hy: Hypergraph, limit: int = VC_ADVISORY_LIMIT) -> Tuple[Tuple[int, ...], int]:
    if hy.n > limit:
        raise OracleTooLargeError("hypergraph vertex count", limit)
    search = _CoverSearch(hy)
    search.search(frozenset(), frozenset())
    logger.debug("vertex cover oracle: %d nodes, optimum %d", search.nodes, len(search.best))
    return tuple(sorted(search.best)), len(search.best)


def exact_min_vc_graph(graph: nx.Graph, limit: int = VC_ADVISORY_LIMIT) -> Tuple[Tuple, int]:
    """Minimum vertex cover of a simple graph; returns the original node labels."""
    if nx.number_of_selfloops(graph):
        raise GraphError("vertex cover input must be a simple graph")
    relabeled = nx.convert_node_labels_to_integers(graph, first_label=1, ordering="sorted",
                                                   label_attribute="label")
    hy = Hypergraph(relabeled.number_of_nodes(), 2, tuple(frozenset(e) for e in relabeled.edges()))
    cover, size = exact_min_vc_hypergraph(hy, limit)
    labels = nx.get_node_attributes(relabeled, "label")
    return tuple(sorted(labels[v] for v in cover)), size


# ----- enumeration -----
def _considered(graph: ClawGraph, within: Optional[Iterable[int]]) -> Tuple[ClawGraph, Tuple[int, ...]]:
    if within is None:
        return graph, tuple(graph.vertices)
    if not isinstance(graph, BipartiteGraph):
        raise GraphError("restriction to a vertex set needs a bipartite graph")
    s = graph.check_vertices(within)
    return graph.induced_subgraph(s), tuple(sorted(s))


def enumerate_minimal_osbcd(graph: ClawGraph, within: Optional[Iterable[int]] = None,
                            limit: int = ENUMERATION_LIMIT) -> List[Tuple[int, ...]]:
    """All inclusion-minimal deletion sets of G[within], ordered by size then ids."""
    considered, pool = _considered(graph, within)
    if len(pool) > limit:
        raise OracleTooLargeError("enumeration vertex count", limit)
    found: List[Tuple[int, ...]] = []
    for size in range(len(pool) + 1):
        for subset in combinations(pool, size):
            as_set = frozenset(subset)
            if any(as_set.issuperset(m) for m in found):
                continue
            if is_feasible(considered, as_set):
                found.append(subset)
    return found


def theta_max(g: BipartiteGraph, within: Optional[Iterable[int]] = None,
              limit: int = ENUMERATION_LIMIT) -> Fraction:
    """Largest theta over the minimal deletion sets of G[within]."""
    considered, _ = _considered(g, within)
    return max(theta_of_solution(considered, s) for s in enumerate_minimal_osbcd(g, within, limit))


def enumerate_claws(g: BipartiteGraph, removed: Iterable[int] = ()) -> List[ClawWitness]:
    gone = g.check_vertices(removed)
    claws = []
    for a in g.a_side:
        if a in gone:
            continue
        leaves = [b for b in g.neighbors(a) if b not in gone]
        claws.extend(ClawWitness(a, chosen) for chosen in combinations(leaves, g.t))
    return claws


def split_shadow_disagreements(h: SplitGraph, limit: int = EXHAUSTIVE_LIMIT
                               ) -> List[Tuple[Tuple[int, ...], ClawWitness]]:
    """Vertex sets feasible on the bipartite shadow that still leave a claw in h."""
    if h.n > limit:
        raise OracleTooLargeError("vertex count", limit)
    shadow = h.shadow()
    out = []
    for size in range(h.n + 1):
        for subset in combinations(h.vertices, size):
            split_claw = find_witness(h, subset)
            shadow_claw = find_witness(shadow, subset)
            if (split_claw is None) != (shadow_claw is None):
                out.append((subset, split_claw if split_claw is not None else shadow_claw))
    return out


def dump_disagreements(h: SplitGraph, path: Union[str, Path]) -> int:
    """Write h with one comment per disagreeing set; returns how many were found."""
    found = split_shadow_disagreements(h)
    if not found:
        return 0
    comments = [
        f"disagreement S=[{' '.join(str(v) for v in subset)}] claw {witness}"
        for subset, witness in found
    ]
    Path(path).write_text(serialize_split(h, comments), encoding="utf-8")
    logger.warning("wrote %d split/shadow disagreements to %s", len(found), path)
    return len(found)
