from __future__ import annotations

from typing import FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from .errors import InfeasibleSolutionError
from .models import BipartiteGraph, ClawWitness, SplitGraph

ClawGraph = Union[BipartiteGraph, SplitGraph]


def find_claw(g: BipartiteGraph, removed: Iterable[int] = ()) -> Optional[ClawWitness]:
    """Lowest A-center with at least t surviving neighbours; its t lowest leaves."""
    gone = frozenset(removed)
    for a in g.a_side:
        if a in gone:
            continue
        leaves = [b for b in g.neighbors(a) if b not in gone]
        if len(leaves) >= g.t:
            return ClawWitness(a, tuple(leaves[: g.t]))
    return None


def find_claw_split(h: SplitGraph, removed: Iterable[int] = ()) -> Optional[ClawWitness]:
    """Claw search in a split graph.

    Leaves of a claw are pairwise nonadjacent, so at most one leaf is a clique
    vertex. A center with t-1 surviving independent neighbours still carries a
    claw if some other surviving clique vertex misses all of them.
    """
    gone = frozenset(removed)
    for c in h.clique:
        if c in gone:
            continue
        ind = [i for i in h.cross_neighbors(c) if i not in gone]
        if len(ind) >= h.t:
            return ClawWitness(c, tuple(ind[: h.t]))
        if len(ind) != h.t - 1:
            continue
        for other in h.clique:
            if other == c or other in gone:
                continue
            if not any(h.adjacent(other, i) for i in ind):
                return ClawWitness(c, (other,) + tuple(ind))
    return None


def find_witness(graph: ClawGraph, removed: Iterable[int] = ()) -> Optional[ClawWitness]:
    if isinstance(graph, SplitGraph):
        return find_claw_split(graph, removed)
    return find_claw(graph, removed)


def is_feasible(graph: ClawGraph, solution: Iterable[int]) -> bool:
    return find_witness(graph, graph.check_vertices(solution)) is None


def is_minimal(graph: ClawGraph, solution: Iterable[int]) -> bool:
    s = graph.check_vertices(solution)
    if not is_feasible(graph, s):
        raise InfeasibleSolutionError("minimality is only defined for feasible sets")
    return all(not is_feasible(graph, s - {v}) for v in s)


def reverse_delete(graph: ClawGraph, ordered: Sequence[int]) -> Tuple[int, ...]:
    """Drop vertices latest-first while the remaining set stays feasible.

    Returns the kept vertices in their original order.
    """
    current: FrozenSet[int] = graph.check_vertices(ordered)
    if not is_feasible(graph, current):
        raise InfeasibleSolutionError("reverse deletion needs a feasible input set")
    for v in reversed(ordered):
        if is_feasible(graph, current - {v}):
            current = current - {v}
    return tuple(v for v in ordered if v in current)
