"""The 2-polymatroid of one-sided claw freeness and its dual.

For a bipartite graph and t >= 3,

    f_t(F) = 2 * sum over active A-vertices v of min(t-1, d_F(v))

where an A-vertex is active when its degree in the considered graph is at
least t. Inactive vertices can never centre a claw, and dropping them keeps
the dual nonnegative on arbitrary inputs. The dual has the closed form

    f_t^d(F) = 2 * sum over active v of min(d_F(v), d(v) - t + 1).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, Mapping, Optional, Union

from .errors import GraphError
from .models import BipartiteGraph, Edge

SetFunction = Callable[[FrozenSet[Edge]], int]


@dataclass(frozen=True, eq=False)
class PolymatroidContext:
    """A bipartite graph restricted to a vertex set, with its active A-vertices."""

    graph: BipartiteGraph
    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]
    degree: Mapping[int, int]
    active_a: FrozenSet[int]

    @classmethod
    def of(cls, graph: BipartiteGraph, within: Optional[Iterable[int]] = None) -> "PolymatroidContext":
        if within is None:
            vertices = frozenset(graph.vertices)
            edges = graph.edges
        else:
            vertices = graph.check_vertices(within)
            edges = graph.induced_edges(vertices)
        degree = Counter()
        for a, b in edges:
            degree[a] += 1
            degree[b] += 1
        active = frozenset(a for a in vertices if graph.is_a(a) and degree[a] >= graph.t)
        return cls(graph, vertices, edges, dict(degree), active)

    @property
    def t(self) -> int:
        return self.graph.t

    def delta(self, v: int) -> FrozenSet[Edge]:
        return self.graph.delta_within(v, self.vertices)

    def check_edges(self, edges: Iterable[Edge]) -> FrozenSet[Edge]:
        subset = frozenset(edges)
        foreign = subset - self.edges
        if foreign:
            raise GraphError(f"edge {min(foreign)} is not in the considered graph")
        return subset


def _active_degrees(ctx: PolymatroidContext, edges: FrozenSet[Edge]) -> Counter:
    return Counter(a for a, _ in edges if a in ctx.active_a)


def f_t(ctx: PolymatroidContext, edges: Iterable[Edge]) -> int:
    counts = _active_degrees(ctx, ctx.check_edges(edges))
    return 2 * sum(min(ctx.t - 1, d) for d in counts.values())


def f_t_dual(ctx: PolymatroidContext, edges: Iterable[Edge]) -> int:
    counts = _active_degrees(ctx, ctx.check_edges(edges))
    return 2 * sum(min(d, ctx.degree[v] - ctx.t + 1) for v, d in counts.items())


def dual_polymatroid(f: SetFunction, ground: FrozenSet[Edge]) -> SetFunction:
    """f^d(S) = sum of f({j}) over j in S, minus (f(N) - f(N - S))."""
    full = f(ground)

    def dual(subset: FrozenSet[Edge]) -> int:
        subset = frozenset(subset)
        singles = sum(f(frozenset((e,))) for e in subset)
        return singles - (full - f(ground - subset))

    return dual


def generic_dual(ctx: PolymatroidContext, edges: Iterable[Edge]) -> int:
    subset = ctx.check_edges(edges)
    return dual_polymatroid(lambda s: f_t(ctx, s), ctx.edges)(subset)


def is_matching(ctx: PolymatroidContext, edges: Iterable[Edge]) -> bool:
    subset = ctx.check_edges(edges)
    counted = sum(1 for a, _ in subset if a in ctx.active_a)
    return f_t(ctx, subset) == 2 * counted


def is_spanning_dual(ctx: PolymatroidContext, edges: Iterable[Edge]) -> bool:
    return f_t_dual(ctx, edges) == f_t_dual(ctx, ctx.edges)


def dual_of_delta(ctx: PolymatroidContext, v: int) -> int:
    """f^d of the edges at v inside the context's vertex set."""
    return f_t_dual(ctx, ctx.delta(v))


def f_dual_delta_within(source: Union[BipartiteGraph, PolymatroidContext], v: int,
                        within: Iterable[int]) -> int:
    """Rebuilds the context on G[within] so active vertices are recounted there."""
    graph = source.graph if isinstance(source, PolymatroidContext) else source
    ctx = PolymatroidContext.of(graph, within)
    if v not in ctx.vertices:
        raise GraphError(f"vertex {v} is not in the given vertex set")
    return dual_of_delta(ctx, v)


# ----- the matroid M_t -----
def matroid_rank(graph: BipartiteGraph, edges: Iterable[Edge]) -> int:
    subset = frozenset(edges)
    if not subset <= graph.edges:
        raise GraphError("edge set is not a subset of the graph's edges")
    counts = Counter(a for a, _ in subset)
    return sum(min(graph.t - 1, d) for d in counts.values())


def is_independent(graph: BipartiteGraph, edges: Iterable[Edge]) -> bool:
    subset = frozenset(edges)
    return matroid_rank(graph, subset) == len(subset)
