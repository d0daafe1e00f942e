from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from .constants import DEFAULT_T
from .errors import GraphError

Edge = Tuple[int, int]
ONE = Fraction(1)


class Algorithm(Enum):
    PRIMAL_DUAL = "primal-dual"
    LOCAL_RATIO = "local-ratio"
    EXACT = "exact"
    MAX_SUBGRAPH = "max-subgraph"


def _weights_tuple(n: int, weights) -> Tuple[Fraction, ...]:
    """Normalize a weight argument (sequence indexed by id-1, mapping id -> w, or None)."""
    if weights is None or (not isinstance(weights, Mapping) and len(weights) == 0):
        return (ONE,) * n
    if isinstance(weights, Mapping):
        out = [ONE] * n
        for v, w in weights.items():
            if not 1 <= v <= n:
                raise GraphError(f"weight for unknown vertex {v}")
            out[v - 1] = Fraction(w)
        values = tuple(out)
    else:
        values = tuple(Fraction(w) for w in weights)
        if len(values) != n:
            raise GraphError(f"expected {n} weights, got {len(values)}")
    if any(w < 0 for w in values):
        raise GraphError("weights must be nonnegative")
    return values


def _check_t(t: int, low: int = 3) -> None:
    if t < low:
        raise GraphError(f"t must be >= {low}, got {t}")


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: Tuple[int, ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted((self.center,) + self.leaves))

    def __str__(self) -> str:
        return f"{self.center};{','.join(str(v) for v in self.leaves)}"


@dataclass(frozen=True)
class BipartiteGraph:
    """One-sided claw deletion instance.

    A-side ids are 1..n_a, B-side ids n_a+1..n_a+n_b; every edge is stored
    as (a, b). Weights are indexed by id-1 and default to 1.
    """

    n_a: int
    n_b: int
    edges: FrozenSet[Edge] = frozenset()
    t: int = DEFAULT_T
    weights: Tuple[Fraction, ...] = ()
    _adj: Dict[int, Tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n_a < 0 or self.n_b < 0:
            raise GraphError("vertex counts must be nonnegative")
        _check_t(self.t)
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        adj: Dict[int, list] = {v: [] for v in range(1, self.n + 1)}
        for a, b in edges:
            if not (self.is_a(a) and self.is_b(b)):
                raise GraphError(f"edge ({a},{b}) must join A-vertex to B-vertex")
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", _weights_tuple(self.n, self.weights))
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()})

    @classmethod
    def build(cls, n_a: int, n_b: int, edges: Iterable[Edge], t: int = DEFAULT_T,
              weights: Optional[Mapping[int, Fraction]] = None) -> "BipartiteGraph":
        return cls(n_a, n_b, frozenset(edges), t, _weights_tuple(n_a + n_b, weights))

    # ----- vertices -----
    @property
    def n(self) -> int:
        return self.n_a + self.n_b

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def a_side(self) -> range:
        return range(1, self.n_a + 1)

    @property
    def b_side(self) -> range:
        return range(self.n_a + 1, self.n + 1)

    def is_a(self, v: int) -> bool:
        return 1 <= v <= self.n_a

    def is_b(self, v: int) -> bool:
        return self.n_a < v <= self.n

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"invalid vertex id {v}")

    def check_vertices(self, vs: Iterable[int]) -> FrozenSet[int]:
        out = frozenset(vs)
        for v in out:
            self.check_vertex(v)
        return out

    def weight(self, v: int) -> Fraction:
        self.check_vertex(v)
        return self.weights[v - 1]

    def total_weight(self, vs: Optional[Iterable[int]] = None) -> Fraction:
        if vs is None:
            return sum(self.weights, Fraction(0))
        return sum((self.weight(v) for v in set(vs)), Fraction(0))

    # ----- incidence -----
    def neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def _edge(self, v: int, u: int) -> Edge:
        return (v, u) if self.is_a(v) else (u, v)

    def delta(self, v: int) -> FrozenSet[Edge]:
        return frozenset(self._edge(v, u) for u in self.neighbors(v))

    def degree(self, v: int, restricted_to: Optional[Iterable[Edge]] = None) -> int:
        if restricted_to is None:
            return len(self.neighbors(v))
        subset = frozenset(restricted_to)
        if not subset <= self.edges:
            raise GraphError("restricted edge set is not a subset of the graph's edges")
        return sum(1 for e in self.delta(v) if e in subset)

    def delta_within(self, v: int, within: Iterable[int]) -> FrozenSet[Edge]:
        s = self.check_vertices(within)
        if v not in s:
            raise GraphError(f"vertex {v} is not in the given vertex set")
        return frozenset(self._edge(v, u) for u in self._adj[v] if u in s)

    def induced_edges(self, within: Iterable[int]) -> FrozenSet[Edge]:
        s = self.check_vertices(within)
        return frozenset((a, b) for a, b in self.edges if a in s and b in s)

    # ----- derived graphs -----
    def with_edges(self, edges: Iterable[Edge]) -> "BipartiteGraph":
        subset = frozenset(edges)
        if not subset <= self.edges:
            raise GraphError("edge set is not a subset of the graph's edges")
        return BipartiteGraph(self.n_a, self.n_b, subset, self.t, self.weights)

    def induced_subgraph(self, within: Iterable[int]) -> "BipartiteGraph":
        """G[within] on the same ids; vertices outside keep their ids but lose every edge."""
        return self.with_edges(self.induced_edges(within))

    def with_weights(self, weights: Mapping[int, Fraction]) -> "BipartiteGraph":
        merged = dict(enumerate(self.weights, start=1))
        merged.update(weights)
        return BipartiteGraph(self.n_a, self.n_b, self.edges, self.t, _weights_tuple(self.n, merged))

    def is_dense(self) -> bool:
        """Every A-vertex has degree at least 2(t-1)."""
        return all(len(self._adj[a]) >= 2 * (self.t - 1) for a in self.a_side)


@dataclass(frozen=True)
class SplitGraph:
    """Clique ids 1..n_c (pairwise adjacent, implicit), independent ids n_c+1..n_c+n_i."""

    n_c: int
    n_i: int
    cross_edges: FrozenSet[Edge] = frozenset()
    t: int = DEFAULT_T
    weights: Tuple[Fraction, ...] = ()
    _cross: Dict[int, Tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n_c < 0 or self.n_i < 0:
            raise GraphError("vertex counts must be nonnegative")
        _check_t(self.t)
        edges = frozenset((int(c), int(i)) for c, i in self.cross_edges)
        cross: Dict[int, list] = {v: [] for v in range(1, self.n + 1)}
        for c, i in edges:
            if not (self.is_clique(c) and self.is_independent(i)):
                raise GraphError(f"cross edge ({c},{i}) must join clique to independent side")
            cross[c].append(i)
            cross[i].append(c)
        object.__setattr__(self, "cross_edges", edges)
        object.__setattr__(self, "weights", _weights_tuple(self.n, self.weights))
        object.__setattr__(self, "_cross", {v: tuple(sorted(ns)) for v, ns in cross.items()})

    @classmethod
    def build(cls, n_c: int, n_i: int, cross_edges: Iterable[Edge], t: int = DEFAULT_T,
              weights: Optional[Mapping[int, Fraction]] = None) -> "SplitGraph":
        return cls(n_c, n_i, frozenset(cross_edges), t, _weights_tuple(n_c + n_i, weights))

    @property
    def n(self) -> int:
        return self.n_c + self.n_i

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def clique(self) -> range:
        return range(1, self.n_c + 1)

    @property
    def independent(self) -> range:
        return range(self.n_c + 1, self.n + 1)

    def is_clique(self, v: int) -> bool:
        return 1 <= v <= self.n_c

    def is_independent(self, v: int) -> bool:
        return self.n_c < v <= self.n

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"invalid vertex id {v}")

    def check_vertices(self, vs: Iterable[int]) -> FrozenSet[int]:
        out = frozenset(vs)
        for v in out:
            self.check_vertex(v)
        return out

    def weight(self, v: int) -> Fraction:
        self.check_vertex(v)
        return self.weights[v - 1]

    def total_weight(self, vs: Optional[Iterable[int]] = None) -> Fraction:
        if vs is None:
            return sum(self.weights, Fraction(0))
        return sum((self.weight(v) for v in set(vs)), Fraction(0))

    def cross_neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return self._cross[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if self.is_clique(v):
            others = tuple(c for c in self.clique if c != v)
            return others + self._cross[v]
        return self.cross_neighbors(v)

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        if self.is_clique(u) and self.is_clique(v):
            return True
        return v in self.cross_neighbors(u)

    def shadow(self) -> BipartiteGraph:
        """The bipartite graph of cross edges (clique side becomes A)."""
        return BipartiteGraph(self.n_c, self.n_i, self.cross_edges, self.t, self.weights)

    def is_dense(self) -> bool:
        return all(len(self._cross[c]) >= 2 * (self.t - 1) for c in self.clique)


@dataclass(frozen=True)
class Hypergraph:
    """t-uniform hypergraph on vertices 1..n; hyperedge order is kept as given."""

    n: int
    t: int
    hyperedges: Tuple[FrozenSet[int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        _check_t(self.t, low=2)
        edges = tuple(frozenset(e) for e in self.hyperedges)
        seen = set()
        for e in edges:
            if len(e) != self.t:
                raise GraphError(f"hyperedge {sorted(e)} does not have exactly {self.t} vertices")
            if any(not 1 <= v <= self.n for v in e):
                raise GraphError(f"hyperedge {sorted(e)} has a vertex out of range")
            if e in seen:
                raise GraphError(f"duplicate hyperedge {sorted(e)}")
            seen.add(e)
        object.__setattr__(self, "hyperedges", edges)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)
