"""Instance transformations between vertex cover, one-sided claw deletion and split graphs.

Id layout of constructed graphs
-------------------------------
hvc-osbcd
    A-vertex for hyperedge j (1-based, file order) and copy i in 1..n is
    ``(j-1)*n + i`` (groups ``e1`` .. ``em``); source vertex v becomes
    ``nA + v`` (group ``V``).
vc-dense
    Source nodes are relabeled 1..n in sorted order and edges are sorted.
    Copy c in 0..2n-1 of edge j (0-based) is ``c*m + j + 1`` (groups ``E``,
    ``E1`` .. ``E{2n-1}``). Copy k in 0..x of node v is ``nA + k*n + v``
    (groups ``V``, ``V1`` .. ``Vx``) followed by the pad group ``P``.
osbcd-split, split-osbcd
    Ids are unchanged.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from .constants import VC_ADVISORY_LIMIT
from .errors import GraphError, NonCanonicalSolutionError, ParseError
from .formats import Text, decode_text
from .models import BipartiteGraph, Hypergraph, SplitGraph
from .oracle import exact_min_vc_graph

logger = logging.getLogger(__name__)


class ReductionKind(Enum):
    HVC_OSBCD = "hvc-osbcd"
    OSBCD_SPLIT = "osbcd-split"
    SPLIT_OSBCD = "split-osbcd"
    VC_DENSE = "vc-dense"


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class VertexGroup:
    name: str
    first: int
    last: int

    def __contains__(self, v: int) -> bool:
        return self.first <= v <= self.last

    def __len__(self) -> int:
        return max(0, self.last - self.first + 1)

    @property
    def ids(self) -> range:
        return range(self.first, self.last + 1)


@dataclass(frozen=True)
class ReductionMap:
    kind: ReductionKind
    source_size: Tuple[Tuple[str, int], ...]
    groups: Tuple[VertexGroup, ...]
    expected_offset: int = 0
    warnings: Tuple[str, ...] = ()

    def source(self, key: str) -> int:
        for k, v in self.source_size:
            if k == key:
                return v
        raise GraphError(f"map has no source size {key!r}")

    def group(self, name: str) -> VertexGroup:
        for g in self.groups:
            if g.name == name:
                return g
        raise GraphError(f"map has no group {name!r}")


def _warn(warnings: List[str], message: str) -> None:
    logger.warning(message)
    warnings.append(message)


# ----- simple graph helpers -----
def graph_to_hypergraph(graph: nx.Graph) -> Hypergraph:
    """A simple graph as a 2-uniform hypergraph, nodes relabeled 1..n in sorted order."""
    if nx.number_of_selfloops(graph):
        raise GraphError("simple graph expected, found a self-loop")
    relabeled = nx.convert_node_labels_to_integers(graph, first_label=1, ordering="sorted")
    edges = sorted(tuple(sorted(e)) for e in relabeled.edges())
    return Hypergraph(relabeled.number_of_nodes(), 2, tuple(frozenset(e) for e in edges))


def hypergraph_to_graph(hy: Hypergraph) -> nx.Graph:
    if hy.t != 2:
        raise GraphError(f"a simple graph needs a 2-uniform hypergraph, got t={hy.t}")
    graph = nx.Graph()
    graph.add_nodes_from(hy.vertices)
    graph.add_edges_from(tuple(e) for e in hy.hyperedges)
    return graph


# ----- constructions -----
def hvc_to_osbcd(hy: Hypergraph) -> Tuple[BipartiteGraph, ReductionMap]:
    if hy.t < 3:
        raise GraphError(f"hvc-osbcd needs uniformity t >= 3, got {hy.t}")
    n, m = hy.n, hy.m
    n_a = m * n
    edges = []
    for j, hyperedge in enumerate(hy.hyperedges):
        for i in range(1, n + 1):
            a = j * n + i
            edges.extend((a, n_a + v) for v in hyperedge)
    warnings: List[str] = []
    for j, e in enumerate(hy.hyperedges, start=1):
        if not any(not (e & other) for other in hy.hyperedges):
            _warn(warnings, f"hyperedge {j} has no disjoint hyperedge; vertex cover equality may fail")
    groups = tuple(VertexGroup(f"e{j}", (j - 1) * n + 1, j * n) for j in range(1, m + 1))
    groups += (VertexGroup("V", n_a + 1, n_a + n),)
    g = BipartiteGraph.build(n_a, n, edges, hy.t)
    return g, ReductionMap(ReductionKind.HVC_OSBCD, (("n", n), ("m", m), ("t", hy.t)), groups,
                           0, tuple(warnings))


def _identity_map(kind: ReductionKind, n_left: int, n_right: int, left: str, right: str) -> ReductionMap:
    return ReductionMap(
        kind,
        ((left, n_left), (right, n_right)),
        (VertexGroup(left, 1, n_left), VertexGroup(right, n_left + 1, n_left + n_right)),
    )


def osbcd_to_split(g: BipartiteGraph) -> Tuple[SplitGraph, ReductionMap]:
    h = SplitGraph(g.n_a, g.n_b, g.edges, g.t, g.weights)
    return h, _identity_map(ReductionKind.OSBCD_SPLIT, g.n_a, g.n_b, "A", "B")


def split_to_osbcd(h: SplitGraph) -> Tuple[BipartiteGraph, ReductionMap]:
    return h.shadow(), _identity_map(ReductionKind.SPLIT_OSBCD, h.n_c, h.n_i, "C", "I")


def pad_size(t: int) -> int:
    return t - 2 if t % 2 == 0 else t - 1


def vc_to_dense_osbcd(graph: nx.Graph, t: Optional[int] = None,
                      advisory_limit: int = VC_ADVISORY_LIMIT) -> Tuple[BipartiteGraph, ReductionMap]:
    """Dense one-sided instance from a t-regular graph; t defaults to the common degree."""
    if graph.number_of_nodes() == 0:
        raise GraphError("vc-dense needs a nonempty graph")
    if nx.number_of_selfloops(graph):
        raise GraphError("simple graph expected, found a self-loop")
    degrees = {d for _, d in graph.degree()}
    if len(degrees) != 1:
        raise GraphError(f"graph is not regular (degrees {sorted(degrees)})")
    degree = degrees.pop()
    t = degree if t is None else t
    if degree != t:
        raise GraphError(f"graph is {degree}-regular, expected {t}-regular")
    if t < 3:
        raise GraphError(f"vc-dense needs t >= 3, got {t}")

    relabeled = nx.convert_node_labels_to_integers(graph, first_label=1, ordering="sorted")
    n = relabeled.number_of_nodes()
    edge_list = sorted(tuple(sorted(e)) for e in relabeled.edges())
    m = len(edge_list)
    copies = 2 * n
    x = t // 2 - 1
    n_a = copies * m
    pad_first = n_a + (x + 1) * n + 1
    pad = list(range(pad_first, pad_first + pad_size(t)))
    n_b = (x + 1) * n + len(pad)

    edges = []
    for c in range(copies):
        for j, (u, v) in enumerate(edge_list):
            a = c * m + j + 1
            for k in range(x + 1):
                edges.append((a, n_a + k * n + u))
                edges.append((a, n_a + k * n + v))
            edges.extend((a, p) for p in pad)

    groups = [VertexGroup("E", 1, m)]
    groups += [VertexGroup(f"E{c}", c * m + 1, (c + 1) * m) for c in range(1, copies)]
    groups.append(VertexGroup("V", n_a + 1, n_a + n))
    groups += [VertexGroup(f"V{k}", n_a + k * n + 1, n_a + (k + 1) * n) for k in range(1, x + 1)]
    groups.append(VertexGroup("P", pad_first, pad_first + len(pad) - 1))

    warnings: List[str] = []
    if t % 2 == 1:
        _warn(warnings, f"odd t={t}: deleting P alone leaves every A-vertex at degree t-1, "
                        f"so the optimum is |P|={len(pad)}")
    if n <= advisory_limit:
        _, cover = exact_min_vc_graph(relabeled, advisory_limit)
        if cover <= len(pad):
            _warn(warnings, f"minimum vertex cover {cover} does not exceed |P|={len(pad)}")
    else:
        _warn(warnings, f"vertex cover advisory skipped: {n} nodes exceeds {advisory_limit}")

    g = BipartiteGraph.build(n_a, n_b, edges, t)
    return g, ReductionMap(ReductionKind.VC_DENSE, (("n", n), ("m", m), ("t", t)), tuple(groups),
                           len(pad), tuple(warnings))


# ----- solution mapping -----
def _check_source(ids: frozenset, size: int) -> None:
    for v in ids:
        if not 1 <= v <= size:
            raise GraphError(f"invalid source vertex id {v}")


def _shift_back(ids: frozenset, group: VertexGroup) -> Tuple[int, ...]:
    return tuple(sorted(v - group.first + 1 for v in ids))


def map_solution(rmap: ReductionMap, direction: Direction, solution: Iterable[int]) -> Tuple[int, ...]:
    ids = frozenset(solution)
    kind = rmap.kind

    if kind in (ReductionKind.OSBCD_SPLIT, ReductionKind.SPLIT_OSBCD):
        _check_source(ids, sum(size for _, size in rmap.source_size))
        return tuple(sorted(ids))

    if kind is ReductionKind.HVC_OSBCD:
        cover = rmap.group("V")
        if direction is Direction.FORWARD:
            _check_source(ids, rmap.source("n"))
            return tuple(sorted(cover.first - 1 + v for v in ids))
        stray = sorted(v for v in ids if v not in cover)
        if stray:
            raise NonCanonicalSolutionError(f"non-canonical solution: vertex {stray[0]} is not a source vertex")
        return _shift_back(ids, cover)

    cover, pad = rmap.group("V"), rmap.group("P")
    if direction is Direction.FORWARD:
        _check_source(ids, rmap.source("n"))
        return tuple(sorted({cover.first - 1 + v for v in ids} | set(pad.ids)))
    stray = sorted(v for v in ids if v not in cover and v not in pad)
    if stray:
        raise NonCanonicalSolutionError(f"non-canonical solution: vertex {stray[0]} is outside V and P")
    missing = sorted(set(pad.ids) - ids)
    if missing:
        raise NonCanonicalSolutionError(f"non-canonical solution: pad vertex {missing[0]} not deleted")
    return _shift_back(frozenset(v for v in ids if v in cover), cover)


def apply_reduction(kind: ReductionKind, source):
    """Dispatch a construction by kind; vc-dense takes a 2-uniform hypergraph."""
    if kind is ReductionKind.HVC_OSBCD:
        return hvc_to_osbcd(_expect(source, Hypergraph, kind))
    if kind is ReductionKind.OSBCD_SPLIT:
        return osbcd_to_split(_expect(source, BipartiteGraph, kind))
    if kind is ReductionKind.SPLIT_OSBCD:
        return split_to_osbcd(_expect(source, SplitGraph, kind))
    hy = _expect(source, Hypergraph, kind)
    return vc_to_dense_osbcd(hypergraph_to_graph(hy))


def _expect(source, cls, kind: ReductionKind):
    if not isinstance(source, cls):
        raise GraphError(f"{kind.value} expects a {cls.__name__} input, got {type(source).__name__}")
    return source


# ----- map sidecar -----
def serialize_map(rmap: ReductionMap) -> str:
    lines = [f"map {rmap.kind.value}"]
    lines += [f"source {k} {v}" for k, v in rmap.source_size]
    lines += [f"g {g.name} {g.first} {g.last}" for g in rmap.groups]
    lines.append(f"offset {rmap.expected_offset}")
    lines += [f"# warning: {w}" for w in rmap.warnings]
    return "\n".join(lines) + "\n"


def parse_map(text: Text) -> ReductionMap:
    kind: Optional[ReductionKind] = None
    sizes: List[Tuple[str, int]] = []
    groups: List[VertexGroup] = []
    offset = 0
    warnings: List[str] = []
    for lineno, raw in enumerate(decode_text(text).split("\n"), start=1):
        line = raw.strip()
        if line.startswith("# warning: "):
            warnings.append(line[len("# warning: "):])
            continue
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "map" and len(tokens) == 2:
                kind = ReductionKind(tokens[1])
            elif tokens[0] == "source" and len(tokens) == 3:
                sizes.append((tokens[1], int(tokens[2])))
            elif tokens[0] == "g" and len(tokens) == 4:
                groups.append(VertexGroup(tokens[1], int(tokens[2]), int(tokens[3])))
            elif tokens[0] == "offset" and len(tokens) == 2:
                offset = int(tokens[1])
            else:
                raise ParseError(lineno, f"unexpected line {line!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(lineno, str(exc)) from exc
    if kind is None:
        raise ParseError(1, "missing 'map <kind>' line")
    return ReductionMap(kind, tuple(sizes), tuple(groups), offset, tuple(warnings))
