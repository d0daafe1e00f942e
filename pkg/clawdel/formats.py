"""Text formats for bipartite, split and hypergraph instances.

All three share one line grammar: a ``p <kind> ...`` header, optional
``n <id> <weight>`` weight lines, and one edge line per edge. ``#`` lines
and blank lines are ignored anywhere.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import GraphError, ParseError
from .models import BipartiteGraph, Hypergraph, SplitGraph

Text = Union[str, bytes]
Graph = Union[BipartiteGraph, SplitGraph, Hypergraph]

_WEIGHT_RE = re.compile(r"^-?\d+(/\d+)?$", re.ASCII)


def decode_text(text: Text) -> str:
    if not isinstance(text, bytes):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(text[: exc.start].count(b"\n") + 1, "invalid UTF-8") from exc


def _records(text: Text) -> Iterator[Tuple[int, List[str]]]:
    for lineno, raw in enumerate(decode_text(text).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(token: str, lineno: int) -> int:
    if not (token.isascii() and token.isdecimal()):
        raise ParseError(lineno, f"expected a nonnegative integer, got {token!r}")
    return int(token)


def parse_weight(token: str, lineno: int) -> Fraction:
    if not _WEIGHT_RE.match(token):
        raise ParseError(lineno, f"bad weight {token!r}")
    if token.startswith("-"):
        raise ParseError(lineno, f"negative weight {token}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(lineno, f"zero denominator in weight {token}")
    return Fraction(int(num), int(den) if den else 1)


def sniff(text: Text) -> str:
    """Return the instance kind named by the first ``p`` header."""
    for lineno, tokens in _records(text):
        if tokens[0] != "p" or len(tokens) < 2:
            raise ParseError(lineno, "expected a 'p <kind> ...' header")
        if tokens[1] not in ("bip", "split", "hyp"):
            raise ParseError(lineno, f"unknown instance kind {tokens[1]!r}")
        return tokens[1]
    raise ParseError(1, "missing header")


def _header(records: List[Tuple[int, List[str]]], kind: str, arity: int) -> List[int]:
    if not records:
        raise ParseError(1, "missing header")
    lineno, tokens = records[0]
    if tokens[:2] != ["p", kind] or len(tokens) != arity + 2:
        raise ParseError(lineno, f"malformed header, expected 'p {kind}' with {arity} fields")
    return [_int(tok, lineno) for tok in tokens[2:]]


def _two_sided(text: Text, kind: str) -> Tuple[int, int, set, int, Dict[int, Fraction]]:
    records = list(_records(text))
    n_left, n_right, m, t = _header(records, kind, 4)
    if t < 3:
        raise ParseError(records[0][0], f"t must be >= 3, got {t}")
    n = n_left + n_right
    edges: set = set()
    weights: Dict[int, Fraction] = {}
    for lineno, tokens in records[1:]:
        tag = tokens[0]
        if tag == "n" and len(tokens) == 3:
            v = _int(tokens[1], lineno)
            if not 1 <= v <= n:
                raise ParseError(lineno, f"index {v} out of range")
            if v in weights:
                raise ParseError(lineno, f"duplicate weight for vertex {v}")
            weights[v] = parse_weight(tokens[2], lineno)
        elif tag == "e" and len(tokens) == 3:
            left, right = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not 1 <= left <= n_left:
                raise ParseError(lineno, f"index {left} out of range")
            if not n_left < right <= n:
                raise ParseError(lineno, f"index {right} out of range")
            if (left, right) in edges:
                raise ParseError(lineno, f"duplicate edge ({left},{right})")
            edges.add((left, right))
        else:
            raise ParseError(lineno, f"unexpected line {' '.join(tokens)!r}")
    if len(edges) != m:
        last = records[-1][0]
        raise ParseError(last, f"header declares {m} edges, found {len(edges)}")
    return n_left, n_right, edges, t, weights


def parse_bipartite(text: Text) -> BipartiteGraph:
    n_a, n_b, edges, t, weights = _two_sided(text, "bip")
    return BipartiteGraph.build(n_a, n_b, edges, t, weights)


def parse_split(text: Text) -> SplitGraph:
    n_c, n_i, edges, t, weights = _two_sided(text, "split")
    return SplitGraph.build(n_c, n_i, edges, t, weights)


def parse_hypergraph(text: Text) -> Hypergraph:
    records = list(_records(text))
    n, m, t = _header(records, "hyp", 3)
    if t < 2:
        raise ParseError(records[0][0], f"uniformity must be >= 2, got {t}")
    hyperedges: List[frozenset] = []
    seen = set()
    for lineno, tokens in records[1:]:
        if tokens[0] != "h":
            raise ParseError(lineno, f"unexpected line {' '.join(tokens)!r}")
        ids = [_int(tok, lineno) for tok in tokens[1:]]
        if len(ids) != t:
            raise ParseError(lineno, f"hyperedge has {len(ids)} vertices, expected {t}")
        for v in ids:
            if not 1 <= v <= n:
                raise ParseError(lineno, f"index {v} out of range")
        edge = frozenset(ids)
        if len(edge) != t:
            raise ParseError(lineno, "hyperedge repeats a vertex")
        if edge in seen:
            raise ParseError(lineno, "duplicate hyperedge")
        seen.add(edge)
        hyperedges.append(edge)
    if len(hyperedges) != m:
        raise ParseError(records[-1][0], f"header declares {m} hyperedges, found {len(hyperedges)}")
    return Hypergraph(n, t, tuple(hyperedges))


def parse_any(text: Text) -> Graph:
    kind = sniff(text)
    return {"bip": parse_bipartite, "split": parse_split, "hyp": parse_hypergraph}[kind](text)


def parse_solution(text: Text) -> Tuple[int, ...]:
    """Whitespace separated vertex ids; order of first appearance is kept."""
    ids: List[int] = []
    for lineno, tokens in _records(text):
        for tok in tokens:
            v = _int(tok, lineno)
            if v in ids:
                raise ParseError(lineno, f"vertex {v} listed twice")
            ids.append(v)
    return tuple(ids)


# ----- serialization -----
def _comment_lines(comments: Iterable[str]) -> List[str]:
    return [f"# {c}" for c in comments]


def _weight_lines(weights: Sequence[Fraction]) -> List[str]:
    return [f"n {v} {w}" for v, w in enumerate(weights, start=1) if w != 1]


def serialize_bipartite(g: BipartiteGraph, comments: Iterable[str] = ()) -> str:
    lines = _comment_lines(comments)
    lines.append(f"p bip {g.n_a} {g.n_b} {len(g.edges)} {g.t}")
    lines += _weight_lines(g.weights)
    lines += [f"e {a} {b}" for a, b in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def serialize_split(h: SplitGraph, comments: Iterable[str] = ()) -> str:
    lines = _comment_lines(comments)
    lines.append(f"p split {h.n_c} {h.n_i} {len(h.cross_edges)} {h.t}")
    lines += _weight_lines(h.weights)
    lines += [f"e {c} {i}" for c, i in sorted(h.cross_edges)]
    return "\n".join(lines) + "\n"


def serialize_hypergraph(hy: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = _comment_lines(comments)
    lines.append(f"p hyp {hy.n} {hy.m} {hy.t}")
    lines += ["h " + " ".join(str(v) for v in sorted(e)) for e in hy.hyperedges]
    return "\n".join(lines) + "\n"


def serialize(graph: Graph, comments: Iterable[str] = ()) -> str:
    if isinstance(graph, BipartiteGraph):
        return serialize_bipartite(graph, comments)
    if isinstance(graph, SplitGraph):
        return serialize_split(graph, comments)
    if isinstance(graph, Hypergraph):
        return serialize_hypergraph(graph, comments)
    raise GraphError(f"cannot serialize {type(graph).__name__}")
