"""Seeded random instances for tests and benchmarks.

All randomness comes from one ``random.Random(seed)`` per call (CPython's
MT19937), drawn in a fixed order, so a spec and seed always give the same
file byte for byte.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple, Union

from .constants import DEFAULT_T, GEN_RETRY_CAP, PRNG_NAME
from .errors import GenerationError
from .formats import serialize
from .models import BipartiteGraph, Hypergraph, SplitGraph

logger = logging.getLogger(__name__)

Generated = Union[BipartiteGraph, SplitGraph, Hypergraph]


class Family(Enum):
    BIP_RANDOM = "bip-random"
    BIP_DENSE = "bip-dense"
    HYP_UNIFORM = "hyp-uniform"
    REGULAR_GRAPH = "regular-graph"
    SPLIT_RANDOM = "split-random"


class WeightMode(Enum):
    UNIT = "unit"
    UNIFORM_INTEGER = "uniform-integer"


@dataclass(frozen=True)
class GenSpec:
    family: Family
    t: int = DEFAULT_T
    seed: int = 0
    n_a: int = 0
    n_b: int = 0
    n: int = 0
    m: int = 0
    n_c: int = 0
    n_i: int = 0
    p: Fraction = Fraction(1, 2)
    weight_mode: WeightMode = WeightMode.UNIT
    weight_range: Tuple[int, int] = (1, 1)
    retries: int = GEN_RETRY_CAP

    def validate(self) -> None:
        fam = self.family
        if not 0 <= self.seed < 2 ** 64:
            raise GenerationError(f"seed must fit in 64 bits, got {self.seed}")
        if not 0 <= self.p <= 1:
            raise GenerationError(f"edge probability must lie in [0, 1], got {self.p}")
        if self.retries < 1:
            raise GenerationError("retries must be positive")
        if self.weight_mode is WeightMode.UNIFORM_INTEGER:
            lo, hi = self.weight_range
            if not 0 <= lo <= hi:
                raise GenerationError(f"bad weight range {lo}..{hi}")
            if fam in (Family.HYP_UNIFORM, Family.REGULAR_GRAPH):
                raise GenerationError(f"{fam.value} instances are unweighted")

        if fam in (Family.BIP_RANDOM, Family.BIP_DENSE):
            self._positive(n_a=self.n_a, n_b=self.n_b)
            self._claw_t()
            if fam is Family.BIP_DENSE and self.n_b < 2 * (self.t - 1):
                raise GenerationError(
                    f"bip-dense needs n_b >= 2(t-1) = {2 * (self.t - 1)}, got {self.n_b}")
        elif fam is Family.SPLIT_RANDOM:
            self._positive(n_c=self.n_c, n_i=self.n_i)
            self._claw_t()
        elif fam is Family.HYP_UNIFORM:
            self._positive(n=self.n)
            if self.t < 2:
                raise GenerationError(f"uniformity must be >= 2, got {self.t}")
            if self.m == 1:
                raise GenerationError("a single hyperedge has no disjoint counterpart")
            if self.m and self.n < 2 * self.t:
                raise GenerationError(f"disjoint hyperedges need n >= 2t = {2 * self.t}")
            if self.m % 2 and self.n == 2 * self.t:
                raise GenerationError(
                    f"with n = 2t every hyperedge pairs only with its complement; m = {self.m} is odd")
            if self.m > comb(self.n, self.t):
                raise GenerationError(f"only {comb(self.n, self.t)} distinct hyperedges exist")
        elif fam is Family.REGULAR_GRAPH:
            self._positive(n=self.n)
            if self.t < 1 or self.t >= self.n:
                raise GenerationError(f"a simple {self.t}-regular graph needs 1 <= t < n")
            if self.n * self.t % 2:
                raise GenerationError(f"n*t = {self.n * self.t} is odd; no {self.t}-regular graph exists")

    def _positive(self, **sizes: int) -> None:
        for name, value in sizes.items():
            if value <= 0:
                raise GenerationError(f"{self.family.value} needs {name} > 0, got {value}")

    def _claw_t(self) -> None:
        if self.t < 3:
            raise GenerationError(f"t must be >= 3, got {self.t}")

    def provenance(self) -> str:
        fam = self.family
        fields: Dict[str, object] = {"seed": self.seed, "t": self.t}
        if fam in (Family.BIP_RANDOM, Family.BIP_DENSE):
            fields.update(n_a=self.n_a, n_b=self.n_b)
        elif fam is Family.SPLIT_RANDOM:
            fields.update(n_c=self.n_c, n_i=self.n_i)
        elif fam is Family.HYP_UNIFORM:
            fields.update(n=self.n, m=self.m)
        else:
            fields.update(n=self.n)
        if fam in (Family.BIP_RANDOM, Family.SPLIT_RANDOM):
            fields["p"] = self.p
        if self.weight_mode is WeightMode.UNIT:
            fields["weights"] = "unit"
        else:
            fields["weights"] = "uniform-integer:{}..{}".format(*self.weight_range)
        fields["prng"] = PRNG_NAME
        return f"gen {fam.value} " + " ".join(f"{k}={v}" for k, v in fields.items())


def _coin_edges(rng: random.Random, left: range, right: range, p: Fraction) -> List[Tuple[int, int]]:
    threshold = float(p)
    return [(u, v) for u in left for v in right if rng.random() < threshold]


def _weights(rng: random.Random, spec: GenSpec, n: int) -> Optional[Dict[int, Fraction]]:
    if spec.weight_mode is WeightMode.UNIT:
        return None
    lo, hi = spec.weight_range
    return {v: Fraction(rng.randint(lo, hi)) for v in range(1, n + 1)}


def _bip_random(rng: random.Random, spec: GenSpec) -> BipartiteGraph:
    n = spec.n_a + spec.n_b
    edges = _coin_edges(rng, range(1, spec.n_a + 1), range(spec.n_a + 1, n + 1), spec.p)
    return BipartiteGraph.build(spec.n_a, spec.n_b, edges, spec.t, _weights(rng, spec, n))


def _bip_dense(rng: random.Random, spec: GenSpec) -> BipartiteGraph:
    n = spec.n_a + spec.n_b
    b_side = list(range(spec.n_a + 1, n + 1))
    low = 2 * (spec.t - 1)
    edges = []
    for a in range(1, spec.n_a + 1):
        degree = rng.randint(low, spec.n_b)
        edges.extend((a, b) for b in sorted(rng.sample(b_side, degree)))
    return BipartiteGraph.build(spec.n_a, spec.n_b, edges, spec.t, _weights(rng, spec, n))


def _split_random(rng: random.Random, spec: GenSpec) -> SplitGraph:
    n = spec.n_c + spec.n_i
    edges = _coin_edges(rng, range(1, spec.n_c + 1), range(spec.n_c + 1, n + 1), spec.p)
    return SplitGraph.build(spec.n_c, spec.n_i, edges, spec.t, _weights(rng, spec, n))


def has_disjoint_counterparts(hy: Hypergraph) -> bool:
    return all(any(not (e & f) for f in hy.hyperedges) for e in hy.hyperedges)


def _hyp_uniform(rng: random.Random, spec: GenSpec) -> Hypergraph:
    pool = list(range(1, spec.n + 1))
    for attempt in range(1, spec.retries + 1):
        chosen: List[frozenset] = []
        seen = set()
        while len(chosen) < spec.m:
            e = frozenset(rng.sample(pool, spec.t))
            if e not in seen:
                seen.add(e)
                chosen.append(e)
        hy = Hypergraph(spec.n, spec.t, tuple(chosen))
        if has_disjoint_counterparts(hy):
            logger.debug("hyp-uniform accepted after %d attempts", attempt)
            return hy
    raise GenerationError(f"no hypergraph with disjoint counterparts after {spec.retries} attempts")


def _regular_graph(rng: random.Random, spec: GenSpec) -> Hypergraph:
    """Pairing model: shuffle n*t points, pair them off, reject loops and multi-edges."""
    points = [v for v in range(1, spec.n + 1) for _ in range(spec.t)]
    for attempt in range(1, spec.retries + 1):
        rng.shuffle(points)
        edges = set()
        ok = True
        for u, v in zip(points[::2], points[1::2]):
            e = frozenset((u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            logger.debug("regular-graph accepted after %d attempts", attempt)
            ordered = sorted(edges, key=lambda e: sorted(e))
            return Hypergraph(spec.n, 2, tuple(ordered))
    raise GenerationError(f"pairing model failed {spec.retries} times")


_BUILDERS = {
    Family.BIP_RANDOM: _bip_random,
    Family.BIP_DENSE: _bip_dense,
    Family.SPLIT_RANDOM: _split_random,
    Family.HYP_UNIFORM: _hyp_uniform,
    Family.REGULAR_GRAPH: _regular_graph,
}


def generate(spec: GenSpec) -> Generated:
    spec.validate()
    rng = random.Random(spec.seed)
    return _BUILDERS[spec.family](rng, spec)


def generate_text(spec: GenSpec) -> str:
    return serialize(generate(spec), [spec.provenance()])
