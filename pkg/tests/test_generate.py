import unittest
from fractions import Fraction

from clawdel.errors import GenerationError
from clawdel.generate import Family, GenSpec, WeightMode, generate, generate_text, has_disjoint_counterparts
from clawdel.models import BipartiteGraph, Hypergraph, SplitGraph
from clawdel.reductions import hypergraph_to_graph


class TestFamilies(unittest.TestCase):
    def test_dense_min_degree(self):
        g = generate(GenSpec(Family.BIP_DENSE, t=3, seed=7, n_a=3, n_b=8))
        self.assertIsInstance(g, BipartiteGraph)
        self.assertGreaterEqual(min(g.degree(a) for a in g.a_side), 4)
        self.assertTrue(g.is_dense())

    def test_regular_parity(self):
        with self.assertRaises(GenerationError):
            generate(GenSpec(Family.REGULAR_GRAPH, t=3, n=5))

    def test_spec_checks(self):
        bad = [
            GenSpec(Family.BIP_DENSE, t=3, n_a=2, n_b=3),
            GenSpec(Family.BIP_RANDOM, t=2, n_a=2, n_b=3),
            GenSpec(Family.BIP_RANDOM, n_a=0, n_b=3),
            GenSpec(Family.HYP_UNIFORM, t=3, n=5, m=2),
            GenSpec(Family.HYP_UNIFORM, t=3, n=8, m=1),
            GenSpec(Family.SPLIT_RANDOM, n_c=2, n_i=2, p=Fraction(3, 2)),
            GenSpec(Family.REGULAR_GRAPH, t=4, n=4),
            GenSpec(Family.HYP_UNIFORM, t=3, n=6, m=2, weight_mode=WeightMode.UNIFORM_INTEGER),
            GenSpec(Family.BIP_RANDOM, n_a=1, n_b=1, seed=-1),
        ]
        for spec in bad:
            with self.subTest(spec=spec):
                with self.assertRaises(GenerationError):
                    generate(spec)

    def test_split_and_weights(self):
        h = generate(GenSpec(Family.SPLIT_RANDOM, seed=3, n_c=3, n_i=4, p=Fraction(1),
                             weight_mode=WeightMode.UNIFORM_INTEGER, weight_range=(2, 4)))
        self.assertIsInstance(h, SplitGraph)
        self.assertEqual(len(h.cross_edges), 12)
        self.assertTrue(all(2 <= w <= 4 for w in h.weights))

    def test_probability_extremes(self):
        empty = generate(GenSpec(Family.BIP_RANDOM, seed=1, n_a=3, n_b=3, p=Fraction(0)))
        self.assertEqual(empty.edges, frozenset())

    def test_odd_count_with_complements_only(self):
        for m in (3, 5, 19):
            with self.subTest(m=m):
                with self.assertRaisesRegex(GenerationError, "odd"):
                    GenSpec(Family.HYP_UNIFORM, t=3, n=6, m=m).validate()
        GenSpec(Family.HYP_UNIFORM, t=3, n=6, m=4).validate()
        GenSpec(Family.HYP_UNIFORM, t=3, n=7, m=3).validate()

    def test_retry_cap(self):
        # 18 of the 20 triples: accepted only when the two left out are complements
        failures = 0
        for seed in range(5):
            try:
                generate(GenSpec(Family.HYP_UNIFORM, t=3, n=6, m=18, seed=seed, retries=1))
            except GenerationError as exc:
                self.assertIn("after 1 attempts", str(exc))
                failures += 1
        self.assertGreater(failures, 0)


class TestSweeps(unittest.TestCase):
    def test_dense(self):
        for seed in range(1000):
            g = generate(GenSpec(Family.BIP_DENSE, t=3, seed=seed, n_a=3, n_b=6))
            self.assertTrue(g.is_dense(), seed)

    def test_hypergraphs(self):
        for seed in range(1000):
            hy = generate(GenSpec(Family.HYP_UNIFORM, t=3, seed=seed, n=7, m=3))
            self.assertIsInstance(hy, Hypergraph)
            self.assertEqual(hy.m, 3)
            self.assertTrue(has_disjoint_counterparts(hy), seed)

    def test_regular(self):
        for seed in range(1000):
            hy = generate(GenSpec(Family.REGULAR_GRAPH, t=3, seed=seed, n=8))
            graph = hypergraph_to_graph(hy)
            self.assertEqual({d for _, d in graph.degree()}, {3}, seed)


class TestDeterminism(unittest.TestCase):
    def test_same_seed_same_text(self):
        for family, sizes in (
            (Family.BIP_RANDOM, dict(n_a=4, n_b=6)),
            (Family.BIP_DENSE, dict(n_a=3, n_b=8)),
            (Family.SPLIT_RANDOM, dict(n_c=3, n_i=5)),
            (Family.HYP_UNIFORM, dict(n=8, m=4)),
            (Family.REGULAR_GRAPH, dict(n=10)),
        ):
            spec = GenSpec(family, t=3, seed=42, **sizes)
            with self.subTest(family=family):
                self.assertEqual(generate_text(spec), generate_text(spec))

    def test_different_seeds_differ(self):
        a = generate_text(GenSpec(Family.BIP_RANDOM, seed=1, n_a=5, n_b=8))
        b = generate_text(GenSpec(Family.BIP_RANDOM, seed=2, n_a=5, n_b=8))
        self.assertNotEqual(a, b)

    def test_provenance_header(self):
        text = generate_text(GenSpec(Family.BIP_DENSE, t=3, seed=7, n_a=3, n_b=8))
        self.assertEqual(text.splitlines()[0],
                         "# gen bip-dense seed=7 t=3 n_a=3 n_b=8 weights=unit prng=mt19937")
        self.assertTrue(text.splitlines()[1].startswith("p bip 3 8 "))


if __name__ == "__main__":
    unittest.main()
