import os
import tempfile
import unittest

import networkx as nx

from clawdel.errors import GraphError, OracleTooLargeError
from clawdel.formats import parse_split
from clawdel.models import Algorithm, BipartiteGraph, ClawWitness, Hypergraph
from clawdel.oracle import (
    dump_disagreements,
    enumerate_claws,
    enumerate_minimal_osbcd,
    exact_max_subgraph,
    exact_min_osbcd,
    exact_min_vc_graph,
    exact_min_vc_hypergraph,
    exact_report,
    exhaustive_min_osbcd,
    split_shadow_disagreements,
    theta_max,
)
from tests.instances import clique_leaf_split, g1, g2, h2, hy1, k13, k4, k24, random_bip, two_stars


class TestExactDeletion(unittest.TestCase):
    def test_star(self):
        self.assertEqual(exact_min_osbcd(g1()), ((1,), 1))

    def test_heavy_center(self):
        self.assertEqual(exact_min_osbcd(g1(w1=10)), ((2, 3), 2))
        self.assertEqual(exhaustive_min_osbcd(g1(w1=10)), ((2, 3), 2))

    def test_claw_free(self):
        g = BipartiteGraph.build(1, 2, [(1, 2), (1, 3)], 3)
        self.assertEqual(exact_min_osbcd(g), ((), 0))

    def test_split_graph(self):
        self.assertEqual(exact_min_osbcd(h2())[1], 1)
        self.assertEqual(exact_min_osbcd(clique_leaf_split()), ((1,), 1))

    def test_report(self):
        r = exact_report(g2())
        self.assertEqual(r.algorithm, Algorithm.EXACT)
        self.assertEqual(r.cost, 1)
        self.assertEqual(r.lower_bound, 1)
        self.assertEqual(r.guarantee, 1)
        self.assertGreaterEqual(r.iterations, 1)

    def test_size_guard(self):
        with self.assertRaises(OracleTooLargeError) as ctx:
            exact_min_osbcd(k24(), max_depth=0)
        self.assertEqual(ctx.exception.guard, "branching depth")
        self.assertEqual(exact_min_osbcd(k24(), max_depth=1)[1], 2)
        self.assertEqual(exact_min_osbcd(two_stars(), max_depth=1)[1], 2)
        with self.assertRaises(OracleTooLargeError):
            exhaustive_min_osbcd(random_bip(1, 6, 7))

    def test_matches_exhaustive_search(self):
        for seed in range(40):
            g = random_bip(seed, 2 + seed % 3, 5 + seed % 4, t=3, weighted=seed % 2 == 1)
            with self.subTest(seed=seed):
                self.assertEqual(exact_min_osbcd(g)[1], exhaustive_min_osbcd(g)[1])


class TestMaxSubgraph(unittest.TestCase):
    def test_values(self):
        self.assertEqual(exact_max_subgraph(g1()), ((2, 3, 4, 5), 4))
        self.assertEqual(exact_max_subgraph(g2())[1], 4)
        g = BipartiteGraph.build(1, 2, [(1, 2), (1, 3)], 3)
        self.assertEqual(exact_max_subgraph(g), ((1, 2, 3), 3))


class TestVertexCover(unittest.TestCase):
    def test_hypergraphs(self):
        self.assertEqual(exact_min_vc_hypergraph(hy1())[1], 2)
        self.assertEqual(exact_min_vc_hypergraph(Hypergraph(3, 3, (frozenset({1, 2, 3}),))), ((1,), 1))
        self.assertEqual(exact_min_vc_hypergraph(Hypergraph(4, 3)), ((), 0))

    def test_graphs(self):
        cover, size = exact_min_vc_graph(k4())
        self.assertEqual(size, 3)
        self.assertEqual(len(cover), 3)
        self.assertEqual(exact_min_vc_graph(nx.petersen_graph())[1], 6)
        self.assertEqual(exact_min_vc_graph(nx.path_graph(["a", "b", "c"])), (("b",), 1))

    def test_guards(self):
        with self.assertRaises(OracleTooLargeError):
            exact_min_vc_graph(nx.cycle_graph(30))
        loop = nx.Graph([(1, 1)])
        with self.assertRaises(GraphError):
            exact_min_vc_graph(loop)


class TestEnumeration(unittest.TestCase):
    def test_star(self):
        self.assertEqual(
            enumerate_minimal_osbcd(g1()),
            [(1,), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        )

    def test_single_claw(self):
        self.assertEqual(enumerate_minimal_osbcd(k13()), [(1,), (2,), (3,), (4,)])

    def test_claw_free(self):
        g = BipartiteGraph.build(1, 2, [(1, 2), (1, 3)], 3)
        self.assertEqual(enumerate_minimal_osbcd(g), [()])

    def test_within(self):
        self.assertEqual(enumerate_minimal_osbcd(g1(), within={1, 2, 3, 4}),
                         [(1,), (2,), (3,), (4,)])

    def test_guard(self):
        with self.assertRaises(OracleTooLargeError):
            enumerate_minimal_osbcd(random_bip(3, 5, 10))

    def test_theta_max(self):
        self.assertEqual(theta_max(g1()), 1)
        self.assertEqual(theta_max(k13()), 1)

    def test_claws(self):
        self.assertEqual(len(enumerate_claws(g1())), 4)
        self.assertEqual(enumerate_claws(g1(), removed={5}), [ClawWitness(1, (2, 3, 4))])
        self.assertEqual(len(enumerate_claws(g2())), 2)


class TestSplitShadow(unittest.TestCase):
    def test_complete_cross_agrees(self):
        self.assertEqual(split_shadow_disagreements(h2()), [])

    def test_clique_leaf(self):
        found = split_shadow_disagreements(clique_leaf_split())
        self.assertEqual(found, [((), ClawWitness(1, (2, 3, 4)))])

    def test_dump(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "disagreements.txt")
            self.assertEqual(dump_disagreements(h2(), path), 0)
            self.assertFalse(os.path.exists(path))
            self.assertEqual(dump_disagreements(clique_leaf_split(), path), 1)
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
            self.assertTrue(text.startswith("# disagreement S=[] claw 1;2,3,4\n"))
            self.assertEqual(parse_split(text), clique_leaf_split())


if __name__ == "__main__":
    unittest.main()
