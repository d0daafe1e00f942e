import unittest

import networkx as nx

from clawdel.errors import GraphError, NonCanonicalSolutionError, ParseError
from clawdel.models import BipartiteGraph, Hypergraph, SplitGraph
from clawdel.oracle import exact_min_osbcd
from clawdel.reductions import (
    Direction,
    ReductionKind,
    apply_reduction,
    graph_to_hypergraph,
    hvc_to_osbcd,
    hypergraph_to_graph,
    map_solution,
    osbcd_to_split,
    pad_size,
    parse_map,
    serialize_map,
    split_to_osbcd,
    vc_to_dense_osbcd,
)
from tests.instances import g1, g2, h2, hy1, k4


class TestHypergraphCover(unittest.TestCase):
    def test_two_disjoint_edges(self):
        g, rmap = hvc_to_osbcd(hy1())
        self.assertEqual((g.n_a, g.n_b, len(g.edges)), (12, 6, 36))
        self.assertTrue(all(g.degree(a) == 3 for a in g.a_side))
        self.assertEqual(rmap.warnings, ())
        self.assertEqual(rmap.group("e2").ids, range(7, 13))
        self.assertEqual(rmap.group("V").ids, range(13, 19))
        self.assertEqual(exact_min_osbcd(g)[1], 2)

    def test_single_edge_warns(self):
        hy = Hypergraph(3, 3, (frozenset({1, 2, 3}),))
        with self.assertLogs("clawdel.reductions", level="WARNING"):
            g, rmap = hvc_to_osbcd(hy)
        self.assertEqual(g.n_a, 3)
        self.assertEqual(len(rmap.warnings), 1)
        self.assertEqual(exact_min_osbcd(g)[1], 1)

    def test_empty(self):
        g, _ = hvc_to_osbcd(Hypergraph(4, 3))
        self.assertEqual(g.n_a, 0)
        self.assertEqual(g.edges, frozenset())

    def test_needs_three_uniform(self):
        with self.assertRaises(GraphError):
            hvc_to_osbcd(Hypergraph(3, 2, (frozenset({1, 2}),)))

    def test_solution_map(self):
        _, rmap = hvc_to_osbcd(hy1())
        self.assertEqual(map_solution(rmap, Direction.FORWARD, [1, 4]), (13, 16))
        self.assertEqual(map_solution(rmap, Direction.BACKWARD, [13, 16]), (1, 4))
        with self.assertRaises(NonCanonicalSolutionError):
            map_solution(rmap, Direction.BACKWARD, [1, 13])


class TestSplitCompletion(unittest.TestCase):
    def test_to_split(self):
        h, rmap = osbcd_to_split(g2())
        self.assertEqual(h, h2())
        self.assertEqual(rmap.kind, ReductionKind.OSBCD_SPLIT)
        h1, _ = osbcd_to_split(g1())
        self.assertEqual(h1.n_c, 1)

    def test_round_trip(self):
        g = g1(w1=3)
        self.assertEqual(split_to_osbcd(osbcd_to_split(g)[0])[0], g)
        self.assertEqual(split_to_osbcd(h2())[0], g2())

    def test_identity_map(self):
        _, rmap = split_to_osbcd(h2())
        self.assertEqual(map_solution(rmap, Direction.BACKWARD, [3]), (3,))
        with self.assertRaises(GraphError):
            map_solution(rmap, Direction.FORWARD, [6])


class TestDenseConstruction(unittest.TestCase):
    def test_k4_layout(self):
        g, rmap = vc_to_dense_osbcd(k4())
        self.assertEqual((g.n_a, g.n_b), (48, 6))
        self.assertTrue(all(g.degree(a) == 4 for a in g.a_side))
        self.assertEqual(rmap.expected_offset, 2)
        self.assertEqual(rmap.group("P").ids, range(53, 55))
        self.assertEqual(len([grp for grp in rmap.groups if grp.name.startswith("E")]), 8)

    def test_odd_t_optimum_is_the_pad(self):
        for graph in (k4(), nx.complete_bipartite_graph(3, 3), nx.circular_ladder_graph(3)):
            with self.subTest(graph=sorted(graph.edges())):
                g, rmap = vc_to_dense_osbcd(graph)
                self.assertTrue(any("odd t" in w for w in rmap.warnings))
                self.assertEqual(exact_min_osbcd(g)[1], pad_size(3))

    def test_even_t_offset(self):
        for graph, cover in ((nx.complete_graph(5), 4), (nx.octahedral_graph(), 4)):
            with self.subTest(n=graph.number_of_nodes()):
                g, rmap = vc_to_dense_osbcd(graph, 4)
                self.assertTrue(all(g.degree(a) == 6 for a in g.a_side))
                self.assertEqual(len(rmap.group("V1")), graph.number_of_nodes())
                self.assertEqual(rmap.expected_offset, 2)
                self.assertEqual(exact_min_osbcd(g)[1], rmap.expected_offset + cover)

    def test_precondition(self):
        with self.assertRaises(GraphError):
            vc_to_dense_osbcd(nx.path_graph(4))
        with self.assertRaises(GraphError):
            vc_to_dense_osbcd(k4(), 4)
        with self.assertRaises(GraphError):
            vc_to_dense_osbcd(nx.cycle_graph(5))

    def test_solution_map(self):
        _, rmap = vc_to_dense_osbcd(k4())
        forward = map_solution(rmap, Direction.FORWARD, [1, 2, 3])
        self.assertEqual(forward, (49, 50, 51, 53, 54))
        self.assertEqual(map_solution(rmap, Direction.BACKWARD, forward), (1, 2, 3))
        with self.assertRaises(NonCanonicalSolutionError):
            map_solution(rmap, Direction.BACKWARD, [1, 53, 54])
        with self.assertRaises(NonCanonicalSolutionError):
            map_solution(rmap, Direction.BACKWARD, [49, 50, 51])


class TestHelpers(unittest.TestCase):
    def test_graph_conversion(self):
        hy = graph_to_hypergraph(k4())
        self.assertEqual((hy.n, hy.m, hy.t), (4, 6, 2))
        self.assertTrue(nx.is_isomorphic(hypergraph_to_graph(hy), k4()))
        with self.assertRaises(GraphError):
            hypergraph_to_graph(hy1())

    def test_dispatch(self):
        g, _ = apply_reduction(ReductionKind.OSBCD_SPLIT, g2())
        self.assertIsInstance(g, SplitGraph)
        g, _ = apply_reduction(ReductionKind.VC_DENSE, graph_to_hypergraph(k4()))
        self.assertIsInstance(g, BipartiteGraph)
        with self.assertRaises(GraphError):
            apply_reduction(ReductionKind.HVC_OSBCD, g2())

    def test_map_sidecar(self):
        _, rmap = vc_to_dense_osbcd(k4())
        text = serialize_map(rmap)
        self.assertTrue(text.startswith("map vc-dense\nsource n 4\nsource m 6\nsource t 3\ng E 1 6\n"))
        self.assertIn("offset 2\n", text)
        self.assertEqual(parse_map(text), rmap)

    def test_bad_map(self):
        with self.assertRaises(ParseError):
            parse_map("map nothing\n")
        with self.assertRaises(ParseError):
            parse_map("g V 1 x\n")
        with self.assertRaises(ParseError):
            parse_map("offset 2\n")


if __name__ == "__main__":
    unittest.main()
