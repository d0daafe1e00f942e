import unittest
from fractions import Fraction

from clawdel.claw import find_claw, find_claw_split, find_witness, is_feasible, is_minimal, reverse_delete
from clawdel.errors import GraphError, InfeasibleSolutionError
from clawdel.models import BipartiteGraph, ClawWitness, Hypergraph, SplitGraph
from tests.instances import clique_leaf_split, g1, g2, h2


class TestModels(unittest.TestCase):
    def test_sides_and_incidence(self):
        g = g2()
        self.assertEqual(list(g.a_side), [1, 2])
        self.assertEqual(list(g.b_side), [3, 4, 5])
        self.assertEqual(g.neighbors(3), (1, 2))
        self.assertEqual(g.delta(3), frozenset({(1, 3), (2, 3)}))
        self.assertEqual(g.degree(1), 3)
        self.assertEqual(g.degree(1, restricted_to={(1, 3), (2, 4)}), 1)
        self.assertEqual(g.delta_within(1, {1, 3, 4}), frozenset({(1, 3), (1, 4)}))
        self.assertEqual(g.induced_edges({1, 3}), frozenset({(1, 3)}))
        self.assertEqual(g1().induced_edges({2, 3}), frozenset())

    def test_induced_subgraph(self):
        sub = g1(w1=3).induced_subgraph({1, 2, 3, 4})
        self.assertEqual(sub.n, 5)
        self.assertEqual(sub.edges, frozenset({(1, 2), (1, 3), (1, 4)}))
        self.assertEqual(sub.weight(1), 3)
        self.assertEqual(find_claw(sub), ClawWitness(1, (2, 3, 4)))
        with self.assertRaises(GraphError):
            g1().with_edges({(1, 2), (1, 7)})

    def test_invalid_input(self):
        with self.assertRaises(GraphError):
            BipartiteGraph.build(1, 2, [(2, 1)], 3)
        with self.assertRaises(GraphError):
            BipartiteGraph.build(1, 2, [], 2)
        with self.assertRaises(GraphError):
            BipartiteGraph.build(1, 2, [], 3, {1: -1})
        with self.assertRaises(GraphError):
            g1().neighbors(6)
        with self.assertRaises(GraphError):
            g1().delta_within(1, {2, 3})
        with self.assertRaises(GraphError):
            g1().degree(1, restricted_to={(1, 9)})

    def test_weights(self):
        g = g1(w1=10)
        self.assertEqual(g.weight(1), 10)
        self.assertEqual(g.total_weight(), 14)
        self.assertEqual(g.total_weight([2, 3]), 2)
        self.assertEqual(g.with_weights({2: Fraction(1, 2)}).weight(2), Fraction(1, 2))

    def test_dense(self):
        self.assertTrue(g1().is_dense())
        self.assertFalse(g2().is_dense())

    def test_split_graph(self):
        h = h2()
        self.assertEqual(h.neighbors(1), (2, 3, 4, 5))
        self.assertTrue(h.adjacent(1, 2))
        self.assertFalse(h.adjacent(3, 4))
        self.assertEqual(h.shadow(), g2())
        with self.assertRaises(GraphError):
            SplitGraph.build(2, 1, [(3, 1)], 3)

    def test_hypergraph_checks(self):
        with self.assertRaises(GraphError):
            Hypergraph(4, 3, (frozenset({1, 2}),))
        with self.assertRaises(GraphError):
            Hypergraph(3, 3, (frozenset({1, 2, 4}),))
        with self.assertRaises(GraphError):
            Hypergraph(3, 3, (frozenset({1, 2, 3}), frozenset({3, 2, 1})))

    def test_witness_text(self):
        self.assertEqual(str(ClawWitness(1, (2, 3, 4))), "1;2,3,4")
        self.assertEqual(ClawWitness(4, (1, 2, 3)).vertices, (1, 2, 3, 4))


class TestFindClaw(unittest.TestCase):
    def test_lowest_leaves(self):
        self.assertEqual(find_claw(g1()), ClawWitness(1, (2, 3, 4)))
        self.assertEqual(find_claw(g1(), removed={2}), ClawWitness(1, (3, 4, 5)))
        self.assertIsNone(find_claw(g1(), removed={2, 3}))
        self.assertIsNone(find_claw(g1(), removed={1}))

    def test_lowest_center(self):
        self.assertEqual(find_claw(g2()), ClawWitness(1, (3, 4, 5)))
        self.assertEqual(find_claw(g2(), removed={1}), ClawWitness(2, (3, 4, 5)))

    def test_split_independent_leaves(self):
        self.assertEqual(find_claw_split(h2()), ClawWitness(1, (3, 4, 5)))
        self.assertIsNone(find_claw_split(h2(), removed={3}))

    def test_split_clique_leaf(self):
        h = clique_leaf_split()
        self.assertEqual(find_claw_split(h), ClawWitness(1, (2, 3, 4)))
        self.assertIsNone(find_claw(h.shadow()))
        self.assertIsNone(find_claw_split(h, removed={2}))

    def test_dispatch(self):
        self.assertEqual(find_witness(clique_leaf_split()), ClawWitness(1, (2, 3, 4)))
        self.assertEqual(find_witness(g1()), ClawWitness(1, (2, 3, 4)))


class TestFeasibility(unittest.TestCase):
    def test_feasible(self):
        self.assertTrue(is_feasible(g1(), [1]))
        self.assertTrue(is_feasible(g1(), [2, 3]))
        self.assertFalse(is_feasible(g1(), [2]))
        self.assertFalse(is_feasible(g1(), []))
        with self.assertRaises(GraphError):
            is_feasible(g1(), [0])

    def test_minimal(self):
        self.assertTrue(is_minimal(g1(), [1]))
        self.assertTrue(is_minimal(g1(), [4, 5]))
        self.assertFalse(is_minimal(g1(), [1, 2]))
        with self.assertRaises(InfeasibleSolutionError):
            is_minimal(g1(), [2])

    def test_claw_free_graph(self):
        g = BipartiteGraph.build(1, 2, [(1, 2), (1, 3)], 3)
        self.assertTrue(is_minimal(g, []))

    def test_reverse_delete_latest_first(self):
        self.assertEqual(reverse_delete(g1(), [1, 2, 3, 4]), (1,))
        self.assertEqual(reverse_delete(g1(), [2, 3, 4, 1]), (2, 3))
        with self.assertRaises(InfeasibleSolutionError):
            reverse_delete(g1(), [2])


if __name__ == "__main__":
    unittest.main()
