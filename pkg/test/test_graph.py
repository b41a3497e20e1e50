# -*- coding: UTF-8 -*-
"""
Unit tests for colored graph classes and connectivity primitives
"""

import unittest

import networkx
import numpy
from hypothesis import given, settings
from hypothesis import strategies as st

import coloravoid
import coloravoid.graph

@st.composite
def edge_lists(draw, max_n=8, max_m=14):
    """
    Strategy returning ``(n, edges)`` of a random multigraph.

    """
    n = draw(st.integers(2, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).\
        filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pairs, max_size=max_m))
    return n, edges

class TestDisjointSetUnion(unittest.TestCase):
    """
    Tests for the DisjointSetUnion class

    """
    def test_create(self):
        dsu = coloravoid.graph.DisjointSetUnion(4)
        self.assertEqual(dsu.n, 4)
        self.assertEqual(dsu.n_components, 4)
        self.assertEqual(dsu.components(), [[0], [1], [2], [3]])

    def test_negative_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.DisjointSetUnion(-1)

    def test_union(self):
        dsu = coloravoid.graph.DisjointSetUnion(4)
        self.assertTrue(dsu.union(0, 1))
        self.assertFalse(dsu.union(1, 0))
        self.assertTrue(dsu.union(3, 2))
        self.assertEqual(dsu.n_components, 2)
        self.assertTrue(dsu.connected(0, 1))
        self.assertFalse(dsu.connected(0, 2))

    def test_labels(self):
        dsu = coloravoid.graph.DisjointSetUnion(5)
        dsu.union(4, 1)
        dsu.union(2, 3)
        self.assertEqual(dsu.labels(), [0, 1, 2, 2, 1])
        self.assertEqual(dsu.components(), [[0], [1, 4], [2, 3]])

    def test_long_chain(self):
        dsu = coloravoid.graph.DisjointSetUnion(100)
        for a in range(99):
            dsu.union(a, a + 1)
        self.assertEqual(dsu.n_components, 1)
        self.assertEqual(dsu.find(0), dsu.find(99))

class TestPartition(unittest.TestCase):
    """
    Tests for the Partition class

    """
    def test_create(self):
        w = coloravoid.graph.Partition([[2, 0], [1]])
        self.assertEqual(w.parts, ((0, 2), (1,)))
        self.assertEqual(len(w), 2)
        self.assertEqual(w.part_of(2), 0)
        self.assertEqual(w.part_of(1), 1)
        self.assertEqual(w.universe, frozenset([0, 1, 2]))

    def test_iter(self):
        w = coloravoid.graph.Partition([[0], [1, 2]])
        self.assertEqual(list(w), [(0,), (1, 2)])

    def test_overlap_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.Partition([[0, 1], [1, 2]])

    def test_empty_part_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.Partition([[0, 1], []])

    def test_universe_not_covered_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.Partition([[0, 1]], universe=range(3))

    def test_from_labels(self):
        w = coloravoid.graph.Partition.from_labels([5, 3, 5, 7])
        self.assertEqual(w.parts, ((0, 2), (1,), (3,)))

class TestEdgeColoredGraph(unittest.TestCase):
    """
    Tests for the EdgeColoredGraph class

    """
    def setUp(self):
        self.g = coloravoid.graph.EdgeColoredGraph(
            4,
            [(0, 1, 0), (2, 3, 1), (1, 2, 2), (0, 3, 3)])

    def test_attributes(self):
        self.assertEqual(self.g.n, 4)
        self.assertEqual(self.g.m, 4)
        self.assertEqual(self.g.k, 4)
        self.assertEqual(self.g.colors_used, [0, 1, 2, 3])
        numpy.testing.assert_array_equal(self.g.edge_colors, [0, 1, 2, 3])
        self.assertIsNone(self.g.color_labels)

    def test_declared_k(self):
        g = coloravoid.graph.EdgeColoredGraph(2, [(0, 1, 0)], k=3)
        self.assertEqual(g.k, 3)
        self.assertEqual(g.colors_used, [0])

    def test_empty(self):
        g = coloravoid.graph.EdgeColoredGraph(3, [])
        self.assertEqual(g.m, 0)
        self.assertEqual(g.k, 0)

    def test_parallel_edges(self):
        g = coloravoid.graph.EdgeColoredGraph(2, [(0, 1, 0), (1, 0, 1)])
        self.assertEqual(g.m, 2)
        self.assertEqual(g.edges, ((0, 1, 0), (1, 0, 1)))

    def test_immutable(self):
        with self.assertRaises(ValueError):
            self.g.edge_colors[0] = 5

    def test_self_loop_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.EdgeColoredGraph(3, [(1, 1, 0)])

    def test_endpoint_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.EdgeColoredGraph(3, [(1, 3, 0)])

    def test_negative_color_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.EdgeColoredGraph(3, [(0, 1, -1)])

    def test_subgraph(self):
        h = self.g.subgraph([3, 0])
        self.assertEqual(h.edges, ((0, 3, 3), (0, 1, 0)))
        self.assertEqual(h.n, 4)
        self.assertEqual(h.k, 4)

    def test_to_networkx(self):
        nx_graph = self.g.to_networkx()
        self.assertIsInstance(nx_graph, networkx.MultiGraph)
        self.assertEqual(nx_graph.number_of_nodes(), 4)
        self.assertEqual(nx_graph.number_of_edges(), 4)
        self.assertEqual(nx_graph.edges[2, 3, 1]['color'], 1)

    def test_equality(self):
        h = coloravoid.graph.EdgeColoredGraph(
            4,
            [(0, 1, 0), (2, 3, 1), (1, 2, 2), (0, 3, 3)])
        self.assertEqual(self.g, h)
        self.assertEqual(hash(self.g), hash(h))
        self.assertNotEqual(self.g, self.g.subgraph([0, 1, 2]))

class TestVertexColoredGraph(unittest.TestCase):
    """
    Tests for the VertexColoredGraph class

    """
    def setUp(self):
        self.g = coloravoid.graph.VertexColoredGraph(
            4,
            [(0, 1), (3, 1), (2, 3), (0, 2)],
            [0, 1, 1, 2])

    def test_attributes(self):
        self.assertEqual(self.g.n, 4)
        self.assertEqual(self.g.m, 4)
        self.assertEqual(self.g.k, 3)
        self.assertEqual(self.g.colors_used, [0, 1, 2])
        self.assertEqual(self.g.edges, ((0, 1), (1, 3), (2, 3), (0, 2)))

    def test_neighbors(self):
        self.assertEqual(sorted(self.g.neighbors(0)), [1, 2])
        self.assertTrue(self.g.has_edge(3, 1))
        self.assertFalse(self.g.has_edge(0, 3))

    def test_parallel_edge_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.VertexColoredGraph(2, [(0, 1), (1, 0)], [0, 1])

    def test_colors_length_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.VertexColoredGraph(3, [(0, 1)], [0, 1])

    def test_immutable(self):
        with self.assertRaises(ValueError):
            self.g.colors[0] = 2

    def test_subgraph(self):
        h = self.g.subgraph([2])
        self.assertEqual(h.edges, ((2, 3),))
        numpy.testing.assert_array_equal(h.colors, self.g.colors)

    def test_to_networkx(self):
        nx_graph = self.g.to_networkx()
        self.assertEqual(nx_graph.nodes[3]['color'], 2)
        self.assertEqual(nx_graph.edges[1, 3]['index'], 1)

    def test_equality(self):
        h = coloravoid.graph.VertexColoredGraph(
            4,
            [(1, 0), (1, 3), (3, 2), (2, 0)],
            [0, 1, 1, 2])
        self.assertEqual(self.g, h)
        other_colors = coloravoid.graph.VertexColoredGraph(
            4,
            [(0, 1), (1, 3), (2, 3), (0, 2)],
            [0, 1, 2, 2])
        self.assertNotEqual(self.g, other_colors)

class TestDeleteColor(unittest.TestCase):
    """
    Tests for the delete_color_edges and delete_color_vertices functions

    """
    def test_delete_color_edges(self):
        g = coloravoid.graph.EdgeColoredGraph(
            4,
            [(0, 1, 0), (2, 3, 1), (1, 2, 2), (3, 0, 1)])
        h = coloravoid.graph.delete_color_edges(g, 1)
        self.assertEqual(h.edges, ((0, 1, 0), (1, 2, 2)))
        self.assertEqual(h.k, 3)
        self.assertEqual(g.m, 4)

    def test_delete_color_vertices(self):
        g = coloravoid.graph.VertexColoredGraph(
            4,
            [(0, 1), (1, 3), (2, 3), (0, 2)],
            [0, 1, 1, 2])
        h, index_map = coloravoid.graph.delete_color_vertices(g, 1)
        self.assertEqual(index_map, {0: 0, 3: 1})
        self.assertEqual(h.n, 2)
        self.assertEqual(h.m, 0)
        numpy.testing.assert_array_equal(h.colors, [0, 2])

class TestConnectivity(unittest.TestCase):
    """
    Tests for the is_connected and connected_components functions

    """
    def test_trivial(self):
        self.assertTrue(coloravoid.graph.is_connected(0, []))
        self.assertTrue(coloravoid.graph.is_connected(1, []))
        self.assertFalse(coloravoid.graph.is_connected(2, []))

    def test_colored_edges(self):
        self.assertTrue(coloravoid.graph.is_connected(
            3, [(0, 1, 5), (2, 1, 0)]))

    def test_components(self):
        w = coloravoid.graph.connected_components(5, [(0, 3), (4, 1)])
        self.assertEqual(w.parts, ((0, 3), (1, 4), (2,)))

    @given(edge_lists())
    def test_against_networkx(self, data):
        n, edges = data
        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(range(n))
        nx_graph.add_edges_from(edges)
        self.assertEqual(coloravoid.graph.is_connected(n, edges),
                         networkx.is_connected(nx_graph))
        w = coloravoid.graph.connected_components(n, edges)
        self.assertEqual(
            sorted(w.parts),
            sorted(tuple(sorted(c))
                   for c in networkx.connected_components(nx_graph)))

class TestResolveOrder(unittest.TestCase):
    """
    Tests for the resolve_order function

    """
    def test_default(self):
        self.assertEqual(coloravoid.graph.resolve_order(None, 3), [0, 1, 2])
        self.assertEqual(coloravoid.graph.resolve_order('asc', 3),
                         [0, 1, 2])

    def test_desc(self):
        self.assertEqual(coloravoid.graph.resolve_order('desc', 3),
                         [2, 1, 0])

    def test_random(self):
        a = coloravoid.graph.resolve_order('random:7', 10)
        b = coloravoid.graph.resolve_order('random:7', 10)
        self.assertEqual(a, b)
        self.assertEqual(sorted(a), list(range(10)))

    def test_explicit(self):
        self.assertEqual(coloravoid.graph.resolve_order([2, 0, 1], 3),
                         [2, 0, 1])

    def test_not_permutation_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.resolve_order([0, 0, 1], 3)

    def test_bad_seed_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.resolve_order('random:x', 3)

    def test_unknown_error(self):
        with self.assertRaises(ValueError):
            coloravoid.graph.resolve_order('sideways', 3)

class TestSpanningTree(unittest.TestCase):
    """
    Tests for the spanning_tree function

    """
    def setUp(self):
        # Triangle plus a pendant vertex
        self.g = coloravoid.graph.EdgeColoredGraph(
            4,
            [(0, 1, 0), (1, 2, 0), (0, 2, 1), (2, 3, 1)])

    def test_ascending(self):
        self.assertEqual(coloravoid.graph.spanning_tree(self.g), [0, 1, 3])

    def test_descending(self):
        self.assertEqual(coloravoid.graph.spanning_tree(self.g, 'desc'),
                         [3, 2, 1])

    def test_with_dsu(self):
        dsu = coloravoid.graph.DisjointSetUnion(4)
        dsu.union(0, 1)
        self.assertEqual(coloravoid.graph.spanning_tree(self.g, dsu=dsu),
                         [1, 3])
        self.assertEqual(dsu.n_components, 1)

    def test_forest(self):
        g = coloravoid.graph.EdgeColoredGraph(4, [(0, 1, 0), (2, 3, 0)])
        self.assertEqual(coloravoid.graph.spanning_tree(g), [0, 1])

    @given(edge_lists())
    def test_forest_size(self, data):
        n, edges = data
        g = coloravoid.graph.EdgeColoredGraph(n, [(u, v, 0)
                                                  for u, v in edges])
        tree = coloravoid.graph.spanning_tree(g, 'random:3')
        n_components = len(coloravoid.graph.connected_components(n, edges))
        self.assertEqual(len(tree), n - n_components)
        self.assertEqual(
            len(coloravoid.graph.connected_components(
                n, [edges[i] for i in tree])),
            n_components)

class TestContractPartition(unittest.TestCase):
    """
    Tests for the contract_partition function

    """
    def test_contract(self):
        g = coloravoid.graph.EdgeColoredGraph(
            4,
            [(0, 1, 0), (1, 2, 0), (0, 3, 0), (1, 3, 1), (2, 3, 0)])
        w = coloravoid.graph.Partition([[0, 1], [2], [3]])
        h, back_map = coloravoid.graph.contract_partition(g, w)
        self.assertEqual(h.n, 3)
        # (0, 1) is internal, (0, 3) and (1, 3) join parts 0 and 2 with
        # different colors
        self.assertEqual(h.edges, ((0, 1, 0), (0, 2, 0), (0, 2, 1),
                                   (1, 2, 0)))
        self.assertEqual(back_map, [1, 2, 3, 4])

    def test_order_sets_representative(self):
        g = coloravoid.graph.EdgeColoredGraph(
            3,
            [(0, 2, 0), (1, 2, 0)])
        w = coloravoid.graph.Partition([[0, 1], [2]])
        h, back_map = coloravoid.graph.contract_partition(g, w, 'desc')
        self.assertEqual(h.m, 1)
        self.assertEqual(back_map, [1])

    def test_universe_error(self):
        g = coloravoid.graph.EdgeColoredGraph(3, [(0, 1, 0)])
        w = coloravoid.graph.Partition([[0, 1]])
        with self.assertRaises(ValueError):
            coloravoid.graph.contract_partition(g, w)

class TestIsCanonicallyColored(unittest.TestCase):
    """
    Tests for the is_canonically_colored function

    """
    def test_canonical(self):
        g = coloravoid.graph.VertexColoredGraph(3, [], [0, 1, 1])
        self.assertTrue(coloravoid.graph.is_canonically_colored(g))

    def test_unused_color(self):
        g = coloravoid.graph.VertexColoredGraph(3, [], [0, 2, 2])
        self.assertFalse(coloravoid.graph.is_canonically_colored(g))

    def test_declared_but_unused(self):
        g = coloravoid.graph.EdgeColoredGraph(2, [(0, 1, 0)], k=2)
        self.assertFalse(coloravoid.graph.is_canonically_colored(g))

if __name__ == '__main__':
    unittest.main()
