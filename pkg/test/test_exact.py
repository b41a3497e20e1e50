# -*- coding: UTF-8 -*-
"""
Unit tests for the exhaustive solvers
"""

import unittest

import numpy

import coloravoid
import coloravoid.connectivity
import coloravoid.construction
import coloravoid.exact
import coloravoid.fileio
import coloravoid.graph
import coloravoid.matroid
import coloravoid.sampling

def load(name):
    return coloravoid.fileio.load(coloravoid.fileio.data_file(name))

class TestExactSolver(unittest.TestCase):
    """
    Tests for the ExactSolver class

    """
    def test_default_budget(self):
        solver = coloravoid.exact.ExactSolver()
        self.assertEqual(solver.budget, coloravoid.exact.DEFAULT_BUDGET)
        self.assertTrue(solver.prune)

    def test_eca_tight_graph(self):
        g = load('eca_tight_ratio_k3_n7.ecg')
        result = coloravoid.exact.ExactSolver().min_subgraph(g, 'eca')
        self.assertEqual(result.optimum_size, 9)
        self.assertEqual(len(result.witness), 9)
        self.assertTrue(coloravoid.connectivity.is_eca_connected(
            g.subgraph(result.witness)).holds)

    def test_vca_tight_graph(self):
        g = load('vca_tight_ratio_k2_n7.vcg')
        result = coloravoid.exact.ExactSolver().min_subgraph(g, 'vca')
        self.assertEqual(result.optimum_size, 6)
        self.assertTrue(coloravoid.connectivity.is_vca_connected(
            g.subgraph(result.witness)).holds)

    def test_vca_minimum_graph(self):
        g = load('vca_min_k4_n6.vcg')
        result = coloravoid.exact.ExactSolver().min_subgraph(g, 'VCA')
        self.assertEqual(result.optimum_size, 6)
        self.assertEqual(result.witness, (0, 1, 2, 3, 4, 5))
        self.assertEqual(result.instances_searched, 1)

    def test_ivca_minimum_graph(self):
        g = load('ivca_min_k4_n9.vcg')
        result = coloravoid.exact.ExactSolver().min_subgraph(g, 'ivca')
        self.assertEqual(result.optimum_size, 10)
        self.assertEqual(result.witness, tuple(range(10)))

    def test_single_vertex(self):
        g = coloravoid.graph.VertexColoredGraph(1, [], [0])
        result = coloravoid.exact.ExactSolver().min_subgraph(g, 'vca')
        self.assertEqual(result.optimum_size, 0)
        self.assertEqual(result.witness, ())

    def test_prune_does_not_change_optimum(self):
        for name, notion in [('eca_square.ecg', 'eca'),
                             ('vca_square.vcg', 'ivca'),
                             ('vca_tight_ratio_k2_n7.vcg', 'vca')]:
            g = load(name)
            pruned = coloravoid.exact.ExactSolver(prune=True).min_subgraph(
                g, notion)
            unpruned = coloravoid.exact.ExactSolver(
                prune=False).min_subgraph(g, notion)
            self.assertEqual(pruned.optimum_size, unpruned.optimum_size)
            self.assertTrue(
                pruned.instances_searched <= unpruned.instances_searched)

    def test_budget_exceeded_error(self):
        g = load('eca_tight_ratio_k3_n7.ecg')
        solver = coloravoid.exact.ExactSolver(budget=5)
        with self.assertRaises(coloravoid.exact.BudgetExceededError) as cm:
            solver.min_subgraph(g, 'eca')
        self.assertEqual(cm.exception.size, 15)
        self.assertEqual(cm.exception.budget, 5)
        self.assertIsInstance(cm.exception, ValueError)

    def test_input_without_property_error(self):
        g = load('eca_square_blue_cut.ecg')
        with self.assertRaises(
                coloravoid.connectivity.NotColorAvoidingError):
            coloravoid.exact.ExactSolver().min_subgraph(g, 'eca')

    def test_added_edge_does_not_increase_optimum(self):
        random_state = numpy.random.RandomState(7)
        for sample in range(150):
            notion = ['eca', 'vca', 'ivca'][sample % 3]
            k = random_state.randint(2, 4)
            n = random_state.randint(max(k, 3), 7)
            g = coloravoid.sampling.sample_valid(notion, n, k,
                                                 seed=random_state,
                                                 max_edges=14)
            u, v = random_state.choice(n, 2, replace=False)
            if notion == 'eca':
                c = random_state.randint(k)
                h = coloravoid.graph.EdgeColoredGraph(
                    n, list(g.edges) + [(u, v, c)], k=g.k)
            elif g.has_edge(u, v):
                continue
            else:
                h = coloravoid.graph.VertexColoredGraph(
                    n, list(g.edges) + [(u, v)], g.colors, k=g.k)
            before = coloravoid.exact.min_subgraph_exact(g, notion)
            after = coloravoid.exact.min_subgraph_exact(h, notion)
            self.assertTrue(after.optimum_size <= before.optimum_size)

class TestMinRestriction(unittest.TestCase):
    """
    Tests for the exhaustive restriction search

    """
    def test_uniform(self):
        m = load('uniform_6_2.mat')
        result = coloravoid.exact.min_restriction_exact(m)
        self.assertEqual(result.optimum_size, 3)
        self.assertEqual(result.witness, (0, 2, 4))
        self.assertEqual(result.instances_searched, 6)

    def test_uniform_unpruned(self):
        m = load('uniform_6_2.mat')
        result = coloravoid.exact.min_restriction_exact(m, prune=False)
        self.assertEqual(result.optimum_size, 3)
        self.assertEqual(result.witness, (0, 2, 4))

    def test_graphic_tight_graph(self):
        built = coloravoid.construction.gen_eca_tight_ratio(3, 7)
        m = coloravoid.matroid.GraphicMatroid(built.graph)
        result = coloravoid.exact.min_restriction_exact(m)
        self.assertEqual(result.optimum_size, 9)
        self.assertTrue(
            coloravoid.matroid.is_good_restriction(m, result.witness))

    def test_rank_zero(self):
        m = coloravoid.matroid.UniformMatroid(3, 0, [0, 1, 2])
        result = coloravoid.exact.min_restriction_exact(m)
        self.assertEqual(result.optimum_size, 0)

    def test_not_courteous_error(self):
        m = load('graphic_diamond.mat')
        with self.assertRaises(coloravoid.matroid.NotCourteousError):
            coloravoid.exact.min_restriction_exact(m)

    def test_budget_exceeded_error(self):
        m = load('uniform_6_2.mat')
        with self.assertRaises(coloravoid.exact.BudgetExceededError):
            coloravoid.exact.min_restriction_exact(m, budget=4)

class TestVerifyLowerBound(unittest.TestCase):
    """
    Tests for the verify_lower_bound function

    """
    def test_eca(self):
        report = coloravoid.exact.verify_lower_bound('eca', 3, 4,
                                                     samples=5, budget=10)
        self.assertTrue(report.holds)
        table = report.table
        self.assertEqual(list(table.columns),
                         ['Source', 'Size', 'Optimum', 'Bound', 'Holds'])
        self.assertEqual(len(table), 6)
        self.assertEqual(table['Source'].iloc[-1], 'generator')
        self.assertEqual(table['Optimum'].iloc[-1], 5)

    def test_vca(self):
        report = coloravoid.exact.verify_lower_bound('vca', 3, 5,
                                                     samples=5, budget=10)
        self.assertTrue(report.holds)
        self.assertTrue((report.table['Bound'] == 5).all())

    def test_ivca(self):
        report = coloravoid.exact.verify_lower_bound('ivca', 2, 5,
                                                     samples=3, budget=10)
        self.assertTrue(report.holds)

    def test_matroid(self):
        report = coloravoid.exact.verify_lower_bound('matroid', 3, 3,
                                                     samples=3, budget=10)
        self.assertTrue(report.holds)
        self.assertEqual(report.table['Optimum'].iloc[-1], 5)

    def test_generator_skipped_over_budget(self):
        report = coloravoid.exact.verify_lower_bound('eca', 3, 4,
                                                     samples=0, budget=4)
        self.assertEqual(len(report.table), 0)
        self.assertTrue(report.holds)

if __name__ == '__main__':
    unittest.main()
