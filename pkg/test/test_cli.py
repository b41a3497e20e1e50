# -*- coding: UTF-8 -*-
"""
Unit tests for the command-line interface
"""

import io
import json
import os
import shutil
import unittest
from unittest import mock

import coloravoid
import coloravoid.cli
import coloravoid.connectivity
import coloravoid.fileio

def data(name):
    return coloravoid.fileio.data_file(name)

def run(*argv):
    """
    Run the command-line interface, returning (status, stdout, stderr).

    """
    with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
            mock.patch('sys.stderr', new_callable=io.StringIO) as err:
        status = coloravoid.cli.main(list(argv))
    return status, out.getvalue(), err.getvalue()

def stats_of(text):
    return json.loads(text[text.index('{'):])

class TestCommandOutcome(unittest.TestCase):
    """
    Tests for the CommandOutcome class

    """
    def test_schema_first(self):
        outcome = coloravoid.cli.CommandOutcome(0, ["a"], {'x': 1})
        self.assertEqual(list(outcome.stats.keys()), ['schema', 'x'])
        self.assertEqual(outcome.stats['schema'],
                         coloravoid.cli.STATS_SCHEMA)

    def test_write(self):
        outcome = coloravoid.cli.CommandOutcome(0, ["a", "b"], {'x': 1})
        stream = io.StringIO()
        outcome.write(stream)
        text = stream.getvalue()
        self.assertTrue(text.startswith("a\nb\n{"))
        self.assertEqual(stats_of(text), {'schema': 1, 'x': 1})

    def test_write_without_stats(self):
        outcome = coloravoid.cli.CommandOutcome(1, ["a"])
        stream = io.StringIO()
        outcome.write(stream)
        self.assertEqual(stream.getvalue(), "a\n")

class TestCheck(unittest.TestCase):
    """
    Tests for the check subcommand

    """
    def setUp(self):
        # Directory where to save temporary files
        self.temp_dir = "test/temp_cli"
        if not os.path.exists(self.temp_dir):
            os.makedirs(self.temp_dir)

    def tearDown(self):
        # Delete temporary directory
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_holds(self):
        status, out, err = run('check', data('eca_square.ecg'), 'eca')
        self.assertEqual(status, coloravoid.cli.EXIT_OK)
        self.assertEqual(out, "eca: yes\n")

    def test_fails_with_witness(self):
        status, out, err = run('check', data('eca_square_blue_cut.ecg'),
                               'eca')
        self.assertEqual(status, coloravoid.cli.EXIT_FAILS)
        self.assertEqual(out,
                         "eca: no\nwitness: color 1, vertices 0 and 3\n")

    def test_internal(self):
        status, out, err = run('check', data('vca_square_one_red.vcg'),
                               'vca')
        self.assertEqual(status, 0)
        status, out, err = run('check', data('vca_square_one_red.vcg'),
                               'ivca')
        self.assertEqual(status, 1)

    def test_courteous(self):
        status, out, err = run('check', data('uniform_6_2.mat'),
                               'courteous')
        self.assertEqual(status, 0)
        self.assertEqual(out, "courteous: yes\n")
        status, out, err = run('check', data('graphic_diamond.mat'),
                               'courteous')
        self.assertEqual(status, 1)
        self.assertIn("color 0", out)

    def test_courteous_needs_matroid(self):
        status, out, err = run('check', data('eca_square.ecg'), 'courteous')
        self.assertEqual(status, coloravoid.cli.EXIT_ERROR)
        self.assertTrue(err.startswith("error: "))

    def test_wrong_graph_type(self):
        status, out, err = run('check', data('vca_square.vcg'), 'eca')
        self.assertEqual(status, 2)

    def test_malformed_file(self):
        file_name = os.path.join(self.temp_dir, 'bad.ecg')
        with open(file_name, 'w') as f:
            f.write("ECG 2 1\n0 1 0\n")
        status, out, err = run('check', file_name, 'eca')
        self.assertEqual(status, 2)
        self.assertIn("line 1", err)
        self.assertEqual(out, "")

    def test_missing_file(self):
        status, out, err = run('check',
                               os.path.join(self.temp_dir, 'none.ecg'),
                               'eca')
        self.assertEqual(status, 2)

class TestApprox(unittest.TestCase):
    """
    Tests for the approx subcommand

    """
    def setUp(self):
        # Directory where to save temporary files
        self.temp_dir = "test/temp_cli"
        if not os.path.exists(self.temp_dir):
            os.makedirs(self.temp_dir)

    def tearDown(self):
        # Delete temporary directory
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_adversarial_order_file(self):
        status, out, err = run('approx',
                               data('eca_tight_ratio_k3_n7.ecg'),
                               'eca',
                               '--order',
                               data('eca_tight_ratio_k3_n7.order'))
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "selected 12 of 15 edges")
        stats = stats_of(out)
        self.assertEqual(list(stats.keys())[:3],
                         ['schema', 'notion', 'edges_selected'])
        self.assertEqual(stats['schema'], 1)
        self.assertEqual(stats['notion'], 'eca')
        self.assertEqual(stats['edges_selected'], 12)
        self.assertEqual(stats['lower_bound'], 9)
        self.assertEqual(stats['upper_bound'], 12)
        self.assertAlmostEqual(stats['ratio_vs_bound'], 12./9)
        self.assertAlmostEqual(stats['guaranteed_ratio'], 4./3)
        self.assertEqual(stats['phase_counts']['phase1-tree'], 6)

    def test_internal_order_file(self):
        status, out, err = run('approx',
                               data('ivca_tight_ratio_k4_n15.vcg'),
                               'ivca',
                               '--order',
                               data('ivca_tight_ratio_k4_n15.order'))
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "selected 27 of 39 edges")

    def test_prune_and_output(self):
        file_name = os.path.join(self.temp_dir, 'sparse.vcg')
        status, out, err = run('approx',
                               data('vca_tight_ratio_k4_n9.vcg'),
                               'vca',
                               '--order',
                               data('vca_tight_ratio_k4_n9.order'),
                               '--prune',
                               '--output',
                               file_name)
        self.assertEqual(status, 0)
        stats = stats_of(out)
        self.assertEqual(stats['edges_selected'], 15)
        self.assertTrue(stats['edges_after_prune'] <= 15)
        h = coloravoid.fileio.load(file_name)
        self.assertEqual(h.m, stats['edges_after_prune'])
        self.assertTrue(coloravoid.connectivity.is_vca_connected(h).holds)

    def test_seed(self):
        status, out, err = run('approx', data('eca_maximal_k4_n8.ecg'),
                               'eca', '--seed', '3')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "selected 14 of 14 edges")

    def test_explicit_vertex_order(self):
        status, out, err = run('approx', data('ivca_maximal_k2_n6.vcg'),
                               'ivca', '--vertex-order', '5,4,3,2,1,0')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "selected 9 of 9 edges")

    def test_matroid(self):
        status, out, err = run('approx', data('uniform_6_2.mat'),
                               'matroid', '--order', 'asc', '--prune')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "selected 4 of 6 elements")
        stats = stats_of(out)
        self.assertEqual(stats['notion'], 'matroid')
        self.assertEqual(stats['lower_bound'], 3)
        self.assertEqual(stats['deselected'], 0)

    def test_matroid_not_courteous(self):
        status, out, err = run('approx', data('graphic_diamond.mat'),
                               'matroid')
        self.assertEqual(status, 1)

    def test_input_without_property(self):
        status, out, err = run('approx', data('eca_square_blue_cut.ecg'),
                               'eca')
        self.assertEqual(status, 1)

    def test_graph_notion_on_matroid(self):
        status, out, err = run('approx', data('uniform_6_2.mat'), 'eca')
        self.assertEqual(status, 2)

    def test_bad_order(self):
        status, out, err = run('approx', data('eca_square.ecg'), 'eca',
                               '--order', 'sideways')
        self.assertEqual(status, 2)

    def test_bad_vertex_order(self):
        status, out, err = run('approx', data('vca_square.vcg'), 'ivca',
                               '--vertex-order', 'a,b')
        self.assertEqual(status, 2)

class TestExact(unittest.TestCase):
    """
    Tests for the exact subcommand

    """
    def test_graph(self):
        status, out, err = run('exact', data('vca_min_k4_n6.vcg'), 'vca')
        self.assertEqual(status, 0)
        lines = out.split("\n")
        self.assertEqual(lines[0], "optimum: 6 edges")
        self.assertEqual(lines[1], "witness: 0 1 2 3 4 5")
        stats = stats_of(out)
        self.assertEqual(stats['optimum_size'], 6)
        self.assertEqual(stats['witness'], [0, 1, 2, 3, 4, 5])

    def test_matroid(self):
        status, out, err = run('exact', data('uniform_6_2.mat'), 'matroid')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "optimum: 3 elements")

    def test_budget(self):
        status, out, err = run('exact', data('eca_tight_ratio_k3_n7.ecg'),
                               'eca', '--budget', '5')
        self.assertEqual(status, coloravoid.cli.EXIT_BUDGET)
        self.assertIn("15", err)

    def test_no_prune(self):
        status, out, err = run('exact', data('eca_square.ecg'), 'eca',
                               '--no-prune')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "optimum: 4 edges")

    def test_graph_notion_on_matroid(self):
        status, out, err = run('exact', data('uniform_6_2.mat'), 'vca')
        self.assertEqual(status, 2)

class TestGenerate(unittest.TestCase):
    """
    Tests for the generate subcommand

    """
    def setUp(self):
        # Directory where to save temporary files
        self.temp_dir = "test/temp_cli"
        if not os.path.exists(self.temp_dir):
            os.makedirs(self.temp_dir)

    def tearDown(self):
        # Delete temporary directory
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_stdout(self):
        status, out, err = run('generate', 'vca_min', '4', '6')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "VCG 6 6 4")
        self.assertEqual(coloravoid.fileio.parse(out),
                         coloravoid.fileio.load(data('vca_min_k4_n6.vcg')))

    def test_output_then_check(self):
        file_name = os.path.join(self.temp_dir, 'cycle.vcg')
        status, out, err = run('generate', 'vca_min', '4', '6',
                               '--output', file_name)
        self.assertEqual(status, 0)
        self.assertEqual(out, "vca_min 4 6: 6 vertices, 6 edges\n")
        status, out, err = run('check', file_name, 'vca')
        self.assertEqual(status, 0)

    def test_certificates(self):
        status, out, err = run('generate', 'eca_tight_ratio', '3', '7',
                               '--certificates')
        self.assertEqual(status, 0)
        self.assertIn("# certificate optimum: 0 1 2 3 4 5 6 7 8\n", out)
        self.assertIn("# certificate adversarial: 0 1 2 3 4 5 9 10 11 12 13"
                      " 14\n", out)

    def test_order_output(self):
        file_name = os.path.join(self.temp_dir, 'tight.vcg')
        order_name = os.path.join(self.temp_dir, 'tight.order')
        status, out, err = run('generate', 'ivca_tight_ratio', '4', '15',
                               '--output', file_name,
                               '--order-output', order_name)
        self.assertEqual(status, 0)
        self.assertEqual(
            coloravoid.fileio.load_order(order_name),
            coloravoid.fileio.load_order(
                data('ivca_tight_ratio_k4_n15.order')))
        status, out, err = run('approx', file_name, 'ivca',
                               '--order', order_name)
        self.assertEqual(out.split("\n")[0], "selected 27 of 39 edges")

    def test_order_output_without_order(self):
        status, out, err = run('generate', 'eca_min', '4', '7',
                               '--order-output',
                               os.path.join(self.temp_dir, 'x.order'))
        self.assertEqual(status, 2)

    def test_invalid_parameters(self):
        status, out, err = run('generate', 'eca_tight_ratio', '2', '5')
        self.assertEqual(status, 2)

    def test_unknown_family(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit):
                coloravoid.cli.main(['generate', 'foo', '3'])

class TestBounds(unittest.TestCase):
    """
    Tests for the bounds subcommand

    """
    def test_eca(self):
        status, out, err = run('bounds', 'eca', '4', '8')
        self.assertEqual(status, 0)
        lines = out.split("\n")
        self.assertEqual(lines[0], "10")
        self.assertEqual(lines[1], "upper bound: 14")
        self.assertEqual(lines[2], "approximation ratio: 3/2")

    def test_ivca(self):
        status, out, err = run('bounds', 'ivca', '4', '15')
        self.assertEqual(out.split("\n")[0], "17")
        stats = stats_of(out)
        self.assertEqual(stats['lower_bound'], 17)
        self.assertEqual(stats['upper_bound'], 27)
        self.assertEqual(stats['approximation_ratio'], '12/7')

    def test_matroid(self):
        status, out, err = run('-v', 'bounds', 'matroid', '4', '7')
        self.assertEqual(status, 0)
        self.assertEqual(out.split("\n")[0], "10")

    def test_invalid(self):
        status, out, err = run('bounds', 'vca', '4', '3')
        self.assertEqual(status, 2)

class TestExportDot(unittest.TestCase):
    """
    Tests for the export-dot subcommand

    """
    def setUp(self):
        # Directory where to save temporary files
        self.temp_dir = "test/temp_cli"
        if not os.path.exists(self.temp_dir):
            os.makedirs(self.temp_dir)

    def tearDown(self):
        # Delete temporary directory
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_stdout(self):
        status, out, err = run('export-dot', data('eca_square.ecg'))
        self.assertEqual(status, 0)
        self.assertIn("graph G {", out)
        self.assertIn("paired12", out)

    def test_graphic_matroid(self):
        status, out, err = run('export-dot', data('graphic_diamond.mat'))
        self.assertEqual(status, 0)

    def test_uniform_matroid(self):
        status, out, err = run('export-dot', data('uniform_6_2.mat'))
        self.assertEqual(status, 2)

    def test_output(self):
        file_name = os.path.join(self.temp_dir, 'square.dot')
        status, out, err = run('export-dot', data('vca_square.vcg'),
                               '--output', file_name)
        self.assertEqual(status, 0)
        self.assertEqual(out, "written {}\n".format(file_name))
        self.assertTrue(os.path.isfile(file_name))

class TestSweep(unittest.TestCase):
    """
    Tests for the sweep subcommand

    """
    def test_small_sweep(self):
        status, out, err = run('sweep',
                               '--families', 'eca_tight_ratio',
                               '--orders', 'adversarial', 'asc',
                               '--k-values', '3')
        self.assertEqual(status, 0)
        lines = out.rstrip("\n").split("\n")
        self.assertIn("Family", lines[0])
        self.assertEqual(len(lines), 7)

class TestParser(unittest.TestCase):
    """
    Tests for the argument parser

    """
    def test_command_required(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit):
                coloravoid.cli.main([])

    def test_subcommands(self):
        parser = coloravoid.cli.build_parser()
        args = parser.parse_args(['bounds', 'eca', '3', '7'])
        self.assertEqual(args.func, coloravoid.cli.cmd_bounds)
        self.assertEqual(args.k, 3)
        self.assertEqual(args.verbose, 0)

if __name__ == '__main__':
    unittest.main()
