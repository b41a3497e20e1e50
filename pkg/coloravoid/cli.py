# -*- coding: UTF-8 -*-
"""
Command-line interface of coloravoid.

Subcommands ``check``, ``approx``, ``exact``, ``generate``, ``bounds``,
``export-dot`` and ``sweep``. Exit status is 0 on success, 1 when the
input lacks the property, 2 on input or parameter errors, and 3 when an
exact search is refused for exceeding its budget.

"""

import argparse
import collections
import json
import logging
import os
import sys

import coloravoid
from coloravoid import connectivity
from coloravoid import construction
from coloravoid import exact
from coloravoid import experiment
from coloravoid import fileio
from coloravoid import matroid
from coloravoid import sparsify
from coloravoid.math import approximation_ratio, max_edges_bound, \
    min_edges_bound, min_elements_bound

logger = logging.getLogger(__name__)

# Version of the JSON stats block
STATS_SCHEMA = 1

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3

class CommandOutcome(object):
    """
    Result of a subcommand.

    Attributes
    ----------
    status : int
        Exit status.
    report : list of str
        Human-readable report lines.
    stats : OrderedDict or None
        Machine-readable statistics, printed as JSON after the report.

    """
    def __init__(self, status, report, stats=None):
        self.status = status
        self.report = list(report)
        self.stats = stats
        if self.stats is not None:
            self.stats = collections.OrderedDict(
                [('schema', STATS_SCHEMA)] + list(self.stats.items()))

    def write(self, stream):
        for line in self.report:
            stream.write(line + "\n")
        if self.stats is not None:
            stream.write(json.dumps(self.stats, indent=2) + "\n")

def _resolve_order_arg(value):
    """
    Convert an ``--order`` value into (edge order, vertex order).

    Values other than ``asc``, ``desc`` and ``random:<seed>`` are read as
    order files.

    """
    if value is None or value in ('asc', 'desc') or \
            value.startswith('random:'):
        return value, None
    if not os.path.exists(value):
        raise ValueError("order {} is neither asc, desc, random:<seed> nor "
                         "an existing file".format(value))
    return fileio.load_order(value)

def _parse_vertex_order(value):
    if value in ('asc', 'desc') or value.startswith('random:'):
        return value
    try:
        return [int(v) for v in value.split(',')]
    except ValueError:
        raise ValueError("vertex order should be asc, desc, random:<seed> or "
                         "comma-separated vertices, got {}".format(value))

def _write_output(text, output):
    if output is None:
        return
    with open(output, 'w') as f:
        f.write(text)
    logger.info("written %s", output)

def _matroid_rank(m):
    return matroid.rank(m, m.ground)

def _restricted(m, selected):
    """
    Restriction of `m` to the elements in `selected`, as an instance.

    """
    selected = sorted(selected)
    if isinstance(m, matroid.GraphicMatroid):
        return matroid.GraphicMatroid(m.graph.subgraph(selected))
    colors = [m.colors[s] for s in selected]
    return matroid.UniformMatroid(len(selected),
                                  min(m.threshold, len(selected)),
                                  colors,
                                  k=m.k,
                                  color_labels=m.color_labels)

def _witness_line(verdict):
    if verdict.witness is None:
        return "witness: none"
    c, u, v = verdict.witness
    return "witness: color {}, vertices {} and {}".format(c, u, v)

def cmd_check(args):
    instance = fileio.load(args.file)
    notion = args.notion
    if notion == 'courteous':
        if not isinstance(instance, matroid.ColoredMatroid):
            raise ValueError("courteous check needs a GRAPHIC or UNIFORM "
                             "input")
        violation = matroid.courteous_violation(instance)
        if violation is None:
            return CommandOutcome(EXIT_OK, ["courteous: yes"])
        return CommandOutcome(EXIT_FAILS, [
            "courteous: no",
            "witness: deleting color {} decreases the rank".format(
                violation)])
    if isinstance(instance, matroid.ColoredMatroid):
        raise ValueError("{} check needs a graph input".format(notion))
    verdict = connectivity.check(instance, notion)
    if verdict.holds:
        return CommandOutcome(EXIT_OK, ["{}: yes".format(notion)])
    return CommandOutcome(EXIT_FAILS, ["{}: no".format(notion),
                                       _witness_line(verdict)])

def _approx_matroid(m, args, edge_order):
    result = matroid.courteous_restriction(m,
                                           order=edge_order,
                                           prune=args.prune)
    r = _matroid_rank(m)
    k = len(m.colors_used)
    lower = min_elements_bound(k, r)
    stats = collections.OrderedDict([
        ('notion', 'matroid'),
        ('elements_selected', len(result)),
        ('phase_counts', result.phase_counts),
        ('lower_bound', lower),
        ('upper_bound', max_edges_bound('matroid', k, r)),
        ('ratio_vs_bound', float(len(result))/lower if lower else None),
        ('oracle_calls', result.oracle_calls)])
    if args.prune:
        stats['deselected'] = len(result.deselected)
    _write_output(fileio.serialize(_restricted(m, result.selected)),
                  args.output)
    report = ["selected {} of {} elements".format(len(result),
                                                  m.ground_size)]
    return CommandOutcome(EXIT_OK, report, stats)

def cmd_approx(args):
    instance = fileio.load(args.file)
    if args.seed is not None:
        edge_order, vertex_order = 'random:{}'.format(args.seed), None
    else:
        edge_order, vertex_order = _resolve_order_arg(args.order)
    if args.vertex_order is not None:
        vertex_order = _parse_vertex_order(args.vertex_order)
    if args.notion == 'matroid':
        if not isinstance(instance, matroid.ColoredMatroid):
            raise ValueError("matroid notion needs a GRAPHIC or UNIFORM "
                             "input")
        return _approx_matroid(instance, args, edge_order)
    if isinstance(instance, matroid.ColoredMatroid):
        raise ValueError("{} notion needs a graph input".format(args.notion))

    g = instance
    kwargs = {}
    if args.notion == 'ivca':
        kwargs['vertex_order'] = vertex_order
    result = sparsify.sparsify(g, args.notion, edge_order, **kwargs)
    selected = result.selected_edges
    k = len(g.colors_used)
    lower = min_edges_bound(args.notion, k, g.n)
    stats = result.stats
    stats['notion'] = args.notion
    stats.move_to_end('notion', last=False)
    if args.prune:
        selected = sparsify.prune_subgraph(g, selected, args.notion)
        stats['edges_after_prune'] = len(selected)
    stats['lower_bound'] = lower
    stats['upper_bound'] = max_edges_bound(args.notion, k, g.n)
    stats['ratio_vs_bound'] = float(len(selected))/lower if lower else None
    stats['guaranteed_ratio'] = float(approximation_ratio(args.notion, k))
    _write_output(fileio.serialize(g.subgraph(sorted(selected))),
                  args.output)
    report = ["selected {} of {} edges".format(len(selected), g.m)]
    return CommandOutcome(EXIT_OK, report, stats)

def cmd_exact(args):
    instance = fileio.load(args.file)
    solver = exact.ExactSolver(budget=args.budget, prune=not args.no_prune)
    if isinstance(instance, matroid.ColoredMatroid):
        if args.notion not in ('matroid', 'courteous'):
            raise ValueError("{} notion needs a graph input".format(
                args.notion))
        result = solver.min_restriction(instance)
        unit = 'elements'
    else:
        result = solver.min_subgraph(instance, args.notion)
        unit = 'edges'
    stats = collections.OrderedDict([
        ('optimum_size', result.optimum_size),
        ('witness', list(result.witness)),
        ('instances_searched', result.instances_searched)])
    report = ["optimum: {} {}".format(result.optimum_size, unit),
              "witness: {}".format(" ".join(str(i) for i in result.witness))]
    return CommandOutcome(EXIT_OK, report, stats)

def cmd_generate(args):
    built = construction.construct(args.family, *args.params)
    text = fileio.serialize(built.graph)
    if args.certificates:
        for name, edges in built.certificates.items():
            text += "# certificate {}: {}\n".format(
                name, " ".join(str(i) for i in sorted(edges)))
    if args.output is None:
        report = text.rstrip("\n").split("\n")
    else:
        _write_output(text, args.output)
        report = ["{} {}: {} vertices, {} edges".format(
            args.family,
            " ".join(str(p) for p in args.params),
            built.graph.n,
            built.graph.m)]
    if args.order_output is not None:
        if built.edge_order is None:
            raise ValueError("family {} has no adversarial order".format(
                args.family))
        vertex_order = built.vertex_order \
            if built.spec.expected_property == 'ivca' else None
        _write_output(fileio.serialize_order(built.edge_order, vertex_order),
                      args.order_output)
    return CommandOutcome(EXIT_OK, report)

def cmd_bounds(args):
    variant = args.variant
    lower = min_edges_bound(variant, args.k, args.n_or_r)
    upper = max_edges_bound(variant, args.k, args.n_or_r)
    ratio = approximation_ratio(variant, args.k)
    report = ["{}".format(lower),
              "upper bound: {}".format(upper),
              "approximation ratio: {}".format(ratio)]
    stats = collections.OrderedDict([
        ('variant', variant),
        ('lower_bound', lower),
        ('upper_bound', upper),
        ('approximation_ratio', str(ratio))])
    return CommandOutcome(EXIT_OK, report, stats)

def cmd_export_dot(args):
    instance = fileio.load(args.file)
    if isinstance(instance, matroid.GraphicMatroid):
        instance = instance.graph
    dot = fileio.to_dot(instance)
    text = dot.to_string()
    if args.output is None:
        return CommandOutcome(EXIT_OK, text.rstrip("\n").split("\n"))
    _write_output(text, args.output)
    return CommandOutcome(EXIT_OK, ["written {}".format(args.output)])

def cmd_sweep(args):
    exp = experiment.Experiment()
    if args.families:
        exp.families = args.families
    if args.orders:
        exp.orders = args.orders
    if args.k_values:
        for family in exp.families:
            exp.sizes[family] = experiment.default_sizes(family,
                                                         args.k_values)
    if args.output is not None:
        runs = exp.save(args.output)
    else:
        runs = exp.run()
    report = runs.to_string(index=False).split("\n")
    return CommandOutcome(EXIT_OK, report)

def build_parser():
    """
    Argument parser of the command-line interface.

    """
    parser = argparse.ArgumentParser(
        prog='coloravoid',
        description="Color-avoiding connectivity checks, sparsifiers and "
                    "extremal graphs.")
    parser.add_argument('--version',
                        action='version',
                        version='%(prog)s ' + coloravoid.__version__)
    parser.add_argument('-v', '--verbose',
                        action='count',
                        default=0,
                        help="log INFO (-v) or DEBUG (-vv) messages")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    p = subparsers.add_parser('check', help="check a property")
    p.add_argument('file')
    p.add_argument('notion', choices=['eca', 'vca', 'ivca', 'courteous'])
    p.set_defaults(func=cmd_check)

    p = subparsers.add_parser('approx', help="run a sparsifier")
    p.add_argument('file')
    p.add_argument('notion', choices=['eca', 'vca', 'ivca', 'matroid'])
    p.add_argument('--order',
                   help="asc, desc, random:<seed> or an order file")
    p.add_argument('--vertex-order',
                   help="vertex order of the internal sparsifier")
    p.add_argument('--seed', type=int, help="same as --order random:<seed>")
    p.add_argument('--prune', action='store_true',
                   help="deselect redundant edges afterwards")
    p.add_argument('--output', help="file for the selected structure")
    p.set_defaults(func=cmd_approx)

    p = subparsers.add_parser('exact', help="find an optimum exhaustively")
    p.add_argument('file')
    p.add_argument('notion',
                   choices=['eca', 'vca', 'ivca', 'matroid', 'courteous'])
    p.add_argument('--budget', type=int, default=exact.DEFAULT_BUDGET,
                   help="largest number of edges or elements searched")
    p.add_argument('--no-prune', action='store_true',
                   help="disable the lower bound and feasibility filters")
    p.set_defaults(func=cmd_exact)

    p = subparsers.add_parser('generate', help="generate an extremal graph")
    p.add_argument('family', choices=list(construction.FAMILIES))
    p.add_argument('params', type=int, nargs='+')
    p.add_argument('--certificates', action='store_true',
                   help="append certificates as comments")
    p.add_argument('--output', help="instance file to write")
    p.add_argument('--order-output',
                   help="order file to write with the adversarial order")
    p.set_defaults(func=cmd_generate)

    p = subparsers.add_parser('bounds', help="print closed-form bounds")
    p.add_argument('variant', choices=['eca', 'vca', 'ivca', 'matroid'])
    p.add_argument('k', type=int)
    p.add_argument('n_or_r', type=int,
                   help="number of vertices, or rank for matroids")
    p.set_defaults(func=cmd_bounds)

    p = subparsers.add_parser('export-dot', help="write a DOT drawing")
    p.add_argument('file')
    p.add_argument('--output')
    p.set_defaults(func=cmd_export_dot)

    p = subparsers.add_parser('sweep', help="run the worst-case sweep")
    p.add_argument('--families', nargs='+',
                   choices=[f for f, spec in construction.FAMILIES.items()
                            if spec[3] == 'tight'])
    p.add_argument('--orders', nargs='+')
    p.add_argument('--k-values', type=int, nargs='+')
    p.add_argument('--output', help="xlsx workbook to write")
    p.set_defaults(func=cmd_sweep)

    return parser

def main(argv=None):
    """
    Run the command-line interface and return the exit status.

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][
        min(args.verbose, 2)]
    logging.basicConfig(level=level,
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        outcome = args.func(args)
    except exact.BudgetExceededError as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_BUDGET
    except (connectivity.NotColorAvoidingError,
            matroid.NotCourteousError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_FAILS
    except (ValueError, IOError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_ERROR
    outcome.write(sys.stdout)
    return outcome.status
