# -*- coding: UTF-8 -*-
"""
Module that contains exact solvers for small instances.

Optima are found by enumerating subsets by increasing size, and
lexicographically within a size. The first subset with the property is
returned, so results are deterministic.

"""

import collections
import itertools
import logging

import numpy
import pandas

from coloravoid import connectivity
from coloravoid import construction
from coloravoid import graph
from coloravoid import matroid
from coloravoid import sampling
from coloravoid.math import min_edges_bound, min_elements_bound

logger = logging.getLogger(__name__)

# Largest number of edges or elements searched unless configured otherwise
DEFAULT_BUDGET = 20

class BudgetExceededError(ValueError):
    """
    Raised when an instance is too large for exhaustive search.

    Attributes
    ----------
    size : int
        Number of edges or elements of the instance.
    budget : int
        Largest size accepted.

    """
    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super(BudgetExceededError, self).__init__(
            "instance has {} elements, exhaustive search is limited to {}".\
                format(size, budget))

class ExactResult(object):
    """
    Optimum found by exhaustive search.

    Attributes
    ----------
    optimum_size : int
        Size of a smallest subset with the property.
    witness : tuple of int
        Lexicographically first smallest subset with the property.
    instances_searched : int
        Number of subsets on which the property was evaluated.

    """
    def __init__(self, optimum_size, witness, instances_searched):
        self.optimum_size = optimum_size
        self.witness = tuple(witness)
        self.instances_searched = instances_searched

    def __repr__(self):
        return "ExactResult(optimum_size={}, witness={})".format(
            self.optimum_size, self.witness)

class ExactSolver(object):
    """
    Exhaustive minimum search over spanning subgraphs and restrictions.

    Parameters
    ----------
    budget : int, optional
        Largest number of edges (or ground set elements) searched.
        Larger instances are refused with `BudgetExceededError`.
    prune : bool, optional
        Whether to start from the closed-form lower bound and skip
        candidates failing cheap necessary conditions.

    Attributes
    ----------
    budget : int
    prune : bool

    """
    def __init__(self, budget=DEFAULT_BUDGET, prune=True):
        self.budget = budget
        self.prune = prune

    def _check_budget(self, size):
        if size > self.budget:
            raise BudgetExceededError(size, self.budget)

    def min_subgraph(self, g, notion):
        """
        Smallest spanning subgraph of `g` with property `notion`.

        Parameters
        ----------
        g : EdgeColoredGraph or VertexColoredGraph
            Graph with the property.
        notion : {'eca', 'vca', 'ivca'}
            Property.

        Returns
        -------
        ExactResult

        """
        notion = notion.lower()
        connectivity.require(g, notion)
        self._check_budget(g.m)
        if g.n <= 1:
            return ExactResult(0, (), 1)

        # Edge masks of every colored subgraph and their spanning needs
        if notion == 'eca':
            keep = numpy.array([g.edge_colors != c for c in g.colors_used])
            need = numpy.full(len(keep), g.n - 1)
        else:
            keep = []
            need = []
            for c in g.colors_used:
                kept_vertices = g.colors != c
                keep.append([kept_vertices[u] and kept_vertices[v]
                             for u, v in g.edges])
                need.append(kept_vertices.sum() - 1)
            keep = numpy.array(keep, dtype=bool).reshape(-1, g.m)
            need = numpy.array(need)
        endpoints = numpy.array([e[:2] for e in g.edges], dtype=int)

        def feasible(subset):
            idx = list(subset)
            if (keep[:, idx].sum(axis=1) < need).any():
                return False
            return len(numpy.unique(endpoints[idx])) == g.n

        start = 0
        if self.prune:
            start = min_edges_bound(notion, len(g.colors_used), g.n)
        searched = 0
        for size in range(start, g.m + 1):
            logger.info("searching subgraphs with %d edges", size)
            for subset in itertools.combinations(range(g.m), size):
                if self.prune and not feasible(subset):
                    continue
                searched += 1
                if connectivity.check(g.subgraph(subset), notion).holds:
                    return ExactResult(size, subset, searched)
        raise RuntimeError("no subgraph found, the input lost its property")

    def min_restriction(self, m):
        """
        Smallest courteously colored rank-preserving restriction of `m`.

        Parameters
        ----------
        m : ColoredMatroid
            Courteously colored matroid.

        Returns
        -------
        ExactResult

        """
        violation = matroid.courteous_violation(m)
        if violation is not None:
            raise matroid.NotCourteousError(violation)
        self._check_budget(m.ground_size)
        r = matroid.rank(m, m.ground)
        if r == 0:
            return ExactResult(0, (), 1)
        start = 0
        if self.prune:
            start = min_elements_bound(len(m.colors_used), r)
        searched = 0
        for size in range(start, m.ground_size + 1):
            logger.info("searching restrictions with %d elements", size)
            for subset in itertools.combinations(m.ground, size):
                searched += 1
                if matroid.is_good_restriction(m, subset):
                    return ExactResult(size, subset, searched)
        raise RuntimeError("no restriction found, the input lost its "
                           "property")

def min_subgraph_exact(g, notion, budget=DEFAULT_BUDGET, prune=True):
    """
    Smallest spanning subgraph of `g` with property `notion`.

    See `ExactSolver.min_subgraph`.

    """
    return ExactSolver(budget=budget, prune=prune).min_subgraph(g, notion)

def min_restriction_exact(m, budget=DEFAULT_BUDGET, prune=True):
    """
    Smallest courteously colored rank-preserving restriction of `m`.

    See `ExactSolver.min_restriction`.

    """
    return ExactSolver(budget=budget, prune=prune).min_restriction(m)

class LowerBoundReport(object):
    """
    Exact optima of sampled instances compared with a closed-form bound.

    Attributes
    ----------
    table : pandas.DataFrame
        One row per instance with columns ``Source`` ('random' or
        'generator'), ``Size``, ``Optimum``, ``Bound`` and ``Holds``.
        Random instances hold if their optimum is at least the bound, the
        generator instance if it equals the bound.

    """
    def __init__(self, table):
        self.table = table

    @property
    def holds(self):
        return bool(self.table['Holds'].all())

def _generator_instance(variant, k, n_or_r):
    try:
        if variant == 'eca':
            return construction.gen_eca_min(k, n_or_r - 1)
        elif variant == 'vca':
            return construction.gen_vca_min(k, n_or_r)
        elif variant == 'ivca':
            return construction.gen_ivca_min(k, n_or_r)
        else:
            return matroid.GraphicMatroid(
                construction.gen_eca_min(k, n_or_r))
    except ValueError:
        return None

def verify_lower_bound(variant,
                       k,
                       n_or_r,
                       samples=20,
                       seed=0,
                       budget=DEFAULT_BUDGET):
    """
    Compare exact optima with the closed-form lower bound.

    Parameters
    ----------
    variant : {'eca', 'vca', 'ivca', 'matroid'}
        Notion. For 'matroid', graphic matroids of rank `n_or_r` are
        sampled.
    k : int
        Number of colors.
    n_or_r : int
        Number of vertices, or rank for 'matroid'.
    samples : int, optional
        Number of random instances.
    seed : int, optional
        Random seed.
    budget : int, optional
        Largest instance searched exhaustively. Random instances are
        drawn within it, the generator instance is skipped if larger.

    Returns
    -------
    LowerBoundReport

    """
    variant = variant.lower()
    bound = min_edges_bound(variant, k, n_or_r)
    solver = ExactSolver(budget=budget)
    random_state = numpy.random.RandomState(seed)

    def optimum(instance):
        if variant == 'matroid':
            return instance.ground_size, \
                solver.min_restriction(instance).optimum_size
        return instance.m, solver.min_subgraph(instance, variant).optimum_size

    rows = []
    for sample in range(samples):
        if variant == 'matroid':
            instance = sampling.sample_courteous_graphic(
                n_or_r, k, seed=random_state, max_edges=budget)
        else:
            instance = sampling.sample_valid(variant, n_or_r, k,
                                             seed=random_state,
                                             max_edges=budget)
        size, value = optimum(instance)
        rows.append(collections.OrderedDict([
            ('Source', 'random'),
            ('Size', size),
            ('Optimum', value),
            ('Bound', bound),
            ('Holds', value >= bound)]))

    instance = _generator_instance(variant, k, n_or_r)
    size = None if instance is None else \
        (instance.ground_size if variant == 'matroid' else instance.m)
    if size is not None and size <= budget:
        size, value = optimum(instance)
        rows.append(collections.OrderedDict([
            ('Source', 'generator'),
            ('Size', size),
            ('Optimum', value),
            ('Bound', bound),
            ('Holds', value == bound)]))

    table = pandas.DataFrame(rows,
                             columns=['Source', 'Size', 'Optimum', 'Bound',
                                      'Holds'])
    return LowerBoundReport(table)
