# -*- coding: UTF-8 -*-
"""
Module that contains colored matroid classes and restriction algorithms.

Matroids are accessed only through an independence oracle. A colored
matroid is courteously colored if deleting the elements of any single
color does not change its rank. The algorithms here find small subsets
whose restriction is courteously colored and rank-preserving.

"""

import collections
import itertools
import logging

import numpy

from coloravoid import graph

logger = logging.getLogger(__name__)

# Largest ground set on which the matroid axioms are checked exhaustively
AXIOM_CHECK_MAX_SIZE = 10

class NotCourteousError(ValueError):
    """
    Raised when an operation needs a courteously colored matroid.

    Attributes
    ----------
    color : int
        Color whose deletion decreases the rank.

    """
    def __init__(self, color):
        self.color = color
        super(NotCourteousError, self).__init__(
            "matroid is not courteously colored: deleting color {} decreases"
            " the rank".format(color))

class ColoredMatroid(object):
    """
    Matroid with colored elements, given by an independence oracle.

    Parameters
    ----------
    ground_size : int
        Number of elements. The ground set is ``0, ..., ground_size-1``.
    colors : sequence of int
        Color of every element.
    oracle : callable
        Function receiving a frozenset of elements and returning whether
        it is independent. It should satisfy the matroid axioms, which
        can be checked with `validate_axioms` on small ground sets.

    Attributes
    ----------
    ground_size : int
        Number of elements.
    colors : numpy.ndarray
        Read-only array of element colors.
    n_oracle_calls : int
        Number of oracle calls made so far through `is_independent`.

    """
    def __init__(self, ground_size, colors, oracle):
        ground_size = int(ground_size)
        if ground_size < 0:
            raise ValueError("ground set size should be non-negative")
        colors = numpy.array(colors, dtype=int).reshape(-1)
        if len(colors) != ground_size:
            raise ValueError("expected {} element colors, got {}".format(
                ground_size, len(colors)))
        if (colors < 0).any():
            raise ValueError("element colors should be non-negative")
        colors.flags.writeable = False
        self.ground_size = ground_size
        self.colors = colors
        self._oracle = oracle
        # Initialize oracle call counter
        self.n_oracle_calls = 0

    @property
    def ground(self):
        return range(self.ground_size)

    @property
    def colors_used(self):
        """
        Sorted list of the colors of at least one element.

        """
        return sorted(set(self.colors.tolist()))

    def is_independent(self, x):
        """
        Query the independence oracle on the subset `x`.

        """
        self.n_oracle_calls += 1
        return bool(self._oracle(frozenset(x)))

    def delete_color(self, c):
        """
        Elements whose color is not `c`, in index order.

        """
        return [s for s in self.ground if self.colors[s] != c]

    def __repr__(self):
        return "{}(ground_size={})".format(self.__class__.__name__,
                                           self.ground_size)

class GraphicMatroid(ColoredMatroid):
    """
    Graphic matroid of an edge-colored graph.

    Elements are the edges of the graph, colored as the edges. A set of
    edges is independent if it forms a forest.

    Parameters
    ----------
    g : EdgeColoredGraph
        Underlying graph.

    Attributes
    ----------
    graph : EdgeColoredGraph
        Underlying graph.

    """
    def __init__(self, g):
        self.graph = g

        def is_forest(x):
            dsu = graph.DisjointSetUnion(g.n)
            for i in x:
                u, v, _ = g.edges[i]
                if not dsu.union(u, v):
                    return False
            return True

        super(GraphicMatroid, self).__init__(ground_size=g.m,
                                             colors=g.edge_colors,
                                             oracle=is_forest)

class UniformMatroid(ColoredMatroid):
    """
    Colored uniform matroid ``U_{n,k}``.

    Parameters
    ----------
    n : int
        Number of elements.
    threshold : int
        Largest size of an independent set.
    colors : sequence of int
        Color of every element.
    k : int, optional
        Declared number of colors. Default is one more than the largest
        color.
    color_labels : sequence of str, optional
        Original color names, indexed by color id.

    Attributes
    ----------
    threshold : int
    k : int
    color_labels : tuple or None

    """
    def __init__(self, n, threshold, colors, k=None, color_labels=None):
        if threshold < 0:
            raise ValueError("threshold should be non-negative, got {}".\
                format(threshold))
        self.threshold = int(threshold)
        super(UniformMatroid, self).__init__(
            ground_size=n,
            colors=colors,
            oracle=lambda x: len(x) <= self.threshold)
        if k is None:
            k = int(self.colors.max()) + 1 if self.ground_size else 0
        if k < 0:
            raise ValueError("number of colors should be non-negative")
        self.k = int(k)
        self.color_labels = None if color_labels is None \
            else tuple(color_labels)

class RestrictionResult(object):
    """
    Subset of a matroid ground set selected by a restriction algorithm.

    Attributes
    ----------
    selected : list of int
        Selected elements, in selection order.
    phase_tags : OrderedDict
        Phase that selected every element: ``'basis'`` or
        ``'repair-color-<c>'``.
    oracle_calls : int
        Independence oracle calls spent by the algorithm.
    deselected : list of int
        Elements removed by the optional pruning phase.

    """
    def __init__(self, selected, phase_tags, oracle_calls, deselected=()):
        self.selected = list(selected)
        self.phase_tags = collections.OrderedDict(
            (s, phase_tags[s]) for s in self.selected)
        self.oracle_calls = oracle_calls
        self.deselected = list(deselected)

    @property
    def phase_counts(self):
        """
        Number of selected elements per phase tag.

        """
        return collections.OrderedDict(
            collections.Counter(self.phase_tags.values()).most_common())

    def __len__(self):
        return len(self.selected)

    def __repr__(self):
        return "RestrictionResult(selected={})".format(self.selected)

def _greedy(m, candidates, start=()):
    """
    Extend the independent set `start` greedily with `candidates`.

    """
    independent = list(start)
    for s in candidates:
        if m.is_independent(independent + [s]):
            independent.append(s)
    return independent

def _ordered(x, order, ground_size):
    members = set(x)
    return [s for s in graph.resolve_order(order, ground_size)
            if s in members]

def rank(m, x, order=None):
    """
    Rank of the subset `x`, computed greedily.

    Parameters
    ----------
    m : ColoredMatroid
        Matroid.
    x : iterable of int
        Subset of the ground set.
    order : optional
        Order in which the greedy algorithm scans the elements, see
        `coloravoid.graph.resolve_order`. The rank does not depend on
        it.

    Returns
    -------
    int
        Size of a maximal independent subset of `x`. Uses ``|x|`` oracle
        calls.

    """
    x = list(x)
    for s in x:
        if not 0 <= s < m.ground_size:
            raise ValueError("element {} outside the ground set".format(s))
    return len(_greedy(m, _ordered(x, order, m.ground_size)))

def courteous_violation(m):
    """
    First color whose deletion decreases the rank of `m`, or None.

    """
    r = rank(m, m.ground)
    for c in m.colors_used:
        if rank(m, m.delete_color(c)) < r:
            return c
    return None

def is_courteous(m):
    """
    Determine whether a colored matroid is courteously colored.

    Only colors actually used are considered, since deleting an unused
    color changes nothing.

    """
    return courteous_violation(m) is None

def uniform_is_courteous(n, k_u, colors):
    """
    Closed-form courteousness test for a colored uniform matroid.

    ``U_{n,k_u}`` is courteously colored iff no color is assigned to
    more than ``n - k_u`` elements.

    Parameters
    ----------
    n : int
        Number of elements.
    k_u : int
        Threshold of the uniform matroid.
    colors : sequence of int
        Color of every element.

    Returns
    -------
    bool

    """
    colors = numpy.asarray(colors, dtype=int)
    if len(colors) != n:
        raise ValueError("expected {} element colors, got {}".format(
            n, len(colors)))
    if n == 0:
        return True
    return numpy.bincount(colors).max() <= n - min(k_u, n)

def increase_rank(m, t, ground=None, order=None, variant='weighted'):
    """
    Extend `t` to a set of full rank.

    Parameters
    ----------
    m : ColoredMatroid
        Matroid.
    t : iterable of int
        Elements to extend.
    ground : sequence of int, optional
        Elements that may be added, in scan order. Should contain `t`.
        Restricting the ground set to the elements of a color other than
        ``c`` runs the subroutine on the matroid with color ``c`` deleted.
        If not specified, the whole ground set in `order`.
    order : optional
        Scan order when `ground` is not specified.
    variant : {'weighted', 'scan'}, optional
        ``'weighted'`` builds a minimum-weight basis greedily with weight
        0 on `t` and 1 elsewhere, and adds exactly ``r - r(t)`` elements
        with ``O(|S|)`` oracle calls. ``'scan'`` adds every element that
        increases the rank of the current set, recomputing ranks with
        ``O(|S|^2)`` oracle calls.

    Returns
    -------
    list of int
        The elements of `t` followed by the added elements, in the order
        they were added.

    """
    if ground is None:
        ground = graph.resolve_order(order, m.ground_size)
    ground = list(ground)
    t = list(t)
    t_set = set(t)
    if not t_set <= set(ground):
        raise ValueError("elements {} are outside the ground set".format(
            sorted(t_set - set(ground))))

    if variant == 'weighted':
        t_first = [s for s in ground if s in t_set]
        others = [s for s in ground if s not in t_set]
        basis = _greedy(m, t_first + others)
        added = [s for s in basis if s not in t_set]
    elif variant == 'scan':
        target = rank(m, ground)
        current = list(t)
        current_rank = rank(m, current)
        added = []
        for s in ground:
            if current_rank >= target:
                break
            if s in t_set:
                continue
            if rank(m, current + [s]) > current_rank:
                current.append(s)
                added.append(s)
                current_rank += 1
    else:
        raise ValueError("variant {} not recognized".format(variant))
    return t + added

def _is_good_restriction(m, x, r, colors):
    """
    Whether `x` has rank `r` and keeps it after deleting any color.

    """
    if rank(m, x) != r:
        return False
    for c in colors:
        if rank(m, [s for s in x if m.colors[s] != c]) != r:
            return False
    return True

def is_good_restriction(m, x):
    """
    Whether the restriction to `x` is courteously colored and
    rank-preserving.

    """
    return _is_good_restriction(m, list(x), rank(m, m.ground), m.colors_used)

def prune_restriction(m, selected, order=None):
    """
    Greedily deselect elements while the restriction stays good.

    An element is deselected if the restriction to the remaining elements
    is still courteously colored and rank-preserving.

    Parameters
    ----------
    m : ColoredMatroid
        Matroid.
    selected : iterable of int
        Elements whose restriction is courteously colored and
        rank-preserving.
    order : optional
        Order in which elements are considered: ``None`` or ``'desc'``
        for descending element index, ``'asc'``, or an explicit sequence
        of the selected elements.

    Returns
    -------
    list of int
        Remaining elements, in the order of `selected`. Removing any
        single one of them breaks the property.

    """
    selected = list(selected)
    if order is None or order == 'desc':
        scan = sorted(selected, reverse=True)
    elif order == 'asc':
        scan = sorted(selected)
    else:
        scan = list(order)
        if sorted(scan) != sorted(selected):
            raise ValueError("order should be a permutation of the selected "
                             "elements")
    r = rank(m, m.ground)
    colors = m.colors_used
    current = set(selected)
    for s in scan:
        candidate = [x for x in selected if x in current and x != s]
        if _is_good_restriction(m, candidate, r, colors):
            current.discard(s)
            logger.debug("deselected element %d", s)
    return [s for s in selected if s in current]

def courteous_restriction(m,
                          order=None,
                          color_order=None,
                          variant='weighted',
                          prune=False):
    """
    Find a small courteously colored rank-preserving restriction.

    First selects a basis. Then, for every color ``c`` whose deletion
    decreases the rank of the selection, extends the selection minus
    color ``c`` to full rank within the elements of color other than
    ``c``. The selection has at most twice the rank of `m` elements, and
    is a ``2(k-1)/k``-approximation of the smallest such restriction.
    Uses ``O(|C| |S|^2)`` oracle calls for ``|C|`` colors and ``|S|``
    elements.

    Parameters
    ----------
    m : ColoredMatroid
        Courteously colored matroid with a nonempty ground set.
    order : optional
        Element order used to choose the basis and the repairs, see
        `coloravoid.graph.resolve_order`.
    color_order : sequence of int, optional
        Order in which colors are repaired. Default is ascending.
    variant : {'weighted', 'scan'}, optional
        Variant of `increase_rank` used for the repairs.
    prune : bool, optional
        Whether to deselect redundant elements afterwards with
        `prune_restriction`. Elements are considered in the reverse of
        `order`.

    Returns
    -------
    RestrictionResult

    Raises
    ------
    NotCourteousError
        If `m` is not courteously colored.

    """
    if m.ground_size == 0:
        raise ValueError("ground set should not be empty")
    calls_start = m.n_oracle_calls
    violation = courteous_violation(m)
    if violation is not None:
        raise NotCourteousError(violation)

    perm = graph.resolve_order(order, m.ground_size)
    # Phase 1: basis
    selected = _greedy(m, perm)
    r = len(selected)
    phase_tags = dict((s, 'basis') for s in selected)
    logger.debug("basis of rank %d selected", r)

    # Phase 2: repair every color
    colors = m.colors_used if color_order is None else list(color_order)
    for c in colors:
        t_c = [s for s in selected if m.colors[s] != c]
        if rank(m, t_c) == r:
            continue
        ground_c = [s for s in perm if m.colors[s] != c]
        extended = increase_rank(m, t_c, ground=ground_c, variant=variant)
        selected_set = set(selected)
        added = [s for s in extended if s not in selected_set]
        for s in added:
            phase_tags[s] = 'repair-color-{}'.format(c)
        selected.extend(added)
        logger.debug("color %d repaired with %d elements", c, len(added))

    deselected = []
    if prune:
        selected_set = set(selected)
        scan = [s for s in reversed(perm) if s in selected_set]
        kept = prune_restriction(m, selected, order=scan)
        deselected = [s for s in selected if s not in set(kept)]
        selected = kept

    return RestrictionResult(selected,
                             phase_tags,
                             oracle_calls=m.n_oracle_calls - calls_start,
                             deselected=deselected)

def greedy_minimal_restriction(m, order=None):
    """
    Delete elements one by one while the restriction stays good.

    Starts from the whole ground set and scans it once in `order`
    (descending index by default). Since supersets of a good restriction
    are good, one scan leaves a deletion-minimal set.

    Parameters
    ----------
    m : ColoredMatroid
        Courteously colored matroid.
    order : optional
        See `prune_restriction`.

    Returns
    -------
    list of int
        Remaining elements, in index order.

    """
    violation = courteous_violation(m)
    if violation is not None:
        raise NotCourteousError(violation)
    return prune_restriction(m, list(m.ground), order=order)

def validate_axioms(m):
    """
    Check the independence axioms exhaustively on a small matroid.

    Checks that the empty set is independent, that subsets of independent
    sets are independent, and the exchange property.

    Raises
    ------
    ValueError
        If the ground set has more than ``AXIOM_CHECK_MAX_SIZE`` elements,
        or an axiom fails.

    """
    if m.ground_size > AXIOM_CHECK_MAX_SIZE:
        raise ValueError("axioms are only checked on ground sets of up to "
                         "{} elements".format(AXIOM_CHECK_MAX_SIZE))
    independent = set()
    for size in range(m.ground_size + 1):
        for x in itertools.combinations(m.ground, size):
            if m.is_independent(x):
                independent.add(frozenset(x))

    if frozenset() not in independent:
        raise ValueError("the empty set is not independent")
    for x in independent:
        for s in x:
            if x - {s} not in independent:
                raise ValueError("independent set {} has a dependent subset"
                                 " {}".format(sorted(x), sorted(x - {s})))
    for x in independent:
        for y in independent:
            if len(x) < len(y) and \
                    not any(x | {s} in independent for s in y - x):
                raise ValueError("exchange fails for {} and {}".format(
                    sorted(x), sorted(y)))
    return True
