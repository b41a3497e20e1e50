# -*- coding: UTF-8 -*-
"""
Module that contains seeded random generators of colored instances.

"""

import logging

import numpy

from coloravoid import connectivity
from coloravoid import graph
from coloravoid import matroid

logger = logging.getLogger(__name__)

def _random_state(seed):
    if isinstance(seed, numpy.random.RandomState):
        return seed
    return numpy.random.RandomState(seed)

def _all_colors(n, k, random_state):
    """
    Random coloring of `n` items using each of the `k` colors.

    """
    colors = numpy.concatenate([numpy.arange(k),
                                random_state.randint(k, size=n - k)])
    return random_state.permutation(colors)

def random_edge_colored_graph(n, k, m, seed=None):
    """
    Random multigraph with `m` edges colored with `k` colors.

    Endpoints and colors are drawn uniformly. When ``m >= k`` every color
    is used.

    """
    random_state = _random_state(seed)
    if n < 2 and m > 0:
        raise ValueError("edges need at least 2 vertices")
    edges = []
    for c in _all_colors(m, k, random_state) if m >= k else \
            random_state.randint(k, size=m):
        u, v = random_state.choice(n, size=2, replace=False)
        edges.append((u, v, c))
    return graph.EdgeColoredGraph(n, edges, k=k)

def random_vertex_colored_graph(n, k, p, seed=None):
    """
    Random simple graph with edge probability `p`, every vertex colored
    and all `k` colors used.

    """
    random_state = _random_state(seed)
    if n < k:
        raise ValueError("{} vertices cannot carry {} colors".format(n, k))
    colors = _all_colors(n, k, random_state)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if random_state.rand() < p]
    return graph.VertexColoredGraph(n, edges, colors, k=k)

def sample_valid(notion, n, k, seed=None, max_edges=None, max_tries=2000):
    """
    Random graph with exactly `k` colors satisfying `notion`.

    Parameters
    ----------
    notion : {'eca', 'vca', 'ivca'}
        Required property.
    n : int
        Number of vertices.
    k : int
        Number of colors, all of them used.
    seed : int or numpy.random.RandomState, optional
        Source of randomness.
    max_edges : int, optional
        Largest number of edges accepted.
    max_tries : int, optional
        Number of draws before giving up.

    Returns
    -------
    EdgeColoredGraph or VertexColoredGraph

    Raises
    ------
    RuntimeError
        If no valid graph was drawn within `max_tries`.

    """
    random_state = _random_state(seed)
    if notion == 'ivca' and k == 1:
        # Only complete graphs qualify
        g = graph.VertexColoredGraph(
            n, [(u, v) for u in range(n) for v in range(u + 1, n)], [0]*n)
        if max_edges is not None and g.m > max_edges:
            raise RuntimeError("the complete graph on {} vertices has more "
                               "than {} edges".format(n, max_edges))
        return g
    for attempt in range(max_tries):
        if notion == 'eca':
            low = max(k, n - 1)
            high = max(low, max_edges if max_edges is not None else 2*n)
            m = random_state.randint(low, high + 1)
            g = random_edge_colored_graph(n, k, m, random_state)
        else:
            p = random_state.uniform(0.3, 1.0)
            g = random_vertex_colored_graph(n, k, p, random_state)
            if max_edges is not None and g.m > max_edges:
                continue
        if not graph.is_canonically_colored(g):
            continue
        if connectivity.check(g, notion).holds:
            logger.debug("valid %s instance after %d draws",
                         notion, attempt + 1)
            return g
    raise RuntimeError("no {} connected graph with n={}, k={} found in {} "
                       "draws".format(notion.upper(), n, k, max_tries))

def sample_courteous_graphic(r, k, seed=None, max_edges=None, max_tries=2000):
    """
    Random courteously colored graphic matroid of rank `r` with `k`
    colors.

    Built from an edge-color-avoiding connected graph on ``r+1``
    vertices, whose graphic matroid is courteously colored.

    """
    g = sample_valid('eca', r + 1, k, seed=seed, max_edges=max_edges,
                     max_tries=max_tries)
    return matroid.GraphicMatroid(g)
