# -*- coding: UTF-8 -*-
"""
Module that contains the color-avoiding spanning subgraph algorithms.

All sparsifiers follow the same scheme. A spanning tree is selected
first. Then, for every color ``c``, the components of the selection with
color ``c`` removed are contracted within the input with color ``c``
removed, and a spanning tree of the contraction is added back.

"""

import collections
import logging

import pandas

from coloravoid import connectivity
from coloravoid import graph

logger = logging.getLogger(__name__)

class SparsifyResult(object):
    """
    Spanning subgraph selected by a sparsifier.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Input graph.
    selected_edges : list of int
        Indices of the selected edges of `g`, in selection order.
    phase_tags : dict
        Phase that selected every edge.

    Attributes
    ----------
    graph : EdgeColoredGraph or VertexColoredGraph
        Input graph.
    selected_edges : list of int
        Selected edge indices, in selection order.
    phase_tags : OrderedDict
        Phase tag of every selected edge: ``'phase1-tree'``,
        ``'phase1-neighbor'``, ``'phase2-tree'``,
        ``'phase2-repair-color-<c>'``, ``'phase3-repair-color-<c>'`` or
        ``'whole-graph'``.

    """
    def __init__(self, g, selected_edges, phase_tags):
        self.graph = g
        self.selected_edges = list(selected_edges)
        self.phase_tags = collections.OrderedDict(
            (i, phase_tags[i]) for i in self.selected_edges)

    def __len__(self):
        return len(self.selected_edges)

    @property
    def phase_counts(self):
        """
        Number of selected edges per phase tag, in order of first use.

        """
        counts = collections.OrderedDict()
        for tag in self.phase_tags.values():
            counts[tag] = counts.get(tag, 0) + 1
        return counts

    @property
    def stats(self):
        """
        Edge count and per-phase counts.

        """
        return collections.OrderedDict([
            ('edges_selected', len(self.selected_edges)),
            ('phase_counts', self.phase_counts)])

    def edges_with_tag(self, prefix):
        """
        Selected edges whose phase tag starts with `prefix`.

        """
        return [i for i, tag in self.phase_tags.items()
                if tag.startswith(prefix)]

    def subgraph(self):
        """
        The selected spanning subgraph, edges in index order.

        """
        return self.graph.subgraph(sorted(self.selected_edges))

    @property
    def table(self):
        """
        Selected edges as a DataFrame, one row per edge.

        """
        rows = []
        for i, tag in self.phase_tags.items():
            row = collections.OrderedDict()
            row['Edge'] = i
            row['U'] = self.graph.edges[i][0]
            row['V'] = self.graph.edges[i][1]
            if isinstance(self.graph, graph.EdgeColoredGraph):
                row['Color'] = self.graph.edges[i][2]
            else:
                row['Color U'] = int(self.graph.colors[row['U']])
                row['Color V'] = int(self.graph.colors[row['V']])
            row['Phase'] = tag
            rows.append(row)
        columns = ['Edge', 'U', 'V'] + \
            (['Color'] if isinstance(self.graph, graph.EdgeColoredGraph)
             else ['Color U', 'Color V']) + ['Phase']
        return pandas.DataFrame(rows, columns=columns)

    def __repr__(self):
        return "SparsifyResult(edges_selected={})".format(len(self))

def _repair(g, selected, perm, keep_edge, keep_vertex=None):
    """
    Edges reconnecting the selection within a subgraph of `g`.

    The subgraph is made of the vertices passing `keep_vertex` and the
    edges passing `keep_edge`. The components of the selected edges in
    that subgraph are contracted, and the edges of a spanning tree of the
    contraction, scanned in `perm`, are returned as indices of `g`.

    """
    if keep_vertex is None:
        vertices = list(range(g.n))
    else:
        vertices = [v for v in range(g.n) if keep_vertex[v]]
    index = dict((v, i) for i, v in enumerate(vertices))
    dsu = graph.DisjointSetUnion(len(vertices))
    for i in selected:
        if keep_edge(i):
            dsu.union(index[g.edges[i][0]], index[g.edges[i][1]])
    if dsu.n_components <= 1:
        return []

    partition = graph.Partition(dsu.components(),
                                universe=range(len(vertices)))
    edge_ids = [i for i in perm if keep_edge(i)]
    if isinstance(g, graph.EdgeColoredGraph):
        local_edges = [(index[g.edges[i][0]], index[g.edges[i][1]],
                        g.edges[i][2]) for i in edge_ids]
    else:
        local_edges = [(index[g.edges[i][0]], index[g.edges[i][1]], 0)
                       for i in edge_ids]
    local = graph.EdgeColoredGraph(len(vertices), local_edges)
    contracted, back_map = graph.contract_partition(local, partition)
    tree = graph.spanning_tree(contracted)
    if len(tree) < len(partition) - 1:
        raise ValueError("subgraph cannot be reconnected")
    return [edge_ids[back_map[j]] for j in tree]

def _colors(g, color_order):
    if color_order is None:
        return g.colors_used
    return list(color_order)

def eca_sparsify(g, order=None, color_order=None):
    """
    Find an edge-color-avoiding connected spanning subgraph.

    The output has at most ``2(n-1)`` edges and is a
    ``2(k-1)/k``-approximation of the smallest one.

    Parameters
    ----------
    g : EdgeColoredGraph
        Edge-color-avoiding connected input graph.
    order : optional
        Edge order used by every spanning tree scan, see
        `coloravoid.graph.resolve_order`.
    color_order : sequence of int, optional
        Order in which colors are repaired. Default is ascending.

    Returns
    -------
    SparsifyResult

    Raises
    ------
    NotColorAvoidingError
        If `g` is not edge-color-avoiding connected.

    """
    connectivity.require(g, 'eca')
    perm = graph.resolve_order(order, g.m)
    # Phase 1: spanning tree
    selected = graph.spanning_tree(g, perm)
    phase_tags = dict((i, 'phase1-tree') for i in selected)
    # Phase 2: per-color repair
    for c in _colors(g, color_order):
        added = _repair(g, selected, perm,
                        keep_edge=lambda i: g.edges[i][2] != c)
        for i in added:
            phase_tags[i] = 'phase2-repair-color-{}'.format(c)
        selected.extend(added)
        logger.debug("color %d: %d edges added", c, len(added))
    return SparsifyResult(g, selected, phase_tags)

def _vertex_repairs(g, selected, phase_tags, perm, color_order, tag):
    for c in _colors(g, color_order):
        keep_vertex = (g.colors != c).tolist()
        added = _repair(
            g, selected, perm,
            keep_edge=lambda i: keep_vertex[g.edges[i][0]] and \
                keep_vertex[g.edges[i][1]],
            keep_vertex=keep_vertex)
        for i in added:
            phase_tags[i] = '{}-repair-color-{}'.format(tag, c)
        selected.extend(added)
        logger.debug("color %d: %d edges added", c, len(added))

def vca_sparsify(g, order=None, color_order=None):
    """
    Find a vertex-color-avoiding connected spanning subgraph.

    The output has at most ``2n-3`` edges when at least two colors are
    used and is a 2-approximation of the smallest one.

    Parameters
    ----------
    g : VertexColoredGraph
        Vertex-color-avoiding connected input graph.
    order : optional
        Edge order used by every spanning tree scan.
    color_order : sequence of int, optional
        Order in which colors are repaired. Default is ascending.

    Returns
    -------
    SparsifyResult

    """
    connectivity.require(g, 'vca')
    perm = graph.resolve_order(order, g.m)
    selected = graph.spanning_tree(g, perm)
    phase_tags = dict((i, 'phase1-tree') for i in selected)
    _vertex_repairs(g, selected, phase_tags, perm, color_order, 'phase2')
    return SparsifyResult(g, selected, phase_tags)

def ivca_sparsify(g, order=None, vertex_order=None, color_order=None):
    """
    Find an internally vertex-color-avoiding connected spanning subgraph.

    With a single color the input is complete and returned whole.
    Otherwise, every vertex first gets an edge to a neighbor of another
    color, the selection is completed to a connected subgraph, and every
    color is repaired as in `vca_sparsify`. The output has at most
    ``2n-3`` edges and is a ``2(2k-2)/(2k-1)``-approximation.

    Parameters
    ----------
    g : VertexColoredGraph
        Internally vertex-color-avoiding connected input graph.
    order : optional
        Edge order. Also decides which edge to a differently colored
        neighbor a vertex takes in the first phase.
    vertex_order : optional
        Order in which vertices are visited in the first phase, see
        `coloravoid.graph.resolve_order`.
    color_order : sequence of int, optional
        Order in which colors are repaired. Default is ascending.

    Returns
    -------
    SparsifyResult

    """
    connectivity.require(g, 'ivca')
    if len(g.colors_used) <= 1:
        return SparsifyResult(g,
                              range(g.m),
                              dict((i, 'whole-graph') for i in range(g.m)))

    perm = graph.resolve_order(order, g.m)
    incident = [[] for v in range(g.n)]
    for i in perm:
        u, v = g.edges[i]
        incident[u].append(i)
        incident[v].append(i)
    colors = g.colors.tolist()

    # Phase 1: a differently colored neighbor for every vertex
    selected = []
    phase_tags = {}
    has_other = [False]*g.n
    for v in graph.resolve_order(vertex_order, g.n):
        if has_other[v]:
            continue
        for i in incident[v]:
            w = g.edges[i][0] if g.edges[i][1] == v else g.edges[i][1]
            if colors[w] != colors[v]:
                selected.append(i)
                phase_tags[i] = 'phase1-neighbor'
                has_other[v] = has_other[w] = True
                break
    logger.debug("phase 1: %d edges", len(selected))

    # Phase 2: connect
    added = _repair(g, selected, perm, keep_edge=lambda i: True)
    for i in added:
        phase_tags[i] = 'phase2-tree'
    selected.extend(added)

    # Phase 3: per-color repair
    _vertex_repairs(g, selected, phase_tags, perm, color_order, 'phase3')
    return SparsifyResult(g, selected, phase_tags)

def sparsify(g, notion, order=None, **kwargs):
    """
    Dispatch to the sparsifier of `notion` ('eca', 'vca' or 'ivca').

    """
    notion = notion.lower()
    if notion == 'eca':
        return eca_sparsify(g, order=order, **kwargs)
    elif notion == 'vca':
        return vca_sparsify(g, order=order, **kwargs)
    elif notion == 'ivca':
        return ivca_sparsify(g, order=order, **kwargs)
    raise ValueError("notion {} not recognized".format(notion))

def prune_subgraph(g, selected, notion, order=None):
    """
    Greedily deselect edges while the subgraph keeps its property.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Input graph.
    selected : iterable of int
        Indices of edges of `g` forming a spanning subgraph with the
        property.
    notion : {'eca', 'vca', 'ivca'}
        Property to keep.
    order : optional
        Order in which edges are considered: ``None`` or ``'desc'`` for
        descending index, ``'asc'``, or an explicit sequence of the
        selected edges.

    Returns
    -------
    list of int
        Remaining edges, in the order of `selected`. The subgraph is
        deletion-minimal: removing any single edge breaks the property.

    """
    selected = list(selected)
    connectivity.require(g.subgraph(selected), notion)
    if order is None or order == 'desc':
        scan = sorted(selected, reverse=True)
    elif order == 'asc':
        scan = sorted(selected)
    else:
        scan = list(order)
        if sorted(scan) != sorted(selected):
            raise ValueError("order should be a permutation of the selected "
                             "edges")
    current = set(selected)
    for i in scan:
        candidate = [j for j in selected if j in current and j != i]
        if connectivity.check(g.subgraph(candidate), notion).holds:
            current.discard(i)
    return [i for i in selected if i in current]

def greedy_minimal_subgraph(g, notion, order=None):
    """
    Delete edges one by one while the graph keeps its property.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Input graph with the property.
    notion : {'eca', 'vca', 'ivca'}
        Property to keep.
    order : optional
        See `prune_subgraph`.

    Returns
    -------
    list of int
        Deletion-minimal set of remaining edges.

    """
    return prune_subgraph(g, range(g.m), notion, order=order)

def vca_optimal_k2(g):
    """
    Optimal vertex-color-avoiding connected spanning subgraph for two
    colors.

    Both color classes induce connected subgraphs, so a spanning tree of
    each class plus one edge between the classes has ``n-1`` edges.

    Parameters
    ----------
    g : VertexColoredGraph
        Vertex-color-avoiding connected graph using exactly two colors.

    Returns
    -------
    list of int
        Indices of the ``n-1`` selected edges: the tree of the smaller
        color, the tree of the larger color and the connecting edge.

    """
    colors_used = g.colors_used
    if len(colors_used) != 2:
        raise ValueError("expected a graph with 2 colors, got {}".format(
            len(colors_used)))
    connectivity.require(g, 'vca')
    colors = g.colors.tolist()
    selected = []
    for c in colors_used:
        dsu = graph.DisjointSetUnion(g.n)
        n_class = colors.count(c)
        tree = []
        for i, (u, v) in enumerate(g.edges):
            if colors[u] == c and colors[v] == c and dsu.union(u, v):
                tree.append(i)
        if len(tree) != n_class - 1:
            raise ValueError("color {} induces a disconnected subgraph".\
                format(c))
        selected.extend(tree)
    cross = next(i for i, (u, v) in enumerate(g.edges)
                 if colors[u] != colors[v])
    selected.append(cross)
    return selected
