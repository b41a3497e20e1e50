# -*- coding: UTF-8 -*-
"""
Module that contains colored graph classes and connectivity primitives.

"""

import collections

import networkx
import numpy

class DisjointSetUnion(object):
    """
    Union-find structure over the elements ``0, ..., n-1``.

    Uses path compression and union by rank. Instances are mutated by
    `find` and `union` and should not be shared between threads.

    Parameters
    ----------
    n : int
        Number of elements.

    Attributes
    ----------
    n : int
        Number of elements.
    n_components : int
        Current number of disjoint sets.

    Examples
    --------

    >>> dsu = DisjointSetUnion(4)
    >>> dsu.union(0, 1)
    True
    >>> dsu.union(1, 0)
    False
    >>> dsu.n_components
    3
    >>> dsu.components()
    [[0, 1], [2], [3]]

    """
    def __init__(self, n):
        if n < 0:
            raise ValueError("number of elements should be non-negative")
        self.n = n
        self.n_components = n
        self._parent = list(range(n))
        self._rank = [0]*n

    def find(self, a):
        """
        Return the representative of the set containing `a`.

        """
        root = a
        while self._parent[root] != root:
            root = self._parent[root]
        # Path compression
        while self._parent[a] != root:
            self._parent[a], a = root, self._parent[a]
        return root

    def union(self, a, b):
        """
        Merge the sets containing `a` and `b`.

        Returns
        -------
        bool
            True if `a` and `b` were in different sets before the call.

        """
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        self.n_components -= 1
        return True

    def connected(self, a, b):
        return self.find(a) == self.find(b)

    def labels(self):
        """
        Return a component label per element.

        Labels are dense integers numbered by the smallest element of each
        component.

        """
        labels = [-1]*self.n
        root_label = {}
        for a in range(self.n):
            root = self.find(a)
            if root not in root_label:
                root_label[root] = len(root_label)
            labels[a] = root_label[root]
        return labels

    def components(self):
        """
        Return the sets as sorted lists, ordered by their smallest element.

        """
        comps = collections.OrderedDict()
        for a in range(self.n):
            comps.setdefault(self.find(a), []).append(a)
        return list(comps.values())

class Partition(object):
    """
    Partition of a universe of vertices into disjoint, nonempty parts.

    Parameters
    ----------
    parts : iterable of iterables
        Parts of the partition. Each part is stored sorted, parts keep
        the order in which they are given.
    universe : iterable, optional
        Set that the parts should cover. If not specified, the union of
        the parts is used.

    Attributes
    ----------
    parts : tuple of tuples
        Parts of the partition.
    universe : frozenset
        Set covered by the parts.

    """
    def __init__(self, parts, universe=None):
        self.parts = tuple(tuple(sorted(p)) for p in parts)
        self._part_of = {}
        for i, part in enumerate(self.parts):
            if not part:
                raise ValueError("part {} is empty".format(i))
            for x in part:
                if x in self._part_of:
                    raise ValueError("element {} appears in parts {} and {}".\
                        format(x, self._part_of[x], i))
                self._part_of[x] = i
        if universe is None:
            self.universe = frozenset(self._part_of)
        else:
            self.universe = frozenset(universe)
            if self.universe != frozenset(self._part_of):
                missing = sorted(self.universe - frozenset(self._part_of))
                extra = sorted(frozenset(self._part_of) - self.universe)
                raise ValueError("parts do not cover the universe (missing "
                                 "{}, extra {})".format(missing, extra))

    @classmethod
    def from_labels(cls, labels):
        """
        Build a partition of ``range(len(labels))`` from per-element labels.

        Parts are ordered by their smallest element.

        """
        parts = collections.OrderedDict()
        for x, label in enumerate(labels):
            parts.setdefault(label, []).append(x)
        return cls(parts.values(), universe=range(len(labels)))

    def part_of(self, x):
        """
        Index of the part containing `x`.

        """
        return self._part_of[x]

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "Partition({})".format([list(p) for p in self.parts])

def _read_only(array):
    array.flags.writeable = False
    return array

class EdgeColoredGraph(object):
    """
    Undirected multigraph with an integer color on every edge.

    Instances are immutable. Edges are identified by their position in
    `edges`, which also defines the default processing order of every
    algorithm in this package.

    Parameters
    ----------
    n : int
        Number of vertices, labeled ``0, ..., n-1``.
    edges : iterable of (int, int, int)
        Edges as ``(u, v, c)`` triples. Parallel edges are allowed,
        self-loops are not.
    k : int, optional
        Declared number of colors. If not specified, one more than the
        largest color id, or zero for a graph without edges.
    color_labels : sequence of str, optional
        Original names of the colors ``0, ..., len(color_labels)-1``, if
        the graph was read from a file with named colors.

    Attributes
    ----------
    n : int
        Number of vertices.
    edges : tuple of tuples
        Edges as ``(u, v, c)`` triples.
    k : int
        Declared number of colors.
    color_labels : tuple or None
        Original color names.

    """
    def __init__(self, n, edges, k=None, color_labels=None):
        # Check number of vertices
        n = int(n)
        if n < 0:
            raise ValueError("number of vertices should be non-negative, "
                             "got {}".format(n))
        self.n = n
        # Check and store edges
        edge_list = []
        for e in edges:
            u, v, c = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge ({}, {}) has an endpoint outside "
                                 "[0, {})".format(u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex {}".format(u))
            if c < 0:
                raise ValueError("edge ({}, {}) has negative color {}".\
                    format(u, v, c))
            edge_list.append((u, v, c))
        self.edges = tuple(edge_list)
        self.edge_colors = _read_only(
            numpy.array([e[2] for e in self.edges], dtype=int))
        # Declared number of colors
        if k is None:
            k = int(self.edge_colors.max()) + 1 if self.edges else 0
        if k < 0:
            raise ValueError("number of colors should be non-negative")
        self.k = int(k)
        self.color_labels = None if color_labels is None \
            else tuple(color_labels)

    @property
    def m(self):
        """
        Number of edges.

        """
        return len(self.edges)

    @property
    def colors_used(self):
        """
        Sorted list of the colors that appear on at least one edge.

        """
        return sorted(set(self.edge_colors.tolist()))

    def subgraph(self, edge_ids):
        """
        Spanning subgraph with the edges in `edge_ids`, in that order.

        The declared number of colors is kept.

        """
        return EdgeColoredGraph(self.n,
                                [self.edges[i] for i in edge_ids],
                                k=self.k,
                                color_labels=self.color_labels)

    def to_networkx(self):
        """
        Convert to a ``networkx.MultiGraph``.

        Every edge carries its color in the ``color`` attribute and its
        index in this graph as its key.

        """
        nx_graph = networkx.MultiGraph()
        nx_graph.add_nodes_from(range(self.n))
        for i, (u, v, c) in enumerate(self.edges):
            nx_graph.add_edge(u, v, key=i, color=c)
        return nx_graph

    def __eq__(self, other):
        return isinstance(other, EdgeColoredGraph) and \
            (self.n, self.edges, self.k) == (other.n, other.edges, other.k)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.edges, self.k))

    def __repr__(self):
        return "EdgeColoredGraph(n={}, m={}, k={})".format(self.n,
                                                           self.m,
                                                           self.k)

class VertexColoredGraph(object):
    """
    Simple undirected graph with an integer color on every vertex.

    Instances are immutable. Edges are stored with their endpoints sorted
    and are identified by their position in `edges`.

    Parameters
    ----------
    n : int
        Number of vertices, labeled ``0, ..., n-1``.
    edges : iterable of (int, int)
        Edges as vertex pairs. Self-loops and parallel edges are rejected.
    colors : sequence of int
        Color of every vertex, length `n`.
    k : int, optional
        Declared number of colors. If not specified, one more than the
        largest color id, or zero for the empty graph.
    color_labels : sequence of str, optional
        Original names of the colors, if read from a file with named
        colors.

    Attributes
    ----------
    n : int
        Number of vertices.
    edges : tuple of tuples
        Edges as ``(u, v)`` pairs with ``u < v``.
    colors : numpy.ndarray
        Read-only array with the color of every vertex.
    k : int
        Declared number of colors.
    color_labels : tuple or None
        Original color names.

    """
    def __init__(self, n, edges, colors, k=None, color_labels=None):
        n = int(n)
        if n < 0:
            raise ValueError("number of vertices should be non-negative, "
                             "got {}".format(n))
        self.n = n
        # Colors
        colors = numpy.array(colors, dtype=int).reshape(-1)
        if len(colors) != n:
            raise ValueError("expected {} vertex colors, got {}".format(
                n, len(colors)))
        if (colors < 0).any():
            raise ValueError("vertex colors should be non-negative")
        self.colors = _read_only(colors)
        # Edges
        edge_list = []
        seen = set()
        for e in edges:
            u, v = (int(x) for x in e[:2])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge ({}, {}) has an endpoint outside "
                                 "[0, {})".format(u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex {}".format(u))
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ValueError("parallel edge ({}, {})".format(*pair))
            seen.add(pair)
            edge_list.append(pair)
        self.edges = tuple(edge_list)
        # Declared number of colors
        if k is None:
            k = int(self.colors.max()) + 1 if n else 0
        if k < 0:
            raise ValueError("number of colors should be non-negative")
        self.k = int(k)
        self.color_labels = None if color_labels is None \
            else tuple(color_labels)
        # Adjacency lists
        adjacency = [[] for v in range(n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(a) for a in adjacency)
        self._edge_set = frozenset(seen)

    @property
    def m(self):
        """
        Number of edges.

        """
        return len(self.edges)

    @property
    def colors_used(self):
        """
        Sorted list of the colors of at least one vertex.

        """
        return sorted(set(self.colors.tolist()))

    def neighbors(self, v):
        """
        Neighbors of vertex `v`.

        """
        return self._adjacency[v]

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self._edge_set

    def subgraph(self, edge_ids):
        """
        Spanning subgraph with the edges in `edge_ids`, in that order.

        """
        return VertexColoredGraph(self.n,
                                  [self.edges[i] for i in edge_ids],
                                  self.colors,
                                  k=self.k,
                                  color_labels=self.color_labels)

    def to_networkx(self):
        """
        Convert to a ``networkx.Graph``.

        Vertex colors are stored in the ``color`` node attribute, edge
        indices in the ``index`` edge attribute.

        """
        nx_graph = networkx.Graph()
        for v in range(self.n):
            nx_graph.add_node(v, color=int(self.colors[v]))
        for i, (u, v) in enumerate(self.edges):
            nx_graph.add_edge(u, v, index=i)
        return nx_graph

    def __eq__(self, other):
        return isinstance(other, VertexColoredGraph) and \
            (self.n, self.edges, self.k) == (other.n, other.edges, other.k) \
            and numpy.array_equal(self.colors, other.colors)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.edges, self.k, tuple(self.colors.tolist())))

    def __repr__(self):
        return "VertexColoredGraph(n={}, m={}, k={})".format(self.n,
                                                             self.m,
                                                             self.k)

def delete_color_edges(g, c):
    """
    Remove all edges of color `c` from an edge-colored graph.

    Parameters
    ----------
    g : EdgeColoredGraph
        Input graph, not modified.
    c : int
        Color to remove.

    Returns
    -------
    EdgeColoredGraph
        Graph with the same vertices, declared colors and the remaining
        edges in their original order.

    """
    return EdgeColoredGraph(g.n,
                            [e for e in g.edges if e[2] != c],
                            k=g.k,
                            color_labels=g.color_labels)

def delete_color_vertices(g, c):
    """
    Remove all vertices of color `c` from a vertex-colored graph.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph, not modified.
    c : int
        Color to remove.

    Returns
    -------
    VertexColoredGraph
        Subgraph induced by the vertices of color other than `c`,
        relabeled ``0, ..., n'-1`` preserving their relative order.
    dict
        Map from old vertex index to new vertex index, for the kept
        vertices.

    """
    index_map = collections.OrderedDict()
    for v in range(g.n):
        if g.colors[v] != c:
            index_map[v] = len(index_map)
    edges = [(index_map[u], index_map[v]) for u, v in g.edges
             if u in index_map and v in index_map]
    colors = [g.colors[v] for v in index_map]
    h = VertexColoredGraph(len(index_map),
                           edges,
                           colors,
                           k=g.k,
                           color_labels=g.color_labels)
    return h, dict(index_map)

def is_connected(n, edges):
    """
    Determine whether a graph has at most one connected component.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable
        Edges. Only the first two entries of every edge (its endpoints)
        are used, so both ``(u, v)`` and ``(u, v, c)`` tuples work.

    Returns
    -------
    bool
        True if the graph is connected. Graphs with zero or one vertex
        are connected.

    """
    if n <= 1:
        return True
    dsu = DisjointSetUnion(n)
    for e in edges:
        dsu.union(e[0], e[1])
        if dsu.n_components == 1:
            return True
    return dsu.n_components == 1

def connected_components(n, edges):
    """
    Connected components of a graph as a Partition of ``range(n)``.

    """
    dsu = DisjointSetUnion(n)
    for e in edges:
        dsu.union(e[0], e[1])
    return Partition.from_labels(dsu.labels())

def resolve_order(order, size):
    """
    Normalize an order specification to an explicit permutation.

    Parameters
    ----------
    order : None, str or sequence of int
        ``None`` or ``'asc'`` for ascending index order, ``'desc'`` for
        descending order, ``'random:<seed>'`` for a seeded random
        permutation, or an explicit permutation of ``range(size)``.
    size : int
        Number of items to order.

    Returns
    -------
    list of int
        Permutation of ``range(size)``.

    """
    if order is None:
        return list(range(size))
    if isinstance(order, str):
        if order == 'asc':
            return list(range(size))
        elif order == 'desc':
            return list(range(size - 1, -1, -1))
        elif order.startswith('random:'):
            try:
                seed = int(order.split(':', 1)[1])
            except ValueError:
                raise ValueError("random order seed should be an integer, "
                                 "got {}".format(order))
            random_state = numpy.random.RandomState(seed)
            return random_state.permutation(size).tolist()
        else:
            raise ValueError("order {} not recognized".format(order))
    # Explicit permutation
    order = [int(i) for i in order]
    if sorted(order) != list(range(size)):
        raise ValueError("order should be a permutation of range({})".\
            format(size))
    return order

def spanning_tree(g, order=None, dsu=None):
    """
    Select a spanning forest of a graph by a union-find scan.

    Edges are scanned in `order` and kept whenever they join two different
    components, so the result is the first acceptable spanning forest
    with respect to `order`.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Input graph.
    order : optional
        Edge order specification, see `resolve_order`.
    dsu : DisjointSetUnion, optional
        Union-find structure over the vertices of `g` to start from.
        Vertices already joined in `dsu` are treated as connected. The
        structure is updated in place.

    Returns
    -------
    list of int
        Indices of the selected edges, in selection order.

    """
    if dsu is None:
        dsu = DisjointSetUnion(g.n)
    selected = []
    for i in resolve_order(order, g.m):
        if dsu.n_components <= 1:
            break
        if dsu.union(g.edges[i][0], g.edges[i][1]):
            selected.append(i)
    return selected

def contract_partition(g, w, order=None):
    """
    Contract every part of a vertex partition into a single vertex.

    Two contracted vertices are joined by an edge of color ``c`` if and
    only if some edge of color ``c`` joins the corresponding parts.

    Parameters
    ----------
    g : EdgeColoredGraph
        Input graph.
    w : Partition
        Partition of ``range(g.n)``. Part ``i`` becomes vertex ``i``.
    order : optional
        Edge order specification, see `resolve_order`. Contracted edges
        appear in the order of their first representative, which is also
        the representative recorded in the back-map.

    Returns
    -------
    EdgeColoredGraph
        Contracted graph.
    list of int
        Back-map: index in `g` of the representative of every edge of the
        contracted graph.

    """
    if w.universe != frozenset(range(g.n)):
        raise ValueError("partition does not cover the {} vertices of the "
                         "graph".format(g.n))
    edges = []
    back_map = []
    seen = set()
    for i in resolve_order(order, g.m):
        u, v, c = g.edges[i]
        pu, pv = w.part_of(u), w.part_of(v)
        if pu == pv:
            continue
        key = (min(pu, pv), max(pu, pv), c)
        if key in seen:
            continue
        seen.add(key)
        edges.append((pu, pv, c))
        back_map.append(i)
    h = EdgeColoredGraph(len(w), edges, k=g.k, color_labels=g.color_labels)
    return h, back_map

def is_canonically_colored(g):
    """
    Determine whether a graph is colored with exactly its `k` colors.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Input graph.

    Returns
    -------
    bool
        True if every color in ``[0, g.k)`` is used and no larger color
        id appears.

    """
    return g.colors_used == list(range(g.k))
