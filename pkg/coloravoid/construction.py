# -*- coding: UTF-8 -*-
"""
Module that contains generators of extremal color-avoiding graphs.

Three kinds of families are generated for every connectivity notion:

* minimum graphs, with the least possible number of edges for their
  number of vertices and colors,
* tight-ratio graphs, containing an optimum subgraph and an adversarial
  subgraph that the sparsifier returns under a suitable edge order,
* maximal graphs, deletion-minimal graphs with the largest possible number
  of edges.

"""

import collections
import logging

from coloravoid import graph
from coloravoid.math import min_edges_bound

logger = logging.getLogger(__name__)

class ConstructionSpec(object):
    """
    Description of a generated instance.

    Attributes
    ----------
    family : str
        Family id, e.g. ``'eca_tight_ratio'``.
    params : OrderedDict
        Parameters of the family. The ladder families also record their
        derived ``m`` and ``l``.
    expected_edges : int or None
        Closed-form number of edges of the whole graph, if known.
    expected_property : str
        Notion the graph satisfies: 'eca', 'vca' or 'ivca'.
    expected_certificates : OrderedDict
        Closed-form size of every certificate.

    """
    def __init__(self,
                 family,
                 params,
                 expected_edges,
                 expected_property,
                 expected_certificates=None):
        self.family = family
        self.params = collections.OrderedDict(params)
        self.expected_edges = expected_edges
        self.expected_property = expected_property
        self.expected_certificates = collections.OrderedDict(
            expected_certificates or [])

    def __repr__(self):
        return "ConstructionSpec({}, {})".format(
            self.family,
            ", ".join("{}={}".format(*kv) for kv in self.params.items()))

class Construction(object):
    """
    Generated graph together with its certificates.

    Attributes
    ----------
    graph : EdgeColoredGraph or VertexColoredGraph
        Generated graph.
    spec : ConstructionSpec
        Description of the instance.
    certificates : OrderedDict
        Named edge subsets of `graph`: ``'optimum'`` is a smallest
        spanning subgraph with the property, ``'adversarial'`` the output
        of the sparsifier under `edge_order` and `vertex_order`.
    edge_order : list of int or None
        Edge order that drives the sparsifier to the adversarial
        certificate.
    vertex_order : list of int or None
        Vertex order for the first phase of `ivca_sparsify`.

    """
    def __init__(self,
                 graph,
                 spec,
                 certificates=None,
                 edge_order=None,
                 vertex_order=None):
        self.graph = graph
        self.spec = spec
        self.certificates = collections.OrderedDict(certificates or [])
        self.edge_order = None if edge_order is None else list(edge_order)
        self.vertex_order = None if vertex_order is None \
            else list(vertex_order)

    def certificate_graph(self, name):
        """
        Spanning subgraph formed by the certificate `name`.

        """
        return self.graph.subgraph(sorted(self.certificates[name]))

    def __repr__(self):
        return "Construction({!r})".format(self.spec)

class _SimpleEdgeList(object):
    """
    Edge list of a simple graph that returns the index of repeated edges.

    """
    def __init__(self):
        self.edges = []
        self._index = {}

    def add(self, u, v):
        key = (min(u, v), max(u, v))
        if key not in self._index:
            self._index[key] = len(self.edges)
            self.edges.append(key)
        return self._index[key]

def gen_eca_min(k, r):
    """
    Edge-color-avoiding connected graph with the fewest edges.

    The graph has vertices ``0, ..., r``. For ``i < k-1``, color ``i``
    is used on the path edges ``(j, j+1)`` with ``j = i (mod k-1)``, and
    color ``k-1`` on the edges ``(j, min(j+k-1, r))`` with
    ``j = 0 (mod k-1)``. The graph has ``r + ceil(r/(k-1))`` edges and
    may contain one pair of parallel edges.

    Parameters
    ----------
    k : int
        Number of colors, at least 2.
    r : int
        Rank of the graphic matroid, i.e. number of vertices minus one.
        At least ``k-1``.

    Returns
    -------
    EdgeColoredGraph

    """
    if k < 2:
        raise ValueError("k should be at least 2, got {}".format(k))
    if r < k - 1:
        raise ValueError("r should be at least k-1 = {}, got {}".format(
            k - 1, r))
    edges = []
    for i in range(k - 1):
        for j in range(i, r, k - 1):
            edges.append((j, j + 1, i))
    for j in range(0, r, k - 1):
        edges.append((j, min(j + k - 1, r), k - 1))
    return graph.EdgeColoredGraph(r + 1, edges, k=k)

def gen_eca_tight_ratio(k, n):
    """
    Edge-colored graph on which the sparsifier can be ``2(k-1)/k`` off.

    Every path edge ``(j, j+1)`` appears twice, with colors
    ``j mod (k-1)`` and ``(j+1) mod (k-1)``, and color ``k-1`` is used on
    the edges ``(j, j+k-1)`` with ``j = 0 (mod k-1)``. The optimum uses
    the first copy of every path edge plus the color ``k-1`` edges, with
    ``k(n-1)/(k-1)`` edges. The adversarial subgraph is the doubled path,
    with ``2(n-1)`` edges.

    Graph edges come in this order: first copies by color, color ``k-1``,
    second copies by color.

    Parameters
    ----------
    k : int
        Number of colors, at least 3. With two colors both copies of a
        path edge would share their color.
    n : int
        Number of vertices, with ``n-1`` divisible by ``k-1``.

    Returns
    -------
    Construction

    """
    if k < 3:
        raise ValueError("k should be at least 3, got {}".format(k))
    if n < k or (n - 1) % (k - 1):
        raise ValueError("n-1 should be a positive multiple of k-1 = {}, "
                         "got n = {}".format(k - 1, n))
    q = k - 1
    edges = []
    first = []
    for i in range(q):
        first.append([])
        for j in range(i, n - 1, q):
            first[i].append(len(edges))
            edges.append((j, j + 1, i))
    long_edges = []
    for j in range(0, n - 1, q):
        long_edges.append(len(edges))
        edges.append((j, j + q, k - 1))
    second = []
    for i in range(q):
        second.append([])
        for j in range(n - 1):
            if (j + 1) % q == i:
                second[i].append(len(edges))
                edges.append((j, j + 1, i))

    optimum = sum(first, []) + long_edges
    adversarial = sum(first, []) + sum(second, [])
    spec = ConstructionSpec(
        'eca_tight_ratio',
        [('k', k), ('n', n)],
        expected_edges=2*(n - 1) + (n - 1)//q,
        expected_property='eca',
        expected_certificates=[('optimum', k*(n - 1)//q),
                               ('adversarial', 2*(n - 1))])
    return Construction(graph.EdgeColoredGraph(n, edges, k=k),
                        spec,
                        certificates=[('optimum', optimum),
                                      ('adversarial', adversarial)],
                        edge_order=adversarial + long_edges)

def gen_eca_maximal(k, n):
    """
    Deletion-minimal edge-color-avoiding connected graph with ``2(n-1)``
    edges.

    Every path edge ``(j, j+1)`` appears twice, with colors ``j mod k``
    and ``(j+1) mod k``. Removing either copy and then the color of the
    other one disconnects the path.

    Parameters
    ----------
    k : int
        Number of colors, at least 2.
    n : int
        Number of vertices, at least `k`.

    Returns
    -------
    EdgeColoredGraph

    """
    if k < 2:
        raise ValueError("k should be at least 2, got {}".format(k))
    if n < k:
        raise ValueError("n should be at least k = {}, got {}".format(k, n))
    edges = []
    for i in range(k):
        edges.extend((j, j + 1, i) for j in range(i, n - 1, k))
    for i in range(k):
        edges.extend((j, j + 1, i) for j in range(n - 1) if (j + 1) % k == i)
    return graph.EdgeColoredGraph(n, edges, k=k)

def gen_vca_min(k, n):
    """
    Vertex-color-avoiding connected graph with the fewest edges.

    With one or two colors, a path whose vertices share a color except,
    for two colors, the leaf ``0``. With ``k >= 3`` colors, a cycle whose
    vertex ``i`` has color ``min(i, k-1)``.

    Parameters
    ----------
    k : int
        Number of colors.
    n : int
        Number of vertices, at least `k` (at least 3 for the cycle).

    Returns
    -------
    VertexColoredGraph

    """
    if k < 1:
        raise ValueError("k should be positive, got {}".format(k))
    if n < max(k, 1):
        raise ValueError("n should be at least {}, got {}".format(
            max(k, 1), n))
    if k <= 2:
        colors = [0]*n
        if k == 2:
            colors[0] = 1
        edges = [(j, j + 1) for j in range(n - 1)]
    else:
        colors = [min(i, k - 1) for i in range(n)]
        edges = [(j, (j + 1) % n) for j in range(n)]
    return graph.VertexColoredGraph(n, edges, colors, k=k)

def _path_and_chords(sequence):
    """
    Path edges and distance-2 chords along a vertex sequence.

    """
    path = [(sequence[j], sequence[j + 1]) for j in range(len(sequence) - 1)]
    chords = [(sequence[j], sequence[j + 2])
              for j in range(len(sequence) - 2)]
    return path, chords

def _tight_construction(family,
                        params,
                        n,
                        colors,
                        k,
                        optimum_edges,
                        sequence,
                        notion,
                        optimum_size):
    """
    Assemble a tight-ratio construction.

    The graph is the union of `optimum_edges` and the path plus
    distance-2 chords along `sequence`. The edge order lists path edges,
    then chords, then the remaining edges.

    """
    edge_list = _SimpleEdgeList()
    optimum = [edge_list.add(u, v) for u, v in optimum_edges]
    path, chords = _path_and_chords(sequence)
    path_ids = [edge_list.add(u, v) for u, v in path]
    chord_ids = [edge_list.add(u, v) for u, v in chords]
    adversarial = path_ids + chord_ids
    in_adversarial = set(adversarial)
    edge_order = adversarial + [i for i in range(len(edge_list.edges))
                                if i not in in_adversarial]
    g = graph.VertexColoredGraph(n, edge_list.edges, colors, k=k)
    spec = ConstructionSpec(
        family,
        params,
        expected_edges=None,
        expected_property=notion,
        expected_certificates=[('optimum', optimum_size),
                               ('adversarial', 2*n - 3)])
    return Construction(g,
                        spec,
                        certificates=[('optimum', optimum),
                                      ('adversarial', adversarial)],
                        edge_order=edge_order,
                        vertex_order=list(sequence[1:]) + [sequence[0]])

def gen_vca_tight_ratio(k, n):
    """
    Vertex-colored graph on which the vertex sparsifier can be 2 off.

    Vertex ``j`` has color ``j mod k``. The adversarial subgraph is the
    path ``0, 1, ..., n-1`` plus all chords ``(j, j+2)``, with ``2n-3``
    edges. The optimum is, for two colors, the chords plus the edge
    ``(0, 1)``, and for more colors a Hamiltonian cycle visiting the
    color classes one after the other.

    Parameters
    ----------
    k : int
        Number of colors, at least 2.
    n : int
        Number of vertices, at least 4 for two colors and at least
        ``max(k, 3)`` otherwise.

    Returns
    -------
    Construction

    """
    if k < 2:
        raise ValueError("k should be at least 2, got {}".format(k))
    min_n = 4 if k == 2 else max(k, 3)
    if n < min_n:
        raise ValueError("n should be at least {}, got {}".format(min_n, n))
    colors = [j % k for j in range(n)]
    if k == 2:
        optimum_edges = [(0, 1)] + [(j, j + 2) for j in range(n - 2)]
    else:
        cycle = sorted(range(n), key=lambda j: (j % k, j))
        optimum_edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    return _tight_construction('vca_tight_ratio',
                               [('k', k), ('n', n)],
                               n,
                               colors,
                               k,
                               optimum_edges,
                               list(range(n)),
                               'vca',
                               min_edges_bound('vca', k, n))

def gen_vca_maximal_k3(n):
    """
    Deletion-minimal vertex-color-avoiding connected graph with three
    colors and ``2n-3`` edges.

    The path ``0, ..., n-1`` plus all chords ``(j, j+2)``, vertex ``j``
    colored ``j mod 3``.

    """
    if n < 4:
        raise ValueError("n should be at least 4, got {}".format(n))
    path, chords = _path_and_chords(list(range(n)))
    return graph.VertexColoredGraph(n,
                                    path + chords,
                                    [j % 3 for j in range(n)],
                                    k=3)

def _ladder(k, n):
    """
    Vertices and edges of the minimum internally color-avoiding graph.

    Writes ``n = (2k-2)m + l + 3`` with ``0 <= l < 2k-2``. Vertices are
    labeled ``(i, j)`` by row ``1 <= i <= 2k-2`` and column ``j``. Row 1
    has color 0, row ``2k-2`` color ``k-1`` and row ``i`` in between
    color ``i // 2``.

    Returns
    -------
    labels : OrderedDict
        Map from ``(i, j)`` label to vertex index.
    colors : list of int
        Color of every vertex.
    edges : list of tuples
        Edges as label pairs.
    m, l : int
        Derived parameters.

    """
    rows = 2*k - 2
    m, l = divmod(n - 3, rows)

    labels = collections.OrderedDict()
    for j in range(1, m + 1):
        for i in range(1, rows + 1):
            labels[(i, j)] = len(labels)
    if l == 0:
        extra = [(1, m + 1), (1, m + 2), (rows, m + 1)]
    else:
        extra = [(i, m + 1) for i in range(1, l + 1)]
        extra += [(1, m + 2), (rows, m + 1), (rows, m + 2)]
    for label in extra:
        labels[label] = len(labels)

    def row_color(i):
        if i == 1:
            return 0
        elif i == rows:
            return k - 1
        return i//2

    colors = [row_color(i) for i, j in labels]

    edges = [((1, j), (1, j + 1)) for j in range(1, m + 2)]
    last_row_end = m if l == 0 else m + 1
    edges += [((rows, j), (rows, j + 1)) for j in range(1, last_row_end + 1)]
    edges += [((i, j), (i + 1, j)) for i in range(1, rows)
              for j in range(1, m + 1)]
    if l == 0:
        edges += [((1, m + 1), (rows, m + 1)), ((1, m + 2), (rows, m + 1))]
    else:
        edges += [((i, m + 1), (i + 1, m + 1)) for i in range(1, l)]
        edges += [((l, m + 1), (rows, m + 1)), ((1, m + 2), (rows, m + 2))]
    return labels, colors, edges, m, l

def gen_ivca_min(k, n):
    """
    Internally vertex-color-avoiding connected graph with the fewest
    edges.

    With one color, the complete graph. Otherwise a ladder of ``2k-2``
    rows, with ``ceil((2k-1)n/(2k-2) - k/(k-1))`` edges.

    Parameters
    ----------
    k : int
        Number of colors.
    n : int
        Number of vertices, at least ``2k+1`` when ``k >= 2``.

    Returns
    -------
    VertexColoredGraph

    """
    if k < 1:
        raise ValueError("k should be positive, got {}".format(k))
    if k == 1:
        if n < 1:
            raise ValueError("n should be positive, got {}".format(n))
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return graph.VertexColoredGraph(n, edges, [0]*n, k=1)
    if n < 2*k + 1:
        raise ValueError("n should be at least 2k+1 = {}, got {}".format(
            2*k + 1, n))
    labels, colors, edges, m, l = _ladder(k, n)
    return graph.VertexColoredGraph(
        n,
        [(labels[a], labels[b]) for a, b in edges],
        colors,
        k=k)

def _ivca_sequence(k, m):
    """
    Ladder labels ordered so that consecutive vertices differ in color.

    """
    rows = 2*k - 2
    n = rows*m + 3
    if k == 2:
        # Alternate rows 1 and 2
        top = [(1, j) for j in range(1, m + 3)]
        bottom = [(2, j) for j in range(1, m + 2)]
        sequence = []
        for a, b in zip(top, bottom):
            sequence += [a, b]
        return sequence + [top[-1]]

    q = k - 1
    w = [None]*n
    for j in range(m):
        w[2*j*q] = (1, j + 1)
        for i in range(1, k - 1):
            w[i + 2*j*q] = (2*i, j + 1)
        w[(2*j + 1)*q] = (rows, j + 1)
    for j in range(m - 1):
        for i in range(1, k - 1):
            w[i + (2*j + 1)*q] = (2*i + 1, j + 1)
    w[(2*m - 1)*q + 1] = (1, m + 2)
    for i in range(1, k - 1):
        w[i + (2*m - 1)*q + 1] = (2*i + 1, m)
    w[2*m*q + 1] = (1, m + 1)
    w[2*m*q + 2] = (rows, m + 1)
    return w

def gen_ivca_tight_ratio(k, n):
    """
    Vertex-colored graph on which the internal sparsifier can be
    ``2(2k-2)/(2k-1)`` off.

    The graph is the union of the minimum ladder of `gen_ivca_min` and of
    the path plus distance-2 chords along an ordering of its vertices in
    which consecutive vertices differ in color.

    Parameters
    ----------
    k : int
        Number of colors, at least 2.
    n : int
        Number of vertices, with ``n-3`` divisible by ``2k-2`` and
        ``n >= 4k-1``.

    Returns
    -------
    Construction

    """
    if k < 2:
        raise ValueError("k should be at least 2, got {}".format(k))
    if n < 4*k - 1 or (n - 3) % (2*k - 2):
        raise ValueError("n-3 should be a multiple of 2k-2 = {} and n at "
                         "least 4k-1 = {}, got n = {}".format(
                            2*k - 2, 4*k - 1, n))
    labels, colors, edges, m, l = _ladder(k, n)
    sequence = _ivca_sequence(k, m)
    if sorted(sequence) != sorted(labels):
        raise RuntimeError("vertex sequence is not a permutation")
    sequence = [labels[label] for label in sequence]
    # Any three consecutive vertices have distinct colors when k >= 4. With
    # three colors, rows 2 and 3 share a color and only neighbors differ.
    window = 3 if k >= 4 else 2
    for start in range(len(sequence) - window + 1):
        block = sequence[start:start + window]
        if len(set(colors[v] for v in block)) < window:
            raise RuntimeError("vertices {} in the sequence share a "
                               "color".format(block))
    construction = _tight_construction(
        'ivca_tight_ratio',
        [('k', k), ('n', n), ('m', m), ('l', l)],
        n,
        colors,
        k,
        [(labels[a], labels[b]) for a, b in edges],
        sequence,
        'ivca',
        min_edges_bound('ivca', k, n))
    return construction

def gen_ivca_maximal_k2(n):
    """
    Deletion-minimal internally vertex-color-avoiding connected graph with
    two colors and ``2n-3`` edges.

    Vertex 0 has color 0 and is joined to every other vertex, the others
    have color 1 and form the path ``1, ..., n-1``.

    """
    if n < 3:
        raise ValueError("n should be at least 3, got {}".format(n))
    edges = [(0, j) for j in range(1, n)]
    edges += [(j, j + 1) for j in range(1, n - 1)]
    return graph.VertexColoredGraph(n, edges, [0] + [1]*(n - 1), k=2)

# Family id: (generator, parameter names, notion, kind, expected edges)
# Kind is 'min' (the graph is optimal), 'maximal' (deletion-minimal) or
# 'tight' (generator returns a Construction).
FAMILIES = collections.OrderedDict([
    ('eca_min', (gen_eca_min, ('k', 'r'), 'eca', 'min',
                 lambda k, r: min_edges_bound('eca', k, r + 1))),
    ('eca_tight_ratio', (gen_eca_tight_ratio, ('k', 'n'), 'eca', 'tight',
                         None)),
    ('eca_maximal', (gen_eca_maximal, ('k', 'n'), 'eca', 'maximal',
                     lambda k, n: 2*(n - 1))),
    ('vca_min', (gen_vca_min, ('k', 'n'), 'vca', 'min',
                 lambda k, n: min_edges_bound('vca', k, n))),
    ('vca_tight_ratio', (gen_vca_tight_ratio, ('k', 'n'), 'vca', 'tight',
                         None)),
    ('vca_maximal_k3', (gen_vca_maximal_k3, ('n',), 'vca', 'maximal',
                        lambda n: 2*n - 3)),
    ('ivca_min', (gen_ivca_min, ('k', 'n'), 'ivca', 'min',
                  lambda k, n: min_edges_bound('ivca', k, n))),
    ('ivca_tight_ratio', (gen_ivca_tight_ratio, ('k', 'n'), 'ivca', 'tight',
                          None)),
    ('ivca_maximal_k2', (gen_ivca_maximal_k2, ('n',), 'ivca', 'maximal',
                         lambda n: 2*n - 3)),
    ('ivca_maximal_k3', (gen_vca_maximal_k3, ('n',), 'ivca', 'maximal',
                         lambda n: 2*n - 3)),
])

def construct(family, *params):
    """
    Generate an instance of `family` as a Construction.

    Parameters
    ----------
    family : str
        Key of `FAMILIES`.
    *params : int
        Parameters of the family, in the order of its parameter names.

    Returns
    -------
    Construction
        Minimum families carry the whole graph as ``'optimum'``
        certificate. Maximal families carry no certificate.

    """
    if family not in FAMILIES:
        raise ValueError("family {} not recognized, should be one of {}".\
            format(family, ", ".join(FAMILIES)))
    generator, names, notion, kind, expected = FAMILIES[family]
    if len(params) != len(names):
        raise ValueError("family {} takes parameters {}, got {}".format(
            family, ", ".join(names), len(params)))
    params = [int(p) for p in params]
    result = generator(*params)
    built = result.graph if kind == 'tight' else result
    logger.debug("built %s%s: %d vertices, %d edges", family, tuple(params),
                 built.n, built.m)
    if kind == 'tight':
        return result
    spec = ConstructionSpec(family,
                            zip(names, params),
                            expected_edges=expected(*params),
                            expected_property=notion)
    certificates = []
    if kind == 'min':
        certificates.append(('optimum', list(range(result.m))))
        spec.expected_certificates['optimum'] = spec.expected_edges
    return Construction(result, spec, certificates=certificates)
