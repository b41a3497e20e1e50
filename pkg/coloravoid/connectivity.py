# -*- coding: UTF-8 -*-
"""
Module that contains the color-avoiding connectivity checkers.

Three notions are recognized:

* edge-color-avoiding (ECA) connectivity of edge-colored graphs: the
  graph stays connected after removing the edges of any single color.
* vertex-color-avoiding (VCA) connectivity of vertex-colored graphs: for
  every color ``c``, every pair of vertices is joined by a path, and by a
  path without color-``c`` vertices unless one of them has color ``c``.
* internally vertex-color-avoiding (IVCA) connectivity: for every color
  ``c``, every pair of vertices is joined by a path whose internal
  vertices avoid color ``c``.

Each notion has an efficient checker. The vertex notions also have a
definitional checker that searches every pair and color literally, used
to cross-validate the efficient ones on small graphs.

"""

import collections
import logging

from coloravoid import graph

logger = logging.getLogger(__name__)

# Largest graph accepted by the definitional checkers unless forced
DEFINITIONAL_MAX_VERTICES = 12

NOTIONS = ('eca', 'vca', 'ivca')

class CaVerdict(object):
    """
    Result of a color-avoiding connectivity check.

    Parameters
    ----------
    holds : bool
        Whether the property holds.
    witness : tuple, optional
        ``(color, u, v)`` triple certifying a failure: vertices ``u < v``
        are not (internally) color-avoiding connected for ``color``. It is
        the lexicographically smallest such triple. ``color`` is None when
        the graph has no colors at all and is disconnected. Required when
        `holds` is False.

    Attributes
    ----------
    holds : bool
    witness : tuple or None

    """
    def __init__(self, holds, witness=None):
        holds = bool(holds)
        if not holds and witness is None:
            raise ValueError("a failing verdict needs a witness")
        if holds and witness is not None:
            raise ValueError("a holding verdict cannot have a witness")
        self.holds = holds
        self.witness = None if witness is None else tuple(witness)

    @property
    def color(self):
        """
        Color of the witness, or None.

        """
        return None if self.witness is None else self.witness[0]

    @property
    def pair(self):
        """
        Vertex pair of the witness, or None.

        """
        return None if self.witness is None else self.witness[1:]

    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__

    def __eq__(self, other):
        return isinstance(other, CaVerdict) and \
            (self.holds, self.witness) == (other.holds, other.witness)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        if self.holds:
            return "CaVerdict(holds=True)"
        return "CaVerdict(holds=False, witness={})".format(self.witness)

class NotColorAvoidingError(ValueError):
    """
    Raised when an input lacks the color-avoiding property an operation
    requires.

    Attributes
    ----------
    notion : str
        Notion that failed ('eca', 'vca' or 'ivca').
    verdict : CaVerdict
        Failing verdict, with its witness.

    """
    def __init__(self, notion, verdict):
        self.notion = notion
        self.verdict = verdict
        color, u, v = verdict.witness
        super(NotColorAvoidingError, self).__init__(
            "input is not {} connected: vertices {} and {} are separated "
            "when avoiding color {}".format(notion.upper(), u, v, color))

def _palette(g):
    """
    Colors to quantify over: the declared colors plus any stray color id.

    """
    return sorted(set(range(g.k)) | set(g.colors_used))

def _first_failing_pair(n, fails):
    for u in range(n):
        for v in range(u + 1, n):
            if fails(u, v):
                return u, v
    return None

def _induced_labels(g, keep):
    """
    Component labels of the subgraph induced by the vertices in `keep`.

    Removed vertices get label -1. Returns the labels and the number of
    components.

    """
    index = [-1]*g.n
    kept = [v for v in range(g.n) if keep[v]]
    for i, v in enumerate(kept):
        index[v] = i
    dsu = graph.DisjointSetUnion(len(kept))
    for u, v in g.edges:
        if keep[u] and keep[v]:
            dsu.union(index[u], index[v])
    dsu_labels = dsu.labels()
    labels = [dsu_labels[index[v]] if keep[v] else -1 for v in range(g.n)]
    return labels, dsu.n_components

def is_eca_connected(g):
    """
    Determine whether an edge-colored graph is edge-color-avoiding
    connected.

    Parameters
    ----------
    g : EdgeColoredGraph
        Input graph.

    Returns
    -------
    CaVerdict
        Holds if removing the edges of any single color leaves `g`
        connected. Otherwise the witness names the smallest failing color
        and the smallest separated pair.

    """
    for c in _palette(g):
        dsu = graph.DisjointSetUnion(g.n)
        for u, v, ec in g.edges:
            if ec != c:
                dsu.union(u, v)
        if dsu.n_components > 1:
            v = next(x for x in range(g.n) if not dsu.connected(0, x))
            return CaVerdict(False, (c, 0, v))
    # Only reachable with no colors at all
    if not graph.is_connected(g.n, g.edges):
        dsu = graph.DisjointSetUnion(g.n)
        for u, v, _ in g.edges:
            dsu.union(u, v)
        v = next(x for x in range(g.n) if not dsu.connected(0, x))
        return CaVerdict(False, (None, 0, v))
    return CaVerdict(True)

def is_vca_connected(g):
    """
    Determine whether a vertex-colored graph is vertex-color-avoiding
    connected.

    Uses the characterization: `g` is connected and, for every color
    ``c``, the subgraph induced by the vertices of color other than ``c``
    is connected.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph.

    Returns
    -------
    CaVerdict

    """
    if g.n <= 1:
        return CaVerdict(True)
    all_labels, n_components = _induced_labels(g, [True]*g.n)
    for c in _palette(g):
        keep = (g.colors != c).tolist()
        labels, n_components_c = _induced_labels(g, keep)
        if n_components <= 1 and n_components_c <= 1:
            continue

        def fails(u, v):
            if all_labels[u] != all_labels[v]:
                return True
            return keep[u] and keep[v] and labels[u] != labels[v]

        u, v = _first_failing_pair(g.n, fails)
        return CaVerdict(False, (c, u, v))
    return CaVerdict(True)

def is_ivca_connected(g):
    """
    Determine whether a vertex-colored graph is internally
    vertex-color-avoiding connected.

    For every color ``c``, with ``V'`` the vertices of color other than
    ``c``, checks that the subgraph induced by ``V'`` is connected, that
    every color-``c`` vertex has a neighbor in ``V'`` and, when ``V'`` is
    empty, that `g` is complete.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph.

    Returns
    -------
    CaVerdict

    """
    if g.n <= 1:
        return CaVerdict(True)
    complete = g.m == g.n*(g.n - 1)//2
    for c in _palette(g):
        keep = (g.colors != c).tolist()
        labels, n_components_c = _induced_labels(g, keep)
        if any(keep):
            ok = n_components_c <= 1 and all(
                keep[v] or any(keep[w] for w in g.neighbors(v))
                for v in range(g.n))
        else:
            ok = complete
        if ok:
            continue

        # Components of G - c reachable from every vertex through
        # non-c internal vertices
        reach = []
        for v in range(g.n):
            if keep[v]:
                reach.append({labels[v]})
            else:
                reach.append({labels[w] for w in g.neighbors(v) if keep[w]})

        def fails(u, v):
            return not g.has_edge(u, v) and not (reach[u] & reach[v])

        u, v = _first_failing_pair(g.n, fails)
        return CaVerdict(False, (c, u, v))
    return CaVerdict(True)

def check(g, notion):
    """
    Dispatch to the checker of `notion` ('eca', 'vca' or 'ivca').

    """
    notion = notion.lower()
    if notion == 'eca':
        if not isinstance(g, graph.EdgeColoredGraph):
            raise ValueError("ECA connectivity needs an edge-colored graph")
        return is_eca_connected(g)
    if notion not in NOTIONS:
        raise ValueError("notion {} not recognized, should be one of {}".\
            format(notion, ", ".join(NOTIONS)))
    if not isinstance(g, graph.VertexColoredGraph):
        raise ValueError("{} connectivity needs a vertex-colored graph".\
            format(notion.upper()))
    if notion == 'vca':
        return is_vca_connected(g)
    return is_ivca_connected(g)

def require(g, notion):
    """
    Raise NotColorAvoidingError unless `g` has the property `notion`.

    """
    verdict = check(g, notion)
    if not verdict.holds:
        logger.debug("%s connectivity fails, witness %s", notion.upper(),
                     verdict.witness)
        raise NotColorAvoidingError(notion, verdict)
    return verdict

def _check_definitional_size(g, force):
    if g.n > DEFINITIONAL_MAX_VERTICES and not force:
        raise ValueError("definitional checkers are limited to {} vertices, "
                         "got {} (use force=True to override)".format(
                            DEFINITIONAL_MAX_VERTICES, g.n))

def _search(g, source, target, allowed):
    """
    Breadth-first search from `source` for `target`.

    Intermediate vertices must satisfy `allowed`. `target` may be entered
    regardless.

    """
    visited = {source}
    queue = collections.deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y == target:
                return True
            if y not in visited and allowed(y):
                visited.add(y)
                queue.append(y)
    return source == target

def is_vca_connected_definitional(g, force=False):
    """
    Check vertex-color-avoiding connectivity pair by pair.

    For every color ``c`` and pair ``u < v``, searches for a ``u``-``v``
    path, and for a path avoiding color ``c`` entirely when neither
    endpoint has color ``c``. Intended as a test oracle.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph.
    force : bool, optional
        Accept graphs larger than ``DEFINITIONAL_MAX_VERTICES``.

    Returns
    -------
    CaVerdict

    """
    _check_definitional_size(g, force)
    colors = g.colors.tolist()
    for c in _palette(g):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                ok = _search(g, u, v, lambda x: True)
                if ok and colors[u] != c and colors[v] != c:
                    ok = _search(g, u, v, lambda x: colors[x] != c)
                if not ok:
                    return CaVerdict(False, (c, u, v))
    return CaVerdict(True)

def is_ivca_connected_definitional(g, force=False):
    """
    Check internally vertex-color-avoiding connectivity pair by pair.

    For every color ``c`` and pair ``u < v``, searches for a ``u``-``v``
    path whose internal vertices avoid color ``c``. Endpoints may have
    any color. Intended as a test oracle.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph.
    force : bool, optional
        Accept graphs larger than ``DEFINITIONAL_MAX_VERTICES``.

    Returns
    -------
    CaVerdict

    """
    _check_definitional_size(g, force)
    colors = g.colors.tolist()
    for c in _palette(g):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not _search(g, u, v, lambda x: colors[x] != c):
                    return CaVerdict(False, (c, u, v))
    return CaVerdict(True)

class CutVertexSummary(object):
    """
    Components left after removing a vertex, annotated by color.

    Attributes
    ----------
    vertex : int
        Removed vertex.
    color : int
        Color of the removed vertex.
    components : Partition
        Connected components of the graph without `vertex`.
    monochromatic : tuple of bool
        For every component, whether all its vertices have `color`.

    """
    def __init__(self, vertex, color, components, monochromatic):
        self.vertex = vertex
        self.color = color
        self.components = components
        self.monochromatic = tuple(monochromatic)

    @property
    def is_cut_vertex(self):
        return len(self.components) > 1

    @property
    def n_mixed(self):
        """
        Number of components with a vertex of color other than `color`.

        """
        return sum(not mono for mono in self.monochromatic)

def cut_vertex_color_components(g, v):
    """
    Components of ``g - v``, marking those made only of color ``c(v)``.

    In a vertex-color-avoiding connected graph, at most one component of
    ``g - v`` contains a vertex whose color differs from that of `v`.

    Parameters
    ----------
    g : VertexColoredGraph
        Input graph.
    v : int
        Vertex to remove.

    Returns
    -------
    CutVertexSummary

    """
    if not 0 <= v < g.n:
        raise ValueError("vertex {} outside [0, {})".format(v, g.n))
    others = [x for x in range(g.n) if x != v]
    index = dict((x, i) for i, x in enumerate(others))
    dsu = graph.DisjointSetUnion(len(others))
    for a, b in g.edges:
        if a != v and b != v:
            dsu.union(index[a], index[b])
    parts = [[others[i] for i in comp] for comp in dsu.components()]
    color = int(g.colors[v])
    monochromatic = [all(g.colors[x] == color for x in part)
                     for part in parts]
    return CutVertexSummary(vertex=v,
                            color=color,
                            components=graph.Partition(parts,
                                                       universe=others),
                            monochromatic=monochromatic)
