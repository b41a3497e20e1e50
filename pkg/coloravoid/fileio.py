# -*- coding: UTF-8 -*-
"""
Module that contains readers and writers of colored instance files.

Text files hold one declaration per line, with whitespace-separated
tokens and ``#`` comments:

* Edge-colored graphs: a header ``ECG <n> <m> <k>`` followed by `m`
  lines ``<u> <v> <c>``.
* Vertex-colored graphs: a header ``VCG <n> <m> <k>``, a line with the
  `n` vertex colors, and `m` lines ``<u> <v>``.
* Matroids: ``GRAPHIC`` followed by an edge-colored graph, or
  ``UNIFORM <n> <k_u> <k>`` followed by a line with the `n` element
  colors.
* Orders: lines ``edges <i> ...`` and ``vertices <v> ...``.

Colors may be non-negative integers or arbitrary labels. Labels are
mapped to ids in the order given by an optional ``COLORS <label> ...``
line right after the header, or else in order of first appearance.

"""

import logging
import os

import pydot

from coloravoid import graph
from coloravoid import matroid

logger = logging.getLogger(__name__)

# Brewer color scheme used for DOT output. Color ids cycle through it.
DOT_COLORSCHEME = 'paired12'
DOT_PALETTE_SIZE = 12

# Folder of the instance and order files shipped with the package
DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

def data_file(name):
    """
    Full path of the shipped data file `name`.

    """
    return os.path.join(DATA_DIR, name)

class FormatError(ValueError):
    """
    Raised when an instance file cannot be parsed.

    Attributes
    ----------
    line : int or None
        1-based line number of the problem, if known.

    """
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super(FormatError, self).__init__(message)

def _lines(text):
    """
    Non-empty lines of `text` as (line number, tokens), comments removed.

    """
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if tokens:
            yield number, tokens

def _ints(tokens, number, what):
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise FormatError("{} should be integers, got {}".format(
            what, " ".join(tokens)), number)
    if any(v < 0 for v in values):
        raise FormatError("{} should be non-negative".format(what), number)
    return values

def _header(lines, keyword, n_values):
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise FormatError("empty input")
    if tokens[0] != keyword:
        raise FormatError("expected header {}, got {}".format(
            keyword, tokens[0]), number)
    if len(tokens) != n_values + 1:
        raise FormatError("header {} takes {} values, got {}".format(
            keyword, n_values, len(tokens) - 1), number)
    return number, _ints(tokens[1:], number, "header values")

class _ColorMap(object):
    """
    Map from color tokens to dense ids.

    Integer tokens are used as ids unless a label has been seen or
    declared.

    """
    def __init__(self):
        self.labels = None
        self._ids = {}

    def declare(self, labels, number):
        if len(set(labels)) != len(labels):
            raise FormatError("repeated color label", number)
        self.labels = list(labels)
        self._ids = dict((label, i) for i, label in enumerate(labels))

    def resolve(self, tokens_by_line):
        """
        Convert every color token. `tokens_by_line` is a list of
        (line number, token) pairs.

        """
        all_ints = all(t.isdecimal() for _, t in tokens_by_line)
        if self.labels is None and all_ints:
            return [int(t) for _, t in tokens_by_line]
        if self.labels is None:
            self.labels = []
        ids = []
        declared = bool(self._ids)
        for number, token in tokens_by_line:
            if token not in self._ids:
                if declared:
                    raise FormatError("color {} not declared".format(token),
                                      number)
                self._ids[token] = len(self.labels)
                self.labels.append(token)
            ids.append(self._ids[token])
        return ids

def _peek_colors(lines, color_map):
    """
    Consume an optional COLORS line, returning the next line.

    """
    try:
        number, tokens = next(lines)
    except StopIteration:
        return None
    if tokens[0] == 'COLORS':
        color_map.declare(tokens[1:], number)
        return next(lines, None)
    return number, tokens

def _parse_ecg(lines):
    number, (n, m, k) = _header(lines, 'ECG', 3)
    color_map = _ColorMap()
    pending = _peek_colors(lines, color_map)
    rows = []
    while pending is not None:
        number, tokens = pending
        if len(tokens) != 3:
            raise FormatError("edge lines take 3 values, got {}".format(
                len(tokens)), number)
        rows.append((number, tokens))
        pending = next(lines, None)
    if len(rows) != m:
        raise FormatError("header declares {} edges, got {}".format(
            m, len(rows)))
    colors = color_map.resolve([(number, t[2]) for number, t in rows])
    edges = []
    for (number, tokens), c in zip(rows, colors):
        u, v = _ints(tokens[:2], number, "endpoints")
        edges.append((u, v, c))
    try:
        return graph.EdgeColoredGraph(n, edges, k=k,
                                      color_labels=color_map.labels)
    except ValueError as e:
        raise FormatError(str(e))

def _parse_vcg(lines):
    number, (n, m, k) = _header(lines, 'VCG', 3)
    color_map = _ColorMap()
    pending = _peek_colors(lines, color_map)
    if pending is None:
        if n == 0:
            pending = (number, [])
        else:
            raise FormatError("missing vertex color line")
    number, tokens = pending
    if len(tokens) != n:
        raise FormatError("expected {} vertex colors, got {}".format(
            n, len(tokens)), number)
    colors = color_map.resolve([(number, t) for t in tokens])
    edges = []
    for number, tokens in lines:
        if len(tokens) != 2:
            raise FormatError("edge lines take 2 values, got {}".format(
                len(tokens)), number)
        edges.append(_ints(tokens, number, "endpoints"))
    if len(edges) != m:
        raise FormatError("header declares {} edges, got {}".format(
            m, len(edges)))
    try:
        return graph.VertexColoredGraph(n, edges, colors, k=k,
                                        color_labels=color_map.labels)
    except ValueError as e:
        raise FormatError(str(e))

def _parse_uniform(lines):
    number, (n, k_u, k) = _header(lines, 'UNIFORM', 3)
    color_map = _ColorMap()
    pending = _peek_colors(lines, color_map)
    if pending is None:
        pending = (number, [])
    number, tokens = pending
    if len(tokens) != n:
        raise FormatError("expected {} element colors, got {}".format(
            n, len(tokens)), number)
    extra = next(lines, None)
    if extra is not None:
        raise FormatError("unexpected content", extra[0])
    colors = color_map.resolve([(number, t) for t in tokens])
    try:
        return matroid.UniformMatroid(n, k_u, colors, k=k,
                                      color_labels=color_map.labels)
    except ValueError as e:
        raise FormatError(str(e))

def parse(text):
    """
    Parse an instance from text.

    Parameters
    ----------
    text : str
        Contents of an ECG, VCG, GRAPHIC or UNIFORM file.

    Returns
    -------
    EdgeColoredGraph, VertexColoredGraph or ColoredMatroid

    Raises
    ------
    FormatError
        If the text is malformed.

    """
    lines = _lines(text)
    first = next(_lines(text), None)
    if first is None:
        raise FormatError("empty input")
    keyword = first[1][0]
    if keyword == 'ECG':
        return _parse_ecg(lines)
    elif keyword == 'VCG':
        return _parse_vcg(lines)
    elif keyword == 'GRAPHIC':
        if len(first[1]) != 1:
            raise FormatError("GRAPHIC takes no values", first[0])
        next(lines)
        return matroid.GraphicMatroid(_parse_ecg(lines))
    elif keyword == 'UNIFORM':
        return _parse_uniform(lines)
    raise FormatError("unknown header {}".format(keyword), first[0])

def load(file_name):
    """
    Read an instance from a file. See `parse`.

    """
    with open(file_name, 'r') as f:
        instance = parse(f.read())
    logger.debug("loaded %r from %s", instance, file_name)
    return instance

def _colors_line(labels):
    return [] if labels is None else \
        ["COLORS " + " ".join(labels)]

def _color_token(c, labels):
    return str(c) if labels is None else labels[c]

def serialize(instance):
    """
    Write an instance to text, in the format read by `parse`.

    Parameters
    ----------
    instance : EdgeColoredGraph, VertexColoredGraph, GraphicMatroid or
            UniformMatroid

    Returns
    -------
    str

    """
    if isinstance(instance, graph.EdgeColoredGraph):
        labels = instance.color_labels
        lines = ["ECG {} {} {}".format(instance.n, instance.m, instance.k)]
        lines += _colors_line(labels)
        lines += ["{} {} {}".format(u, v, _color_token(c, labels))
                  for u, v, c in instance.edges]
    elif isinstance(instance, graph.VertexColoredGraph):
        labels = instance.color_labels
        lines = ["VCG {} {} {}".format(instance.n, instance.m, instance.k)]
        lines += _colors_line(labels)
        lines.append(" ".join(_color_token(c, labels)
                              for c in instance.colors.tolist()))
        lines += ["{} {}".format(u, v) for u, v in instance.edges]
    elif isinstance(instance, matroid.GraphicMatroid):
        return "GRAPHIC\n" + serialize(instance.graph)
    elif isinstance(instance, matroid.UniformMatroid):
        labels = instance.color_labels
        lines = ["UNIFORM {} {} {}".format(instance.ground_size,
                                           instance.threshold,
                                           instance.k)]
        lines += _colors_line(labels)
        lines.append(" ".join(_color_token(c, labels)
                              for c in instance.colors.tolist()))
    else:
        raise ValueError("cannot serialize {}".format(
            type(instance).__name__))
    return "\n".join(lines) + "\n"

def save(instance, file_name):
    """
    Write an instance to a file. See `serialize`.

    """
    with open(file_name, 'w') as f:
        f.write(serialize(instance))

def parse_order(text):
    """
    Parse an order file.

    Returns
    -------
    edge_order : list of int or None
    vertex_order : list of int or None

    """
    orders = {'edges': None, 'vertices': None}
    for number, tokens in _lines(text):
        if tokens[0] not in orders:
            raise FormatError("order lines start with 'edges' or "
                              "'vertices', got {}".format(tokens[0]), number)
        if orders[tokens[0]] is not None:
            raise FormatError("repeated {} line".format(tokens[0]), number)
        orders[tokens[0]] = _ints(tokens[1:], number, "order entries")
    return orders['edges'], orders['vertices']

def load_order(file_name):
    with open(file_name, 'r') as f:
        return parse_order(f.read())

def serialize_order(edge_order, vertex_order=None):
    lines = []
    if edge_order is not None:
        lines.append("edges " + " ".join(str(i) for i in edge_order))
    if vertex_order is not None:
        lines.append("vertices " + " ".join(str(v) for v in vertex_order))
    return "\n".join(lines) + "\n"

def to_dot(g, name='G'):
    """
    Build a DOT representation of a colored graph.

    Edge colors (or vertex colors) are rendered with the ``paired12``
    color scheme, cycling when there are more than 12 colors.

    Parameters
    ----------
    g : EdgeColoredGraph or VertexColoredGraph
        Graph to draw.
    name : str, optional
        Name of the DOT graph.

    Returns
    -------
    pydot.Dot

    """
    def palette_color(c):
        return str(c % DOT_PALETTE_SIZE + 1)

    def label(c):
        return str(c) if g.color_labels is None else g.color_labels[c]

    dot = pydot.Dot(name, graph_type='graph', strict=False)
    if isinstance(g, graph.EdgeColoredGraph):
        for v in range(g.n):
            dot.add_node(pydot.Node(str(v)))
        for u, v, c in g.edges:
            dot.add_edge(pydot.Edge(str(u),
                                    str(v),
                                    colorscheme=DOT_COLORSCHEME,
                                    color=palette_color(c),
                                    label='"{}"'.format(label(c))))
    elif isinstance(g, graph.VertexColoredGraph):
        for v in range(g.n):
            c = int(g.colors[v])
            dot.add_node(pydot.Node(str(v),
                                    style='filled',
                                    colorscheme=DOT_COLORSCHEME,
                                    fillcolor=palette_color(c),
                                    xlabel='"{}"'.format(label(c))))
        for u, v in g.edges:
            dot.add_edge(pydot.Edge(str(u), str(v)))
    else:
        raise ValueError("cannot draw {}".format(type(g).__name__))
    return dot
