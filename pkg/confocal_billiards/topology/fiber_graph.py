#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Graph of the fiber over a cut arc.

Points of the arc: black at boundary corners (punctured at 3pi/2 vertices), white elsewhere.
A "+" segment (on the boundary) carries the two velocities along it, labels up/down; a "-"
segment (inside the domain) carries four, labels 1, 2 on the right copy and 3, 4 on the left.
"""
import logging
from collections import namedtuple, OrderedDict

import networkx as nx

from confocal_billiards.decomposition import Mark, Rule, cut_paths, edge_mark, walk_segments, default_epsilon
from confocal_billiards.domain import AngleClass
from confocal_billiards.exceptions import DomainError


class Side(object):
    BELOW = 'below'
    AT = 'at'
    ABOVE = 'above'

    ALL = (BELOW, AT, ABOVE)


class PointColor(object):
    BLACK = 'black'
    WHITE = 'white'


PLUS_SLOTS = ('up', 'down')
MINUS_SLOTS = ('1', '2', '3', '4')
RIGHT_SLOTS = ('1', '2')
CRITICAL_SLOT = {'1': '1', '2': '2', '3': '1', '4': '2'}

GraphVertex = namedtuple('GraphVertex', ['name', 'color', 'key', 'copy', 'punctured'])
GraphEdge = namedtuple('GraphEdge', ['label', 'source', 'target', 'segment', 'mark', 'slot'])


def edge_label(slot, index, segment):
    return 'lambda^{0}_{1},{2}'.format(slot, index, segment)


class FiberGraph(object):
    def __init__(self, index, lambda_i, side, level, segments, critical=False):
        self.index = index
        self.lambda_i = lambda_i
        self.side = side
        self.level = level
        self.segments = segments
        self.critical = critical
        self.vertices = OrderedDict()
        self.edges = []

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def chi(self):
        return self.vertex_count - self.edge_count

    @property
    def empty(self):
        return not self.vertices

    @property
    def punctured_vertices(self):
        return [vertex for vertex in self.vertices.values() if vertex.punctured]

    def segments_marked(self, mark):
        return [segment for segment in self.segments if segment.mark == mark]

    def edge(self, segment, slot):
        for edge in self.edges:
            if edge.segment == segment and edge.slot == slot:
                return edge
        return None

    def segment_of_key(self):
        """
        Segment index of every grid edge key on the graph
        """
        result = {}
        for index, segment in enumerate(self.segments):
            for path_edge in segment.edges:
                result[path_edge.key] = index
        return result

    def inventory(self):
        """
        Vertices and edge labels, stable order, for comparing graphs built on different levels or grids
        """
        vertices = sorted((vertex.name, vertex.color, vertex.punctured) for vertex in self.vertices.values())
        edges = sorted((edge.label, edge.source, edge.target) for edge in self.edges)
        return vertices, edges

    def to_networkx(self):
        graph = nx.MultiGraph()
        for name, vertex in self.vertices.items():
            graph.add_node(name, color=vertex.color, punctured=vertex.punctured)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, label=edge.label)
        return graph

    def __repr__(self):
        return 'FiberGraph(lambda_{0}={1}, {2}, V={3}, E={4}{5})'.format(
            self.index, self.lambda_i, self.side, self.vertex_count, self.edge_count,
            ', critical' if self.critical else '')


def _point_name(key, index):
    return 'p{0}.{1}.{2}'.format(index, key[0], key[1])


def _assemble(graph, grid):
    """
    Vertices and edges of the graph from its marked segments
    """
    adjacent = OrderedDict()
    for position, segment in enumerate(graph.segments):
        for vertex in (segment.start, segment.end):
            adjacent.setdefault(vertex, set()).add(segment.mark)
    copies = {}
    for key, marks in adjacent.items():
        corner = grid.corner_keys.get(key)
        name = _point_name(key, graph.index)
        if corner is not None:
            punctured = corner.angle_class == AngleClass.THREE_QUARTER
            graph.vertices[name] = GraphVertex(name, PointColor.BLACK, key, '', punctured)
            copies[key] = {'r': name, 'l': name}
        elif marks == {Mark.MINUS} and not graph.critical:
            right, left = name + 'r', name + 'l'
            graph.vertices[right] = GraphVertex(right, PointColor.WHITE, key, 'r', False)
            graph.vertices[left] = GraphVertex(left, PointColor.WHITE, key, 'l', False)
            copies[key] = {'r': right, 'l': left}
        else:
            graph.vertices[name] = GraphVertex(name, PointColor.WHITE, key, '', False)
            copies[key] = {'r': name, 'l': name}
    for position, segment in enumerate(graph.segments):
        start, end = copies[segment.start], copies[segment.end]
        if segment.mark == Mark.PLUS:
            slots = [(slot, 'r') for slot in PLUS_SLOTS]
        elif graph.critical:
            slots = [(slot, 'r') for slot in RIGHT_SLOTS]
        else:
            slots = [(slot, 'r' if slot in RIGHT_SLOTS else 'l') for slot in MINUS_SLOTS]
        for slot, copy in slots:
            graph.edges.append(GraphEdge(edge_label(slot, graph.index, position), start[copy], end[copy],
                                         position, segment.mark, slot))
    return graph


def focal_breaks(grid):
    """
    Grid vertices on the focal line
    """
    half = grid.nv // 2
    breaks = set(grid.vertex_key(0, j) for j in range(grid.nv))
    for i in range(grid.nu + 1):
        breaks.add(grid.vertex_key(i, 0))
        breaks.add(grid.vertex_key(i, half))
    return breaks


def build_graph(grid, cut, level, index=0, side=Side.BELOW, critical=False, extra_breaks=()):
    """
    Graph of the fiber at `level` over the cut quadric, built on any grid carrying the cut lines
    :param cut: anything with lambda_i and rule (a CutArc)
    :rtype: FiberGraph
    """
    breaks = set(grid.corner_keys) | set(extra_breaks)

    def mark_of(key):
        if not grid.in_region(key, level):
            return None
        return edge_mark(grid, key)

    segments = []
    for path in cut_paths(grid, cut.lambda_i, cut.rule):
        segments.extend(walk_segments(path, mark_of, breaks))
    graph = FiberGraph(index, cut.lambda_i, side, level, segments, critical)
    return _assemble(graph, grid)


def critical_quotient_graph(graph, grid):
    """
    The graph the at-level cylinders attach to: right and left copies of white points and of the
    "-" edges are identified (3 with 1, 4 with 2)
    """
    quotient = FiberGraph(graph.index, graph.lambda_i, graph.side, graph.level, graph.segments, critical=True)
    return _assemble(quotient, grid)


def restrict_graph(graph, grid, mask):
    """
    The part of the graph over the segments running along cells of `mask`, e.g. one side of the
    focal line at b
    """
    segments = [segment for segment in graph.segments
                if all(any(cell is not None and mask[cell] for cell in grid.edge_cells(edge.key))
                       for edge in segment.edges)]
    restricted = FiberGraph(graph.index, graph.lambda_i, graph.side, graph.level, segments, graph.critical)
    return _assemble(restricted, grid)


def side_level(cut, side, epsilon):
    """
    Level of the fiber on a side of the cut value: below is the side where the cut arc stays in
    the region of possible motion
    """
    if side == Side.AT:
        return cut.lambda_i
    toward = -1.0 if cut.rule == Rule.HYPERBOLIC else 1.0
    if side == Side.ABOVE:
        toward = -toward
    return cut.lambda_i + toward * epsilon


def build_Gr(domain, partition_result, i, side=Side.BELOW, epsilon=None, grid=None, logger=None):
    """
    Graph over the cut arc i on a side of its level, on the partition grid unless another is given
    :type partition_result: confocal_billiards.decomposition.Partition
    :rtype: FiberGraph
    """
    logger = logger or logging.getLogger(__name__)
    if side not in Side.ALL:
        raise DomainError('Unknown side {0}'.format(side))
    cut = partition_result.cut_arcs[i]
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    level = side_level(cut, side, epsilon)
    graph = build_graph(grid or partition_result.grid, cut, level, i, side, critical=False)
    logger.debug('Graph over cut {0} of {1}: {2}'.format(i, domain.name, graph))
    return graph


def saddle_graphs(domain, partition_result, i, epsilon=None, grid=None, logger=None):
    """
    Graphs over the cut arc i at b - epsilon, b and b + epsilon; at b the focal line crossings of
    the arc are extra white points
    :return: (Gr<, Gr=, Gr>)
    """
    logger = logger or logging.getLogger(__name__)
    grid = grid or partition_result.grid
    cut = partition_result.cut_arcs[i]
    b = domain.family.b
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    below = build_graph(grid, cut, b - epsilon, i, Side.BELOW)
    at = build_graph(grid, cut, b, i, Side.AT, extra_breaks=focal_breaks(grid))
    above = build_graph(grid, cut, b + epsilon, i, Side.ABOVE)
    logger.debug('Saddle graphs over cut {0} of {1}: {2} / {3} / {4}'.format(i, domain.name, below, at, above))
    return below, at, above

