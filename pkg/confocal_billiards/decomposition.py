#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Partition of homogeneous billiards into elementary ones along the quadrics through the 3pi/2
vertices, regions of possible motion with their induced pieces, and the strips around cut arcs.
"""
import logging
import math
from collections import namedtuple, OrderedDict

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import categorical_node_match

from confocal_billiards.chart import (TWO_PI, HALF_PI, AXIS_VALUES, u_of_lambda_e, phi_of_lambda_h,
                                      lambda_e_of_u, lambda_h_of_v)
from confocal_billiards.domain import (BilliardDomain, Homogeneity, AngleClass, classify_cells,
                                       arc_from_chart_run)
from confocal_billiards.exceptions import DomainError, InvalidInputError, IntegrityError
from confocal_billiards.geometry import LAMBDA_TOLERANCE
from confocal_billiards.grid import (ChartGrid, SIDE_U_LO, SIDE_U_HI, SIDE_V_LO, SIDE_V_HI, lambda_lines)


class Rule(object):
    HYPERBOLIC = 'hyperbolic'
    ELLIPTIC = 'elliptic'

    ALL = (HYPERBOLIC, ELLIPTIC)


class Mark(object):
    PLUS = '+'
    MINUS = '-'


PathEdge = namedtuple('PathEdge', ['key', 'start', 'end'])
CutSegment = namedtuple('CutSegment', ['mark', 'edges', 'start', 'end'])
PartitionElement = namedtuple('PartitionElement', ['index', 'domain', 'elementary_type', 'cells'])
RegionComponent = namedtuple('RegionComponent', ['index', 'cells', 'k_prime', 'chi'])
InducedPiece = namedtuple('InducedPiece', ['component', 'element', 'cells', 'elementary_type'])


def same_lambda(first, second):
    return abs(first - second) <= LAMBDA_TOLERANCE


def choose_rule(domain, rule=None):
    """
    Cutting rule for a homogeneous domain: along hyperbolas unless the domain is elliptic-homogeneous
    """
    homogeneity = domain.computed_homogeneity()
    rule = rule or domain.decomposition
    if rule is None:
        rule = Rule.ELLIPTIC if homogeneity == Homogeneity.ELLIPTIC else Rule.HYPERBOLIC
    if rule not in Rule.ALL:
        raise InvalidInputError('Unknown decomposition rule {0}'.format(rule))
    if domain.complexity:
        if homogeneity == Homogeneity.NON_HOMOGENEOUS:
            raise DomainError('Domain {0} is not homogeneous, no partition into elementary billiards'.format(
                domain.name))
        if (rule, homogeneity) in ((Rule.ELLIPTIC, Homogeneity.HYPERBOLIC), (Rule.HYPERBOLIC, Homogeneity.ELLIPTIC)):
            raise DomainError('Rule {0} does not apply to a {1} domain'.format(rule, homogeneity))
    return rule


def cut_lambdas(domain, rule):
    values = []
    for corner in domain.singular_corners:
        lambda_e, lambda_h = domain.corner_coords(corner)
        lam = lambda_e if rule == Rule.ELLIPTIC else lambda_h
        if not any(same_lambda(lam, value) for value in values):
            values.append(lam)
    return sorted(values)


def cut_lines(family, lam, rule):
    """
    Chart lines of the cut quadric; at lambda = b only the half of the focal line belonging to the rule
    """
    if same_lambda(lam, family.b):
        return ([0.0], []) if rule == Rule.ELLIPTIC else ([], [0.0, math.pi])
    return lambda_lines(family, lam)


def cut_walls(grid, lambdas, rule):
    wall_u, wall_v = grid.empty_walls()
    for lam in lambdas:
        us, vs = cut_lines(grid.family, lam, rule)
        for u in us:
            wall_u[grid.u_index(u), :] = True
        for v in vs:
            wall_v[:, grid.v_index(v)] = True
    return wall_u, wall_v


def _v_path(grid, j, descending):
    rows = range(grid.nu - 1, -1, -1) if descending else range(grid.nu)
    path = []
    for i in rows:
        low, high = grid.vertex_key(i, j), grid.vertex_key(i + 1, j)
        path.append(PathEdge(('v', i, j), high, low) if descending else PathEdge(('v', i, j), low, high))
    return path


def cut_paths(grid, lam, rule):
    """
    Ordered edge paths along the cut quadric, one per connected curve of the chart
    """
    family = grid.family
    if rule == Rule.ELLIPTIC:
        if same_lambda(lam, family.b):
            return [[PathEdge(grid.edge_key(0, j, SIDE_U_LO), grid.vertex_key(0, j), grid.vertex_key(0, j + 1))
                     for j in range(grid.nv // 2)]]
        i = grid.u_index(u_of_lambda_e(family, lam))
        return [[PathEdge(('u', i, j), grid.vertex_key(i, j), grid.vertex_key(i, j + 1)) for j in range(grid.nv)]]
    if same_lambda(lam, family.b):
        return [_v_path(grid, 0, False), _v_path(grid, grid.v_index(math.pi), False)]
    if same_lambda(lam, family.a):
        return [_v_path(grid, grid.v_index(1.5 * math.pi), True) + _v_path(grid, grid.v_index(HALF_PI), False)]
    phi = phi_of_lambda_h(family, lam)
    right = _v_path(grid, grid.v_index(TWO_PI - phi), True) + _v_path(grid, grid.v_index(phi), False)
    left = _v_path(grid, grid.v_index(math.pi + phi), True) + _v_path(grid, grid.v_index(math.pi - phi), False)
    return [right, left]


def edge_mark(grid, key, cells=None):
    """
    "+" on the domain boundary, "-" between two inside cells, None outside the closed domain
    """
    cells = grid.inside if cells is None else cells
    inside = [cell for cell in grid.edge_cells(key) if cell is not None and cells[cell]]
    if not inside:
        return None
    if len(inside) == 2 and not grid.is_wall(key):
        return Mark.MINUS
    return Mark.PLUS


def walk_segments(path, mark_of, breaks=()):
    """
    Maximal runs of equally marked edges, split at the break vertices
    :param path: list of PathEdge
    :param mark_of: key -> mark or None
    :param breaks: vertex keys ending a segment
    """
    segments = []
    current = None
    for edge in path:
        mark = mark_of(edge.key)
        if mark is None:
            if current:
                segments.append(current)
            current = None
            continue
        if current is not None and (current[0] != mark or edge.start in breaks):
            segments.append(current)
            current = None
        if current is None:
            current = [mark, [edge], edge.start, edge.end]
        else:
            current[1].append(edge)
            current[3] = edge.end
    if current:
        segments.append(current)
    if len(segments) > 1 and path and segments[0][1][0] is path[0] and segments[-1][1][-1] is path[-1]:
        first, last = segments[0], segments[-1]
        if last[3] == first[2] and last[0] == first[0] and first[2] not in breaks:
            segments[0] = [first[0], last[1] + first[1], last[2], first[3]]
            segments.pop()
    return [CutSegment(mark, edges, start, end) for mark, edges, start, end in segments]


def cell_inside_cut(grid, cell, lam, rule):
    """
    Whether a cell lies on the inner side of the cut quadric: the side kept in the motion region at
    the cut level (towards the y-axis for hyperbolas, away from the focal segment for ellipses)
    """
    u, v = grid.cell_center(*cell)
    return kept_side(grid.family, u, v, lam, rule)


def kept_side(family, u, v, lam, rule):
    if rule == Rule.ELLIPTIC:
        return lambda_e_of_u(family, u) < lam
    return lambda_h_of_v(family, v) > lam


def band_counts(grid, segments, lam, rule):
    """
    Components of the one-cell band along the cut on its inner and outer side
    """
    inner = np.zeros_like(grid.inside)
    outer = np.zeros_like(grid.inside)
    for segment in segments:
        for edge in segment.edges:
            for cell in grid.edge_cells(edge.key):
                if cell is None or not grid.inside[cell]:
                    continue
                if cell_inside_cut(grid, cell, lam, rule):
                    inner[cell] = True
                else:
                    outer[cell] = True
    return _count(grid, inner), _count(grid, outer)


def _count(grid, mask, extra=None):
    if not mask.any():
        return 0
    return int(grid.components(mask, extra).max()) + 1


class CutArc(object):
    """
    Segments of one cut quadric inside the domain with their +/- marks, the corners on it and
    the counts nu (pieces on the inner side) and xi (outer side)
    """

    def __init__(self, lambda_i, rule, paths, segments, corners, nu, xi):
        self.lambda_i = lambda_i
        self.rule = rule
        self.paths = paths
        self.segments = segments
        self.corners = corners
        self.nu = nu
        self.xi = xi

    @property
    def singular_points(self):
        return [corner for key, corner in sorted(self.corners.items())
                if corner.angle_class == AngleClass.THREE_QUARTER]

    @property
    def singular_keys(self):
        return set(key for key, corner in self.corners.items() if corner.angle_class == AngleClass.THREE_QUARTER)

    def segments_marked(self, mark):
        return [segment for segment in self.segments if segment.mark == mark]

    def __repr__(self):
        return 'CutArc(lambda={0}, +{1} -{2}, nu={3}, xi={4})'.format(
            self.lambda_i, len(self.segments_marked(Mark.PLUS)), len(self.segments_marked(Mark.MINUS)),
            self.nu, self.xi)


def build_cut_arc(grid, lam, rule):
    paths = cut_paths(grid, lam, rule)
    breaks = set(grid.corner_keys)
    segments = []
    for path in paths:
        segments.extend(walk_segments(path, lambda key: edge_mark(grid, key), breaks))
    corners = OrderedDict()
    for segment in segments:
        for edge in segment.edges:
            for vertex in (edge.start, edge.end):
                if vertex in grid.corner_keys:
                    corners[vertex] = grid.corner_keys[vertex]
    nu, xi = band_counts(grid, segments, lam, rule)
    return CutArc(lam, rule, paths, segments, corners, nu, xi)


# boundary extraction

_DIRECTED_SIDES = (
    (SIDE_V_LO, 0, 1),
    (SIDE_U_HI, 1, 3),
    (SIDE_V_HI, 3, 2),
    (SIDE_U_LO, 2, 0),
)


def _side_run(grid, i, j, side):
    u, v = grid.u, grid.v
    if side == SIDE_V_LO:
        return 'v', v[j % grid.nv], u[i], u[i + 1]
    if side == SIDE_V_HI:
        return 'v', v[(j + 1) % grid.nv], u[i + 1], u[i]
    if side == SIDE_U_HI:
        return 'u', u[i + 1], v[j], v[j + 1]
    return 'u', u[i], v[j + 1], v[j]


def _on_axis(value):
    return any(abs(value - axis) <= 1e-12 for axis in AXIS_VALUES)


def extract_domain(grid, cells, name=None):
    """
    Billiard domain bounded by a union of grid cells, None when the boundary is not one simple cycle
    :rtype: BilliardDomain
    """
    outgoing = {}
    count = 0
    for i, j in np.argwhere(cells):
        for side, tail, head in _DIRECTED_SIDES:
            other = grid.neighbor(i, j, side)
            if other is not None and cells[other]:
                continue
            start, end = grid.corner_vertex(i, j, tail), grid.corner_vertex(i, j, head)
            if start in outgoing:
                return None
            outgoing[start] = (end,) + _side_run(grid, i, j, side)
            count += 1
    if not outgoing:
        return None
    first = min(outgoing)
    cycle = []
    vertex = first
    while True:
        record = outgoing.get(vertex)
        if record is None:
            return None
        cycle.append(record[1:])
        vertex = record[0]
        if vertex == first:
            break
        if len(cycle) > count:
            return None
    if len(cycle) != count:
        return None

    def joins(previous, following):
        return (previous[0] == following[0] and abs(previous[1] - following[1]) <= 1e-12 and
                abs(previous[3] - following[2]) <= 1e-12 and not (previous[0] == 'u' and _on_axis(previous[3])))

    starts = [index for index in range(len(cycle)) if not joins(cycle[index - 1], cycle[index])]
    if not starts:
        return None
    cycle = cycle[starts[0]:] + cycle[:starts[0]]
    runs = []
    for record in cycle:
        if runs and joins(runs[-1], record):
            runs[-1] = (runs[-1][0], runs[-1][1], runs[-1][2], record[3])
        else:
            runs.append(record)
    arcs = [arc_from_chart_run(grid, *run) for run in runs]
    return BilliardDomain(grid.family, arcs, name=name)


# partition

class Partition(object):
    def __init__(self, domain, grid, rule, elements, cut_arcs, labels, walls):
        self.domain = domain
        self.grid = grid
        self.rule = rule
        self.elements = elements
        self.cut_arcs = cut_arcs
        self.labels = labels
        self.walls = walls
        self.checks = OrderedDict()

    @property
    def N(self):
        return len(self.elements)

    @property
    def n(self):
        return len(self.cut_arcs)

    @property
    def cut_lambdas(self):
        return [cut.lambda_i for cut in self.cut_arcs]

    def element_labels(self, grid):
        """
        Element index of every inside cell of another grid carrying the same boundary and cuts
        """
        labels = -np.ones((grid.nu, grid.nv), dtype=int)
        for i, j in np.argwhere(grid.inside):
            u, v = grid.cell_center(i, j)
            labels[i, j] = self.labels[self.grid.locate(u, v)]
        return labels

    def types(self):
        return [element.elementary_type.tag for element in self.elements]

    def __repr__(self):
        return 'Partition({0}, rule={1}, N={2}, n={3}, types={4})'.format(
            self.domain.name, self.rule, self.N, self.n, self.types())


def partition(domain, rule=None, resolution=32, logger=None):
    """
    Cut a homogeneous domain along every quadric of the rule's kind through its 3pi/2 vertices
    :type domain: BilliardDomain
    :param rule: Rule.HYPERBOLIC or Rule.ELLIPTIC, chosen from the homogeneity class when omitted
    :rtype: Partition
    """
    logger = logger or logging.getLogger(__name__)
    rule = choose_rule(domain, rule)
    lambdas = cut_lambdas(domain, rule)
    grid = ChartGrid.build(domain, lambdas=lambdas, resolution=resolution, logger=logger)
    walls = cut_walls(grid, lambdas, rule)
    if not lambdas:
        labels = np.where(grid.inside, 0, -1)
        element = PartitionElement(0, domain, classify_cells(grid, grid.inside), grid.inside.copy())
        result = Partition(domain, grid, rule, [element], [], labels, walls)
        _check(result, logger)
        return result
    labels = grid.components(grid.inside, walls)
    elements = []
    for label in range(int(labels.max()) + 1):
        cells = labels == label
        element_domain = extract_domain(grid, cells, name='{0}/{1}'.format(domain.name, label))
        if element_domain is not None and element_domain.complexity:
            raise IntegrityError('Partition element {0} of {1} still has 3pi/2 corners'.format(label, domain.name))
        elements.append(PartitionElement(label, element_domain, classify_cells(grid, cells), cells))
    cut_arcs = [build_cut_arc(grid, lam, rule) for lam in lambdas]
    result = Partition(domain, grid, rule, elements, cut_arcs, labels, walls)
    _check(result, logger)
    logger.info('Partition of {0}: {1}'.format(domain.name, result))
    return result


def _check(result, logger):
    grid = result.grid
    areas = grid.cell_areas()
    total = float(areas[grid.inside].sum())
    covered = np.zeros_like(grid.inside)
    element_area = 0.0
    disjoint = True
    for element in result.elements:
        disjoint = disjoint and not (covered & element.cells).any()
        covered |= element.cells
        element_area += float(areas[element.cells].sum())
    k = result.domain.complexity
    result.checks['tiling'] = disjoint and bool((covered == grid.inside).all()) and \
        abs(element_area - total) <= 1e-8 * total
    result.checks['cuts_add_elements'] = result.N > result.n
    result.checks['at_most_2k_elements'] = k == 0 or result.N <= 2 * k
    result.checks['cut_count'] = result.n == len(set(round(lam, 12) for lam in result.cut_lambdas))
    for name, passed in result.checks.items():
        if not passed:
            logger.warning('Partition check {0} failed for {1}'.format(name, result.domain.name))


# regions of possible motion

class MotionRegion(object):
    def __init__(self, lam, grid, mask, components, pieces):
        self.lam = lam
        self.grid = grid
        self.mask = mask
        self.components = components
        self.pieces = pieces

    @property
    def singular_counts(self):
        return [component.k_prime for component in self.components]

    @property
    def induced_partition(self):
        return self.pieces

    @property
    def empty(self):
        return not self.components

    def __repr__(self):
        return 'MotionRegion(lambda={0}, components={1}, k\'={2})'.format(
            self.lam, len(self.components), self.singular_counts)


def singular_vertices_of(grid, cells):
    """
    Keys of the 3pi/2 corners touched by a union of cells
    """
    singular = set(key for key, corner in grid.corner_keys.items() if corner.angle_class == AngleClass.THREE_QUARTER)
    touched = set()
    for i, j in np.argwhere(cells):
        for corner in range(4):
            key = grid.corner_vertex(i, j, corner)
            if key in singular:
                touched.add(key)
    return touched


def region_on_grid(grid, lam, partition_result=None, within=None):
    mask = grid.inside & grid.region_mask(lam)
    if within is not None:
        mask &= within
    labels = grid.components(mask)
    components = []
    count = int(labels.max()) + 1 if mask.any() else 0
    for index in range(count):
        cells = labels == index
        components.append(RegionComponent(index, cells, len(singular_vertices_of(grid, cells)),
                                          grid.chi_of_cells(cells)))
    pieces = []
    if partition_result is not None:
        element_labels = partition_result.element_labels(grid)
        for component in components:
            for element in sorted(set(element_labels[component.cells])):
                cells = component.cells & (element_labels == element)
                pieces.append(InducedPiece(component.index, int(element), cells, classify_cells(grid, cells)))
    return MotionRegion(lam, grid, mask, components, pieces)


def motion_region(domain, lam, partition_result=None, resolution=32, logger=None):
    """
    Intersection of the domain with the region of possible motion of the caustic lam
    :rtype: MotionRegion
    """
    family = domain.family
    if lam > family.a + LAMBDA_TOLERANCE:
        raise InvalidInputError('Caustic parameter {0} exceeds a={1}'.format(lam, family.a))
    lambdas = list(partition_result.cut_lambdas) if partition_result is not None else []
    grid = ChartGrid.build(domain, lambdas=lambdas + [lam], resolution=resolution, logger=logger)
    return region_on_grid(grid, lam, partition_result)


# critical levels and strips

def meets_y_axis(grid):
    for value in (HALF_PI, 1.5 * math.pi):
        j = grid.v_index(value)
        if (grid.inside[:, j] | grid.inside[:, (j - 1) % grid.nv]).any():
            return True
    return False


def critical_lambdas(domain):
    """
    Every quadric parameter where the topology of the fibers can change
    """
    family = domain.family
    values = [family.b]
    for arc in domain.arcs:
        values.append(arc.lam)
    for corner in domain.singular_corners:
        values.extend(domain.corner_coords(corner))
    if meets_y_axis(domain.grid):
        values.append(family.a)
    unique = []
    for value in sorted(values):
        if not unique or not same_lambda(value, unique[-1]):
            unique.append(value)
    return unique


def default_epsilon(domain):
    values = critical_lambdas(domain)
    gaps = [second - first for first, second in zip(values[:-1], values[1:])]
    return min(gaps) / 4.0 if gaps else 0.25 * domain.family.d


class Strip(object):
    def __init__(self, cut, epsilon, grid, cells, inner_labels, outer_labels):
        self.cut = cut
        self.epsilon = epsilon
        self.grid = grid
        self.cells = cells
        self.inner_labels = inner_labels
        self.outer_labels = outer_labels

    @property
    def nu(self):
        return int(self.inner_labels.max()) + 1 if (self.inner_labels >= 0).any() else 0

    @property
    def xi(self):
        return int(self.outer_labels.max()) + 1 if (self.outer_labels >= 0).any() else 0

    def pieces(self):
        inner = [self.inner_labels == index for index in range(self.nu)]
        outer = [self.outer_labels == index for index in range(self.xi)]
        return inner + outer


def arc_neighborhood(domain, partition_result, i, epsilon=None, resolution=32, levels=(), logger=None):
    """
    Cells within epsilon of the cut quadric i, split into the nu inner and xi outer pieces
    :param levels: further quadrics to carry on the strip grid (caustic levels of later fibers)
    :return: Strip, or an empty list for a partition without cuts
    """
    if not partition_result.cut_arcs:
        return []
    cut = partition_result.cut_arcs[i]
    lam = cut.lambda_i
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    if epsilon <= 0:
        raise InvalidInputError('Strip width must be positive, got {0}'.format(epsilon))
    family = domain.family
    for value in critical_lambdas(domain) + [family.a]:
        if not same_lambda(value, lam) and abs(value - lam) <= epsilon:
            raise DomainError('Strip of width {0} around {1} reaches the critical level {2}'.format(
                epsilon, lam, value))
    grid = ChartGrid.build(domain, lambdas=partition_result.cut_lambdas + [lam - epsilon, lam + epsilon] + list(levels),
                           resolution=resolution, logger=logger)
    coordinate = np.zeros((grid.nu, grid.nv))
    for index in np.argwhere(grid.inside):
        u, v = grid.cell_center(*index)
        coordinate[tuple(index)] = (lambda_e_of_u(family, u) if cut.rule == Rule.ELLIPTIC
                                    else lambda_h_of_v(family, v))
    cells = grid.inside & (coordinate > lam - epsilon) & (coordinate < lam + epsilon)
    walls = cut_walls(grid, partition_result.cut_lambdas, cut.rule)
    kept = coordinate > lam if cut.rule == Rule.HYPERBOLIC else coordinate < lam
    inner = grid.components(cells & kept, walls)
    outer = grid.components(cells & ~kept, walls)
    strip = Strip(cut, epsilon, grid, cells, inner, outer)
    if (strip.nu, strip.xi) != (cut.nu, cut.xi):
        (logger or logging.getLogger(__name__)).warning(
            'Strip counts {0}/{1} differ from the cut band {2}/{3}'.format(strip.nu, strip.xi, cut.nu, cut.xi))
    return strip


# equivalence

def adjacency_graph(partition_result):
    """
    Elements as typed nodes, one edge per internal cut segment carrying its singular point count
    """
    graph = nx.MultiGraph()
    for element in partition_result.elements:
        graph.add_node(element.index, type=element.elementary_type.tag)
    grid = partition_result.grid
    for cut in partition_result.cut_arcs:
        singular = cut.singular_keys
        for segment in cut.segments_marked(Mark.MINUS):
            first, second = grid.edge_cells(segment.edges[0].key)
            labels = sorted((int(partition_result.labels[first]), int(partition_result.labels[second])))
            count = sum(1 for vertex in (segment.start, segment.end) if vertex in singular)
            graph.add_edge(labels[0], labels[1], singular=count, lam=cut.lambda_i)
    return graph


def _edge_match(first, second):
    return sorted(data['singular'] for data in first.values()) == sorted(data['singular'] for data in second.values())


def equivalent(domain1, domain2, partition1=None, partition2=None):
    """
    Whether a bijection of partition elements keeps elementary types, adjacency and the number of
    singular points on every shared cut segment
    """
    partition1 = partition1 or partition(domain1)
    partition2 = partition2 or partition(domain2)
    return nx.is_isomorphic(adjacency_graph(partition1), adjacency_graph(partition2),
                            node_match=categorical_node_match('type', None), edge_match=_edge_match)
