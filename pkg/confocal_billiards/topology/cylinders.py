#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Cylinders over the strip pieces around a cut arc and their gluing to the graph of the cut.

Each strip piece, cut open along the cut quadric, carries two cylinders C^R and C^L told apart
by the sign of the velocity across the cut. Every free side on the cut gets the label of the
graph edge it is glued to; each (edge key, label) pair must be used exactly twice.
"""
import logging
import math
from collections import namedtuple, OrderedDict, Counter

from confocal_billiards.decomposition import (Mark, Rule, MotionRegion, cut_paths, arc_neighborhood, default_epsilon,
                                              same_lambda)
from confocal_billiards.exceptions import IntegrityError
from confocal_billiards.grid import connected_labels
from confocal_billiards.topology.fiber_complex import build_fiber, sign_u, sign_v
from confocal_billiards.topology.fiber_graph import CRITICAL_SLOT, edge_label

Cylinder = namedtuple('Cylinder', ['name', 'piece', 'inner', 'component', 'across', 'chi', 'circles'])
GluingEntry = namedtuple('GluingEntry', ['cylinder', 'key', 'label'])


class Gluing(object):
    def __init__(self, graph, level, cylinders, table):
        self.graph = graph
        self.level = level
        self.cylinders = cylinders
        self.table = table
        self.checks = OrderedDict()
        self.oracle_chi = None
        self.cut_chi = None
        self.components = None

    @property
    def cylinder_count(self):
        return len(self.cylinders)

    @property
    def chi(self):
        """
        Graph plus cylinders; the boundary circles glued to the graph add nothing
        """
        graph_chi = self.graph.chi if self.graph is not None else 0
        return graph_chi + sum(cylinder.chi for cylinder in self.cylinders)

    def __repr__(self):
        return 'Gluing(level={0}, {1} cylinders, {2} labelled sides)'.format(
            self.level, len(self.cylinders), len(self.table))


def cut_strip(domain, partition_result, i, epsilon=None, resolution=32, logger=None):
    """
    Strip of half width epsilon/2 around the cut arc i; its grid carries the levels lambda_i +- epsilon
    :rtype: confocal_billiards.decomposition.Strip
    """
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    lam = partition_result.cut_arcs[i].lambda_i
    return arc_neighborhood(domain, partition_result, i, epsilon / 2.0, resolution=resolution,
                            levels=[lam - epsilon, lam + epsilon], logger=logger)


def across_sign(grid, cut, cell, beta):
    family = grid.family
    if cut.rule == Rule.ELLIPTIC:
        return sign_u(beta)
    if same_lambda(cut.lambda_i, family.a) or same_lambda(cut.lambda_i, family.b):
        return sign_v(beta)
    _, v = grid.cell_center(*cell)
    return sign_v(beta) * (1 if math.sin(2.0 * v) > 0 else -1)


def along_sign(grid, cut, cell, beta):
    family = grid.family
    _, v = grid.cell_center(*cell)
    at_b = same_lambda(cut.lambda_i, family.b)
    if cut.rule == Rule.ELLIPTIC:
        return -sign_v(beta) if at_b and v > math.pi else sign_v(beta)
    if at_b:
        return sign_u(beta)
    return -sign_u(beta) if v > math.pi else sign_u(beta)


def slot_label(graph, position, grid, cut, cell, beta):
    """
    Graph edge label for the free side of the face (cell, beta) on segment `position`
    """
    along = along_sign(grid, cut, cell, beta)
    if graph.segments[position].mark == Mark.PLUS:
        slot = 'up' if along > 0 else 'down'
    else:
        right = across_sign(grid, cut, cell, beta) > 0
        slot = ('1' if along > 0 else '2') if right else ('3' if along > 0 else '4')
        if graph.critical:
            slot = CRITICAL_SLOT[slot]
    return edge_label(slot, graph.index, position)


def cut_keys_of(grid, cut):
    return set(edge.key for path in cut_paths(grid, cut.lambda_i, cut.rule) for edge in path)


def _label_sides(fiber, graph, grid, cut, cut_keys, segment_of):
    """
    (component, key, label) of every free side on the cut
    """
    labelled = []
    for circle in fiber.circles:
        for side in circle.sides:
            if side.key not in cut_keys:
                continue
            if side.key not in segment_of:
                raise IntegrityError('Free side {0} on the cut has no graph segment'.format(side.key),
                                     {'level': fiber.lam, 'cut': cut.lambda_i})
            label = slot_label(graph, segment_of[side.key], grid, cut, side.cell, side.beta)
            labelled.append((circle.component, side.key, label))
    return labelled


def _closed_gluing(region, level, logger):
    fiber = build_fiber(region.grid, level, logger=logger)
    cylinders = [Cylinder('C_{0}'.format(component.index), None, True, component.index, 0, component.chi,
                          component.boundary_circles) for component in fiber.components]
    gluing = Gluing(None, level, cylinders, [])
    gluing.oracle_chi = fiber.chi
    gluing.cut_chi = fiber.chi
    gluing.components = len(fiber.components)
    gluing.checks['labels_paired'] = True
    gluing.checks['two_way_chi'] = gluing.chi == fiber.chi
    return gluing


def glue_cylinders(graph, region, level, logger=None, within=None):
    """
    Cylinders over the strip pieces at `level`, glued to the graph by edge labels
    :param graph: FiberGraph over the strip's cut built on the strip grid (the critical quotient at
                  the cut level); None when the domain has no cuts
    :param region: Strip around the cut, or a MotionRegion for a domain without cuts
    :param within: cells the gluing is restricted to, one side of the focal line at b
    :rtype: Gluing
    """
    logger = logger or logging.getLogger(__name__)
    if isinstance(region, MotionRegion) or graph is None:
        return _closed_gluing(region, level, logger)
    strip = region
    grid = strip.grid
    cut = strip.cut
    cut_keys = cut_keys_of(grid, cut)
    segment_of = graph.segment_of_key()
    cylinders = []
    table = []
    for piece, cells in enumerate(strip.pieces()):
        if within is not None:
            cells = cells & within
        fiber = build_fiber(grid, level, mask=cells, free_keys=cut_keys, whiskers=False, logger=logger)
        if fiber.empty:
            continue
        names = {}
        inner = piece < strip.nu
        for component in fiber.components:
            cell, beta = fiber.faces_of(component.index)[0]
            across = across_sign(grid, cut, cell, beta)
            names[component.index] = 'C^{0}_{1}'.format('R' if across > 0 else 'L', piece)
            cylinders.append(Cylinder(names[component.index], piece, inner, component.index, across, component.chi,
                                      component.boundary_circles))
        for component, key, label in _label_sides(fiber, graph, grid, cut, cut_keys, segment_of):
            table.append(GluingEntry(names[component], key, label))
    usage = Counter((entry.key, entry.label) for entry in table)
    unpaired = sorted(item for item, count in usage.items() if count != 2)
    if unpaired:
        raise IntegrityError('Gluing labels at level {0} are not used exactly twice'.format(level),
                             {'unpaired': unpaired[:10]})
    gluing = Gluing(graph, level, cylinders, table)
    gluing.checks['labels_paired'] = True
    gluing.checks['cylinders_are_annuli'] = all(cylinder.chi == 0 and cylinder.circles == 2 for cylinder in cylinders)
    _two_way(gluing, graph, grid, cut, cut_keys, segment_of, level, within, logger)
    logger.debug('Glued {0} over cut lambda={1}'.format(gluing, cut.lambda_i))
    return gluing


def _two_way(gluing, graph, grid, cut, cut_keys, segment_of, level, within, logger):
    """
    The whole fiber against the fiber cut open along the arc plus the graph: chi and components
    """
    oracle = build_fiber(grid, level, mask=within, logger=logger)
    cut_fiber = build_fiber(grid, level, mask=within, free_keys=cut_keys, logger=logger)
    gluing.oracle_chi = oracle.chi
    gluing.cut_chi = cut_fiber.chi
    gluing.checks['two_way_chi'] = oracle.chi == graph.chi + cut_fiber.chi
    offset = len(cut_fiber.components)
    names = dict((name, offset + index) for index, name in enumerate(graph.vertices))
    edges = dict((edge.label, edge) for edge in graph.edges)
    pairs = [(names[edge.source], names[edge.target]) for edge in graph.edges]
    for component, key, label in _label_sides(cut_fiber, graph, grid, cut, cut_keys, segment_of):
        edge = edges.get(label)
        if edge is None:
            raise IntegrityError('Label {0} has no edge in the graph'.format(label))
        pairs.append((component, names[edge.source]))
    count, _ = connected_labels(offset + len(names), pairs)
    gluing.components = count
    gluing.checks['two_way_components'] = count == len(oracle.components)
    for name, passed in gluing.checks.items():
        if not passed:
            logger.warning('Gluing check {0} failed at level {1} over cut lambda={2}'.format(name, level, cut.lambda_i))
