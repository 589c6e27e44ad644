#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Triangulate-and-glue model of a level set of the caustic integral.

A face is a region cell taken with one velocity branch beta: bit 0 set for du < 0, bit 1 set for
dv < 0. Every face carries four side slots and four corner slots; the billiard law identifies
slots across grid edges and the classes of the identification are the cells of the fiber.
"""
import logging
from collections import namedtuple, OrderedDict

import networkx as nx
import numpy as np

from confocal_billiards.domain import AngleClass
from confocal_billiards.exceptions import IntegrityError
from confocal_billiards.grid import (SIDE_U_LO, SIDE_U_HI, SIDE_V_LO, SIDE_V_HI, SIDE_CORNERS, LAMBDA_SNAP,
                                     connected_labels)

FLIP_U, FLIP_V, FLIP_BOTH = 1, 2, 3
BRANCHES = (0, 1, 2, 3)

_OPEN_CORNERS = {
    SIDE_U_HI: (SIDE_U_LO, ((1, 0), (3, 2))),
    SIDE_V_HI: (SIDE_V_LO, ((2, 0), (3, 1))),
}
_SEAM_CORNERS = ((0, 2), (2, 0))


class LinkKind(object):
    OPEN = 'open'
    SEAM = 'seam'
    FLIP = 'flip'


Link = namedtuple('Link', ['kind', 'first', 'second'])
FreeSide = namedtuple('FreeSide', ['key', 'cell', 'beta', 'side'])
BoundaryCircle = namedtuple('BoundaryCircle', ['index', 'component', 'sides'])
FiberComponent = namedtuple('FiberComponent', ['index', 'chi', 'faces', 'vertices', 'edges', 'whiskers',
                                               'boundary_circles', 'punctures', 'genus'])
Whisker = namedtuple('Whisker', ['key', 'axis', 'ends'])


def sign_u(beta):
    return -1 if beta & FLIP_U else 1


def sign_v(beta):
    return -1 if beta & FLIP_V else 1


def branch_of(su, sv):
    return (FLIP_U if su < 0 else 0) | (FLIP_V if sv < 0 else 0)


def _mirrored(grid, raw):
    """
    Whether a raw vertex is the seam image of its canonical key
    """
    i, j = raw
    return i == 0 and j % grid.nv != grid.vertex_key(i, j)[1]


class FiberComplex(object):
    """
    Cell structure of one fiber: vertex classes, edge classes, faces and whisker edges
    """

    def __init__(self, grid, lam, mask, cells, free_keys):
        self.grid = grid
        self.lam = lam
        self.mask = mask
        self.cells = cells
        self.free_keys = free_keys
        self.cell_index = dict((cell, index) for index, cell in enumerate(cells))
        self.links = []
        self.whiskers = []
        self.blowups = []
        self.side_labels = np.zeros(0, dtype=int)
        self.vertex_labels = np.zeros(0, dtype=int)
        self.vertex_component = np.zeros(0, dtype=int)
        self.vertex_count = 0
        self.side_class_count = 0
        self.side_class_sizes = np.zeros(0, dtype=int)
        self.components = []
        self.circles = []
        self.singular = False

    @property
    def face_count(self):
        return 4 * len(self.cells)

    @property
    def edge_count(self):
        return self.side_class_count + 2 * len(self.whiskers) + len(self.blowups)

    @property
    def chi(self):
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def empty(self):
        return not self.cells and not self.whiskers

    def face_id(self, cell, beta):
        return self.cell_index[tuple(cell)] * 4 + beta

    def face_of(self, face):
        return self.cells[face // 4], face % 4

    def corner_class(self, face, corner):
        return int(self.vertex_labels[face * 4 + corner])

    def side_class(self, face, side):
        return int(self.side_labels[face * 4 + side])

    def whisker_slot(self, whisker, sign, end):
        return 4 * self.face_count + 4 * whisker + (0 if sign > 0 else 2) + end

    def component_of(self, cell, beta):
        """
        Fiber component of the face (cell, beta), None when the cell is not part of the fiber
        """
        if tuple(cell) not in self.cell_index:
            return None
        return int(self.vertex_component[self.corner_class(self.face_id(cell, beta), 0)])

    def faces_of(self, component):
        return [self.face_of(face) for face in range(self.face_count)
                if self.vertex_component[self.corner_class(face, 0)] == component]

    def genera(self):
        return sorted(component.genus for component in self.components)

    def summary(self):
        result = OrderedDict()
        result['lambda'] = self.lam
        result['vertices'] = self.vertex_count
        result['edges'] = self.edge_count
        result['faces'] = self.face_count
        result['chi'] = self.chi
        result['components'] = len(self.components)
        result['whiskers'] = len(self.whiskers)
        result['boundary_circles'] = len(self.circles)
        result['singular'] = self.singular
        return result

    def __repr__(self):
        return 'FiberComplex(lambda={0}, V={1}, E={2}, F={3}, components={4})'.format(
            self.lam, self.vertex_count, self.edge_count, self.face_count, len(self.components))


class _Builder(object):
    def __init__(self, complex_, region, reflect_keys, at_b, logger):
        self.fiber = complex_
        self.grid = complex_.grid
        self.region = region
        self.reflect_keys = reflect_keys
        self.at_b = at_b
        self.side_pairs = []
        self.corner_pairs = []
        self._logger = logger

    def _link(self, kind, cell, beta, other, other_beta, side, other_side, corners):
        fiber = self.fiber
        first, second = fiber.face_id(cell, beta), fiber.face_id(other, other_beta)
        self.side_pairs.append((first * 4 + side, second * 4 + other_side))
        for mine, theirs in corners:
            self.corner_pairs.append((first * 4 + mine, second * 4 + theirs))
        fiber.links.append(Link(kind, first, second))

    def link_sides(self, caustic):
        grid = self.grid
        fiber = self.fiber
        for cell in fiber.cells:
            i, j = cell
            for side in (SIDE_U_LO, SIDE_U_HI, SIDE_V_LO, SIDE_V_HI):
                key = grid.edge_key(i, j, side)
                if key in fiber.free_keys:
                    continue
                other = grid.neighbor(i, j, side)
                open_neighbor = other is not None and bool(fiber.mask[other])
                wall = grid.is_wall(key) or key in self.reflect_keys
                if wall or key in caustic:
                    bit = FLIP_U if side in (SIDE_U_LO, SIDE_U_HI) else FLIP_V
                    corners = [(corner, corner) for corner in SIDE_CORNERS[side]]
                    for beta in BRANCHES:
                        if beta < beta ^ bit:
                            self._link(LinkKind.FLIP, cell, beta, cell, beta ^ bit, side, side, corners)
                    if wall or not (self.at_b and open_neighbor):
                        continue
                elif not open_neighbor:
                    continue
                if side in _OPEN_CORNERS:
                    other_side, corners = _OPEN_CORNERS[side]
                    for beta in BRANCHES:
                        self._link(LinkKind.OPEN, cell, beta, other, beta, side, other_side, corners)
                elif side == SIDE_U_LO and i == 0 and j < grid.mirror(j):
                    for beta in BRANCHES:
                        self._link(LinkKind.SEAM, cell, beta, other, beta ^ FLIP_BOTH, side, SIDE_U_LO, _SEAM_CORNERS)

    def blow_up_foci(self):
        grid = self.grid
        fiber = self.fiber
        half = grid.nv // 2
        foci = (((0, 0), (0, grid.nv - 1), ('u', 0, 0), ('v', 0, 0)),
                ((0, half - 1), (0, half), ('u', 0, half - 1), ('v', 0, half)))
        for first, second, u_key, v_key in foci:
            if not (fiber.mask[first] and fiber.mask[second]):
                continue
            if any(grid.is_wall(key) or key in self.reflect_keys or key in fiber.free_keys for key in (u_key, v_key)):
                continue
            fiber.blowups.append((first, second))

    def find_whiskers(self, caustic):
        grid = self.grid
        fiber = self.fiber
        for key in sorted(caustic - fiber.free_keys):
            adjacent = [cell for cell in grid.edge_cells(key) if cell is not None]
            if any(self.region[cell] for cell in adjacent):
                continue
            if not any(grid.inside[cell] for cell in adjacent):
                continue
            axis, i, j = key
            ends = ((i, j), (i, j + 1)) if axis == 'u' else ((i, j), (i + 1, j))
            fiber.whiskers.append(Whisker(key, axis, ends))

    def link_whiskers(self):
        """
        Whisker ends meeting at a vertex continue each other with equal along sign, join the faces
        moving the same way and turn back at a dead end
        """
        grid = self.grid
        fiber = self.fiber
        if not fiber.whiskers:
            return
        corners_at = {}
        for cell in fiber.cells:
            i, j = cell
            for corner in range(4):
                raw = (i + (corner & 1), j + (corner >> 1))
                corners_at.setdefault(grid.vertex_key(*raw), []).append((cell, corner, raw))
        ends_at = {}
        for index, whisker in enumerate(fiber.whiskers):
            for end, raw in enumerate(whisker.ends):
                flip = -1 if _mirrored(grid, raw) else 1
                ends_at.setdefault(grid.vertex_key(*raw), []).append((index, end, flip, whisker.axis))
        for vertex, ends in ends_at.items():
            by_sign = {}
            for index, end, flip, axis in ends:
                for sign in (1, -1):
                    by_sign.setdefault(sign * flip, []).append((fiber.whisker_slot(index, sign, end), axis))
            for slots in by_sign.values():
                for slot, _ in slots[1:]:
                    self.corner_pairs.append((slots[0][0], slot))
            faces = corners_at.get(vertex, [])
            for canonical_sign, slots in by_sign.items():
                for slot, axis in slots:
                    for cell, corner, raw in faces:
                        for beta in BRANCHES:
                            canonical_beta = beta ^ FLIP_BOTH if _mirrored(grid, raw) else beta
                            along = sign_v(canonical_beta) if axis == 'u' else sign_u(canonical_beta)
                            if along == canonical_sign:
                                self.corner_pairs.append((slot, fiber.face_id(cell, beta) * 4 + corner))
            if len(ends) == 1 and not faces:
                index, end = ends[0][0], ends[0][1]
                self.corner_pairs.append((fiber.whisker_slot(index, 1, end), fiber.whisker_slot(index, -1, end)))

    def classify(self):
        fiber = self.fiber
        slot_count = 4 * fiber.face_count
        fiber.side_class_count, fiber.side_labels = connected_labels(slot_count, self.side_pairs)
        fiber.side_class_sizes = np.bincount(fiber.side_labels, minlength=fiber.side_class_count)
        fiber.vertex_count, fiber.vertex_labels = connected_labels(slot_count + 4 * len(fiber.whiskers),
                                                                   self.corner_pairs)
        fiber.singular = bool(self.at_b or fiber.whiskers or (fiber.side_class_sizes > 2).any())

    def assemble_components(self, singular_keys):
        fiber = self.fiber
        grid = self.grid
        labels = fiber.vertex_labels
        pairs = []
        for face in range(fiber.face_count):
            for corner in (1, 2, 3):
                pairs.append((labels[face * 4], labels[face * 4 + corner]))
        for index in range(len(fiber.whiskers)):
            for sign in (1, -1):
                pairs.append((labels[fiber.whisker_slot(index, sign, 0)], labels[fiber.whisker_slot(index, sign, 1)]))
        count, fiber.vertex_component = connected_labels(fiber.vertex_count, pairs)
        component = fiber.vertex_component

        faces = np.zeros(count, dtype=int)
        vertices = np.bincount(component, minlength=count) if count else np.zeros(0, dtype=int)
        edges = np.zeros(count, dtype=int)
        whiskers = np.zeros(count, dtype=int)
        for face in range(fiber.face_count):
            faces[component[labels[face * 4]]] += 1
        side_component = -np.ones(fiber.side_class_count, dtype=int)
        for slot in range(4 * fiber.face_count):
            side_component[fiber.side_labels[slot]] = component[labels[(slot // 4) * 4]]
        for value in side_component:
            edges[value] += 1
        for index in range(len(fiber.whiskers)):
            owner = component[labels[fiber.whisker_slot(index, 1, 0)]]
            edges[owner] += 2
            whiskers[owner] += 1
        for first, _ in fiber.blowups:
            edges[component[labels[fiber.face_id(first, 0) * 4]]] += 1

        punctured = [set() for _ in range(count)]
        for face in range(fiber.face_count):
            (i, j), _ = fiber.face_of(face)
            for corner in range(4):
                if grid.corner_vertex(i, j, corner) in singular_keys:
                    vertex_class = labels[face * 4 + corner]
                    punctured[component[vertex_class]].add(int(vertex_class))

        circle_count = self._boundary_circles(count)
        for index in range(count):
            chi = int(vertices[index] - edges[index] + faces[index])
            genus = None
            if not fiber.singular:
                twice = 2 - chi - circle_count[index]
                if twice < 0 or twice % 2:
                    raise IntegrityError('Fiber component {0} at lambda={1} has chi={2} with {3} boundary circles'.format(
                        index, fiber.lam, chi, circle_count[index]), {'chi': chi, 'circles': int(circle_count[index])})
                genus = twice // 2
            fiber.components.append(FiberComponent(index, chi, int(faces[index]), int(vertices[index]),
                                                   int(edges[index]), int(whiskers[index]), int(circle_count[index]),
                                                   len(punctured[index]), genus))

    def _boundary_circles(self, count):
        """
        Free edges are side classes of a single slot; their components are the boundary circles
        """
        fiber = self.fiber
        labels = fiber.vertex_labels
        graph = nx.MultiGraph()
        free_sides = {}
        for slot in range(4 * fiber.face_count):
            if fiber.side_class_sizes[fiber.side_labels[slot]] != 1:
                continue
            face, side = slot // 4, slot % 4
            first, second = (labels[face * 4 + corner] for corner in SIDE_CORNERS[side])
            graph.add_edge(int(first), int(second), slot=slot)
            free_sides[slot] = face
        circle_count = np.zeros(count, dtype=int)
        circles = sorted((sorted(nodes) for nodes in nx.connected_components(graph)), key=lambda nodes: nodes[0])
        for index, nodes in enumerate(circles):
            sides = []
            for _, _, data in sorted(graph.subgraph(nodes).edges(data=True), key=lambda edge: edge[2]['slot']):
                face = data['slot'] // 4
                cell, beta = fiber.face_of(face)
                side = data['slot'] % 4
                sides.append(FreeSide(self.grid.edge_key(cell[0], cell[1], side), cell, beta, side))
            owner = int(fiber.vertex_component[nodes[0]])
            circle_count[owner] += 1
            fiber.circles.append(BoundaryCircle(index, owner, sides))
        return circle_count

    def check_orientation(self):
        """
        Open and seam links keep su*sv, flips reverse it
        """
        violations = []
        for link in self.fiber.links:
            first = sign_u(link.first % 4) * sign_v(link.first % 4)
            second = sign_u(link.second % 4) * sign_v(link.second % 4)
            expected = link.kind != LinkKind.FLIP
            if (first == second) != expected:
                violations.append(link)
        if violations:
            raise IntegrityError('Non-orientable gluing in the fiber at lambda={0}'.format(self.fiber.lam),
                                 {'links': violations[:10]})


def build_fiber(grid, lam, mask=None, free_keys=(), reflect_keys=(), whiskers=None, logger=None):
    """
    Fiber of the caustic integral over a union of region cells
    :type grid: confocal_billiards.grid.ChartGrid
    :param lam: caustic parameter, its chart lines must be grid lines
    :param mask: cells to use, intersected with the region of possible motion; the whole region by default
    :param free_keys: edge keys cut open without the billiard law
    :param reflect_keys: extra edge keys acting as walls
    :param whiskers: add the one-dimensional cells over caustic arcs without region; by default only
                     when the whole region is used
    :rtype: FiberComplex
    """
    logger = logger or logging.getLogger(__name__)
    family = grid.family
    at_b = abs(lam - family.b) <= LAMBDA_SNAP
    region = grid.inside & grid.region_mask(lam)
    full = mask is None
    mask = region if full else np.asarray(mask, dtype=bool) & region
    whiskers = full if whiskers is None else whiskers
    cells = [tuple(int(value) for value in cell) for cell in np.argwhere(mask)]
    fiber = FiberComplex(grid, lam, mask, cells, set(free_keys))
    builder = _Builder(fiber, region, set(reflect_keys), at_b, logger)
    caustic = grid.caustic_edges(lam)
    builder.link_sides(caustic)
    if at_b:
        builder.blow_up_foci()
    elif whiskers:
        builder.find_whiskers(caustic)
        builder.link_whiskers()
    builder.classify()
    singular_keys = set(key for key, corner in grid.corner_keys.items()
                        if corner.angle_class == AngleClass.THREE_QUARTER)
    builder.assemble_components(singular_keys)
    builder.check_orientation()
    logger.debug('Fiber at lambda={0}: V={1} E={2} F={3} chi={4}, {5} components, {6} whiskers'.format(
        lam, fiber.vertex_count, fiber.edge_count, fiber.face_count, fiber.chi, len(fiber.components),
        len(fiber.whiskers)))
    return fiber


def _focal_link(grid, key):
    """
    The link the singular level puts across a focal edge: (first cell, side, second cell, side,
    corner pairs, branch change)
    """
    axis, i, j = key
    if axis == 'u':
        return (0, j), SIDE_U_LO, (0, grid.mirror(j)), SIDE_U_LO, _SEAM_CORNERS, FLIP_BOTH
    other_side, corners = _OPEN_CORNERS[SIDE_V_HI]
    return (i, (j - 1) % grid.nv), SIDE_V_HI, (i, j), other_side, corners, 0


def interior_foci(grid, keys):
    half = grid.nv // 2
    foci = ((('u', 0, 0), ('v', 0, 0)), (('u', 0, half - 1), ('v', 0, half)))
    return sum(1 for pair in foci if all(key in keys for key in pair))


FocalGluing = namedtuple('FocalGluing', ['keys', 'boundary_chi', 'graph_chi', 'vertices', 'edges', 'foci'])


def reglue_halves(top, bottom, keys):
    """
    Reglue the fibers over the two halves at b along the focal edges `keys`. Over every focal edge
    each half carries the two mirror edges of the velocity along the line; the letter of an edge is
    its branch, and equal letters across the line are identified together with their corners.
    :type top: FiberComplex
    :type bottom: FiberComplex
    :return: FocalGluing; boundary_chi is the Euler characteristic of the mirror edges of both halves,
             graph_chi the one of the reglued focal graph
    """
    grid = top.grid
    halves = (top, bottom)
    vertex_nodes = {}
    edge_nodes = {}
    vertex_pairs = []
    edge_pairs = []

    def owner(cell):
        for tag, half in enumerate(halves):
            if cell in half.cell_index:
                return tag, half
        return None, None

    for key in sorted(keys):
        first, side, second, other_side, corners, bit = _focal_link(grid, key)
        (first_tag, first_half), (second_tag, second_half) = owner(first), owner(second)
        if first_half is None or second_half is None or first_tag == second_tag:
            continue
        for beta in BRANCHES:
            mine = first_half.face_id(first, beta)
            theirs = second_half.face_id(second, beta ^ bit)
            edge_pairs.append((edge_nodes.setdefault((first_tag, first_half.side_class(mine, side)), len(edge_nodes)),
                               edge_nodes.setdefault((second_tag, second_half.side_class(theirs, other_side)),
                                                     len(edge_nodes))))
            for my_corner, their_corner in corners:
                vertex_pairs.append(
                    (vertex_nodes.setdefault((first_tag, first_half.corner_class(mine, my_corner)), len(vertex_nodes)),
                     vertex_nodes.setdefault((second_tag, second_half.corner_class(theirs, their_corner)),
                                             len(vertex_nodes))))
    vertex_count, _ = connected_labels(len(vertex_nodes), vertex_pairs)
    edge_count, _ = connected_labels(len(edge_nodes), edge_pairs)
    return FocalGluing(sorted(keys), len(vertex_nodes) - len(edge_nodes), vertex_count - edge_count,
                       vertex_count, edge_count, interior_foci(grid, keys))
