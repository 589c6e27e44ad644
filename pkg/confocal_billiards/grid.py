#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Rectilinear grid on the unfolded elliptic chart.

Every boundary arc, cut arc and caustic is a grid line, so membership, components and
adjacency are exact combinatorics; refining only subdivides cells.
Cell (i, j) spans [u_i, u_i+1] x [v_j, v_j+1]. Cell sides: S0 = u_i, S1 = u_i+1,
S2 = v_j, S3 = v_j+1. Corners: 0 = (u_i, v_j), 1 = (u_i+1, v_j), 2 = (u_i, v_j+1),
3 = (u_i+1, v_j+1). The last u-row lies outside every domain.
"""
import logging
import math

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from confocal_billiards.chart import (TWO_PI, HALF_PI, AXIS_VALUES, u_of_lambda_e, phi_of_lambda_h,
                                      lambda_e_of_u, lambda_h_of_v, from_chart)
from confocal_billiards.exceptions import IntegrityError, InvalidInputError

SIDE_U_LO, SIDE_U_HI, SIDE_V_LO, SIDE_V_HI = 0, 1, 2, 3
SIDE_CORNERS = {SIDE_U_LO: (0, 2), SIDE_U_HI: (1, 3), SIDE_V_LO: (0, 1), SIDE_V_HI: (2, 3)}
OPPOSITE_SIDE = {SIDE_U_LO: SIDE_U_HI, SIDE_U_HI: SIDE_U_LO, SIDE_V_LO: SIDE_V_HI, SIDE_V_HI: SIDE_V_LO}
MERGE_TOLERANCE = 1e-12
LAMBDA_SNAP = 1e-9


def lambda_lines(family, lam):
    """
    Chart lines of the quadric lam: (u values, v values)
    """
    if lam > family.a + 1e-12:
        return [], []
    if abs(lam - family.b) <= 1e-12:
        return [0.0], [0.0, math.pi]
    if abs(lam - family.a) <= 1e-12:
        return [], [HALF_PI, 1.5 * math.pi]
    if lam < family.b:
        return [u_of_lambda_e(family, lam)], []
    phi = phi_of_lambda_h(family, lam)
    return [], [phi, math.pi - phi, math.pi + phi, TWO_PI - phi]


def _merge(values):
    merged = []
    for value in sorted(values):
        if not merged or value - merged[-1] > MERGE_TOLERANCE:
            merged.append(value)
        else:
            merged[-1] = max(merged[-1], value) if merged[-1] != 0.0 else 0.0
    return merged


def _refine(breaks, step):
    refined = [breaks[0]]
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        pieces = max(1, int(math.ceil((hi - lo) / step - 1e-9)))
        refined.extend(lo + (hi - lo) * k / float(pieces) for k in range(1, pieces))
        refined.append(hi)
    return np.array(refined)


def connected_labels(node_count, pairs):
    """
    Component label of each node of the graph given by index pairs
    """
    if node_count == 0:
        return 0, np.zeros(0, dtype=int)
    if pairs:
        pairs = np.asarray(pairs, dtype=int)
        rows, cols = pairs[:, 0], pairs[:, 1]
    else:
        rows = cols = np.zeros(0, dtype=int)
    adjacency = scipy.sparse.coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(node_count, node_count)).tocsr()
    return scipy.sparse.csgraph.connected_components(adjacency, directed=False)


class ChartGrid(object):
    def __init__(self, family, u_lines, v_lines, known_lambdas=(), logger=None):
        self.family = family
        self.u = np.asarray(u_lines, dtype=float)
        self.v = np.asarray(v_lines, dtype=float)
        self.nu = len(self.u) - 1
        self.nv = len(self.v) - 1
        self.known_lambdas = sorted(set(float(lam) for lam in known_lambdas))
        self.wall_u = np.zeros((self.nu + 1, self.nv), dtype=bool)
        self.wall_v = np.zeros((self.nu, self.nv), dtype=bool)
        self.inside = np.zeros((self.nu, self.nv), dtype=bool)
        self.corner_keys = {}
        self._logger = logger or logging.getLogger(__name__)

    @classmethod
    def build(cls, domain, lambdas=(), resolution=32, logger=None):
        """
        Grid carrying the boundary of a domain and the chart lines of the given quadrics
        :param domain: BilliardDomain
        :param lambdas: quadric parameters whose lines must be present (caustics, cuts, strip edges)
        :param resolution: target number of cells along each chart coordinate
        :rtype: ChartGrid
        """
        family = domain.family
        lines = [arc.chart_line() for arc in domain.arcs]
        u_breaks = [0.0]
        v_breaks = list(AXIS_VALUES[:3])
        known = set()
        for arc in domain.arcs:
            known.add(arc.quadric.lam)
        for line in lines:
            if line.axis == 'u':
                u_breaks.append(line.value)
                v_breaks.extend([line.start, line.end])
            else:
                v_breaks.append(line.value)
                u_breaks.extend([line.start, line.end])
        for arc in domain.arcs:
            known.update(arc.endpoint_lambdas())
        for lam in lambdas:
            if lam > family.a + 1e-12:
                continue
            known.add(float(lam))
            extra_u, extra_v = lambda_lines(family, lam)
            u_breaks.extend(extra_u)
            v_breaks.extend(extra_v)
        u_max = max(u_breaks)
        u_out = u_max * 1.25 + 0.1
        u_breaks.append(u_out)
        half = [min(v % TWO_PI, TWO_PI - v % TWO_PI) if v % TWO_PI > math.pi else v % TWO_PI for v in v_breaks]
        half = _merge([min(max(v, 0.0), math.pi) for v in half] + [0.0, HALF_PI, math.pi])
        resolution = max(int(resolution), 4)
        u_lines = _refine(_merge([min(max(u, 0.0), u_out) for u in u_breaks]), u_out / resolution)
        upper = _refine(half, TWO_PI / resolution)
        lower = TWO_PI - upper[::-1]
        v_lines = np.concatenate([upper, lower[1:]])
        grid = cls(family, u_lines, v_lines, known, logger)
        for index, line in enumerate(lines):
            grid._mark_line(line, grid.wall_u, grid.wall_v)
        grid._fill_inside()
        grid._register_corners(domain)
        grid._logger.debug('Chart grid {0}x{1} cells, {2} inside'.format(grid.nu, grid.nv, int(grid.inside.sum())))
        return grid

    # indices

    def u_index(self, value):
        index = int(np.argmin(np.abs(self.u - value)))
        if abs(self.u[index] - value) > 1e-9:
            raise IntegrityError('u line {0} is not part of the grid'.format(value))
        return index

    def v_index(self, value):
        value = value % TWO_PI if abs(value - TWO_PI) > 1e-9 else 0.0
        index = int(np.argmin(np.abs(self.v - value)))
        if abs(self.v[index] - value) > 1e-9:
            raise IntegrityError('v line {0} is not part of the grid'.format(value))
        return index % self.nv

    def mirror(self, j):
        return self.nv - 1 - j

    def mirror_line(self, j):
        return (self.nv - j) % self.nv

    def vertex_key(self, i, j):
        j %= self.nv
        if i == 0:
            j = min(j, (self.nv - j) % self.nv)
        return i, j

    def corner_vertex(self, i, j, corner):
        return self.vertex_key(i + (corner & 1), j + (corner >> 1))

    def edge_key(self, i, j, side):
        """
        Canonical key of a cell side: ('u', i, j) for u-lines, ('v', i, j) for v-lines
        """
        if side == SIDE_U_LO:
            if i == 0:
                return 'u', 0, min(j, self.mirror(j))
            return 'u', i, j
        if side == SIDE_U_HI:
            return 'u', i + 1, j
        if side == SIDE_V_LO:
            return 'v', i, j % self.nv
        return 'v', i, (j + 1) % self.nv

    def edge_cells(self, key):
        """
        The (up to) two cells adjacent to a canonical edge, None for the far side of the outer row
        """
        axis, i, j = key
        if axis == 'u':
            if i == 0:
                return (0, j), (0, self.mirror(j))
            lower = (i - 1, j)
            upper = (i, j) if i < self.nu else None
            return lower, upper
        return (i, (j - 1) % self.nv), (i, j)

    def edge_vertices(self, key):
        axis, i, j = key
        if axis == 'u':
            return self.vertex_key(i, j), self.vertex_key(i, j + 1)
        return self.vertex_key(i, j), self.vertex_key(i + 1, j)

    def neighbor(self, i, j, side):
        if side == SIDE_U_LO:
            return (0, self.mirror(j)) if i == 0 else (i - 1, j)
        if side == SIDE_U_HI:
            return (i + 1, j) if i + 1 < self.nu else None
        if side == SIDE_V_LO:
            return i, (j - 1) % self.nv
        return i, (j + 1) % self.nv

    def is_wall(self, key, extra=None):
        axis, i, j = key
        if axis == 'u':
            hit = self.wall_u[i, j] or (i == 0 and self.wall_u[0, self.mirror(j)])
            return bool(hit or (extra is not None and (extra[0][i, j] or (i == 0 and extra[0][0, self.mirror(j)]))))
        return bool(self.wall_v[i, j] or (extra is not None and extra[1][i, j]))

    def cell_center(self, i, j):
        return 0.5 * (self.u[i] + self.u[i + 1]), 0.5 * (self.v[j] + self.v[j + 1])

    def vertex_chart(self, key):
        i, j = key
        return self.u[i], self.v[j]

    def vertex_point(self, key):
        u, v = self.vertex_chart(key)
        return from_chart(self.family, u, v)

    def locate(self, u, v):
        i = int(np.clip(np.searchsorted(self.u, u, side='right') - 1, 0, self.nu - 1))
        j = int(np.clip(np.searchsorted(self.v, v % TWO_PI, side='right') - 1, 0, self.nv - 1))
        return i, j

    def snap_lambda(self, lam):
        for known in self.known_lambdas:
            if abs(known - lam) <= LAMBDA_SNAP:
                return known
        return lam

    def lambda_e_of_line(self, i):
        return self.snap_lambda(lambda_e_of_u(self.family, self.u[i]))

    def lambda_h_of_line(self, j):
        return self.snap_lambda(lambda_h_of_v(self.family, self.v[j]))

    # construction

    def empty_walls(self):
        return np.zeros_like(self.wall_u), np.zeros_like(self.wall_v)

    def _mark_line(self, line, wall_u, wall_v):
        lo, hi = sorted((line.start, line.end))
        if line.axis == 'u':
            i = self.u_index(line.value)
            for j in range(self.nv):
                if self.v[j] >= lo - 1e-9 and self.v[j + 1] <= hi + 1e-9:
                    wall_u[i, j] = True
                    if i == 0:
                        wall_u[0, self.mirror(j)] = True
        else:
            j = self.v_index(line.value)
            for i in range(self.nu):
                if self.u[i] >= lo - 1e-9 and self.u[i + 1] <= hi + 1e-9:
                    wall_v[i, j] = True

    def _fill_inside(self):
        labels = self.components(np.ones((self.nu, self.nv), dtype=bool))
        outer = labels[self.nu - 1, 0]
        self.inside = labels != outer
        if self.inside[self.nu - 1].any():
            raise IntegrityError('Domain reaches the outer grid row')

    def _register_corners(self, domain):
        for index, corner in enumerate(domain.corners):
            u, v = domain.arcs[corner.incident_arcs[1]].chart_line().start_chart
            self.corner_keys[self.vertex_key(self.u_index(u), self.v_index(v))] = corner

    def quadric_walls(self, lam):
        """
        Wall arrays along every chart line of the quadric lam
        """
        wall_u, wall_v = self.empty_walls()
        us, vs = lambda_lines(self.family, lam)
        for u in us:
            i = self.u_index(u)
            wall_u[i, :] = True
        for v in vs:
            wall_v[:, self.v_index(v)] = True
        return wall_u, wall_v

    # queries

    def cell_graph_pairs(self, mask, extra=None):
        index = -np.ones((self.nu, self.nv), dtype=int)
        cells = np.argwhere(mask)
        index[mask] = np.arange(len(cells))
        pairs = []
        for i, j in cells:
            for side in (SIDE_U_LO, SIDE_V_LO):
                other = self.neighbor(i, j, side)
                if other is None or not mask[other]:
                    continue
                if self.is_wall(self.edge_key(i, j, side), extra):
                    continue
                pairs.append((index[i, j], index[other]))
        return index, pairs

    def components(self, mask, extra=None):
        """
        Component label per cell (-1 outside the mask); walls and extra walls separate cells
        """
        mask = np.asarray(mask, dtype=bool)
        index, pairs = self.cell_graph_pairs(mask, extra)
        count, labels = connected_labels(int(mask.sum()), pairs)
        result = -np.ones((self.nu, self.nv), dtype=int)
        result[mask] = labels
        return result

    def region_mask(self, lam):
        """
        Cells of the chart inside the region of possible motion of the caustic lam
        """
        family = self.family
        if lam > family.a + 1e-12:
            raise InvalidInputError('Caustic parameter {0} exceeds a={1}'.format(lam, family.a))
        centers_u = 0.5 * (self.u[:-1] + self.u[1:])
        centers_v = 0.5 * (self.v[:-1] + self.v[1:])
        if abs(lam - family.b) <= 1e-12:
            return np.ones((self.nu, self.nv), dtype=bool)
        if lam < family.b:
            lambda_e = family.b - family.d * np.sinh(centers_u) ** 2
            return np.repeat((lambda_e <= lam)[:, None], self.nv, axis=1)
        lambda_h = family.b + family.d * np.sin(centers_v) ** 2
        return np.repeat((lambda_h >= lam)[None, :], self.nu, axis=0)

    def in_region(self, key, lam):
        """
        Whether a grid edge lies in the closed region of possible motion of lam
        """
        family = self.family
        if abs(lam - family.b) <= 1e-12:
            return True
        axis, i, j = key
        if axis == 'u':
            u = self.u[i]
            v = 0.5 * (self.v[j] + self.v[j + 1])
        else:
            u = 0.5 * (self.u[i] + self.u[i + 1])
            v = self.v[j]
        if lam < family.b:
            return lambda_e_of_u(family, u) <= lam + 1e-12
        return lambda_h_of_v(family, v) >= lam - 1e-12

    def caustic_edges(self, lam):
        """
        Canonical keys of every grid edge lying on the chart lines of the caustic lam
        """
        keys = set()
        us, vs = lambda_lines(self.family, lam)
        for u in us:
            i = self.u_index(u)
            for j in range(self.nv):
                keys.add(self.edge_key(i, j, SIDE_U_LO) if i == 0 else ('u', i, j))
        for v in vs:
            j = self.v_index(v)
            for i in range(self.nu):
                keys.add(('v', i, j))
        return keys

    def focal_edges(self):
        """
        Grid edges on the focal line: (key, x_lo, x_hi)
        """
        c = self.family.c
        edges = []
        for j in range(self.nv // 2):
            edges.append((('u', 0, j), c * math.cos(self.v[j + 1]), c * math.cos(self.v[j])))
        j_pi = self.v_index(math.pi)
        for i in range(self.nu):
            edges.append((('v', i, 0), c * math.cosh(self.u[i]), c * math.cosh(self.u[i + 1])))
            edges.append((('v', i, j_pi), -c * math.cosh(self.u[i + 1]), -c * math.cosh(self.u[i])))
        return edges

    def interior_focal_keys(self):
        """
        Focal line edges with the domain on both sides
        """
        keys = set()
        for key, _, _ in self.focal_edges():
            cells = self.edge_cells(key)
            if all(cell is not None and self.inside[cell] for cell in cells) and not self.is_wall(key):
                keys.add(key)
        return keys

    def half_mask(self, upper):
        """
        Inside cells above (v < pi) or below the focal line
        """
        half = self.v_index(math.pi)
        mask = self.inside.copy()
        if upper:
            mask[:, half:] = False
        else:
            mask[:, :half] = False
        return mask

    def edge_point(self, key, fraction=0.5):
        axis, i, j = key
        if axis == 'u':
            return from_chart(self.family, self.u[i], self.v[j] + fraction * (self.v[j + 1] - self.v[j]))
        return from_chart(self.family, self.u[i] + fraction * (self.u[i + 1] - self.u[i]), self.v[j])

    def cell_areas(self):
        """
        Planar area of every cell, exact: the area element is c^2 (sinh^2 u + sin^2 v) du dv
        """
        u, v = self.u, self.v
        sinh_part = np.diff(np.sinh(2.0 * u) / 4.0 - u / 2.0)
        sin_part = np.diff(v / 2.0 - np.sin(2.0 * v) / 4.0)
        c2 = self.family.d
        return c2 * (np.outer(sinh_part, np.diff(v)) + np.outer(np.diff(u), sin_part))

    def chi_of_cells(self, mask):
        """
        Euler characteristic of the closed union of cells, seam identified
        """
        vertices = set()
        edges = set()
        for i, j in np.argwhere(mask):
            for side in range(4):
                edges.add(self.edge_key(i, j, side))
            for corner in range(4):
                vertices.add(self.corner_vertex(i, j, corner))
        return len(vertices) - len(edges) + int(np.count_nonzero(mask))
