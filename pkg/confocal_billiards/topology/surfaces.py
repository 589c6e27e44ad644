#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Regular fibers: the surfaces predicted from the singular counts of the region of possible
motion, checked against the triangulate-and-glue oracle.
"""
import logging
from collections import namedtuple, OrderedDict

import numpy as np

from confocal_billiards.chart import to_chart, chart_frame, from_chart
from confocal_billiards.decomposition import (Rule, critical_lambdas, motion_region, region_on_grid, kept_side,
                                              singular_vertices_of)
from confocal_billiards.dynamics import phase_point, trajectory
from confocal_billiards.exceptions import DomainError, InvalidInputError, IntegrityError
from confocal_billiards.geometry import LAMBDA_TOLERANCE, caustic_directions
from confocal_billiards.grid import ChartGrid, connected_labels
from confocal_billiards.topology.fiber_complex import build_fiber, branch_of

REGULAR_GAP = 1e-9


class SurfaceComponent(namedtuple('SurfaceComponent', ['genus', 'punctures', 'orientable'])):
    def __new__(cls, genus, punctures, orientable=True):
        return super(SurfaceComponent, cls).__new__(cls, genus, punctures, orientable)

    @property
    def chi(self):
        return 2 - 2 * self.genus


class FiberSurface(object):
    """
    Closed surfaces of a fiber, punctures filled; the oracle complex and its agreement ride along
    """

    def __init__(self, lam, components, oracle=None, region=None):
        self.lam = lam
        self.components = list(components)
        self.oracle = oracle
        self.region = region
        self.annotations = OrderedDict()
        self.checks = OrderedDict()

    @property
    def chi(self):
        return sum(component.chi for component in self.components)

    @property
    def genera(self):
        return sorted(component.genus for component in self.components)

    @property
    def empty(self):
        return not self.components

    @property
    def agrees(self):
        return all(self.checks.values())

    def __repr__(self):
        return 'FiberSurface(lambda={0}, {1})'.format(
            self.lam, ', '.join('g={0} p={1}'.format(c.genus, c.punctures) for c in self.components) or 'empty')


def predicted_components(region):
    """
    Surfaces over each component of the region: genus k'+1 with k' punctures, an annulus without
    singular points carries two tori (the two senses of rotation)
    :type region: confocal_billiards.decomposition.MotionRegion
    """
    components = []
    for component in region.components:
        k_prime = component.k_prime
        if component.chi == 0 and k_prime == 0:
            components.extend([SurfaceComponent(1, 0), SurfaceComponent(1, 0)])
        else:
            components.append(SurfaceComponent(k_prime + 1, k_prime))
    return components


def _oracle_components(fiber):
    return sorted((component.genus, component.punctures) for component in fiber.components)


def _require_regular(domain, lam):
    family = domain.family
    if lam > family.a + LAMBDA_TOLERANCE:
        raise InvalidInputError('Caustic parameter {0} exceeds a={1}'.format(lam, family.a))
    for value in critical_lambdas(domain):
        if abs(value - lam) <= REGULAR_GAP:
            raise DomainError('lambda={0} is a critical value of {1}'.format(lam, domain.name))


def regular_fiber(domain, lam, partition_result=None, resolution=32, logger=None):
    """
    Regular fiber of the caustic integral, predicted and recomputed by the oracle
    :type domain: confocal_billiards.domain.BilliardDomain
    :rtype: FiberSurface
    """
    logger = logger or logging.getLogger(__name__)
    _require_regular(domain, lam)
    region = motion_region(domain, lam, partition_result, resolution=resolution, logger=logger)
    predicted = predicted_components(region)
    oracle = build_fiber(region.grid, lam, logger=logger)
    surface = FiberSurface(lam, predicted, oracle, region)
    expected = sorted((component.genus, component.punctures) for component in predicted)
    found = _oracle_components(oracle)
    surface.checks['oracle_agreement'] = expected == found
    if expected != found:
        raise IntegrityError('Oracle fiber at lambda={0} disagrees with the prediction for {1}'.format(
            lam, domain.name), {'predicted': expected, 'oracle': found, 'chi': oracle.chi})
    logger.info('Regular fiber of {0} at lambda={1}: {2}'.format(domain.name, lam, surface))
    return surface


def _theta_arcs(grid, keys, mask):
    """
    Arcs of the cut line crossing the region, as components of the edges with region on both sides
    """
    crossing = []
    for key in sorted(keys):
        cells = [cell for cell in grid.edge_cells(key) if cell is not None]
        if len(cells) == 2 and all(mask[cell] for cell in cells):
            crossing.append(key)
    vertex_ids = {}
    pairs = []
    for key in crossing:
        ends = [vertex_ids.setdefault(vertex, len(vertex_ids)) for vertex in grid.edge_vertices(key)]
        pairs.append(tuple(ends))
    if not crossing:
        return 0
    count, labels = connected_labels(len(vertex_ids), pairs)
    return len(set(int(labels[pair[0]]) for pair in pairs))


def _inner_side(grid, theta):
    inner = np.zeros_like(grid.inside)
    for i, j in np.argwhere(grid.inside):
        u, v = grid.cell_center(i, j)
        inner[i, j] = kept_side(grid.family, u, v, theta, Rule.HYPERBOLIC)
    return inner


def cut_fiber_prediction(domain, theta, lam, resolution=32, logger=None):
    """
    Fiber over the inner side of the hyperbola theta with the billiard law removed on the cut.

    The closed surface over the inner side, theta acting as a wall, has genus g+1 with g punctures
    per component, g the singular vertices inside. Removing the law on the nu arcs of theta that
    cross the region cuts nu handles: chi is kept and 2*nu boundary circles appear, so capping
    them raises chi by 2 per cut handle.
    :return: FiberSurface of the closed inner surface, oracle with theta free, annotated with
             g_inside, cut_handles, chi_closed and chi_capped
    """
    logger = logger or logging.getLogger(__name__)
    family = domain.family
    if not family.b < theta < family.a:
        raise DomainError('Cut parameter {0} is not a hyperbola of the family'.format(theta))
    for corner in domain.corners:
        if abs(domain.corner_coords(corner)[1] - theta) <= REGULAR_GAP:
            raise DomainError('Cut hyperbola {0} passes through the corner {1}'.format(theta, corner.point))
    _require_regular(domain, lam)
    grid = ChartGrid.build(domain, lambdas=[theta, lam], resolution=resolution, logger=logger)
    theta_keys = grid.caustic_edges(theta)
    nu = _theta_arcs(grid, theta_keys, grid.inside & grid.region_mask(lam))
    region = region_on_grid(grid, lam, within=_inner_side(grid, theta))
    predicted = predicted_components(region)
    closed = build_fiber(grid, lam, mask=region.mask, reflect_keys=theta_keys, whiskers=False, logger=logger)
    oracle = build_fiber(grid, lam, mask=region.mask, free_keys=theta_keys, whiskers=False, logger=logger)
    surface = FiberSurface(lam, predicted, oracle, region)
    chi_capped = oracle.chi + len(oracle.circles)
    surface.annotations['theta'] = theta
    surface.annotations['g_inside'] = len(singular_vertices_of(grid, region.mask))
    surface.annotations['cut_handles'] = nu
    surface.annotations['chi_closed'] = surface.chi
    surface.annotations['chi_capped'] = chi_capped
    expected = sorted((component.genus, component.punctures) for component in predicted)
    surface.checks['closed_agreement'] = expected == _oracle_components(closed)
    surface.checks['boundary_circles'] = len(oracle.circles) == 2 * nu
    surface.checks['chi_per_cut_handle'] = closed.chi == oracle.chi and chi_capped == surface.chi + 2 * nu
    for name, passed in surface.checks.items():
        if not passed:
            logger.warning('Cut fiber check {0} failed for {1} at theta={2}, lambda={3}'.format(
                name, domain.name, theta, lam))
    return surface


def euler_characteristic(item):
    """
    Euler characteristic of a fiber surface, oracle complex, cell complex or graph
    """
    if hasattr(item, 'chi'):
        return int(item.chi)
    if isinstance(item, (list, tuple)):
        return sum(euler_characteristic(part) for part in item)
    raise InvalidInputError('No Euler characteristic for {0!r}'.format(item))


def genus_of(component):
    """
    Genus of a closed orientable component, punctures filled
    """
    genus = getattr(component, 'genus', None)
    if genus is None:
        raise IntegrityError('{0!r} is not a closed orientable surface'.format(component))
    return genus


MonteCarloReport = namedtuple('MonteCarloReport', ['points', 'segments', 'checked', 'skipped', 'crossings'])


def _branch(family, point, direction):
    u, v = to_chart(family, point)
    d_u, d_v = chart_frame(family, u, v)
    return u, v, branch_of(np.dot(direction, d_u), np.dot(direction, d_v))


def monte_carlo_connectivity(domain, lam, points=500, steps=200, seed=0, resolution=32, logger=None):
    """
    Iterate sampled phase points of the fiber lam and count segments landing on a fiber component
    other than the one of their start
    :rtype: MonteCarloReport
    """
    logger = logger or logging.getLogger(__name__)
    _require_regular(domain, lam)
    family = domain.family
    region = motion_region(domain, lam, resolution=resolution, logger=logger)
    if region.empty:
        return MonteCarloReport(0, 0, 0, 0, 0)
    grid = region.grid
    fiber = build_fiber(grid, lam, logger=logger)
    random_state = np.random.RandomState(seed)
    cells = np.argwhere(region.mask)
    segments = checked = skipped = crossings = 0
    for _ in range(points):
        i, j = cells[random_state.randint(len(cells))]
        u = grid.u[i] + (grid.u[i + 1] - grid.u[i]) * random_state.uniform(0.2, 0.8)
        v = grid.v[j] + (grid.v[j + 1] - grid.v[j]) * random_state.uniform(0.2, 0.8)
        x = from_chart(family, u, v)
        directions = caustic_directions(family, x, lam)
        if not directions:
            skipped += 1
            continue
        direction = directions[random_state.randint(len(directions))] * random_state.choice([-1.0, 1.0])
        _, _, beta = _branch(family, x, direction)
        start = fiber.component_of((i, j), beta)
        steps_taken, _ = trajectory(phase_point(family, x, direction), domain, steps, logger=logger)
        for record in steps_taken:
            segment = record.segment
            if segment.length <= 0:
                continue
            segments += 1
            heading = (segment.end - segment.start) / segment.length
            middle = 0.5 * (segment.start + segment.end)
            u, v, beta = _branch(family, middle, heading)
            cell = grid.locate(u, v)
            if not region.mask[cell]:
                skipped += 1
                continue
            checked += 1
            if fiber.component_of(cell, beta) != start:
                crossings += 1
    logger.info('Monte-Carlo on {0} at lambda={1}: {2} segments checked, {3} crossings'.format(
        domain.name, lam, checked, crossings))
    return MonteCarloReport(points, segments, checked, skipped, crossings)
