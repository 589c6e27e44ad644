#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Billiard flow on the unit-speed level: free flight, reflection, the corner rules and auditing of
the caustic parameter along trajectories.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from confocal_billiards.chart import from_chart
from confocal_billiards.domain import AngleClass
from confocal_billiards.exceptions import IntegrityError, InvalidInputError
from confocal_billiards.geometry import (EPS_GEO, EPS_CORNER, caustic_parameter, ray_quadric_intersection,
                                        tangency_defect, reflect, elliptic_coords)

GRAZING_TOLERANCE = 1e-9
REGION_TOLERANCE = 1e-8
CONFINEMENT_SAMPLES = 10


class Event(object):
    REFLECTION = 'reflection'
    QUARTER_CORNER = 'quarter_corner'
    TERMINATED = 'terminated_at_singular_vertex'
    INTERIOR_STOP = 'interior_stop'


PhasePoint = namedtuple('PhasePoint', ['x', 'v', 'caustic', 'on_boundary'])
Segment = namedtuple('Segment', ['start', 'end', 'length'])
TrajectoryStep = namedtuple('TrajectoryStep', ['segment', 'event', 'index'])


class ConservationReport(namedtuple('ConservationReport', ['steps', 'max_drift', 'max_tangency_defect',
                                                           'max_region_excess', 'termination'])):
    @property
    def terminated(self):
        return self.termination == Event.TERMINATED


def phase_point(family, x, v, on_boundary=None):
    """
    :param family: ConfocalFamily
    :param x: planar point
    :param v: nonzero velocity, normalized here
    :rtype: PhasePoint
    """
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0.0 or not np.isfinite(norm):
        raise InvalidInputError('Velocity must be a finite nonzero vector')
    v = v / norm
    return PhasePoint(np.asarray(x, dtype=float), v, caustic_parameter(family, x, v), on_boundary)


def _nearest_hit(p, domain):
    family = domain.family
    best = None
    for index, arc in enumerate(domain.arcs):
        for t, point in ray_quadric_intersection(family, p.x, p.v, arc.quadric, EPS_GEO):
            if best is not None and t >= best[0]:
                break
            point = np.asarray(point)
            if not arc.contains(point):
                continue
            if abs(np.dot(p.v, arc.quadric.normal(point))) < GRAZING_TOLERANCE:
                continue
            best = (t, index, point)
            break
    return best


def _corner_at(domain, point):
    for index, corner in enumerate(domain.corners):
        if np.linalg.norm(point - np.asarray(corner.point)) <= EPS_CORNER:
            return index, corner
    return None, None


def step(p, domain):
    """
    Advance to the next boundary event
    :type p: PhasePoint
    :type domain: confocal_billiards.domain.BilliardDomain
    :return: (TrajectoryStep, next PhasePoint or None)
    """
    hit = _nearest_hit(p, domain)
    if hit is None:
        raise IntegrityError('No boundary ahead of the phase point', {
            'x': tuple(p.x), 'v': tuple(p.v), 'caustic': p.caustic.lam, 'domain': domain.name})
    t, arc_index, point = hit
    segment = Segment(p.x, point, t)
    corner_index, corner = _corner_at(domain, point)
    if corner is not None:
        if corner.angle_class == AngleClass.THREE_QUARTER:
            return TrajectoryStep(segment, Event.TERMINATED, corner_index), None
        corner_point = np.asarray(corner.point, dtype=float)
        return (TrajectoryStep(segment, Event.QUARTER_CORNER, corner_index),
                PhasePoint(corner_point, -p.v, caustic_parameter(domain.family, corner_point, -p.v), None))
    tangent = domain.arcs[arc_index].tangent(point)
    v = reflect(p.v, tangent)
    return (TrajectoryStep(segment, Event.REFLECTION, arc_index),
            PhasePoint(point, v, caustic_parameter(domain.family, point, v), arc_index))


def _region_excess(family, lam, start, end):
    """
    How far sampled segment points stray outside the motion region of lam
    """
    if abs(lam - family.b) <= EPS_GEO:
        return 0.0
    excess = 0.0
    for k in range(1, CONFINEMENT_SAMPLES):
        point = start + (end - start) * (k / float(CONFINEMENT_SAMPLES))
        coords = elliptic_coords(family, point)
        if lam < family.b:
            excess = max(excess, coords.lambda_e - lam)
        else:
            excess = max(excess, lam - coords.lambda_h)
    return excess


def trajectory(p0, domain, max_steps, logger=None):
    """
    Iterate step until termination or max_steps
    :return: (list of TrajectoryStep, ConservationReport)
    """
    if max_steps < 1:
        raise InvalidInputError('max_steps must be at least 1, got {0}'.format(max_steps))
    logger = logger or logging.getLogger(__name__)
    family = domain.family
    lam0 = p0.caustic.lam
    scale = max(abs(lam0), family.b)
    steps = []
    max_drift = max_defect = max_excess = 0.0
    termination = Event.INTERIOR_STOP
    point = p0
    for _ in range(max_steps):
        record, following = step(point, domain)
        steps.append(record)
        start, end = record.segment.start, record.segment.end
        if record.segment.length > 0:
            max_defect = max(max_defect, tangency_defect(family, start, point.v, lam0))
            max_excess = max(max_excess, _region_excess(family, lam0, start, end))
        if following is None:
            termination = record.event
            break
        max_drift = max(max_drift, abs(following.caustic.lam - lam0) / scale)
        point = following
    logger.debug('Trajectory of {0} steps, drift {1:.3g}, tangency {2:.3g}, {3}'.format(
        len(steps), max_drift, max_defect, termination))
    return steps, ConservationReport(len(steps), max_drift, max_defect, max_excess, termination)


def reverse(p):
    return PhasePoint(p.x, -p.v, p.caustic, p.on_boundary)


def random_phase_point(domain, random_state):
    """
    Phase point in a random inside cell of the domain grid with a random direction
    :param random_state: numpy.random.RandomState
    """
    grid = domain.grid
    cells = np.argwhere(grid.inside)
    i, j = cells[random_state.randint(len(cells))]
    u = grid.u[i] + (grid.u[i + 1] - grid.u[i]) * random_state.uniform(0.2, 0.8)
    v = grid.v[j] + (grid.v[j + 1] - grid.v[j]) * random_state.uniform(0.2, 0.8)
    angle = random_state.uniform(0.0, 2.0 * math.pi)
    return phase_point(domain.family, from_chart(domain.family, u, v), (math.cos(angle), math.sin(angle)))
