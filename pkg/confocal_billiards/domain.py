#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Billiard domains bounded by arcs of confocal quadrics.

Arcs are encoded by the dual elliptic coordinate (lambda_h along ellipses, lambda_e along
hyperbolas and the y-axis, x along the focal line) plus quadrant signs, so corners and
orthogonality are exact by construction.
"""
import math
from collections import namedtuple

import numpy as np

from confocal_billiards.chart import (TWO_PI, HALF_PI, u_of_lambda_e, phi_of_lambda_h, v_in_quadrant,
                                      from_chart, lambda_e_of_u, lambda_h_of_v)
from confocal_billiards.exceptions import DomainError, InvalidInputError
from confocal_billiards.geometry import (QuadricKind, Branch, QuadricRef, EPS_GEO, elliptic_coords)
from confocal_billiards.grid import ChartGrid

CORNER_STRAIGHT_TOLERANCE = 1e-6
ON_ARC_TOLERANCE = 1e-7


class Orientation(object):
    FORWARD = 'forward'
    BACKWARD = 'backward'

    ALL = (FORWARD, BACKWARD)


class AngleClass(object):
    QUARTER = 'quarter'
    THREE_QUARTER = 'three_quarter'


class Homogeneity(object):
    ELLIPTIC = 'homog_elliptic'
    HYPERBOLIC = 'homog_hyperbolic'
    BOTH = 'both'
    NON_HOMOGENEOUS = 'non_homogeneous'

    ALL = (ELLIPTIC, HYPERBOLIC, BOTH, NON_HOMOGENEOUS)


class Series(object):
    A = 'A'
    B = 'B'


class ChartLine(namedtuple('ChartLine', ['axis', 'value', 'start', 'end'])):
    """
    An arc seen in the chart: u = value with v running start -> end, or v = value with u running
    """

    @property
    def start_chart(self):
        return (self.value, self.start) if self.axis == 'u' else (self.start, self.value)

    @property
    def end_chart(self):
        return (self.value, self.end) if self.axis == 'u' else (self.end, self.value)

    def at(self, fraction):
        position = self.start + fraction * (self.end - self.start)
        return (self.value, position) if self.axis == 'u' else (position, self.value)


Corner = namedtuple('Corner', ['point', 'angle_class', 'incident_arcs'])


class Violation(namedtuple('Violation', ['kind', 'message'])):
    def __str__(self):
        return '{0}: {1}'.format(self.kind, self.message)


class ValidationReport(object):
    def __init__(self, violations=None):
        self.violations = list(violations or [])

    @property
    def valid(self):
        return not self.violations

    def add(self, kind, message):
        self.violations.append(Violation(kind, message))

    def kinds(self):
        return sorted(set(violation.kind for violation in self.violations))

    def __bool__(self):
        return self.valid

    __nonzero__ = __bool__


class ElementaryType(namedtuple('ElementaryType', ['series', 'tag', 'n_or_f'])):
    def __str__(self):
        return self.tag

    @classmethod
    def series_a(cls, foci, primed):
        return cls(Series.A, 'A{0}{1}'.format("'" if primed else '', foci), foci)

    @classmethod
    def series_b(cls, components, primes):
        return cls(Series.B, 'B{0}{1}'.format("'" * primes, components), components)


ELEMENTARY_TAGS = ('A0', 'A1', 'A2', "A'0", "A'1", "A'2", 'B0', 'B1', 'B2', "B'1", "B'2", "B''2")


class BoundaryArc(object):
    def __init__(self, quadric, arc_range, side_signs, orientation=Orientation.FORWARD):
        lo, hi = float(arc_range[0]), float(arc_range[1])
        if lo > hi:
            raise InvalidInputError('Arc range must be ordered, got [{0}, {1}]'.format(lo, hi))
        if orientation not in Orientation.ALL:
            raise InvalidInputError('Unknown orientation {0}'.format(orientation))
        self.quadric = quadric
        self.range = (lo, hi)
        self.side_signs = (1 if side_signs[0] >= 0 else -1, 1 if side_signs[1] >= 0 else -1)
        self.orientation = orientation

    @property
    def family(self):
        return self.quadric.family

    @property
    def kind(self):
        return self.quadric.kind

    @property
    def lam(self):
        return self.quadric.lam

    @property
    def is_elliptic(self):
        """
        Ellipse arcs and the focal segment fix lambda_e; hyperbolas, rays and the y-axis fix lambda_h
        """
        return self.kind == QuadricKind.ELLIPSE or self.quadric.branch == Branch.BETWEEN_FOCI

    def traversal(self):
        lo, hi = self.range
        return (lo, hi) if self.orientation == Orientation.FORWARD else (hi, lo)

    def _chart_at(self, s):
        family = self.family
        sx, sy = self.side_signs
        kind = self.kind
        if kind == QuadricKind.ELLIPSE:
            return u_of_lambda_e(family, self.lam), v_in_quadrant(phi_of_lambda_h(family, s), sx, sy)
        if kind == QuadricKind.HYPERBOLA:
            return u_of_lambda_e(family, s), v_in_quadrant(phi_of_lambda_h(family, self.lam), sx, sy)
        if kind == QuadricKind.VERTICAL_LINE:
            return u_of_lambda_e(family, s), HALF_PI if sy > 0 else 1.5 * math.pi
        c = family.c
        if self.quadric.branch == Branch.BETWEEN_FOCI:
            v = math.acos(max(-1.0, min(1.0, s / c)))
            return 0.0, v if sy > 0 else TWO_PI - v
        u = math.acosh(max(1.0, abs(s) / c))
        return u, 0.0 if s > 0 else math.pi

    def chart_line(self):
        start, end = self.traversal()
        start_u, start_v = self._chart_at(start)
        end_u, end_v = self._chart_at(end)
        if self.is_elliptic:
            return ChartLine('u', start_u, start_v, end_v)
        return ChartLine('v', start_v, start_u, end_u)

    def point_at(self, s):
        return from_chart(self.family, *self._chart_at(s))

    @property
    def start(self):
        return self.point_at(self.traversal()[0])

    @property
    def end(self):
        return self.point_at(self.traversal()[1])

    def endpoint_lambdas(self):
        if self.kind == QuadricKind.DEGENERATE:
            return set()
        return set(self.range)

    def sample(self, count=16):
        line = self.chart_line()
        return [from_chart(self.family, *line.at(k / float(count))) for k in range(count + 1)]

    def tangent_at_end(self, which):
        """
        Planar unit tangent in traversal direction at the start (which=0) or end (which=1)
        """
        line = self.chart_line()
        delta = 1e-7
        if which == 0:
            first, second = line.at(0.0), line.at(delta)
        else:
            first, second = line.at(1.0 - delta), line.at(1.0)
        vector = from_chart(self.family, *second) - from_chart(self.family, *first)
        norm = np.linalg.norm(vector)
        if norm == 0.0:
            raise DomainError('Degenerate arc {0}'.format(self))
        return vector / norm

    def tangent(self, point):
        """
        Unit tangent at a point of the arc, oriented along the traversal
        """
        tangent = self.quadric.tangent(point)
        if np.dot(tangent, self.end - self.start) < 0:
            tangent = -tangent
        return tangent

    def contains(self, point, tolerance=ON_ARC_TOLERANCE):
        x, y = float(point[0]), float(point[1])
        sx, sy = self.side_signs
        lo, hi = self.range
        kind = self.kind
        if kind == QuadricKind.DEGENERATE:
            return abs(y) <= tolerance and lo - tolerance <= x <= hi + tolerance
        if kind == QuadricKind.VERTICAL_LINE:
            if abs(x) > tolerance or y * sy < -tolerance:
                return False
            lambda_e = self.family.b - y * y
            return lo - tolerance <= lambda_e <= hi + tolerance
        if x * sx < -tolerance or y * sy < -tolerance:
            return False
        coords = elliptic_coords(self.family, (x, y))
        if kind == QuadricKind.ELLIPSE:
            own, dual = coords.lambda_e, coords.lambda_h
        else:
            own, dual = coords.lambda_h, coords.lambda_e
        return abs(own - self.lam) <= tolerance and lo - tolerance <= dual <= hi + tolerance

    def reversed(self):
        flipped = Orientation.BACKWARD if self.orientation == Orientation.FORWARD else Orientation.FORWARD
        return BoundaryArc(self.quadric, self.range, self.side_signs, flipped)

    def mirrored(self):
        """
        Image under the reflection y -> -y, traversal reversed to keep the domain on the left
        """
        flipped = Orientation.BACKWARD if self.orientation == Orientation.FORWARD else Orientation.FORWARD
        return BoundaryArc(self.quadric, self.range, (self.side_signs[0], -self.side_signs[1]), flipped)

    def split(self, at):
        lo, hi = self.range
        if not lo < at < hi:
            raise InvalidInputError('Split parameter {0} outside ({1}, {2})'.format(at, lo, hi))
        first = BoundaryArc(self.quadric, (lo, at), self.side_signs, self.orientation)
        second = BoundaryArc(self.quadric, (at, hi), self.side_signs, self.orientation)
        return [first, second] if self.orientation == Orientation.FORWARD else [second, first]

    def to_dict(self):
        return {
            'lambda': self.lam,
            'kind': self.kind,
            'branch': self.quadric.branch,
            'range': [self.range[0], self.range[1]],
            'signs': [self.side_signs[0], self.side_signs[1]],
            'orientation': self.orientation,
        }

    def __repr__(self):
        return 'BoundaryArc({0} {1!r} {2} range={3} signs={4} {5})'.format(
            self.kind, self.lam, self.quadric.branch, self.range, self.side_signs, self.orientation)


# builders

def _ordered(start, end):
    if start <= end:
        return (start, end), Orientation.FORWARD
    return (end, start), Orientation.BACKWARD


def ellipse_arc(family, lam, lambda_h_from, lambda_h_to, sx=1, sy=1):
    arc_range, orientation = _ordered(lambda_h_from, lambda_h_to)
    return BoundaryArc(QuadricRef(family, lam), arc_range, (sx, sy), orientation)


def hyperbola_arc(family, lam, lambda_e_from, lambda_e_to, sx=1, sy=1):
    branch = Branch.RIGHT if sx > 0 else Branch.LEFT
    arc_range, orientation = _ordered(lambda_e_from, lambda_e_to)
    return BoundaryArc(QuadricRef(family, lam, branch), arc_range, (sx, sy), orientation)


def focal_segment(family, x_from, x_to, sy=1):
    arc_range, orientation = _ordered(x_from, x_to)
    return BoundaryArc(QuadricRef(family, family.b, Branch.BETWEEN_FOCI), arc_range, (1, sy), orientation)


def focal_ray(family, x_from, x_to, sy=1):
    branch = Branch.OUTSIDE_RIGHT_RAY if x_from + x_to > 0 else Branch.OUTSIDE_LEFT_RAY
    arc_range, orientation = _ordered(x_from, x_to)
    sx = 1 if branch == Branch.OUTSIDE_RIGHT_RAY else -1
    return BoundaryArc(QuadricRef(family, family.b, branch), arc_range, (sx, sy), orientation)


def y_axis_arc(family, lambda_e_from, lambda_e_to, sy=1):
    arc_range, orientation = _ordered(lambda_e_from, lambda_e_to)
    return BoundaryArc(QuadricRef(family, family.a), arc_range, (1, sy), orientation)


def _shoelace(points):
    points = np.asarray(points)
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def derive_corners(arcs):
    """
    Corners between consecutive arcs; straight junctions are not corners
    """
    polyline = []
    for arc in arcs:
        polyline.extend(arc.sample(16)[:-1])
    sign = 1.0 if _shoelace(polyline) >= 0 else -1.0
    corners = []
    for index, arc in enumerate(arcs):
        following = (index + 1) % len(arcs)
        incoming = arc.tangent_at_end(1)
        outgoing = arcs[following].tangent_at_end(0)
        cross = sign * float(incoming[0] * outgoing[1] - incoming[1] * outgoing[0])
        if abs(cross) < CORNER_STRAIGHT_TOLERANCE:
            continue
        angle_class = AngleClass.QUARTER if cross > 0 else AngleClass.THREE_QUARTER
        corners.append(Corner(tuple(arcs[following].start), angle_class, (index, following)))
    return corners


class BilliardDomain(object):
    def __init__(self, family, arcs, corners=None, homogeneity=None, name=None, decomposition=None):
        if not arcs:
            raise InvalidInputError('Domain needs at least one boundary arc')
        self.family = family
        self.arcs = list(arcs)
        self.corners = list(corners) if corners is not None else derive_corners(self.arcs)
        self.homogeneity_tag = homogeneity
        self.name = name
        self.decomposition = decomposition
        self._grid = None
        self._homogeneity = None

    @property
    def complexity(self):
        return sum(1 for corner in self.corners if corner.angle_class == AngleClass.THREE_QUARTER)

    @property
    def singular_corners(self):
        return [corner for corner in self.corners if corner.angle_class == AngleClass.THREE_QUARTER]

    def corner_coords(self, corner):
        """
        Exact (lambda_e, lambda_h) of a corner, read off its two incident arcs
        """
        lambda_e = lambda_h = None
        for index in corner.incident_arcs:
            arc = self.arcs[index]
            if arc.is_elliptic:
                lambda_e = arc.lam
            else:
                lambda_h = arc.lam
        coords = elliptic_coords(self.family, corner.point)
        return (coords.lambda_e if lambda_e is None else lambda_e,
                coords.lambda_h if lambda_h is None else lambda_h)

    @property
    def homogeneity(self):
        return self.homogeneity_tag or self.computed_homogeneity()

    @property
    def grid(self):
        if self._grid is None:
            self._grid = ChartGrid.build(self, resolution=8)
        return self._grid

    def computed_homogeneity(self):
        if self._homogeneity is None:
            self._homogeneity = homogeneity_of_cells(self.grid, self.grid.inside)
        return self._homogeneity

    def orientation_sign(self):
        polyline = []
        for arc in self.arcs:
            polyline.extend(arc.sample(16)[:-1])
        return 1 if _shoelace(polyline) >= 0 else -1

    def boundary_polyline(self, samples=32):
        points = []
        for arc in self.arcs:
            points.extend(arc.sample(samples)[:-1])
        return points

    def area(self, samples=256):
        return abs(_shoelace(self.boundary_polyline(samples)))

    def __repr__(self):
        return 'BilliardDomain({0}, {1} arcs, k={2})'.format(self.name or 'unnamed', len(self.arcs), self.complexity)


# focal line contact and classification on the chart grid

FocalComponent = namedtuple('FocalComponent', ['x_lo', 'x_hi', 'on_boundary', 'keys'])


def focal_components(grid, cells):
    """
    Components of the focal line inside the closed union of cells
    """
    pieces = []
    for key, x_lo, x_hi in grid.focal_edges():
        first, second = grid.edge_cells(key)
        count = sum(1 for cell in (first, second) if cell is not None and cells[cell])
        if count:
            pieces.append((x_lo, x_hi, count, key))
    pieces.sort()
    components = []
    for x_lo, x_hi, count, key in pieces:
        if components and x_lo <= components[-1][1] + 1e-12:
            last = components[-1]
            components[-1] = [last[0], max(last[1], x_hi), last[2] and count == 1, last[3] + [key]]
        else:
            components.append([x_lo, x_hi, count == 1, [key]])
    return [FocalComponent(*component) for component in components]


def homogeneity_of_cells(grid, cells):
    c = grid.family.c
    touches_segment = touches_rays = False
    for component in focal_components(grid, cells):
        if component.x_lo < c - 1e-12 and component.x_hi > -c + 1e-12:
            touches_segment = True
        if component.x_hi > c + 1e-12 or component.x_lo < -c - 1e-12:
            touches_rays = True
    if touches_segment and touches_rays:
        return Homogeneity.NON_HOMOGENEOUS
    if touches_segment:
        return Homogeneity.HYPERBOLIC
    if touches_rays:
        return Homogeneity.ELLIPTIC
    return Homogeneity.BOTH


def classify_cells(grid, cells):
    """
    Elementary type of a simply connected union of cells without singular corners
    """
    c = grid.family.c
    components = focal_components(grid, cells)
    for component in components:
        if component.x_lo < c - 1e-12 and component.x_hi > -c + 1e-12:
            foci = sum(1 for focus in (-c, c) if component.x_lo - 1e-12 <= focus <= component.x_hi + 1e-12)
            return ElementaryType.series_a(foci, component.on_boundary)
    primes = sum(1 for component in components if component.on_boundary)
    if primes > 2:
        raise DomainError('{0} focal line pieces on the boundary'.format(primes))
    return ElementaryType.series_b(len(components), primes)


# operations

def complexity(domain):
    return domain.complexity


def homogeneity_class(domain):
    return domain.computed_homogeneity()


def classify_elementary(domain):
    """
    Class of an elementary (k = 0) billiard among the twelve A/B types
    :type domain: BilliardDomain
    :rtype: ElementaryType
    """
    if domain.complexity > 0:
        raise DomainError('Domain {0} has complexity {1}, not elementary'.format(domain.name, domain.complexity))
    return classify_cells(domain.grid, domain.grid.inside)


def _legal_range(arc, report, index):
    family = arc.family
    lo, hi = arc.range
    kind = arc.kind
    if kind == QuadricKind.ELLIPSE and (lo < family.b - EPS_GEO or hi > family.a + EPS_GEO):
        report.add('range', 'arc {0}: lambda_h range [{1}, {2}] outside [b, a]'.format(index, lo, hi))
    if kind in (QuadricKind.HYPERBOLA, QuadricKind.VERTICAL_LINE) and hi > family.b + EPS_GEO:
        report.add('range', 'arc {0}: lambda_e range [{1}, {2}] exceeds b'.format(index, lo, hi))
    if kind == QuadricKind.DEGENERATE:
        c = family.c
        branch = arc.quadric.branch
        bounds = {
            Branch.BETWEEN_FOCI: (-c, c),
            Branch.OUTSIDE_LEFT_RAY: (-float('inf'), -c),
            Branch.OUTSIDE_RIGHT_RAY: (c, float('inf')),
        }.get(branch)
        if bounds is None:
            report.add('family', 'arc {0}: focal line arcs must name a segment or ray branch'.format(index))
        elif lo < bounds[0] - EPS_GEO or hi > bounds[1] + EPS_GEO:
            report.add('range', 'arc {0}: x range [{1}, {2}] leaves branch {3}'.format(index, lo, hi, branch))
    if kind == QuadricKind.HYPERBOLA:
        branch = arc.quadric.branch
        sx = arc.side_signs[0]
        if (branch == Branch.RIGHT and sx < 0) or (branch == Branch.LEFT and sx > 0):
            report.add('family', 'arc {0}: branch {1} does not match sign {2}'.format(index, branch, sx))
    if hi - lo <= EPS_GEO:
        report.add('range', 'arc {0}: empty range'.format(index))


def _chart_segments(arc):
    line = arc.chart_line()
    lo, hi = sorted((line.start, line.end))
    segments = [(line.axis, line.value, lo, hi)]
    if line.axis == 'u' and line.value == 0.0:
        segments.append(('u', 0.0, TWO_PI - hi, TWO_PI - lo))
    if line.axis == 'v' and line.value == 0.0:
        segments.append(('v', TWO_PI, lo, hi))
    return segments


def _intersections(first, second):
    axis1, value1, lo1, hi1 = first
    axis2, value2, lo2, hi2 = second
    tol = 1e-12
    if axis1 == axis2:
        if abs(value1 - value2) > tol:
            turn = (value1 + value2) % TWO_PI
            if axis1 == 'v' and lo1 <= tol and lo2 <= tol and min(turn, TWO_PI - turn) <= 1e-9:
                return [('v', value1, 0.0)]
            return []
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if hi - lo > tol:
            return None
        if hi - lo >= -tol:
            return [(axis1, value1, lo)]
        return []
    if axis1 == 'v':
        first, second = second, first
        axis1, value1, lo1, hi1 = first
        axis2, value2, lo2, hi2 = second
    if lo2 - tol <= value1 <= hi2 + tol and lo1 - tol <= value2 <= hi1 + tol:
        return [('u', value1, value2)]
    return []


def _simplicity(domain, report):
    family = domain.family
    segments = [_chart_segments(arc) for arc in domain.arcs]
    count = len(domain.arcs)
    for first in range(count):
        for second in range(first + 1, count):
            adjacent = second == first + 1 or (first == 0 and second == count - 1)
            shared = []
            if adjacent:
                if second == first + 1:
                    shared.append(domain.arcs[first].end)
                if first == 0 and second == count - 1:
                    shared.append(domain.arcs[first].start)
            for segment1 in segments[first]:
                for segment2 in segments[second]:
                    hits = _intersections(segment1, segment2)
                    if hits is None:
                        report.add('simplicity', 'arcs {0} and {1} overlap'.format(first, second))
                        continue
                    for axis, value, position in hits:
                        chart = (value, position) if axis == 'u' else (position, value)
                        point = from_chart(family, *chart)
                        if any(np.linalg.norm(point - np.asarray(other)) <= EPS_GEO * 10 for other in shared):
                            continue
                        report.add('simplicity', 'arcs {0} and {1} meet at ({2:.6f}, {3:.6f})'.format(
                            first, second, point[0], point[1]))


def _focus_rule(domain, report):
    corner_points = [np.asarray(corner.point) for corner in domain.corners]
    for focus in domain.family.foci:
        focus = np.asarray(focus)
        on_arc = [index for index, arc in enumerate(domain.arcs) if arc.contains(focus, EPS_GEO)]
        if not on_arc:
            continue
        if any(domain.arcs[index].kind != QuadricKind.DEGENERATE for index in on_arc):
            report.add('focus', 'focus ({0}, 0) lies on a curved boundary arc'.format(focus[0]))
        elif any(np.linalg.norm(point - focus) <= EPS_GEO for point in corner_points):
            report.add('focus', 'focus ({0}, 0) is a boundary corner'.format(focus[0]))


def validate(domain):
    """
    Checks closure, simplicity, arc consistency, corner classes, the focus rule and the homogeneity tag
    :type domain: BilliardDomain
    :rtype: ValidationReport
    """
    report = ValidationReport()
    if not domain.arcs:
        report.add('closure', 'domain has no arcs')
        return report
    for index, arc in enumerate(domain.arcs):
        if arc.quadric.family != domain.family:
            report.add('family', 'arc {0} belongs to another confocal family'.format(index))
        _legal_range(arc, report, index)
    if report.violations:
        return report
    count = len(domain.arcs)
    for index, arc in enumerate(domain.arcs):
        following = domain.arcs[(index + 1) % count]
        gap = float(np.linalg.norm(arc.end - following.start))
        if gap > EPS_GEO:
            report.add('closure', 'arcs {0} and {1} are {2:.3g} apart'.format(index, (index + 1) % count, gap))
    if report.violations:
        return report
    _simplicity(domain, report)
    derived = derive_corners(domain.arcs)
    stored = sorted((corner.incident_arcs, corner.angle_class) for corner in domain.corners)
    if stored != sorted((corner.incident_arcs, corner.angle_class) for corner in derived):
        report.add('corners', 'stored corner classes differ from the arc geometry')
    _focus_rule(domain, report)
    if report.violations:
        return report
    if domain.homogeneity_tag is not None and domain.homogeneity_tag != domain.computed_homogeneity():
        report.add('homogeneity', 'tag {0} but boundary gives {1}'.format(
            domain.homogeneity_tag, domain.computed_homogeneity()))
    return report


def mirror_domain(domain):
    """
    Reflection across the focal line
    """
    arcs = [arc.mirrored() for arc in reversed(domain.arcs)]
    return BilliardDomain(domain.family, arcs, homogeneity=domain.homogeneity_tag,
                          name='{0}-mirror'.format(domain.name) if domain.name else None,
                          decomposition=domain.decomposition)


def split_arc(domain, index, at):
    """
    Same domain with one arc subdivided at the dual coordinate `at`
    """
    arcs = list(domain.arcs)
    arcs[index:index + 1] = arcs[index].split(at)
    return BilliardDomain(domain.family, arcs, homogeneity=domain.homogeneity_tag, name=domain.name,
                          decomposition=domain.decomposition)


def arc_from_chart_run(grid, axis, value, start, end):
    """
    Boundary arc along a straight chart run, the run lying inside one quadrant
    """
    family = grid.family
    if axis == 'u':
        middle = 0.5 * (start + end)
        sx = 1 if math.cos(middle) > 0 else -1
        sy = 1 if math.sin(middle) > 0 else -1
        if value <= 1e-12:
            c = family.c
            return focal_segment(family, c * math.cos(start), c * math.cos(end), sy)
        lam = grid.snap_lambda(lambda_e_of_u(family, value))
        return ellipse_arc(family, lam, grid.snap_lambda(lambda_h_of_v(family, start)),
                           grid.snap_lambda(lambda_h_of_v(family, end)), sx, sy)
    c = family.c
    v = value % TWO_PI
    if abs(v) <= 1e-12 or abs(v - TWO_PI) <= 1e-12:
        return focal_ray(family, c * math.cosh(start), c * math.cosh(end))
    if abs(v - math.pi) <= 1e-12:
        return focal_ray(family, -c * math.cosh(start), -c * math.cosh(end))
    lambda_from = grid.snap_lambda(lambda_e_of_u(family, start))
    lambda_to = grid.snap_lambda(lambda_e_of_u(family, end))
    if abs(v - HALF_PI) <= 1e-12 or abs(v - 1.5 * math.pi) <= 1e-12:
        return y_axis_arc(family, lambda_from, lambda_to, 1 if v < math.pi else -1)
    sx = 1 if math.cos(v) > 0 else -1
    sy = 1 if math.sin(v) > 0 else -1
    lam = grid.snap_lambda(lambda_h_of_v(family, v))
    return hyperbola_arc(family, lam, lambda_from, lambda_to, sx, sy)
