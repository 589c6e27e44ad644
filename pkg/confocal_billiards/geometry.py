#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Analytic geometry of the confocal family

    x^2 / (a - lambda) + y^2 / (b - lambda) = 1,  a > b > 0

ellipses for lambda < b, hyperbolas for b < lambda < a, the focal line at lambda = b
and the y-axis at lambda = a.
"""
import math
from collections import namedtuple

import numpy as np

from confocal_billiards.exceptions import InvalidInputError

EPS_GEO = 1e-9
EPS_CORNER = 1e-9
LAMBDA_TOLERANCE = 1e-12


class QuadricKind(object):
    ELLIPSE = 'ellipse'
    DEGENERATE = 'degenerate'
    HYPERBOLA = 'hyperbola'
    VERTICAL_LINE = 'vertical_line'

    ALL = (ELLIPSE, DEGENERATE, HYPERBOLA, VERTICAL_LINE)


class Branch(object):
    FULL = 'full'
    LEFT = 'left'
    RIGHT = 'right'
    BETWEEN_FOCI = 'between_foci'
    OUTSIDE_LEFT_RAY = 'outside_left_ray'
    OUTSIDE_RIGHT_RAY = 'outside_right_ray'

    ALL = (FULL, LEFT, RIGHT, BETWEEN_FOCI, OUTSIDE_LEFT_RAY, OUTSIDE_RIGHT_RAY)
    DEGENERATE = (FULL, BETWEEN_FOCI, OUTSIDE_LEFT_RAY, OUTSIDE_RIGHT_RAY)
    HYPERBOLA = (FULL, LEFT, RIGHT)


EllipticCoords = namedtuple('EllipticCoords', ['lambda_e', 'lambda_h'])
CausticValue = namedtuple('CausticValue', ['lam', 'raw_lambda'])


class ConfocalFamily(object):
    def __init__(self, a, b):
        a = float(a)
        b = float(b)
        if not (a > b > 0) or math.isinf(a):
            raise InvalidInputError('Confocal family needs a > b > 0, got a={0}, b={1}'.format(a, b))
        self._a = a
        self._b = b

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def d(self):
        return self._a - self._b

    @property
    def c(self):
        """
        Focal distance
        """
        return math.sqrt(self._a - self._b)

    @property
    def foci(self):
        return (-self.c, 0.0), (self.c, 0.0)

    def kind_of(self, lam):
        if abs(lam - self._b) <= LAMBDA_TOLERANCE:
            return QuadricKind.DEGENERATE
        if abs(lam - self._a) <= LAMBDA_TOLERANCE:
            return QuadricKind.VERTICAL_LINE
        if lam < self._b:
            return QuadricKind.ELLIPSE
        if lam < self._a:
            return QuadricKind.HYPERBOLA
        raise InvalidInputError('Quadric parameter {0} exceeds a={1}'.format(lam, self._a))

    def quadric(self, lam, branch=Branch.FULL):
        return QuadricRef(self, lam, branch)

    def __eq__(self, other):
        return isinstance(other, ConfocalFamily) and (self._a, self._b) == (other.a, other.b)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._a, self._b))

    def __repr__(self):
        return 'ConfocalFamily(a={0!r}, b={1!r})'.format(self._a, self._b)


class QuadricRef(object):
    """
    Member of the confocal family, optionally restricted to a branch
    """

    def __init__(self, family, lam, branch=Branch.FULL):
        self.family = family
        self.lam = float(lam)
        self.kind = family.kind_of(self.lam)
        if branch not in Branch.ALL:
            raise InvalidInputError('Unknown branch {0}'.format(branch))
        if branch != Branch.FULL:
            if self.kind == QuadricKind.HYPERBOLA and branch not in Branch.HYPERBOLA:
                raise InvalidInputError('Branch {0} is not a hyperbola branch'.format(branch))
            if self.kind == QuadricKind.DEGENERATE and branch not in Branch.DEGENERATE:
                raise InvalidInputError('Branch {0} is not a focal line branch'.format(branch))
            if self.kind in (QuadricKind.ELLIPSE, QuadricKind.VERTICAL_LINE):
                raise InvalidInputError('{0} quadric has no branch {1}'.format(self.kind, branch))
        self.branch = branch

    def contains_branch(self, point, tolerance=EPS_GEO):
        """
        Whether a point of the full quadric belongs to the selected branch
        """
        x = point[0]
        c = self.family.c
        if self.branch == Branch.LEFT:
            return x <= tolerance
        if self.branch == Branch.RIGHT:
            return x >= -tolerance
        if self.branch == Branch.BETWEEN_FOCI:
            return abs(x) <= c + tolerance
        if self.branch == Branch.OUTSIDE_LEFT_RAY:
            return x <= -c + tolerance
        if self.branch == Branch.OUTSIDE_RIGHT_RAY:
            return x >= c - tolerance
        return True

    def residual(self, point):
        """
        (b - l) x^2 + (a - l) y^2 - (a - l)(b - l), zero on the quadric
        """
        big_a = self.family.a - self.lam
        big_b = self.family.b - self.lam
        return big_b * point[0] ** 2 + big_a * point[1] ** 2 - big_a * big_b

    def normal(self, point):
        x, y = point
        if self.kind == QuadricKind.DEGENERATE:
            return np.array([0.0, 1.0])
        if self.kind == QuadricKind.VERTICAL_LINE:
            return np.array([1.0, 0.0])
        vector = np.array([x / (self.family.a - self.lam), y / (self.family.b - self.lam)])
        return vector / np.linalg.norm(vector)

    def tangent(self, point):
        n = self.normal(point)
        return np.array([-n[1], n[0]])

    def __eq__(self, other):
        return (isinstance(other, QuadricRef) and self.family == other.family and
                self.lam == other.lam and self.branch == other.branch)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.family, self.lam, self.branch))

    def __repr__(self):
        return 'QuadricRef({0}, lambda={1!r}, branch={2})'.format(self.kind, self.lam, self.branch)


def _as_point(p):
    return float(p[0]), float(p[1])


def elliptic_coords(family, p):
    """
    Both family parameters through a point, lambda_e <= b <= lambda_h <= a
    :param family:
    :type family: ConfocalFamily
    :param p: planar point
    :rtype: EllipticCoords
    """
    x, y = _as_point(p)
    a, b, d = family.a, family.b, family.d
    x2, y2 = x * x, y * y
    if y == 0.0:
        if x2 <= d:
            return EllipticCoords(b, a - x2)
        return EllipticCoords(a - x2, b)
    if x == 0.0:
        return EllipticCoords(b - y2, a)
    r2 = x2 + y2
    s = a + b - r2
    product = a * b - b * x2 - a * y2
    disc = math.sqrt((r2 - d) ** 2 + 4.0 * d * y2)
    if s >= 0:
        lambda_h = 0.5 * (s + disc)
        lambda_e = product / lambda_h if lambda_h != 0 else 0.5 * (s - disc)
    else:
        lambda_e = 0.5 * (s - disc)
        lambda_h = product / lambda_e
    lambda_e = min(lambda_e, b)
    lambda_h = min(max(lambda_h, b), a)
    return EllipticCoords(lambda_e, lambda_h)


def caustic_parameter(family, x, v):
    """
    Parameter of the quadric tangent to the line through x with direction v
    :param family:
    :param x: point
    :param v: nonzero vector
    :rtype: CausticValue
    """
    px, py = _as_point(x)
    vx, vy = _as_point(v)
    norm = math.hypot(vx, vy)
    if norm == 0.0 or not math.isfinite(norm):
        raise InvalidInputError('Velocity must be a finite nonzero vector, got ({0}, {1})'.format(vx, vy))
    vx /= norm
    vy /= norm
    raw = vx * vx / family.a + vy * vy / family.b - (vx * py - px * vy) ** 2 / (family.a * family.b)
    return CausticValue(family.a * family.b * raw, raw)


def _quadratic_roots(alpha, beta, gamma):
    if alpha == 0.0:
        if beta == 0.0:
            return []
        return [-gamma / beta]
    disc = beta * beta - 4.0 * alpha * gamma
    if disc < 0.0:
        scale = max(beta * beta, abs(4.0 * alpha * gamma), 1e-300)
        if disc > -1e-14 * scale:
            disc = 0.0
        else:
            return []
    root = math.sqrt(disc)
    q = -0.5 * (beta + math.copysign(root, beta))
    if q == 0.0:
        return [0.0]
    roots = [q / alpha, gamma / q]
    if disc == 0.0:
        roots = roots[:1]
    return roots


def ray_quadric_intersection(family, origin, direction, quadric, tolerance=EPS_GEO):
    """
    Intersections of the open ray origin + t direction, t > tolerance, with a quadric branch
    :param family:
    :param origin:
    :param direction: unit vector
    :param quadric:
    :type quadric: QuadricRef
    :param tolerance:
    :return: list of (t, point) sorted by t
    """
    ox, oy = _as_point(origin)
    dx, dy = _as_point(direction)
    if quadric.kind == QuadricKind.DEGENERATE:
        roots = [] if dy == 0.0 else [-oy / dy]
    elif quadric.kind == QuadricKind.VERTICAL_LINE:
        roots = [] if dx == 0.0 else [-ox / dx]
    else:
        big_a = family.a - quadric.lam
        big_b = family.b - quadric.lam
        alpha = big_b * dx * dx + big_a * dy * dy
        beta = 2.0 * (big_b * ox * dx + big_a * oy * dy)
        gamma = big_b * ox * ox + big_a * oy * oy - big_a * big_b
        roots = _quadratic_roots(alpha, beta, gamma)
    hits = []
    for t in sorted(roots):
        if t <= tolerance:
            continue
        point = (ox + t * dx, oy + t * dy)
        if quadric.kind == QuadricKind.DEGENERATE:
            point = (point[0], 0.0)
        elif quadric.kind == QuadricKind.VERTICAL_LINE:
            point = (0.0, point[1])
        if quadric.contains_branch(point, tolerance):
            hits.append((t, point))
    return hits


def focus_incidence(family, x, v):
    """
    Distance from the line through x along v to the nearer focus
    """
    px, py = _as_point(x)
    vx, vy = _as_point(v)
    norm = math.hypot(vx, vy)
    if norm == 0.0:
        raise InvalidInputError('Velocity must be nonzero')
    nx, ny = -vy / norm, vx / norm
    return min(abs(nx * (px - fx) + ny * (py - fy)) for fx, fy in family.foci)


def tangency_defect(family, x, v, lam=None):
    """
    Residual between the line through (x, v) and the quadric lam, zero iff tangent.
    Lines of the focal level are checked by focus incidence instead.
    :param family:
    :param x:
    :param v:
    :param lam: quadric to test, the caustic parameter of the line when omitted
    :rtype: float
    """
    if lam is None:
        lam = caustic_parameter(family, x, v).lam
    if abs(lam - family.b) <= EPS_GEO:
        return focus_incidence(family, x, v)
    px, py = _as_point(x)
    vx, vy = _as_point(v)
    norm = math.hypot(vx, vy)
    if norm == 0.0:
        raise InvalidInputError('Velocity must be nonzero')
    nx, ny = -vy / norm, vx / norm
    h = nx * px + ny * py
    q = (family.a - lam) * nx * nx + (family.b - lam) * ny * ny
    if q >= 0.0:
        return abs(math.sqrt(q) - abs(h))
    return math.sqrt(h * h - q)


def classify_motion_region(family, lam):
    """
    Jacobi-Chasles region of possible motion for the caustic lam, caustic included
    :param family:
    :param lam:
    :return: predicate point -> bool
    """
    lam = float(lam)
    if lam > family.a + LAMBDA_TOLERANCE:
        raise InvalidInputError('Caustic parameter {0} exceeds a={1}'.format(lam, family.a))
    if abs(lam - family.b) <= LAMBDA_TOLERANCE:
        return lambda p: True
    if lam < family.b:
        return lambda p: elliptic_coords(family, p).lambda_e <= lam + LAMBDA_TOLERANCE
    return lambda p: elliptic_coords(family, p).lambda_h >= lam - LAMBDA_TOLERANCE


def caustic_directions(family, x, lam):
    """
    Unit directions at x whose line is tangent to the quadric lam, empty outside the motion region
    :return: list of unit vectors, up to two lines (four velocities with the opposite ones)
    """
    px, py = _as_point(x)
    m00 = family.b - py * py - lam
    m01 = px * py
    m11 = family.a - px * px - lam
    # w^T M w = 0 on the unit circle, w = (cos t, sin t)
    p = 0.5 * (m00 - m11)
    q = m01
    r = 0.5 * (m00 + m11)
    amplitude = math.hypot(p, q)
    if amplitude < abs(r) - 1e-15:
        return []
    if amplitude == 0.0:
        return [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    ratio = max(-1.0, min(1.0, -r / amplitude))
    phase = math.atan2(q, p)
    spread = math.acos(ratio)
    angles = sorted({round((phase + spread) / 2.0, 15), round((phase - spread) / 2.0, 15)})
    return [np.array([math.cos(angle), math.sin(angle)]) for angle in angles]


def reflect(v, tangent):
    """
    Mirror a velocity across a tangent line
    :param v: unit vector
    :param tangent: unit vector
    """
    v = np.asarray(v, dtype=float)
    t = np.asarray(tangent, dtype=float)
    t = t / np.linalg.norm(t)
    reflected = 2.0 * np.dot(v, t) * t - v
    return reflected / np.linalg.norm(reflected)
