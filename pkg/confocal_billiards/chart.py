#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Unfolded elliptic chart  x = c cosh(u) cos(v),  y = c sinh(u) sin(v)

u >= 0, v in [0, 2 pi), with the seam (0, v) ~ (0, 2 pi - v) folding onto the segment
between the foci. Ellipses are u-lines, hyperbola branches and the focal rays are v-lines.
"""
import math

import numpy as np

from confocal_billiards.geometry import elliptic_coords

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
AXIS_VALUES = (0.0, HALF_PI, math.pi, 1.5 * math.pi, TWO_PI)


def u_of_lambda_e(family, lambda_e):
    return math.asinh(math.sqrt(max(family.b - lambda_e, 0.0) / family.d))


def lambda_e_of_u(family, u):
    return family.b - family.d * math.sinh(u) ** 2


def phi_of_lambda_h(family, lambda_h):
    """
    First-quadrant angle of the hyperbola lambda_h, 0 on the focal ray, pi/2 on the y-axis
    """
    return math.atan2(math.sqrt(max(lambda_h - family.b, 0.0)), math.sqrt(max(family.a - lambda_h, 0.0)))


def lambda_h_of_v(family, v):
    return family.b + family.d * math.sin(v) ** 2


def v_in_quadrant(phi, sx, sy):
    """
    Chart angle of the first-quadrant angle phi mirrored into the quadrant of signs (sx, sy)
    """
    if sx >= 0 and sy >= 0:
        return phi
    if sx < 0 <= sy:
        return math.pi - phi
    if sx < 0 and sy < 0:
        return math.pi + phi
    return TWO_PI - phi


def quadrant_signs(v):
    """
    Signs (sx, sy) of the open quadrant containing the chart angle v
    """
    v = v % TWO_PI
    sx = 1 if (v < HALF_PI or v > 1.5 * math.pi) else -1
    sy = 1 if v < math.pi else -1
    return sx, sy


def to_chart(family, p):
    """
    (u, v) of a planar point, v taken in the quadrant of the point
    """
    x, y = float(p[0]), float(p[1])
    coords = elliptic_coords(family, (x, y))
    u = u_of_lambda_e(family, coords.lambda_e)
    phi = phi_of_lambda_h(family, coords.lambda_h)
    sx = -1 if x < 0 else 1
    sy = -1 if y < 0 else 1
    v = v_in_quadrant(phi, sx, sy)
    if y == 0.0 and u == 0.0 and x < 0:
        v = math.pi - phi
    return u, v % TWO_PI


def from_chart(family, u, v):
    c = family.c
    return np.array([c * math.cosh(u) * math.cos(v), c * math.sinh(u) * math.sin(v)])


def chart_frame(family, u, v):
    """
    Planar images of the coordinate directions d/du and d/dv at (u, v)
    """
    c = family.c
    d_u = np.array([c * math.sinh(u) * math.cos(v), c * math.cosh(u) * math.sin(v)])
    d_v = np.array([-c * math.cosh(u) * math.sin(v), c * math.sinh(u) * math.cos(v)])
    return d_u, d_v


def seam_mirror(v):
    return (TWO_PI - v) % TWO_PI
