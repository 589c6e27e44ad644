#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Reference domains over the family a=2, b=1 (foci at (+-1, 0)).

The twelve elementary classes, the non-convex domains nc1..nc3, the comb with two
prongs inside and three outside the cut hyperbola, and the bump/step pair that share
elementary types but differ in how singular points sit on the shared cut.
"""
import math
from collections import OrderedDict

from confocal_billiards.domain import (BilliardDomain, ellipse_arc, hyperbola_arc, focal_segment, focal_ray,
                                       y_axis_arc)
from confocal_billiards.exceptions import InvalidInputError
from confocal_billiards.geometry import ConfocalFamily

Q1, Q2, Q3, Q4 = (1, 1), (-1, 1), (-1, -1), (1, -1)


def default_family():
    return ConfocalFamily(2.0, 1.0)


def rectilinear_domain(family, vertices, signs=Q1, name=None, decomposition=None):
    """
    Domain inside one quadrant whose boundary polygon is given by (lambda_e, lambda_h) vertices
    :param family:
    :param vertices: consecutive vertices share lambda_e (ellipse arc) or lambda_h (hyperbola arc)
    :param signs: quadrant (sx, sy)
    :rtype: BilliardDomain
    """
    sx, sy = signs
    arcs = []
    count = len(vertices)
    for index in range(count):
        le_from, lh_from = vertices[index]
        le_to, lh_to = vertices[(index + 1) % count]
        if le_from == le_to:
            if le_from == family.b:
                arcs.append(focal_segment(family, sx * math.sqrt(family.a - lh_from),
                                          sx * math.sqrt(family.a - lh_to), sy))
            else:
                arcs.append(ellipse_arc(family, le_from, lh_from, lh_to, sx, sy))
        elif lh_from == lh_to:
            if lh_from == family.b:
                arcs.append(focal_ray(family, sx * math.sqrt(family.a - le_from), sx * math.sqrt(family.a - le_to)))
            elif lh_from == family.a:
                arcs.append(y_axis_arc(family, le_from, le_to, sy))
            else:
                arcs.append(hyperbola_arc(family, lh_from, le_from, le_to, sx, sy))
        else:
            raise InvalidInputError('Vertices {0} and {1} are not on a common quadric'.format(
                vertices[index], vertices[(index + 1) % count]))
    return BilliardDomain(family, arcs, name=name, decomposition=decomposition)


# series A

def a2(family=None, outer=0.0):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, b, *Q2),
        ellipse_arc(family, outer, b, a, *Q3),
        ellipse_arc(family, outer, a, b, *Q4),
    ]
    return BilliardDomain(family, arcs, name='A2')


def a2_primed(family=None, outer=0.0):
    family = family or default_family()
    b, a, c = family.b, family.a, family.c
    x_out = math.sqrt(a - outer)
    arcs = [
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, b, *Q2),
        focal_ray(family, -x_out, -c),
        focal_segment(family, -c, c),
        focal_ray(family, c, x_out),
    ]
    return BilliardDomain(family, arcs, name="A'2")


def a1(family=None, outer=0.0, cut=1.5):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, cut, *Q2),
        hyperbola_arc(family, cut, outer, b, *Q2),
        hyperbola_arc(family, cut, b, outer, *Q3),
        ellipse_arc(family, outer, cut, a, *Q3),
        ellipse_arc(family, outer, a, b, *Q4),
    ]
    return BilliardDomain(family, arcs, name='A1')


def a1_primed(family=None, outer=0.0, cut=1.5):
    family = family or default_family()
    b, a, c = family.b, family.a, family.c
    arcs = [
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, cut, *Q2),
        hyperbola_arc(family, cut, outer, b, *Q2),
        focal_segment(family, -math.sqrt(a - cut), c),
        focal_ray(family, c, math.sqrt(a - outer)),
    ]
    return BilliardDomain(family, arcs, name="A'1")


def a0(family=None, outer=0.0, cut=1.5):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        ellipse_arc(family, outer, cut, a, *Q1),
        ellipse_arc(family, outer, a, cut, *Q2),
        hyperbola_arc(family, cut, outer, b, *Q2),
        hyperbola_arc(family, cut, b, outer, *Q3),
        ellipse_arc(family, outer, cut, a, *Q3),
        ellipse_arc(family, outer, a, cut, *Q4),
        hyperbola_arc(family, cut, outer, b, *Q4),
        hyperbola_arc(family, cut, b, outer, *Q1),
    ]
    return BilliardDomain(family, arcs, name='A0')


def a0_primed(family=None, outer=0.0, cut=1.5):
    family = family or default_family()
    b, a = family.b, family.a
    x_cut = math.sqrt(a - cut)
    arcs = [
        ellipse_arc(family, outer, cut, a, *Q1),
        ellipse_arc(family, outer, a, cut, *Q2),
        hyperbola_arc(family, cut, outer, b, *Q2),
        focal_segment(family, -x_cut, x_cut),
        hyperbola_arc(family, cut, b, outer, *Q1),
    ]
    return BilliardDomain(family, arcs, name="A'0")


# series B, all inside the annulus between two ellipses

def b0(family=None, outer=0.0, inner=0.5, low=1.2, high=1.8):
    family = family or default_family()
    return rectilinear_domain(family, [(outer, low), (outer, high), (inner, high), (inner, low)], name='B0')


def b1(family=None, outer=0.0, inner=0.5, cut=1.5):
    family = family or default_family()
    b = family.b
    arcs = [
        hyperbola_arc(family, cut, inner, outer, *Q4),
        ellipse_arc(family, outer, cut, b, *Q4),
        ellipse_arc(family, outer, b, cut, *Q1),
        hyperbola_arc(family, cut, outer, inner, *Q1),
        ellipse_arc(family, inner, cut, b, *Q1),
        ellipse_arc(family, inner, b, cut, *Q4),
    ]
    return BilliardDomain(family, arcs, name='B1')


def b2(family=None, outer=0.0, inner=0.5, cut=1.5):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        hyperbola_arc(family, cut, inner, outer, *Q4),
        ellipse_arc(family, outer, cut, b, *Q4),
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, b, *Q2),
        ellipse_arc(family, outer, b, cut, *Q3),
        hyperbola_arc(family, cut, outer, inner, *Q3),
        ellipse_arc(family, inner, cut, b, *Q3),
        ellipse_arc(family, inner, b, a, *Q2),
        ellipse_arc(family, inner, a, b, *Q1),
        ellipse_arc(family, inner, b, cut, *Q4),
    ]
    return BilliardDomain(family, arcs, name='B2')


def b1_primed(family=None, outer=0.0, inner=0.5, cut=1.5):
    family = family or default_family()
    return rectilinear_domain(family, [(inner, family.b), (outer, family.b), (outer, cut), (inner, cut)],
                              name="B'1")


def b2_primed(family=None, outer=0.0, inner=0.5, cut=1.5):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        focal_ray(family, math.sqrt(a - inner), math.sqrt(a - outer)),
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, b, *Q2),
        ellipse_arc(family, outer, b, cut, *Q3),
        hyperbola_arc(family, cut, outer, inner, *Q3),
        ellipse_arc(family, inner, cut, b, *Q3),
        ellipse_arc(family, inner, b, a, *Q2),
        ellipse_arc(family, inner, a, b, *Q1),
    ]
    return BilliardDomain(family, arcs, name="B'2")


def b2_double_primed(family=None, outer=0.0, inner=0.5):
    family = family or default_family()
    b, a = family.b, family.a
    arcs = [
        focal_ray(family, math.sqrt(a - inner), math.sqrt(a - outer)),
        ellipse_arc(family, outer, b, a, *Q1),
        ellipse_arc(family, outer, a, b, *Q2),
        focal_ray(family, -math.sqrt(a - outer), -math.sqrt(a - inner)),
        ellipse_arc(family, inner, b, a, *Q2),
        ellipse_arc(family, inner, a, b, *Q1),
    ]
    return BilliardDomain(family, arcs, name="B''2")


# non-convex domains

def nc1(family=None):
    """
    One 3pi/2 vertex at lambda_e=0.3, lambda_h=1.5
    """
    family = family or default_family()
    vertices = [(0.0, 1.2), (0.0, 1.8), (0.3, 1.8), (0.3, 1.5), (0.4, 1.5), (0.4, 1.2)]
    return rectilinear_domain(family, vertices, name='nc1')


def nc2(family=None):
    """
    Two 3pi/2 vertices on the hyperbola 1.5
    """
    family = family or default_family()
    vertices = [(0.0, 1.2), (0.0, 1.8), (0.15, 1.8), (0.15, 1.5), (0.3, 1.5), (0.3, 1.8), (0.4, 1.8), (0.4, 1.2)]
    return rectilinear_domain(family, vertices, name='nc2')


def nc3(family=None, bottom=1.36, top=1.75):
    """
    Lower half of an A0 between the branches of `bottom` glued along the focal segment to the
    upper half of an A0 between the branches of `top`; both 3pi/2 vertices lie on the focal segment
    """
    family = family or default_family()
    b, a = family.b, family.a
    x_bottom, x_top = math.sqrt(a - bottom), math.sqrt(a - top)
    arcs = [
        ellipse_arc(family, 0.0, bottom, a, *Q3),
        ellipse_arc(family, 0.0, a, bottom, *Q4),
        hyperbola_arc(family, bottom, 0.0, b, *Q4),
        focal_segment(family, x_bottom, x_top, -1),
        hyperbola_arc(family, top, b, 0.0, *Q1),
        ellipse_arc(family, 0.0, top, a, *Q1),
        ellipse_arc(family, 0.0, a, top, *Q2),
        hyperbola_arc(family, top, 0.0, b, *Q2),
        focal_segment(family, -x_top, -x_bottom, -1),
        hyperbola_arc(family, bottom, b, 0.0, *Q3),
    ]
    return BilliardDomain(family, arcs, name='nc3')


def comb(family=None):
    """
    Prongs on both sides of the hyperbola 1.5: two inside, three outside
    """
    family = family or default_family()
    vertices = [
        (0.0, 1.2), (0.0, 1.5), (0.05, 1.5), (0.05, 1.8), (0.25, 1.8), (0.25, 1.5), (0.3, 1.5), (0.3, 1.8),
        (0.45, 1.8), (0.45, 1.5), (0.5, 1.5), (0.5, 1.2), (0.4, 1.2), (0.4, 1.5), (0.35, 1.5), (0.35, 1.2),
        (0.2, 1.2), (0.2, 1.5), (0.1, 1.5), (0.1, 1.2),
    ]
    return rectilinear_domain(family, vertices, name='comb')


def bump(family=None):
    """
    Two 3pi/2 vertices on the ellipse 0.3, both ends of the cut between the pieces
    """
    family = family or default_family()
    vertices = [(0.0, 1.2), (0.0, 1.8), (0.3, 1.8), (0.3, 1.6), (0.5, 1.6), (0.5, 1.4), (0.3, 1.4), (0.3, 1.2)]
    return rectilinear_domain(family, vertices, name='bump', decomposition='elliptic')


def step(family=None):
    """
    Same elementary pieces as bump, one 3pi/2 vertex on the cut
    """
    family = family or default_family()
    vertices = [(0.0, 1.2), (0.0, 1.8), (0.3, 1.8), (0.3, 1.6), (0.5, 1.6), (0.5, 1.2)]
    return rectilinear_domain(family, vertices, name='step', decomposition='elliptic')


ELEMENTARY = OrderedDict([
    ('A0', a0), ('A1', a1), ('A2', a2), ("A'0", a0_primed), ("A'1", a1_primed), ("A'2", a2_primed),
    ('B0', b0), ('B1', b1), ('B2', b2), ("B'1", b1_primed), ("B'2", b2_primed), ("B''2", b2_double_primed),
])

NON_CONVEX = OrderedDict([('nc1', nc1), ('nc2', nc2), ('nc3', nc3), ('comb', comb), ('bump', bump), ('step', step)])


def build(name, family=None):
    builders = dict(ELEMENTARY)
    builders.update(NON_CONVEX)
    if name not in builders:
        raise InvalidInputError('Unknown reference domain {0}'.format(name))
    return builders[name](family)
