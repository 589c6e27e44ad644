#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Bifurcation diagram of the caustic integral restricted to a billiard domain.
"""
import logging
from collections import namedtuple

from confocal_billiards.decomposition import meets_y_axis, same_lambda
from confocal_billiards.domain import AngleClass
from confocal_billiards.geometry import QuadricKind


class CriticalKind(object):
    LOCAL_MIN = 'local_min'
    SADDLE_B = 'saddle_b'
    LOCAL_MAX = 'local_max'
    SINGULAR_VERTEX = 'singular_vertex_level'

    PRIORITY = (SADDLE_B, SINGULAR_VERTEX, LOCAL_MIN, LOCAL_MAX)


CriticalValue = namedtuple('CriticalValue', ['lam', 'kind', 'sources'])


class BifurcationDiagram(object):
    def __init__(self, domain, critical_values):
        self.domain = domain
        self.critical_values = critical_values

    def __iter__(self):
        return iter(self.critical_values)

    def __len__(self):
        return len(self.critical_values)

    @property
    def lambdas(self):
        return [value.lam for value in self.critical_values]

    def kind_of(self, lam):
        for value in self.critical_values:
            if same_lambda(value.lam, lam):
                return value.kind
        return None

    def regular_levels(self, per_gap=3):
        """
        Evenly spaced levels strictly inside every gap between consecutive critical values
        """
        levels = []
        values = self.lambdas
        for low, high in zip(values[:-1], values[1:]):
            step = (high - low) / (per_gap + 1.0)
            levels.extend(low + step * k for k in range(1, per_gap + 1))
        return levels

    def __repr__(self):
        return 'BifurcationDiagram({0})'.format('; '.join('{0:g} {1}'.format(value.lam, value.kind)
                                                           for value in self.critical_values))


def _arc_kind(arc):
    kind = arc.kind
    if kind == QuadricKind.ELLIPSE:
        return CriticalKind.LOCAL_MIN
    if kind == QuadricKind.DEGENERATE:
        return CriticalKind.SADDLE_B
    return CriticalKind.LOCAL_MAX


def bifurcation_diagram(domain, logger=None):
    """
    Critical values: arcs without 3pi/2 endpoints give local extrema, both quadrics through every
    3pi/2 vertex give vertex levels, b is always a saddle level and a is a maximum when the domain
    meets the y-axis
    :type domain: confocal_billiards.domain.BilliardDomain
    :rtype: BifurcationDiagram
    """
    logger = logger or logging.getLogger(__name__)
    family = domain.family
    entries = []

    def add(lam, kind, source):
        for entry in entries:
            if same_lambda(entry[0], lam):
                if CriticalKind.PRIORITY.index(kind) < CriticalKind.PRIORITY.index(entry[1]):
                    entry[1] = kind
                entry[2].append(source)
                return
        entries.append([lam, kind, [source]])

    add(family.b, CriticalKind.SADDLE_B, ('family', 'b'))
    singular_arcs = set()
    for index, corner in enumerate(domain.corners):
        if corner.angle_class != AngleClass.THREE_QUARTER:
            continue
        singular_arcs.update(corner.incident_arcs)
        for lam in domain.corner_coords(corner):
            add(lam, CriticalKind.SINGULAR_VERTEX, ('corner', index))
    for index, arc in enumerate(domain.arcs):
        kind = _arc_kind(arc)
        if kind == CriticalKind.SADDLE_B:
            add(family.b, kind, ('arc', index))
        elif arc.kind == QuadricKind.VERTICAL_LINE or index not in singular_arcs:
            add(arc.lam, kind, ('arc', index))
    if meets_y_axis(domain.grid):
        add(family.a, CriticalKind.LOCAL_MAX, ('family', 'a'))
    values = [CriticalValue(lam, kind, tuple(sources)) for lam, kind, sources in sorted(entries)]
    diagram = BifurcationDiagram(domain, values)
    logger.debug('Bifurcation diagram of {0}: {1}'.format(domain.name, diagram))
    return diagram
