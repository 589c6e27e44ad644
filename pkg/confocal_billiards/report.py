#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Line-oriented text reports. Every function returns a list of lines in a fixed order so that
reports of identical runs are byte-identical.
"""
import numbers

import numpy as np


def number(value):
    if value is None:
        return '-'
    if isinstance(value, (bool, np.bool_)):
        return 'yes' if value else 'no'
    if isinstance(value, numbers.Integral):
        return str(value)
    return '{0:.6g}'.format(value)


def _verdict(passed):
    return 'pass' if passed else 'fail'


def _key_values(prefix, mapping):
    return ['{0}{1} {2}'.format(prefix, key, number(value) if not isinstance(value, str) else value)
            for key, value in mapping.items()]


def validation_lines(domain, validation_report):
    lines = ['domain {0}'.format(domain.name or 'unnamed'),
             'family a={0} b={1}'.format(number(domain.family.a), number(domain.family.b)),
             'arcs {0}'.format(len(domain.arcs)),
             'complexity {0}'.format(domain.complexity),
             'homogeneity {0}'.format(domain.computed_homogeneity()),
             'valid {0}'.format(number(validation_report.valid))]
    lines.extend('violation {0}'.format(violation) for violation in validation_report.violations)
    return lines


def simulation_lines(domain, conservation, trajectories=1):
    return ['domain {0}'.format(domain.name or 'unnamed'),
            'trajectories {0}'.format(trajectories),
            'steps {0}'.format(conservation.steps),
            'max_drift {0:.3e}'.format(conservation.max_drift),
            'max_tangency_defect {0:.3e}'.format(conservation.max_tangency_defect),
            'max_region_excess {0:.3e}'.format(conservation.max_region_excess),
            'termination {0}'.format(conservation.termination)]


def format_diagram(diagram):
    return '; '.join('{0} {1}'.format(number(value.lam), value.kind) for value in diagram)


def diagram_lines(diagram):
    lines = [format_diagram(diagram)]
    for value in diagram:
        sources = ','.join('{0}:{1}'.format(*source) for source in value.sources)
        lines.append('critical {0} {1} sources={2}'.format(number(value.lam), value.kind, sources))
    return lines


def format_surface(surface):
    count = len(surface.components)
    if not count:
        parts = ['empty']
    else:
        parts = ['{0} component{1}'.format(count, '' if count == 1 else 's')]
        parts.extend('genus {0}, punctures {1}'.format(component.genus, component.punctures)
                     for component in surface.components)
    text = ', '.join(parts[:2]) + ''.join('; ' + part for part in parts[2:])
    if surface.oracle is not None:
        text += '; oracle: {0}'.format('agree' if surface.agrees else 'disagree')
    return text


def fiber_lines(domain, surface):
    lines = ['domain {0}'.format(domain.name or 'unnamed'),
             'lambda {0}'.format(number(surface.lam)),
             format_surface(surface)]
    if surface.region is not None:
        lines.append('singular_counts {0}'.format(' '.join(str(k) for k in surface.region.singular_counts) or '-'))
    if surface.oracle is not None:
        lines.extend(_key_values('oracle.', surface.oracle.summary()))
        for component in surface.oracle.components:
            lines.append('oracle.component {0}: chi={1} genus={2} punctures={3} boundary_circles={4}'.format(
                component.index, component.chi, number(component.genus), component.punctures,
                component.boundary_circles))
    lines.extend(_key_values('annotation.', surface.annotations))
    lines.extend('check {0} {1}'.format(name, _verdict(passed)) for name, passed in surface.checks.items())
    return lines


def graph_lines(graph):
    lines = ['graph {0}'.format(graph)]
    for name, vertex in sorted(graph.vertices.items()):
        lines.append('  vertex {0} {1}{2}'.format(name, vertex.color, ' punctured' if vertex.punctured else ''))
    for edge in sorted(graph.edges, key=lambda item: item.label):
        lines.append('  edge {0} {1} {2} {3}'.format(edge.label, edge.source, edge.target, edge.mark))
    return lines


def complex_lines(complex_):
    lines = ['complex c={0} epsilon={1} chi={2}'.format(number(complex_.c), number(complex_.epsilon), complex_.chi)]
    for tag, level in complex_.levels.items():
        lines.append('  level {0} {1}'.format(tag, number(level)))
    for (dim, kind), count in complex_.counts().items():
        lines.append('  cells dim={0} kind={1} {2}'.format(dim, kind, count))
    return lines


def atom_lines(report):
    lines = ['domain {0}'.format(report.domain.name or 'unnamed'),
             'critical_value {0}'.format(number(report.critical_value)),
             'kind {0}'.format(report.kind)]
    for side, surface in report.regular_side_fibers.items():
        lines.append('fiber {0} lambda={1}: {2}'.format(side, number(surface.lam), format_surface(surface)))
    for element in report.atoms:
        lines.append('atom element={0} type={1} atom={2} m={3} tori={4}|{5} identified={6}'.format(
            element.element, element.tag, element.atom.name, element.m, number(element.t_below),
            number(element.t_above), element.identified))
        if element.atom.top_bottom_split:
            lines.append('  split {0}'.format(' '.join('{0}:{1}'.format(edge, half)
                                                       for edge, half in element.atom.top_bottom_split.items())))
    if report.complex is not None:
        lines.extend(complex_lines(report.complex))
    for graph in report.graphs:
        lines.extend(graph_lines(graph))
    for level, entry in report.gluing_table:
        lines.append('glue {0} {1} {2} {3}'.format(level, entry.cylinder, entry.key, entry.label))
    lines.extend(_key_values('annotation.', report.annotations))
    lines.extend('check {0} {1}'.format(name, _verdict(passed)) for name, passed in report.checks.items())
    lines.extend('observation {0} {1}'.format(name, _verdict(passed))
                 for name, passed in report.observations.items())
    lines.append('result {0}'.format(_verdict(report.passed)))
    return lines
