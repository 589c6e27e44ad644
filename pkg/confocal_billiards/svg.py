#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Deterministic SVG 1.1 rendering of a billiard: boundary, caustic, trajectory, cut arcs with
their marked points and a strip with the bifurcation diagram.
"""
import io
import math

import numpy as np

from confocal_billiards.chart import TWO_PI, u_of_lambda_e, phi_of_lambda_h, v_in_quadrant, from_chart
from confocal_billiards.decomposition import Mark, same_lambda
from confocal_billiards.domain import AngleClass
from confocal_billiards.exceptions import InvalidInputError
from confocal_billiards.report import number

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="{width:.6f}" height="{height:.6f}" viewBox="0 0 {width:.6f} {height:.6f}" version="1.1"
    xmlns="http://www.w3.org/2000/svg">
<rect x="0.000000" y="0.000000" width="{width:.6f}" height="{height:.6f}" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

PAD = 0.1
STRIP_HEIGHT = 60.0
CONIC_SAMPLES = 256
POINT_RADIUS = 3.0

COLORS = {
    'boundary': '#000000',
    'caustic': '#1f77b4',
    'trajectory': '#d62728',
    Mark.PLUS: '#2ca02c',
    Mark.MINUS: '#9467bd',
    'diagram': '#444444',
}


def _pair(point):
    return '{0:.6f},{1:.6f}'.format(point[0], point[1])


class SvgCanvas(object):
    """
    Fixed viewport over the plane: x to the right, y up, `scale` units per plane unit
    """

    def __init__(self, bounds, scale=200.0, strip=False):
        min_x, min_y, max_x, max_y = bounds
        pad = max(max_x - min_x, max_y - min_y) * PAD
        self.bounds = (min_x - pad, min_y - pad, max_x + pad, max_y + pad)
        self.scale = float(scale)
        self.width = (self.bounds[2] - self.bounds[0]) * self.scale
        self.plot_height = (self.bounds[3] - self.bounds[1]) * self.scale
        self.height = self.plot_height + (STRIP_HEIGHT if strip else 0.0)
        self.commands = []

    def to_view(self, point):
        return ((point[0] - self.bounds[0]) * self.scale,
                (self.bounds[3] - point[1]) * self.scale)

    def contains(self, point):
        return self.bounds[0] <= point[0] <= self.bounds[2] and self.bounds[1] <= point[1] <= self.bounds[3]

    def path(self, runs, color, width=1.0, closed=False, dashed=False, name=None):
        parts = []
        for run in runs:
            if len(run) < 2:
                continue
            view = [self.to_view(point) for point in run]
            parts.append('M ' + ' L '.join(_pair(point) for point in view) + (' Z' if closed else ''))
        if not parts:
            return
        style = 'fill:none;stroke:{0};stroke-width:{1:.6f}{2}'.format(
            color, width, ';stroke-dasharray:4,2' if dashed else '')
        self.commands.append('<path{0} d="{1}" style="{2}"/>'.format(
            ' class="{0}"'.format(name) if name else '', ' '.join(parts), style))

    def line(self, start, end, color, width=1.0, name=None):
        first, second = self.to_view(start), self.to_view(end)
        self.commands.append(
            '<line{0} x1="{1:.6f}" y1="{2:.6f}" x2="{3:.6f}" y2="{4:.6f}" style="stroke:{5};stroke-width:{6:.6f}"/>'.format(
                ' class="{0}"'.format(name) if name else '', first[0], first[1], second[0], second[1], color, width))

    def circle(self, point, filled, color='#000000', view=False):
        x, y = point if view else self.to_view(point)
        self.commands.append('<circle cx="{0:.6f}" cy="{1:.6f}" r="{2:.6f}" style="fill:{3};stroke:{4}"/>'.format(
            x, y, POINT_RADIUS, color if filled else '#ffffff', color))

    def text(self, x, y, text, color='#444444'):
        self.commands.append('<text x="{0:.6f}" y="{1:.6f}" fill="{2}" font-size="9" font-family="monospace">{3}</text>'
                             .format(x, y, color, text))

    def document(self):
        return PREAMBLE.format(width=self.width, height=self.height) + '\n'.join(self.commands) + '\n' + POSTAMBLE


def _clip(canvas, points):
    runs = [[]]
    for point in points:
        if canvas.contains(point):
            runs[-1].append(point)
        elif runs[-1]:
            runs.append([])
    return [run for run in runs if len(run) > 1]


def conic_points(family, lam, reach):
    """
    Polylines of the quadric lam reaching at least `reach` from the centre
    """
    if lam > family.a and not same_lambda(lam, family.a):
        raise InvalidInputError('Caustic parameter {0} exceeds a={1}'.format(lam, family.a))
    if same_lambda(lam, family.b):
        return [[np.array([-reach, 0.0]), np.array([reach, 0.0])]]
    angles = np.linspace(0.0, TWO_PI, CONIC_SAMPLES + 1)
    if lam < family.b:
        u = u_of_lambda_e(family, lam)
        return [[from_chart(family, u, v) for v in angles]]
    phi = phi_of_lambda_h(family, lam)
    top = math.acosh(max(reach / family.c, 1.0)) + 0.5
    radii = np.linspace(0.0, top, CONIC_SAMPLES // 2 + 1)
    branches = []
    for sx in (1, -1):
        lower = [from_chart(family, u, v_in_quadrant(phi, sx, -1)) for u in radii[::-1]]
        upper = [from_chart(family, u, v_in_quadrant(phi, sx, 1)) for u in radii[1:]]
        branches.append(lower + upper)
    return branches


def draw_boundary(canvas, domain, samples=32):
    canvas.path([domain.boundary_polyline(samples)], COLORS['boundary'], width=1.5, closed=True, name='boundary')


def draw_caustic(canvas, family, lam):
    bounds = canvas.bounds
    reach = max(abs(value) for value in bounds)
    runs = []
    for points in conic_points(family, lam, reach):
        runs.extend(_clip(canvas, points))
    canvas.path(runs, COLORS['caustic'], name='caustic')


def draw_trajectory(canvas, steps):
    for record in steps:
        segment = record.segment
        canvas.line(segment.start, segment.end, COLORS['trajectory'], width=0.75, name='trajectory')


def draw_cuts(canvas, partition_result):
    grid = partition_result.grid
    for cut in partition_result.cut_arcs:
        points = {}
        for segment in cut.segments:
            run = [grid.vertex_point(segment.edges[0].start)] + [grid.vertex_point(edge.end) for edge in segment.edges]
            canvas.path([run], COLORS[segment.mark], width=1.0, dashed=segment.mark == Mark.MINUS, name='cut')
            for key in (segment.start, segment.end):
                points[key] = grid.corner_keys.get(key)
        for key in sorted(points):
            corner = points[key]
            if corner is None:
                canvas.circle(grid.vertex_point(key), filled=False, color='#888888')
            else:
                # punctured black points are drawn as rings
                canvas.circle(grid.vertex_point(key), filled=corner.angle_class != AngleClass.THREE_QUARTER)


def draw_diagram(canvas, diagram):
    values = diagram.lambdas
    if not values:
        return
    low, high = min(values), max(values)
    span = high - low or 1.0
    margin = 20.0
    y = canvas.plot_height + STRIP_HEIGHT / 2.0
    left, right = margin, canvas.width - margin
    canvas.commands.append('<line x1="{0:.6f}" y1="{2:.6f}" x2="{1:.6f}" y2="{2:.6f}" style="stroke:{3}"/>'.format(
        left, right, y, COLORS['diagram']))
    for value in diagram:
        x = left + (right - left) * (value.lam - low) / span
        canvas.circle((x, y), filled=True, color=COLORS['diagram'], view=True)
        canvas.text(x, y + 14.0, '{0} {1}'.format(number(value.lam), value.kind))


def domain_bounds(domain, samples=32):
    points = np.array(domain.boundary_polyline(samples))
    return float(points[:, 0].min()), float(points[:, 1].min()), float(points[:, 0].max()), float(points[:, 1].max())


def render_svg(domain, lam=None, steps=None, partition_result=None, diagram=None, scale=200.0):
    """
    SVG document of the domain with optional caustic, trajectory, cut arcs and diagram strip
    :param steps: TrajectoryStep list as returned by dynamics.trajectory
    :rtype: str
    """
    canvas = SvgCanvas(domain_bounds(domain), scale=scale, strip=diagram is not None)
    draw_boundary(canvas, domain)
    if lam is not None:
        draw_caustic(canvas, domain.family, lam)
    if partition_result is not None:
        draw_cuts(canvas, partition_result)
    if steps:
        draw_trajectory(canvas, steps)
    if diagram is not None:
        draw_diagram(canvas, diagram)
    return canvas.document()


def write_svg(document, path):
    with io.open(path, 'w', encoding='utf-8') as svg_file:
        svg_file.write(document)
