#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Neighbourhoods of critical levels: 2-atoms of elementary billiards, the structure of a
non-saddle critical level lambda_i and the assembly of the saddle level b.
"""
import logging
from collections import namedtuple, OrderedDict

import networkx as nx

from confocal_billiards.decomposition import Rule, arc_neighborhood, partition, default_epsilon, same_lambda
from confocal_billiards.domain import Series, focal_components
from confocal_billiards.exceptions import DomainError, IntegrityError
from confocal_billiards.grid import ChartGrid
from confocal_billiards.topology.cell_complex import build_cell_complex
from confocal_billiards.topology.cylinders import cut_keys_of, cut_strip, glue_cylinders
from confocal_billiards.topology.fiber_complex import build_fiber, reglue_halves
from confocal_billiards.topology.fiber_graph import (Side, build_Gr, build_graph, critical_quotient_graph, focal_breaks,
                                                     restrict_graph, saddle_graphs, side_level)
from confocal_billiards.topology.surfaces import regular_fiber, cut_fiber_prediction


class AtomName(object):
    A = 'A'
    B = 'B'
    A_STAR = 'A*'
    C2 = 'C2'
    D1 = 'D1'
    TORUS_CYLINDER = 'torus_cylinder'
    UNKNOWN = 'unknown'

    @staticmethod
    def b_series(m):
        return AtomName.B if m == 1 else 'B_{0}'.format(m)


Annulus = namedtuple('Annulus', ['sign', 'edges'])


class TwoAtom(object):
    """
    Neighbourhood of the singular circle graph K in the base of the foliation
    """

    def __init__(self, name, vertices, edges, annuli, top_bottom_split=None):
        self.name = name
        self.vertices = vertices
        self.edges = edges
        self.annuli = annuli
        self.top_bottom_split = top_bottom_split

    @property
    def chi(self):
        return len(self.vertices) - len(self.edges)

    def boundary_counts(self):
        positive = sum(1 for annulus in self.annuli if annulus.sign == '+')
        return positive, len(self.annuli) - positive

    def graph(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for label, first, second in self.edges:
            graph.add_edge(first, second, label=label)
        return graph

    def vertex_degrees(self):
        return sorted(degree for _, degree in self.graph().degree())

    def annuli_condition(self):
        """
        Every edge of K touches one positive and one negative annulus
        """
        for label, _, _ in self.edges:
            signs = sorted(annulus.sign for annulus in self.annuli if label in annulus.edges)
            if signs != ['+', '-']:
                return False
        return True

    @property
    def valid(self):
        return all(degree == 4 for degree in self.vertex_degrees()) and self.annuli_condition()

    def __repr__(self):
        return 'TwoAtom({0}, V={1}, E={2}, annuli +{3}/-{4})'.format(
            self.name, len(self.vertices), len(self.edges), *self.boundary_counts())


def b_atom(n):
    """
    B_n: a chain of n + 1 circles, consecutive ones touching at a vertex
    """
    if n < 1:
        raise DomainError('B_n needs n >= 1, got {0}'.format(n))
    vertices = ['x{0}'.format(k) for k in range(1, n + 1)]
    edges = [('e0', 'x1', 'x1')]
    circles = [('e0',)]
    split = OrderedDict([('e0', 'top')])
    for k in range(1, n):
        first, second = 'e{0}a'.format(k), 'e{0}b'.format(k)
        edges.extend([(first, vertices[k - 1], vertices[k]), (second, vertices[k - 1], vertices[k])])
        circles.append((first, second))
        split[first] = 'top'
        split[second] = 'bottom'
    last = 'e{0}'.format(n)
    edges.append((last, vertices[-1], vertices[-1]))
    circles.append((last,))
    split[last] = 'bottom'
    annuli = [Annulus('+', circle) for circle in circles]
    annuli.append(Annulus('-', tuple(label for label, _, _ in edges)))
    return TwoAtom(AtomName.b_series(n), vertices, edges, annuli, split)


def a_star_atom():
    edges = [('e1', 'x', 'x'), ('e2', 'x', 'x')]
    annuli = [Annulus('+', ('e1', 'e2')), Annulus('-', ('e1', 'e2'))]
    return TwoAtom(AtomName.A_STAR, ['x'], edges, annuli, OrderedDict([('e1', 'top'), ('e2', 'bottom')]))


def torus_cylinder():
    return TwoAtom(AtomName.TORUS_CYLINDER, [], [], [Annulus('+', ()), Annulus('-', ())])


def interior_focal_components(grid, cells):
    return sum(1 for component in focal_components(grid, cells) if not component.on_boundary)


def elementary_atom(elementary_type, m):
    """
    Atom of an elementary billiard from its class and the number m of focal line pieces inside it
    """
    tag = elementary_type.tag
    if tag in ('A2', 'A0'):
        return b_atom(1)
    if tag == 'A1':
        return a_star_atom()
    if elementary_type.series == Series.B and m > 0:
        return b_atom(m)
    return torus_cylinder()


def identify_atom(m, t_below, t_above, logger=None):
    """
    Atom name from the number of interior focal pieces and the tori counts on both sides of b
    """
    if m == 0:
        return AtomName.TORUS_CYLINDER
    if sorted([t_below, t_above]) == [1, m + 1]:
        return AtomName.b_series(m)
    if m == 1 and t_below == t_above == 1:
        return AtomName.A_STAR
    (logger or logging.getLogger(__name__)).warning(
        'No atom for m={0} with {1} tori below and {2} above'.format(m, t_below, t_above))
    return AtomName.UNKNOWN


ElementAtom = namedtuple('ElementAtom', ['element', 'tag', 'atom', 'm', 't_below', 't_above', 'identified'])


class AtomReport(object):
    """
    Everything computed around one critical value. `checks` are asserted items, `observations`
    are recorded without a pass requirement.
    """

    NONSADDLE = 'nonsaddle'
    SADDLE = 'saddle'

    def __init__(self, domain, critical_value, kind):
        self.domain = domain
        self.critical_value = critical_value
        self.kind = kind
        self.regular_side_fibers = OrderedDict()
        self.complex = None
        self.assembly = None
        self.graphs = []
        self.gluings = OrderedDict()
        self.atoms = []
        self.checks = OrderedDict()
        self.observations = OrderedDict()
        self.annotations = OrderedDict()

    @property
    def gluing_table(self):
        return [(level, entry) for level, gluing in self.gluings.items() for entry in gluing.table]

    @property
    def passed(self):
        return all(self.checks.values())

    def failed_checks(self):
        return [name for name, passed in self.checks.items() if not passed]

    def __repr__(self):
        return 'AtomReport({0} at {1}, {2} checks, {3} failed)'.format(
            self.kind, self.critical_value, len(self.checks), len(self.failed_checks()))


def _log_checks(report, logger):
    for name, passed in list(report.checks.items()) + list(report.observations.items()):
        if not passed:
            logger.warning('{0} check {1} failed for {2} at {3}'.format(
                report.kind, name, report.domain.name, report.critical_value))


def nonsaddle_atom(domain, partition_result, i, epsilon=None, resolution=32, logger=None):
    """
    Structure of the neighbourhood of the cut level lambda_i: regular fibers on both sides, the
    graph over the cut, the cylinder families glued to it and the cell complex
    :type partition_result: confocal_billiards.decomposition.Partition
    :rtype: AtomReport
    """
    logger = logger or logging.getLogger(__name__)
    family = domain.family
    cut = partition_result.cut_arcs[i]
    lam = cut.lambda_i
    if same_lambda(lam, family.b):
        raise DomainError('Cut level {0} is the saddle level, use saddle_atom'.format(lam))
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    report = AtomReport(domain, lam, AtomReport.NONSADDLE)

    below_level = side_level(cut, Side.BELOW, epsilon)
    above_level = side_level(cut, Side.ABOVE, epsilon)
    for side, level in ((Side.BELOW, below_level), (Side.ABOVE, above_level)):
        surface = regular_fiber(domain, level, partition_result, resolution=resolution, logger=logger)
        report.regular_side_fibers[side] = surface
        report.checks['regular_{0}'.format(side)] = surface.agrees

    strip = cut_strip(domain, partition_result, i, epsilon, resolution=resolution, logger=logger)
    graph_below = build_graph(strip.grid, cut, below_level, i, Side.BELOW)
    graph_near = build_graph(strip.grid, cut, side_level(cut, Side.BELOW, epsilon / 2.0), i, Side.BELOW)
    graph_at = critical_quotient_graph(build_graph(strip.grid, cut, lam, i, Side.AT), strip.grid)
    report.graphs.extend([build_Gr(domain, partition_result, i, Side.BELOW, epsilon, logger=logger), graph_at])
    report.checks['graph_level_independent'] = graph_below.inventory() == graph_near.inventory()

    report.gluings[Side.BELOW] = glue_cylinders(graph_below, strip, below_level, logger=logger)
    report.gluings[Side.AT] = glue_cylinders(graph_at, strip, lam, logger=logger)
    report.annotations['nu'] = strip.nu
    report.annotations['xi'] = strip.xi
    report.checks['cylinders_below'] = report.gluings[Side.BELOW].cylinder_count == 2 * (strip.nu + strip.xi)
    report.checks['cylinders_at'] = report.gluings[Side.AT].cylinder_count == 2 * strip.nu
    for side, gluing in report.gluings.items():
        for name, passed in gluing.checks.items():
            report.checks['{0}_{1}'.format(name, side)] = passed

    report.complex = build_cell_complex(domain, lam, epsilon, resolution=resolution, logger=logger)
    report.checks['complex_valid'] = report.complex.valid
    report.annotations['chi_complex'] = report.complex.chi
    report.annotations['chi_graph'] = graph_at.chi
    report.annotations['chi_cut_fiber'] = report.gluings[Side.AT].cut_chi
    report.checks['two_way_chi'] = report.complex.chi == graph_at.chi + report.gluings[Side.AT].cut_chi

    if cut.rule == Rule.HYPERBOLIC:
        theta = lam + epsilon / 2.0
        try:
            outer = cut_fiber_prediction(domain, theta, below_level, resolution=resolution, logger=logger)
        except DomainError as error:
            logger.info('No outer part check for cut {0}: {1}'.format(i, error))
        else:
            report.annotations['g_inside'] = outer.annotations['g_inside']
            report.annotations['cut_handles'] = outer.annotations['cut_handles']
            report.annotations['chi_capped'] = outer.annotations['chi_capped']
            report.checks['outer_part'] = outer.agrees
    _log_checks(report, logger)
    logger.info('Non-saddle level {0} of {1}: {2}'.format(lam, domain.name, report))
    return report


def _element_atom(element, grid, epsilon, resolution, logger):
    m = interior_focal_components(grid, element.cells)
    atom = elementary_atom(element.elementary_type, m)
    t_below = t_above = None
    identified = AtomName.UNKNOWN
    if element.domain is None:
        logger.warning('Element {0} has no boundary description, atom taken from its class only'.format(
            element.index))
    else:
        b = element.domain.family.b
        t_below = len(regular_fiber(element.domain, b - epsilon, resolution=resolution, logger=logger).components)
        t_above = len(regular_fiber(element.domain, b + epsilon, resolution=resolution, logger=logger).components)
        identified = identify_atom(m, t_below, t_above, logger)
    return ElementAtom(element.index, element.elementary_type.tag, atom, m, t_below, t_above, identified)


class HalfName(object):
    TOP = 'top'
    BOTTOM = 'bottom'


class HalfAssembly(namedtuple('HalfAssembly', ['name', 'oracle_chi', 'cut_chi', 'graphs'])):
    """
    One side of the focal line at b: the pieces cut open along the cuts plus the graphs over them
    """

    @property
    def chi(self):
        return self.cut_chi + sum(graph.chi for graph in self.graphs)


class SaddleAssembly(object):
    """
    The singular level b put together from its two halves and the focal graph they are reglued along
    """

    def __init__(self, level):
        self.level = level
        self.halves = OrderedDict()
        self.focal = None
        self.oracle_chi = None
        self.checks = OrderedDict()

    @property
    def chi(self):
        halves = sum(half.chi for half in self.halves.values())
        return halves - self.focal.boundary_chi + self.focal.graph_chi - self.focal.foci

    def __repr__(self):
        return 'SaddleAssembly(b={0}, chi={1}, {2})'.format(
            self.level, self.chi, ', '.join('{0}={1}'.format(name, half.chi) for name, half in self.halves.items()))


def assemble_saddle_level(domain, partition_result, resolution=32, logger=None):
    """
    Split the level b along the focal line, glue each half from its cut-open pieces and the graphs
    over the cuts (with the focal crossings as extra white points), then reglue the halves along
    the focal segments; blown-up foci add one edge each
    :rtype: SaddleAssembly
    """
    logger = logger or logging.getLogger(__name__)
    b = domain.family.b
    cuts = [(index, cut) for index, cut in enumerate(partition_result.cut_arcs) if not same_lambda(cut.lambda_i, b)]
    grid = ChartGrid.build(domain, lambdas=[b] + [cut.lambda_i for _, cut in cuts], resolution=resolution,
                           logger=logger)
    breaks = focal_breaks(grid)
    cut_keys = set()
    for _, cut in cuts:
        cut_keys |= cut_keys_of(grid, cut)
    assembly = SaddleAssembly(b)
    fibers = OrderedDict()
    for name, upper in ((HalfName.TOP, True), (HalfName.BOTTOM, False)):
        mask = grid.half_mask(upper)
        fibers[name] = build_fiber(grid, b, mask=mask, logger=logger)
        cut_fiber = build_fiber(grid, b, mask=mask, free_keys=cut_keys, logger=logger)
        graphs = [restrict_graph(build_graph(grid, cut, b, index, Side.AT, extra_breaks=breaks), grid, mask)
                  for index, cut in cuts]
        half = HalfAssembly(name, fibers[name].chi, cut_fiber.chi, graphs)
        assembly.halves[name] = half
        assembly.checks['{0}_chi'.format(name)] = half.chi == half.oracle_chi
    assembly.focal = reglue_halves(fibers[HalfName.TOP], fibers[HalfName.BOTTOM], grid.interior_focal_keys())
    assembly.oracle_chi = build_fiber(grid, b, logger=logger).chi
    assembly.checks['assembled_chi'] = assembly.chi == assembly.oracle_chi
    logger.info('Saddle level of {0} assembled: {1}'.format(domain.name, assembly))
    return assembly


def saddle_atom(domain, partition_result=None, epsilon=None, resolution=32, logger=None):
    """
    Assembly of the saddle level b: the 2-atom of every partition element, the graphs over the
    cuts at b - epsilon, b, b + epsilon with their gluings (at b one per side of the focal line), the
    halves reglued along the focal segments and the cell complex
    :rtype: AtomReport
    """
    logger = logger or logging.getLogger(__name__)
    partition_result = partition_result or partition(domain, resolution=resolution, logger=logger)
    b = domain.family.b
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    report = AtomReport(domain, b, AtomReport.SADDLE)

    for side, level in ((Side.BELOW, b - epsilon), (Side.ABOVE, b + epsilon)):
        surface = regular_fiber(domain, level, partition_result, resolution=resolution, logger=logger)
        report.regular_side_fibers[side] = surface
        report.checks['regular_{0}'.format(side)] = surface.agrees

    for element in partition_result.elements:
        element_atom = _element_atom(element, partition_result.grid, epsilon, resolution, logger)
        report.atoms.append(element_atom)
        report.checks['atom_{0}_valid'.format(element.index)] = element_atom.atom.valid
        if element_atom.t_below is not None:
            report.checks['atom_{0}_lookup'.format(element.index)] = element_atom.identified == element_atom.atom.name

    for index, cut in enumerate(partition_result.cut_arcs):
        below, at, above = saddle_graphs(domain, partition_result, index, epsilon, logger=logger)
        report.graphs.extend([below, at, above])
        strip = arc_neighborhood(domain, partition_result, index, epsilon / 2.0, resolution=resolution,
                                 levels=[cut.lambda_i - epsilon, cut.lambda_i + epsilon, b - epsilon, b + epsilon],
                                 logger=logger)
        for side, level in ((Side.BELOW, b - epsilon), (Side.ABOVE, b + epsilon)):
            name = 'cut_{0}_{1}'.format(index, side)
            graph = build_graph(strip.grid, cut, level, index, side)
            try:
                gluing = glue_cylinders(graph, strip, level, logger=logger)
            except IntegrityError as error:
                logger.warning('Gluing over cut {0} at {1} failed: {2}'.format(index, level, error))
                report.observations[name] = False
                continue
            report.gluings[name] = gluing
            report.observations[name] = all(gluing.checks.values())
        if same_lambda(cut.lambda_i, b):
            continue
        graph = build_graph(strip.grid, cut, b, index, Side.AT, extra_breaks=focal_breaks(strip.grid))
        for half, upper in ((HalfName.TOP, True), (HalfName.BOTTOM, False)):
            mask = strip.grid.half_mask(upper)
            if not (strip.cells & mask).any():
                continue
            name = 'cut_{0}_at_{1}'.format(index, half)
            try:
                gluing = glue_cylinders(restrict_graph(graph, strip.grid, mask), strip, b, logger=logger,
                                        within=mask)
            except IntegrityError as error:
                logger.warning('Gluing over cut {0} at b on the {1} half failed: {2}'.format(index, half, error))
                report.checks[name] = False
                continue
            report.gluings[name] = gluing
            for check, passed in gluing.checks.items():
                report.checks['{0}_{1}'.format(name, check)] = passed

    assembly = assemble_saddle_level(domain, partition_result, resolution=resolution, logger=logger)
    report.assembly = assembly
    report.annotations['chi_singular_level'] = assembly.oracle_chi
    for half in assembly.halves.values():
        report.annotations['chi_{0}'.format(half.name)] = half.chi
    report.annotations['chi_focal_graph'] = assembly.focal.graph_chi
    report.annotations['chi_assembled'] = assembly.chi
    for name, passed in assembly.checks.items():
        report.checks[name] = passed
    report.complex = build_cell_complex(domain, b, epsilon, resolution=resolution, logger=logger)
    report.checks['complex_valid'] = report.complex.valid
    report.checks['complex_matches_oracle'] = report.complex.chi == assembly.oracle_chi
    report.checks['complex_matches_assembly'] = report.complex.chi == assembly.chi
    if domain.complexity == 0:
        report.observations['singular_level_chi'] = assembly.oracle_chi == 0

    conservation = genus_conservation_check(domain, partition_result, epsilon, resolution=resolution, logger=logger)
    report.annotations['k_prime_below'] = conservation.below
    report.annotations['k_prime_above'] = conservation.above
    report.checks['genus_conservation'] = conservation.passed
    _log_checks(report, logger)
    logger.info('Saddle level of {0}: {1}'.format(domain.name, report))
    return report


GenusConservation = namedtuple('GenusConservation', ['passed', 'below', 'above', 'genus_below', 'genus_above',
                                                     'vertex_on_focal_line'])


def genus_conservation_check(domain, partition_result=None, epsilon=None, resolution=32, logger=None):
    """
    Singular counts of the regular fibers just below and just above b agree exactly when no
    3pi/2 vertex lies on the focal line
    :rtype: GenusConservation
    """
    logger = logger or logging.getLogger(__name__)
    b = domain.family.b
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    below = regular_fiber(domain, b - epsilon, partition_result, resolution=resolution, logger=logger)
    above = regular_fiber(domain, b + epsilon, partition_result, resolution=resolution, logger=logger)
    below_sum = sum(below.region.singular_counts)
    above_sum = sum(above.region.singular_counts)
    on_focal_line = any(same_lambda(value, b) for corner in domain.singular_corners
                        for value in domain.corner_coords(corner))
    passed = (below_sum == above_sum) == (not on_focal_line)
    result = GenusConservation(passed, below_sum, above_sum, sum(below.genera), sum(above.genera), on_focal_line)
    logger.info('Genus conservation across b for {0}: {1}'.format(domain.name, result))
    return result
