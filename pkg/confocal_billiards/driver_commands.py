#!/usr/bin/python
# -*- coding: utf-8 -*-
import numpy as np

from confocal_billiards import domain_file, report, svg
from confocal_billiards.decomposition import Rule, partition, same_lambda
from confocal_billiards.domain import validate as validate_domain
from confocal_billiards.dynamics import random_phase_point, trajectory, ConservationReport
from confocal_billiards.exceptions import DomainError, IntegrityError, InvalidInputError, ValidationFailure
from confocal_billiards.topology.atoms import nonsaddle_atom, saddle_atom
from confocal_billiards.topology.diagram import bifurcation_diagram
from confocal_billiards.topology.surfaces import regular_fiber, monte_carlo_connectivity


class DriverCommands(object):
    """
    One method per command line command, each returns the lines of its report
    """

    def __init__(self, logger, runtime_config):
        """
        :type logger: logging.Logger
        :type runtime_config: confocal_billiards.helpers.runtime_configuration.RuntimeConfiguration
        """
        self._logger = logger
        self._runtime_config = runtime_config
        self._resolution = int(runtime_config.read_key('ORACLE.RESOLUTION', 32))
        self._monte_carlo_points = int(runtime_config.read_key('ORACLE.MONTE_CARLO_POINTS', 500))
        self._monte_carlo_steps = int(runtime_config.read_key('ORACLE.MONTE_CARLO_STEPS', 200))
        self._simulation_steps = int(runtime_config.read_key('SIMULATION.STEPS', 1000))
        self._trajectories = int(runtime_config.read_key('SIMULATION.TRAJECTORIES', 1))
        self._svg_scale = float(runtime_config.read_key('SVG.SCALE', 200))
        rule = runtime_config.read_key('DECOMPOSITION.RULE', None)
        self._rule = rule.lower() if rule else None
        if self._rule is not None and self._rule not in Rule.ALL:
            raise InvalidInputError('Unknown decomposition rule {0} in runtime configuration'.format(rule))

    def _load(self, domain_path):
        domain = domain_file.load(domain_path)
        self._logger.info('Loaded {0} from {1}'.format(domain, domain_path))
        return domain

    def _load_valid(self, domain_path):
        domain = self._load(domain_path)
        self._validation_lines(domain)
        return domain

    def _validation_lines(self, domain):
        validation_report = validate_domain(domain)
        lines = report.validation_lines(domain, validation_report)
        if not validation_report.valid:
            error = ValidationFailure(validation_report)
            error.lines = lines
            raise error
        return lines

    def _partition(self, domain, resolution):
        return partition(domain, self._rule, resolution=resolution, logger=self._logger)

    def validate(self, domain_path):
        """
        Validation report; raises ValidationFailure carrying the report lines for an invalid domain
        """
        return self._validation_lines(self._load(domain_path))

    def simulate(self, domain_path, steps=None, seed=0):
        domain = self._load_valid(domain_path)
        steps = steps or self._simulation_steps
        random_state = np.random.RandomState(seed)
        worst = None
        for _ in range(self._trajectories):
            _, conservation = trajectory(random_phase_point(domain, random_state), domain, steps, logger=self._logger)
            if worst is None:
                worst = conservation
            else:
                worst = ConservationReport(max(worst.steps, conservation.steps),
                                           max(worst.max_drift, conservation.max_drift),
                                           max(worst.max_tangency_defect, conservation.max_tangency_defect),
                                           max(worst.max_region_excess, conservation.max_region_excess),
                                           worst.termination)
        return report.simulation_lines(domain, worst, self._trajectories)

    def diagram(self, domain_path):
        domain = self._load_valid(domain_path)
        return report.diagram_lines(bifurcation_diagram(domain, logger=self._logger))

    def fiber(self, domain_path, lam, resolution=None, seed=0):
        if lam is None:
            raise InvalidInputError('The fiber command needs a caustic parameter')
        domain = self._load_valid(domain_path)
        resolution = resolution or self._resolution
        surface = regular_fiber(domain, lam, resolution=resolution, logger=self._logger)
        lines = report.fiber_lines(domain, surface)
        if self._monte_carlo_points > 0:
            sampled = monte_carlo_connectivity(domain, lam, self._monte_carlo_points, self._monte_carlo_steps,
                                               seed=seed, resolution=resolution, logger=self._logger)
            lines.append('monte_carlo points={0} segments={1} checked={2} skipped={3} crossings={4}'.format(*sampled))
            if sampled.crossings:
                error = IntegrityError('{0} sampled segments left their fiber component'.format(sampled.crossings),
                                       {'seed': seed})
                error.lines = lines
                raise error
        return lines

    def atom(self, domain_path, lam=None, resolution=None):
        """
        Report of the saddle level b, or of the cut level lam
        """
        domain = self._load_valid(domain_path)
        resolution = resolution or self._resolution
        partition_result = self._partition(domain, resolution)
        if lam is None or same_lambda(lam, domain.family.b):
            atom_report = saddle_atom(domain, partition_result, resolution=resolution, logger=self._logger)
        else:
            matching = [index for index, cut in enumerate(partition_result.cut_arcs) if same_lambda(cut.lambda_i, lam)]
            if not matching:
                raise DomainError('{0} is neither b nor a cut level of {1}, cut levels are {2}'.format(
                    lam, domain.name, partition_result.cut_lambdas))
            atom_report = nonsaddle_atom(domain, partition_result, matching[0], resolution=resolution,
                                         logger=self._logger)
        lines = report.atom_lines(atom_report)
        if not atom_report.passed:
            error = IntegrityError('Atom checks failed: {0}'.format(', '.join(atom_report.failed_checks())))
            error.lines = lines
            raise error
        return lines

    def render(self, domain_path, out_path=None, lam=None, steps=None, seed=0, resolution=None):
        domain = self._load_valid(domain_path)
        resolution = resolution or self._resolution
        path_steps = None
        if steps:
            path_steps, _ = trajectory(random_phase_point(domain, np.random.RandomState(seed)), domain, steps,
                                       logger=self._logger)
        try:
            partition_result = self._partition(domain, resolution)
        except DomainError as e:
            self._logger.info('No cut arcs drawn: {0}'.format(e))
            partition_result = None
        document = svg.render_svg(domain, lam=lam, steps=path_steps, partition_result=partition_result,
                                  diagram=bifurcation_diagram(domain, logger=self._logger), scale=self._svg_scale)
        if out_path is None:
            return document.splitlines()
        svg.write_svg(document, out_path)
        self._logger.info('Rendered {0} into {1}'.format(domain.name, out_path))
        return ['svg {0}'.format(out_path)]
