import os
import shutil
import tempfile
from unittest import TestCase

from mock import Mock, patch

from confocal_billiards.driver_commands import DriverCommands
from confocal_billiards.exceptions import DomainError, InvalidInputError, ValidationFailure

DOMAINS_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'domains')
A2_PATH = os.path.join(DOMAINS_PATH, 'a2.yml')
NC1_PATH = os.path.join(DOMAINS_PATH, 'nc1.yml')


def runtime_config(**overrides):
    config = Mock()
    config.read_key.side_effect = lambda key, default=None: overrides.get(key, default)
    return config


class TestDriverCommands(TestCase):
    def setUp(self):
        self._logger = Mock()
        self._runtime_config_instance = runtime_config(**{'ORACLE.MONTE_CARLO_POINTS': 0})
        self._instance = DriverCommands(self._logger, self._runtime_config_instance)

    def test_init_reads_configuration(self):
        self._runtime_config_instance.read_key.assert_any_call('ORACLE.RESOLUTION', 32)
        self._runtime_config_instance.read_key.assert_any_call('DECOMPOSITION.RULE', None)

    def test_unknown_rule(self):
        self.assertRaises(InvalidInputError, DriverCommands, self._logger,
                          runtime_config(**{'DECOMPOSITION.RULE': 'radial'}))

    def test_rule_is_case_insensitive(self):
        DriverCommands(self._logger, runtime_config(**{'DECOMPOSITION.RULE': 'ELLIPTIC'}))

    def test_validate(self):
        lines = self._instance.validate(NC1_PATH)
        self.assertEqual(lines[0], 'domain nc1')
        self.assertIn('valid yes', lines)
        self.assertTrue(self._logger.info.called)

    @patch('confocal_billiards.driver_commands.validate_domain')
    def test_validate_failure_carries_report(self, validate_domain):
        validate_domain.return_value = Mock(valid=False, violations=['closure'])
        with self.assertRaises(ValidationFailure) as context:
            self._instance.validate(A2_PATH)
        self.assertEqual(context.exception.lines[-2:], ['valid no', 'violation closure'])

    def test_simulate(self):
        lines = self._instance.simulate(A2_PATH, steps=5, seed=3)
        self.assertEqual(lines[:3], ['domain A2', 'trajectories 1', 'steps 5'])

    def test_diagram(self):
        self.assertEqual(self._instance.diagram(A2_PATH)[0], '0 local_min; 1 saddle_b; 2 local_max')

    def test_fiber_needs_lambda(self):
        self.assertRaises(InvalidInputError, self._instance.fiber, A2_PATH, None)

    def test_fiber(self):
        lines = self._instance.fiber(A2_PATH, 0.5)
        self.assertEqual(lines[:2], ['domain A2', 'lambda 0.5'])
        self.assertTrue(lines[2].startswith('2 components'))
        self.assertFalse([line for line in lines if line.startswith('monte_carlo')])

    def test_atom_needs_a_cut_level(self):
        self.assertRaises(DomainError, self._instance.atom, NC1_PATH, 0.3)

    def test_saddle_atom(self):
        lines = self._instance.atom(A2_PATH)
        self.assertEqual(lines[2], 'kind saddle')
        self.assertEqual(lines[-1], 'result pass')

    def test_render_to_lines(self):
        lines = self._instance.render(A2_PATH, lam=0.5)
        self.assertEqual(lines[0], '<?xml version="1.0" standalone="no"?>')
        self.assertEqual(lines[-1], '</svg>')

    def test_render_to_file(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'nc1.svg')
            self.assertEqual(self._instance.render(NC1_PATH, out_path=path), ['svg {0}'.format(path)])
            self.assertTrue(os.path.isfile(path))
        finally:
            shutil.rmtree(directory)
