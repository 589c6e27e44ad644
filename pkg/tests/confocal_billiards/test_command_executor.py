import io
from unittest import TestCase

from mock import Mock

from confocal_billiards.command_executor import (CommandExecutor, EXIT_DOMAIN, EXIT_ERROR, EXIT_INTEGRITY, EXIT_OK,
                                                 EXIT_PARSE, EXIT_VALIDATION, exit_code_of, parse_run_config)
from confocal_billiards.exceptions import (DomainError, IntegrityError, InvalidInputError, ParseError,
                                           ValidationFailure)


class TestParseRunConfig(TestCase):
    def test_defaults(self):
        config = parse_run_config(['validate', 'domain.yml'])
        self.assertEqual(config.command, 'validate')
        self.assertEqual(config.domain_path, 'domain.yml')
        self.assertIsNone(config.lam)
        self.assertEqual(config.seed, 0)

    def test_options(self):
        config = parse_run_config(['render', 'd.yml', '--lambda', '1.4', '--steps', '20', '--out', 'd.svg',
                                   '--resolution', '48'])
        self.assertEqual((config.lam, config.steps, config.out_path, config.oracle_resolution),
                         (1.4, 20, 'd.svg', 48))

    def test_fiber_needs_lambda(self):
        self.assertRaises(ParseError, parse_run_config, ['fiber', 'domain.yml'])

    def test_unknown_command(self):
        self.assertRaises(ParseError, parse_run_config, ['explode', 'domain.yml'])

    def test_bad_number(self):
        self.assertRaises(ParseError, parse_run_config, ['fiber', 'domain.yml', '--lambda', 'x'])


class TestExitCodeOf(TestCase):
    def test_mapping(self):
        self.assertEqual(exit_code_of(ParseError('x')), EXIT_PARSE)
        self.assertEqual(exit_code_of(ValidationFailure(Mock(violations=['x']))), EXIT_VALIDATION)
        self.assertEqual(exit_code_of(InvalidInputError('x')), EXIT_DOMAIN)
        self.assertEqual(exit_code_of(IntegrityError('x')), EXIT_INTEGRITY)
        self.assertEqual(exit_code_of(ValueError('x')), EXIT_ERROR)


class TestCommandExecutor(TestCase):
    def setUp(self):
        self._driver_instance = Mock()
        self._logger = Mock()
        self._instance = CommandExecutor(self._driver_instance, self._logger)
        self._stdout = io.StringIO()
        self._stderr = io.StringIO()

    def _execute(self, argv):
        return self._instance.execute(argv, self._stdout, self._stderr)

    def test_ok(self):
        self._driver_instance.diagram.return_value = ['0 local_min']
        self.assertEqual(self._execute(['diagram', 'a2.yml']), EXIT_OK)
        self._driver_instance.diagram.assert_called_once_with('a2.yml')
        self.assertEqual(self._stdout.getvalue(), '0 local_min\n')
        self.assertEqual(self._stderr.getvalue(), '')

    def test_dispatch(self):
        self._driver_instance.fiber.return_value = []
        self._execute(['fiber', 'a2.yml', '--lambda', '0.5', '--seed', '7'])
        self._driver_instance.fiber.assert_called_once_with('a2.yml', 0.5, resolution=None, seed=7)
        self._driver_instance.render.return_value = []
        self._execute(['render', 'a2.yml', '--out', 'a2.svg'])
        self._driver_instance.render.assert_called_once_with('a2.yml', out_path='a2.svg', lam=None, steps=None,
                                                             seed=0, resolution=None)

    def test_validation_failure_prints_report(self):
        error = ValidationFailure(Mock(violations=['x']))
        error.lines = ['valid no', 'violation x']
        self._driver_instance.validate.side_effect = error
        self.assertEqual(self._execute(['validate', 'bad.yml']), EXIT_VALIDATION)
        self.assertEqual(self._stdout.getvalue(), 'valid no\nviolation x\n')
        self.assertTrue(self._stderr.getvalue().startswith('error: '))
        self.assertTrue(self._logger.exception.called)

    def test_domain_error(self):
        self._driver_instance.atom.side_effect = DomainError('not a cut level')
        self.assertEqual(self._execute(['atom', 'a2.yml', '--lambda', '0.3']), EXIT_DOMAIN)
        self.assertEqual(self._stderr.getvalue(), 'error: not a cut level\n')

    def test_integrity_error(self):
        self._driver_instance.atom.side_effect = IntegrityError('mismatch')
        self.assertEqual(self._execute(['atom', 'a2.yml']), EXIT_INTEGRITY)

    def test_io_error(self):
        self._driver_instance.render.side_effect = IOError('read-only')
        self.assertEqual(self._execute(['render', 'a2.yml', '--out', '/x.svg']), EXIT_ERROR)

    def test_unreadable_domain_file(self):
        self._driver_instance.validate.side_effect = ParseError('Cannot read domain file missing.yml')
        self.assertEqual(self._execute(['validate', 'missing.yml']), EXIT_PARSE)
        self.assertEqual(self._stderr.getvalue(), 'error: Cannot read domain file missing.yml\n')

    def test_bad_arguments(self):
        self.assertEqual(self._execute(['fiber', 'a2.yml']), EXIT_PARSE)
        self.assertFalse(self._driver_instance.fiber.called)
