#!/usr/bin/python
# -*- coding: utf-8 -*-
import argparse
import sys
from collections import namedtuple

from confocal_billiards.exceptions import (BilliardException, DomainError, IntegrityError, ParseError,
                                           ValidationFailure)

COMMANDS = ('validate', 'simulate', 'diagram', 'fiber', 'atom', 'render')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_DOMAIN = 4
EXIT_INTEGRITY = 5

EXIT_CODES = (
    (ParseError, EXIT_PARSE),
    (ValidationFailure, EXIT_VALIDATION),
    (DomainError, EXIT_DOMAIN),
    (IntegrityError, EXIT_INTEGRITY),
)

RunConfig = namedtuple('RunConfig', ['command', 'domain_path', 'lam', 'steps', 'seed', 'out_path',
                                     'oracle_resolution'])


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    parser = _ArgumentParser(prog='billiard', description='Integrable billiards in domains bounded by confocal quadrics')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('domain_path', metavar='domain-file')
    parser.add_argument('--lambda', dest='lam', type=float, default=None, help='caustic parameter')
    parser.add_argument('--steps', type=int, default=None)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--out', dest='out_path', default=None)
    parser.add_argument('--resolution', dest='oracle_resolution', type=int, default=None)
    return parser


def parse_run_config(argv):
    """
    :rtype: RunConfig
    """
    arguments = build_parser().parse_args(argv)
    if arguments.command == 'fiber' and arguments.lam is None:
        raise ParseError('fiber needs --lambda')
    return RunConfig(arguments.command, arguments.domain_path, arguments.lam, arguments.steps, arguments.seed,
                     arguments.out_path, arguments.oracle_resolution)


def exit_code_of(error):
    for error_class, code in EXIT_CODES:
        if isinstance(error, error_class):
            return code
    return EXIT_ERROR


class CommandExecutor(object):
    def __init__(self, driver_instance, logger):
        """
        :type driver_instance: confocal_billiards.driver_commands.DriverCommands
        :type logger: logging.Logger
        """
        self._driver_instance = driver_instance
        self._logger = logger

    def _dispatch(self, config):
        driver = self._driver_instance
        if config.command == 'validate':
            return driver.validate(config.domain_path)
        if config.command == 'simulate':
            return driver.simulate(config.domain_path, steps=config.steps, seed=config.seed)
        if config.command == 'diagram':
            return driver.diagram(config.domain_path)
        if config.command == 'fiber':
            return driver.fiber(config.domain_path, config.lam, resolution=config.oracle_resolution, seed=config.seed)
        if config.command == 'atom':
            return driver.atom(config.domain_path, config.lam, resolution=config.oracle_resolution)
        return driver.render(config.domain_path, out_path=config.out_path, lam=config.lam, steps=config.steps,
                             seed=config.seed, resolution=config.oracle_resolution)

    def execute(self, argv, stdout=None, stderr=None):
        """
        Run one command line, write its report and return the exit code
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            config = parse_run_config(argv)
            self._logger.info('Executing {0}'.format(config))
            lines = self._dispatch(config)
        except BilliardException as e:
            self._logger.exception('Command {0} failed'.format(argv))
            for line in getattr(e, 'lines', ()):
                stdout.write(line + '\n')
            stderr.write('error: {0}\n'.format(e))
            return exit_code_of(e)
        except (IOError, OSError) as e:
            self._logger.exception('Command {0} failed'.format(argv))
            stderr.write('error: {0}\n'.format(e))
            return EXIT_ERROR
        for line in lines:
            stdout.write(line + '\n')
        return EXIT_OK
