#!/usr/bin/python
# -*- coding: utf-8 -*-
import importlib
import os
import sys

from confocal_billiards.command_executor import CommandExecutor
from confocal_billiards.helpers.logger import get_logger
from confocal_billiards.helpers.runtime_configuration import RuntimeConfiguration


class Main(object):
    def __init__(self, file_path=None, log_path=None):
        self._driver_path = os.path.dirname(file_path or sys.argv[0])
        self._log_path = log_path or os.path.join(self._driver_path, '..', 'Logs')
        os.environ['LOG_PATH'] = self._log_path

    def run(self, argv, driver_name='confocal_billiards'):
        # Reading runtime configuration
        runtime_config = RuntimeConfiguration(
            os.path.join(self._driver_path, driver_name + '_runtime_config.yml'))

        # Creating command logger instance
        command_logger = get_logger(log_group=driver_name,
                                    log_file_prefix=driver_name + '_commands', log_category='COMMANDS')
        log_level = runtime_config.read_key('LOGGING.LEVEL', 'INFO')
        command_logger.setLevel(log_level)

        command_logger.info('Starting {0}, PID: {1}'.format(driver_name, os.getpid()))

        # Importing and creating driver commands instance
        driver_commands = importlib.import_module('{}.driver_commands'.format(driver_name), package=None)
        driver_instance = driver_commands.DriverCommands(command_logger, runtime_config)

        # Creating command executor instance
        command_executor = CommandExecutor(driver_instance, command_logger)
        return command_executor.execute(argv)


if __name__ == '__main__':
    sys.exit(Main(sys.argv[0]).run(sys.argv[1:]))
