#!/usr/bin/python
# -*- coding: utf-8 -*-
import os

import yaml


class RuntimeConfiguration(object):
    """
    Read-only view of the runtime configuration yaml file
    """
    KEY_SEPARATOR = '.'

    def __init__(self, config_path=None):
        self._config_path = config_path
        self._data = self._read_configuration(config_path)

    @staticmethod
    def _read_configuration(config_path):
        if config_path and os.path.isfile(config_path):
            with open(config_path, 'r') as config_file:
                return yaml.safe_load(config_file) or {}
        return {}

    def read_key(self, complex_key, default_value=None):
        """
        Value of a dotted key, for example 'LOGGING.LEVEL'
        :param complex_key:
        :param default_value:
        :return:
        """
        value = self._data
        for key in complex_key.split(self.KEY_SEPARATOR):
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default_value
        return value
