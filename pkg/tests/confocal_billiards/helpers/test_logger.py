import logging
import os
import shutil
import tempfile
from unittest import TestCase

from mock import patch

from confocal_billiards.helpers.logger import get_logger


class TestGetLogger(TestCase):
    def test_without_log_path(self):
        with patch.dict(os.environ, clear=True):
            logger = get_logger('test_null_group', 'test', 'NULL')
        self.assertEqual(logger.name, 'test_null_group.NULL')
        self.assertIsInstance(logger.handlers[0], logging.NullHandler)
        self.assertFalse(logger.propagate)

    def test_with_log_path(self):
        directory = tempfile.mkdtemp()
        try:
            with patch.dict(os.environ, {'LOG_PATH': directory}):
                logger = get_logger('test_file_group', 'prefix', 'FILE')
            handler = logger.handlers[0]
            self.assertIsInstance(handler, logging.FileHandler)
            self.assertTrue(os.path.isdir(os.path.join(directory, 'test_file_group')))
            self.assertTrue(os.path.basename(handler.baseFilename).startswith('prefix--'))
            handler.close()
            logger.removeHandler(handler)
        finally:
            shutil.rmtree(directory)

    def test_handlers_are_cached(self):
        with patch.dict(os.environ, clear=True):
            first = get_logger('test_cached_group', 'test', 'CACHED')
            second = get_logger('test_cached_group', 'test', 'CACHED')
        self.assertIs(first, second)
        self.assertEqual(len(second.handlers), 1)
