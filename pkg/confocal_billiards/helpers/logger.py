#!/usr/bin/python
# -*- coding: utf-8 -*-
import logging
import os
from datetime import datetime

LOG_FORMAT = '%(asctime)s [%(levelname)s]: %(name)s %(module)s - %(funcName)-20s %(message)s'
TIME_FORMAT = '%d-%b-%Y--%H-%M-%S'


def get_logger(log_group='confocal_billiards', log_file_prefix='confocal_billiards', log_category='COMMANDS'):
    """
    Logger for a group/category pair, writes into $LOG_PATH/<log_group> when LOG_PATH is defined
    :param log_group:
    :param log_file_prefix:
    :param log_category:
    :rtype: logging.Logger
    """
    logger = logging.getLogger('{0}.{1}'.format(log_group, log_category))
    if logger.handlers:
        return logger

    log_path = os.environ.get('LOG_PATH')
    if log_path:
        log_dir = os.path.join(log_path, log_group)
        if not os.path.isdir(log_dir):
            os.makedirs(log_dir)
        file_name = '{0}--{1}.log'.format(log_file_prefix, datetime.now().strftime(TIME_FORMAT))
        handler = logging.FileHandler(os.path.join(log_dir, file_name))
    else:
        handler = logging.NullHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
