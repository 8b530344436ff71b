# utils/logger.py

import logging
import sys

_installed = []


def setup_logger(log_path=None, level=logging.INFO):
    """Set up the root logger on stderr, and in log_path when given."""
    logger = logging.getLogger()
    logger.setLevel(level)
    while _installed:
        handler = _installed.pop()
        logger.removeHandler(handler)
        handler.close()

    # Reports own stdout
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_path:
        handlers.append(logging.FileHandler(log_path))

    formatter = logging.Formatter('%(asctime)s - %(message)s')
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        _installed.append(handler)

    return logger
