import logging
import sys

from config import Config

VERBOSITY_LEVELS = {0: None, 1: logging.INFO, 2: logging.DEBUG}


def configure_logging(verbosity=0):
    """Send log records to stderr; -v gives INFO, -vv gives DEBUG"""
    level = VERBOSITY_LEVELS.get(min(verbosity, 2)) or getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING)
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, '_lkc_handler', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(Config.LOG_FORMAT))
    handler._lkc_handler = True
    root.addHandler(handler)
    root.setLevel(level)
