import logging
import os
import sys

# Setup logging
LOG_DIR = os.path.expanduser("~/.skewing/logs")
LOG_FILE_NAME = "skewing.log"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

DEFAULT_DEG_VARIANT = "B"
DEFAULT_ALPHABET = 4
DEFAULT_MAX_DEG = 4


def setup_logging(log_file=None, level="INFO"):
    """Configure the root logger for a CLI invocation.

    ``log_file`` defaults to ``~/.skewing/logs/skewing.log``; ``"-"`` logs to stderr.
    """
    numeric_level = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO

    # Replace handlers left over from a previous in-process invocation
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        if isinstance(handler, logging.FileHandler):
            handler.close()

    if log_file == "-":
        logging.basicConfig(stream=sys.stderr, level=numeric_level, format=LOG_FORMAT)
        return None

    if log_file is None:
        os.makedirs(LOG_DIR, exist_ok=True)
        log_file = os.path.join(LOG_DIR, LOG_FILE_NAME)
    else:
        parent = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(parent, exist_ok=True)

    logging.basicConfig(filename=log_file, level=numeric_level, format=LOG_FORMAT)
    return log_file
