import logging
import os
import sys
from datetime import datetime

from utils.util import mkdir_or_exist


def create_logger(name='linrel', log_level=logging.INFO, save_dir=None, stream=None):
    """Console logger on stderr, optionally mirrored to ``save_dir/log_<time>.txt``.

    Calling it again for the same name replaces the handlers, so repeated
    CLI invocations inside one process do not duplicate lines.
    """
    logger = logging.getLogger(name)
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter("%(message)s [%(asctime)s]")
    ch = logging.StreamHandler(stream=stream if stream is not None else sys.stderr)
    ch.setLevel(log_level)
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    if save_dir is not None:
        mkdir_or_exist(save_dir)
        filename = "log_%s.txt" % (datetime.now().strftime("%Y_%m_%d_%H_%M_%S"))
        fh = logging.FileHandler(os.path.join(save_dir, filename))
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    return logger
