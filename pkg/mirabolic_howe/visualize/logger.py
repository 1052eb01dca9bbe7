import json
import logging
import os
import sys

from mirabolic_howe.verify.report import canonical_order

LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)
FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

logger = logging.getLogger('mirabolic_howe')


def configure_logging(verbosity=0, stream=None):
    """Attaches a single handler to the package logger; -v counts select WARNING, INFO or DEBUG.

    Standard output stays reserved for command payloads, so the handler writes to stderr.
    """

    level = LEVELS[min(max(verbosity, 0), len(LEVELS) - 1)]
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


class Logger(object):
    """Records numeric evidence and verification outcomes.
    Note:
        Every record goes to the log stream at INFO. When log_dir is given the records are also
        appended as JSON lines to log_dir/events.jsonl.
    """

    def __init__(self, log_dir=None):
        self.path = None
        if log_dir is not None:
            os.makedirs(log_dir, exist_ok=True)
            self.path = os.path.join(log_dir, 'events.jsonl')
        self.events = []

    def _write(self, event):
        self.events.append(event)
        if self.path is not None:
            with open(self.path, 'a') as stream:
                stream.write(json.dumps(canonical_order(event)) + '\n')

    def scalar_summary(self, tag, value, step):
        """Records one scalar, e.g. a mismatch count per candidate convention."""
        logger.info('%s [%s] = %s', tag, step, value)
        self._write({'kind': 'scalar', 'tag': tag, 'step': step, 'value': value})

    def check_summary(self, result):
        """Records one CheckResult."""
        logger.info('%s %s: %s', result.check_id, tuple(result.context), result.status)
        self._write({'kind': 'check', 'id': result.check_id, 'context': list(result.context),
                     'status': result.status})
