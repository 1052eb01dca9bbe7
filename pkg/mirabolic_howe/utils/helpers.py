import functools
import logging
import time

logger = logging.getLogger(__name__)


def timeit_decor(function):
    """Decorator that logs the execution time of the decorated function at DEBUG.
    Usage:
        @timeit_decor on top of the function

    :param function     : the function to time
    :return             : the wrapped function
    """

    @functools.wraps(function)
    def timer(*args, **kwargs):
        t1 = time.time()
        result = function(*args, **kwargs)
        t2 = time.time()
        logger.debug('executed %s in %.4f seconds', function.__name__, t2 - t1)
        return result

    return timer


def elapsed_since(start):
    """Helper to calculate the elapsed time in ms, s, min or hrs.

    :param start (sec)      : starting time
    :return                 : elapsed time in ms, s, min or hrs
    """

    elapsed = time.time() - start
    if elapsed < 1:
        return str(round(elapsed * 1000, 2)) + 'ms'
    if elapsed < 60:
        return str(round(elapsed, 2)) + 's'
    if elapsed < 3600:
        return str(round(elapsed / 60, 2)) + 'min'
    return str(round(elapsed / 3600, 2)) + 'hrs'


def format_bytes(size):
    """Helper to convert a byte count into B, kB, MB or GB.

    :param size (int)   : bytes to format
    :return (str)       : formatted size
    """

    if abs(size) < 1000:
        return str(size) + 'B'
    if abs(size) < 1e6:
        return str(round(size / 1e3, 2)) + 'kB'
    if abs(size) < 1e9:
        return str(round(size / 1e6, 2)) + 'MB'
    return str(round(size / 1e9, 2)) + 'GB'

