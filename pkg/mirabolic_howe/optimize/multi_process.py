"""Deterministic process-parallel map for per-basis-element verification work."""
import logging
import multiprocessing

logger = logging.getLogger(__name__)


class ParallelMap(object):
    """Maps a picklable top-level function over items with a process pool.

    Results come back in the order of the items whatever the completion order, so reports
    built from them are identical to a serial run. One worker runs in-process.
    """

    def __init__(self, workers=1, chunksize=8):
        if workers < 1:
            raise ValueError('workers must be >= 1, got {}'.format(workers))
        self.workers = workers
        self.chunksize = chunksize

    def __call__(self, function, items):
        items = list(items)
        if self.workers == 1 or len(items) < 2:
            return [function(item) for item in items]
        logger.debug('mapping %s over %d items with %d workers', function.__name__, len(items), self.workers)
        with multiprocessing.Pool(self.workers) as pool:
            return list(pool.imap(function, items, self.chunksize))
