"""Time and memory profiling of one command run.

`--profile-run time` runs the command under cProfile and writes the 20 slowest entries to
profile_time.log; `--profile-run memory` samples the RSS with psutil on a monitor thread and
reports the top allocation sites seen by tracemalloc at the peak.
"""
import cProfile
import io
import linecache
import logging
import os
import pstats
import time
import tracemalloc
from queue import Empty, Queue
from threading import Thread

import psutil

from mirabolic_howe.utils.helpers import elapsed_since, format_bytes

logger = logging.getLogger(__name__)


def profile_time(function, *args, log_path='profile_time.log', **kwargs):
    """Profiles ncalls, tottime, percall and cumtime for the 20 slowest parts of the run.

    :param function         : the function to profile
    :param log_path (str)   : where the sorted statistics are written
    :return                 : (result of the function, statistics text)
    """

    profiler = cProfile.Profile()
    result = profiler.runcall(function, *args, **kwargs)
    stream = io.StringIO()
    stats = pstats.Stats(profiler, stream=stream)
    stats.strip_dirs().sort_stats('time').print_stats(20)
    text = stream.getvalue()
    with open(log_path, 'w') as out_stream:
        out_stream.write(text)
    logger.info('time profile written to %s', log_path)
    return result, text


def get_process_memory():
    """RSS, VMS and page-fault count (or shared memory where faults are not reported) of this process."""

    process = psutil.Process(os.getpid())
    mi = process.memory_info()
    return mi.rss, mi.vms, getattr(mi, 'num_page_faults', getattr(mi, 'shared', 0))


def display_top(snapshot, key_type='lineno', limit=20):
    """Logs the top allocation sites of a tracemalloc snapshot."""

    snapshot = snapshot.filter_traces((
        tracemalloc.Filter(False, '<frozen importlib._bootstrap>'),
        tracemalloc.Filter(False, '<unknown>'),
    ))
    top_stats = snapshot.statistics(key_type)

    lines = ['Top {} lines'.format(limit)]
    for index, stat in enumerate(top_stats[:limit], 1):
        frame = stat.traceback[0]
        filename = os.sep.join(frame.filename.split(os.sep)[-2:])
        line = linecache.getline(frame.filename, frame.lineno).strip()
        lines.append('#{:3d}: {:23s} | LineNo: {:>4} | RSS: {:>8} | LINE: {:>8}'.format(
            index, filename, frame.lineno, format_bytes(stat.size), line))
    other = top_stats[limit:]
    if other:
        lines.append('{} other calls: {}'.format(len(other), format_bytes(sum(stat.size for stat in other))))
    lines.append('Total allocated size: {}'.format(format_bytes(sum(stat.size for stat in top_stats))))
    logger.info('\n'.join(lines))
    return lines


def memory_monitor(command_queue, poll_interval=1):
    """Polls the RSS until told to stop and keeps a tracemalloc snapshot of the peak."""

    tracemalloc.start()
    old_max = 0
    snapshot = None
    try:
        while True:
            try:
                command_queue.get(timeout=poll_interval)
                if snapshot is not None:
                    display_top(snapshot)
                return
            except Empty:
                max_rss, _, _ = get_process_memory()
                if max_rss > old_max:
                    old_max = max_rss
                    snapshot = tracemalloc.take_snapshot()
    finally:
        tracemalloc.stop()


def profile_memory(function, *args, **kwargs):
    """Runs the function with a memory monitor thread and logs RSS, VMS and elapsed time.

    :return: the result of the function
    """

    rss_before, vms_before, _ = get_process_memory()
    queue = Queue()
    monitor_thread = Thread(target=memory_monitor, args=(queue, 0.1))
    monitor_thread.start()
    start = time.time()
    try:
        result = function(*args, **kwargs)
    finally:
        elapsed_time = elapsed_since(start)
        rss_after, vms_after, _ = get_process_memory()
        queue.put('stop')
        monitor_thread.join()
    logger.info('Profiling: %20s RSS: %8s | VMS: %8s | time: %8s', '<' + function.__name__ + '>',
                format_bytes(rss_after - rss_before), format_bytes(vms_after - vms_before), elapsed_time)
    return result


def start_monitoring(profile_type, function, *args, **kwargs):
    """Dispatches on the --profile-run value; None runs the function unprofiled."""
    if profile_type is None:
        return function(*args, **kwargs)
    if profile_type == 'time':
        result, _ = profile_time(function, *args, **kwargs)
        return result
    if profile_type == 'memory':
        return profile_memory(function, *args, **kwargs)
    raise ValueError('unknown profile type {!r}'.format(profile_type))
