# -*- coding: utf-8 -*-
"""
Runtime bookkeeping for oracle checks.
"""

import logging
import time
from contextlib import contextmanager
from typing import Dict, List

import numpy as np

logger = logging.getLogger(__name__)


def format_timings(name: str, timings: List[float]) -> str:
    """
    Summarize check runtimes.
    :param name: check family name
    :param timings: seconds measured for each check
    """
    if not timings:
        return "[{}] no runs".format(name)
    mean_time = 1e3 * np.mean(timings)
    std_time = 1e3 * np.std(timings)
    max_time = 1e3 * np.max(timings)
    median, percent_95_time = 1e3 * np.percentile(timings, [50, 95])
    return (
        f"[{name}] "
        f"runs={len(timings)}, "
        f"total={np.sum(timings):.2f}s, "
        f"mean={mean_time:.2f}ms, "
        f"sd={std_time:.2f}ms, "
        f"max={max_time:.2f}ms, "
        f"median={median:.2f}ms, "
        f"95p={percent_95_time:.2f}ms"
    )


@contextmanager
def track_time(buffer: List[float]):
    """
    A context manager appending the elapsed wall time of its block to buffer.
    """
    start = time.perf_counter()
    yield
    buffer.append(time.perf_counter() - start)


def log_timings(timings: Dict[str, List[float]]) -> None:
    for name in sorted(timings):
        logger.info(format_timings(name, timings[name]))
