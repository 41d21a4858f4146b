# -*- coding: utf-8 -*-
"""
Contiguous block partitioning of index scans, run sequentially or on a
process pool. Results come back in block order either way.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Sequence, Tuple, TypeVar

from ..logger import setup_worker_logging, shared_log_queue
from .config import OracleConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")


def index_blocks(start: int, stop: int, size: int) -> List[Tuple[int, int]]:
    size = max(1, size)
    return [(lo, min(lo + size, stop)) for lo in range(start, stop, size)]


def map_blocks(fn: Callable[..., T], tasks: Sequence, config: OracleConfig) -> List[T]:
    if not config.parallel or config.workers < 2 or len(tasks) < 2:
        return [fn(task) for task in tasks]
    log_queue, level = shared_log_queue()
    logger.debug(f"Scanning {len(tasks)} blocks on {config.workers} workers")
    with Pool(config.workers, initializer=setup_worker_logging, initargs=(log_queue, level)) as pool:
        return pool.map(fn, tasks)
