import logging
from logging import Filter
from logging.handlers import QueueHandler, QueueListener
from multiprocessing import Queue, current_process

logging.raiseExceptions = False

_state = {"queue": None, "level": logging.INFO}


def setup_primary_logging(log_file, level):
    """
    Route every record through a queue drained by a listener in the main process,
    so oracle workers and the cli share one stream (and file, when given).
    :return: (log_queue, listener); stop the listener before exiting
    """
    log_queue = Queue(-1)

    formatter = logging.Formatter(
        '%(asctime)s | %(levelname)s | %(message)s',
        datefmt='%Y-%m-%d,%H:%M:%S')

    handlers = []
    if log_file:
        file_handler = logging.FileHandler(filename=log_file)
        file_handler.setFormatter(formatter)
        file_handler.setLevel(level)
        handlers.append(file_handler)

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(level)
    handlers.append(stream_handler)

    listener = QueueListener(log_queue, *handlers)
    listener.start()

    _install_queue_handler(log_queue, level, worker=None)
    _state["queue"] = log_queue
    _state["level"] = level
    return log_queue, listener


def shared_log_queue():
    return _state["queue"], _state["level"]


class WorkerLogFilter(Filter):
    def __init__(self, worker=None):
        super().__init__()
        self._worker = worker

    def filter(self, record):
        if self._worker is not None:
            record.msg = f"Worker {self._worker} | {record.msg}"
        return True


def _install_queue_handler(log_queue, level, worker):
    queue_handler = QueueHandler(log_queue)
    queue_handler.addFilter(WorkerLogFilter(worker))
    queue_handler.setLevel(level)

    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
    root_logger.addHandler(queue_handler)
    root_logger.setLevel(level)


def setup_worker_logging(log_queue, level):
    """Pool initializer: forward worker records to the primary queue."""
    if log_queue is None:
        return
    _install_queue_handler(log_queue, level, worker=current_process().name)


def teardown_primary_logging(log_queue, listener):
    """Drain and stop the listener, then detach the queue from the root logger."""
    listener.stop()
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if isinstance(handler, QueueHandler):
            root_logger.removeHandler(handler)
    _state["queue"] = None
    log_queue.close()
    log_queue.join_thread()
