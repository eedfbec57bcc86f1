import contextvars
import logging
from concurrent.futures import ThreadPoolExecutor

from . import conf

logger = logging.getLogger(__name__)


def parallel_map(function, items, workers=None):
    """
    Ordered map over ``items`` on BRAIDOSC_WORKERS threads.

    Each task runs in a copy of the caller's context so tolerance overrides
    apply inside the pool as well.
    """
    items = list(items)
    workers = conf.workers() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    logger.debug('mapping %d items on %d workers', len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(contextvars.copy_context().run, function, item) for item in items]
        return [future.result() for future in futures]
