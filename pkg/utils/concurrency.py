import logging
import os
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def worker_count():
    raw = settings.SRGFORGE.get('THREADS', 0)
    try:
        threads = int(raw)
    except (TypeError, ValueError):
        logger.warning('SRGFORGE_THREADS=%r is not an integer, using one worker per CPU', raw)
        threads = 0
    if threads <= 0:
        return os.cpu_count() or 1
    return threads


def parallel_map(fn, items):
    """Apply ``fn`` to every item, results in input order whatever the worker count."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    logger.debug('fanning %d tasks over %d threads', len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
