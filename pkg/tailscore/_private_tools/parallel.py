from concurrent.futures import ThreadPoolExecutor
import numpy as np
from tailscore._private_tools.configuration import get_n_threads

_MIN_CHUNK = 4096
_MAX_CHUNK = 2**16


def map_chunks(function, n_items, n_threads=None):
    """Evaluate ``function(start, stop)`` over consecutive chunks of ``range(n_items)``.

    The chunk results (1-d arrays) are concatenated in order, so the output
    does not depend on the number of threads. Chunks never exceed 2**16 items.

    """

    if n_threads is None:
        n_threads = get_n_threads()

    if n_items <= _MIN_CHUNK:
        return np.asarray(function(0, n_items))

    chunk = min(_MAX_CHUNK, max(_MIN_CHUNK, -(-n_items // n_threads)))
    bounds = [(start, min(start + chunk, n_items)) for start in range(0, n_items, chunk)]

    if n_threads <= 1:
        return np.concatenate([function(*bound) for bound in bounds])

    with ThreadPoolExecutor(max_workers=n_threads) as executor:
        results = list(executor.map(lambda bound: function(*bound), bounds))

    return np.concatenate(results)
