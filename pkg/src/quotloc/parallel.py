"""Optional process-based parallelism, capped by ``ORIGAMI_THREADS``.

All reductions in the package are sums of exact rationals, so chunk results
are combined in submission order and the outcome is bit-identical to the
serial path.  With ``ORIGAMI_THREADS`` unset (or 1) everything runs inline.
"""

from __future__ import annotations

import os
from typing import Callable, Sequence

_ENV_VAR = "ORIGAMI_THREADS"


def worker_count() -> int:
    """The configured worker cap; at least 1."""
    raw = os.environ.get(_ENV_VAR, "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    cpus = os.cpu_count() or 1
    return max(1, min(n, cpus))


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, distributed over processes when the worker cap
    allows it and the workload is big enough to be worth the fork."""
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
