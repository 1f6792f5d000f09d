"""Numba switch.

Set ``HOPFCOHOM_NUMBA=0`` to force the pure-numpy kernels (useful for
debugging and for the benchmark that compares both paths).
"""

import logging
import os

logger = logging.getLogger(__name__)

_requested = os.environ.get("HOPFCOHOM_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba ships with the environment
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = _requested and HAVE_NUMBA

if _requested and not HAVE_NUMBA:  # pragma: no cover
    logger.warning("numba requested but not importable; using numpy kernels")


def njit(func=None, **kwargs):
    """``numba.njit(cache=True)`` when available, identity otherwise."""
    opts = {"cache": True}
    opts.update(kwargs)

    def wrap(f):
        if HAVE_NUMBA:
            return numba.njit(**opts)(f)
        return f

    return wrap if func is None else wrap(func)
