"""Numba switch.

Set ``SPANTRUSS_DISABLE_NUMBA=1`` to run every kernel as plain Python over
numpy arrays. Slow, but handy for debugging and for cross-checking the
compiled path.
"""
import os

ENABLE_NUMBA = os.environ.get("SPANTRUSS_DISABLE_NUMBA", "").lower() not in ("1", "true", "yes")
CACHE_NUMBA = True

if ENABLE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover
        ENABLE_NUMBA = False


def jit_kernel(func):
    if ENABLE_NUMBA:
        return numba.njit(cache=CACHE_NUMBA)(func)
    return func


def py_func(kernel):
    """Uncompiled body of a kernel, whichever mode is active."""
    return getattr(kernel, "py_func", kernel)
