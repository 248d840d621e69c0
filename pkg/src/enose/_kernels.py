"""Numeric kernels for the signal metrics, with two interchangeable
backends.

The default backend compiles the windowed loops with numba; setting the
environment variable ENOSE_NUMBA=0 (or numba being absent) selects the
pure-numpy path instead. Both backends center the input on its global
mean first, which makes a constant series produce exact zeros and keeps
the window sums well conditioned. benchmarks/bench_kernels.py compares
the two.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["rolling_std", "lag1_terms", "active_backend"]


def _numba_enabled() -> bool:
    flag = os.environ.get("ENOSE_NUMBA", "1").strip().lower()
    if flag in ("0", "false", "off", "no"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


# --- pure numpy implementations -------------------------------------------

def _rolling_std_numpy(xc: np.ndarray, window: int) -> np.ndarray:
    views = np.lib.stride_tricks.sliding_window_view(xc, window)
    return views.std(axis=1)


def _lag1_terms_numpy(xc: np.ndarray) -> tuple[float, float]:
    num = float(np.dot(xc[:-1], xc[1:]))
    den = float(np.dot(xc, xc))
    return num, den


# --- numba implementations -------------------------------------------------

if _numba_enabled():
    from numba import njit

    @njit(cache=True)
    def _rolling_std_numba(xc, window):
        n = xc.size
        out = np.empty(n - window + 1)
        inv_w = 1.0 / window
        for i in range(n - window + 1):
            s = 0.0
            for j in range(i, i + window):
                s += xc[j]
            m = s * inv_w
            acc = 0.0
            for j in range(i, i + window):
                d = xc[j] - m
                acc += d * d
            out[i] = np.sqrt(acc * inv_w)
        return out

    @njit(cache=True)
    def _lag1_terms_numba(xc):
        num = 0.0
        den = xc[0] * xc[0]
        for t in range(xc.size - 1):
            num += xc[t] * xc[t + 1]
            den += xc[t + 1] * xc[t + 1]
        return num, den

    _BACKEND = "numba"
else:
    _rolling_std_numba = None
    _lag1_terms_numba = None
    _BACKEND = "numpy"


def active_backend() -> str:
    return _BACKEND


def rolling_std(values: np.ndarray, window: int) -> np.ndarray:
    """Population std over every full sliding window; n - window + 1 values."""
    x = np.ascontiguousarray(values, dtype=np.float64)
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    if x.size < window:
        raise ValueError(f"series length {x.size} < window {window}")
    xc = x - x.mean()
    if _BACKEND == "numba":
        return _rolling_std_numba(xc, window)
    return _rolling_std_numpy(xc, window)


def lag1_terms(values: np.ndarray) -> tuple[float, float]:
    """Numerator and denominator of the lag-1 sample autocorrelation."""
    x = np.ascontiguousarray(values, dtype=np.float64)
    if x.size < 2:
        raise ValueError(f"need at least 2 samples, got {x.size}")
    xc = x - x.mean()
    if _BACKEND == "numba":
        return _lag1_terms_numba(xc)
    return _lag1_terms_numpy(xc)
