"""Crossing-count backend selection.

The compiled extension is preferred when built; otherwise the NumPy
fallback is used.  Both compute identical results bit for bit.  Set
FIBSNOW_BACKEND=python or =cython to force a choice.
"""

from __future__ import annotations

import os
from typing import Callable

from fibsnow import _pykernels

try:
    from fibsnow import _native
except ImportError:
    _native = None


def _select():
    forced = os.environ.get("FIBSNOW_BACKEND")
    if forced == "python":
        return _pykernels, "python"
    if forced == "cython":
        if _native is None:
            raise ImportError(
                "FIBSNOW_BACKEND=cython but the compiled extension is not built"
            )
        return _native, "cython"
    if forced not in (None, ""):
        raise ImportError(f"unknown FIBSNOW_BACKEND value {forced!r}")
    if _native is not None:
        return _native, "cython"
    return _pykernels, "python"


_impl, BACKEND = _select()

crossing_counts = _impl.crossing_counts


def available_backends() -> dict[str, Callable]:
    """Backend name -> crossing_counts implementation, for benchmarks and
    parity tests."""
    impls = {"python": _pykernels.crossing_counts}
    if _native is not None:
        impls["cython"] = _native.crossing_counts
    return impls
