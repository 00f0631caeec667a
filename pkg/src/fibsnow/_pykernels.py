"""NumPy fallback for the crossing-count kernel.

Keeps the arithmetic of the compiled kernel exactly: the signed distance
is formed as (x*cos + y*sin) - rho with separate multiplies and adds and
no fused multiply-add, so both backends return bit-identical results.
"""

from __future__ import annotations

import numpy as np

_CHUNK_ELEMS = 4_000_000  # bound on the (lines x vertices) work matrix


def crossing_counts(xs, ys, cos_t, sin_t, rho, tol):
    """Crossing count per line; -1 marks a line within tol of some vertex.

    A crossing is a path segment whose endpoints fall strictly on opposite
    sides of the line x*cos(theta) + y*sin(theta) - rho = 0.
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    cos_t = np.ascontiguousarray(cos_t, dtype=np.float64)
    sin_t = np.ascontiguousarray(sin_t, dtype=np.float64)
    rho = np.ascontiguousarray(rho, dtype=np.float64)
    nv = xs.shape[0]
    m = cos_t.shape[0]
    if ys.shape[0] != nv or sin_t.shape[0] != m or rho.shape[0] != m:
        raise ValueError("mismatched input lengths")
    if nv < 2:
        raise ValueError("need at least two vertices")

    out = np.empty(m, dtype=np.int64)
    step = max(1, _CHUNK_ELEMS // nv)
    for lo in range(0, m, step):
        hi = min(lo + step, m)
        d = np.multiply.outer(cos_t[lo:hi], xs)
        d += np.multiply.outer(sin_t[lo:hi], ys)
        d -= rho[lo:hi, None]
        counts = (d[:, :-1] * d[:, 1:] < 0.0).sum(axis=1).astype(np.int64)
        counts[(np.abs(d) < tol).any(axis=1)] = -1
        out[lo:hi] = counts
    return out
