# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled crossing-count kernel.

Must stay arithmetically identical to fibsnow._pykernels: the signed
distance is (x*cos + y*sin) - rho with plain double operations, and the
build passes -ffp-contract=off so the compiler cannot fuse multiply-adds.
Both backends then return bit-identical results.
"""

from libc.math cimport fabs

import numpy as np

cimport numpy as cnp

cnp.import_array()


def crossing_counts(cnp.float64_t[::1] xs, cnp.float64_t[::1] ys,
                    cnp.float64_t[::1] cos_t, cnp.float64_t[::1] sin_t,
                    cnp.float64_t[::1] rho, double tol):
    """Crossing count per line; -1 marks a line within tol of some vertex."""
    cdef Py_ssize_t nv = xs.shape[0]
    cdef Py_ssize_t m = cos_t.shape[0]
    if ys.shape[0] != nv or sin_t.shape[0] != m or rho.shape[0] != m:
        raise ValueError("mismatched input lengths")
    if nv < 2:
        raise ValueError("need at least two vertices")

    out = np.empty(m, dtype=np.int64)
    cdef cnp.int64_t[::1] ov = out
    cdef Py_ssize_t i, j
    cdef double c, s, r, d, dprev
    cdef cnp.int64_t cnt
    cdef bint degen

    with nogil:
        for j in range(m):
            c = cos_t[j]
            s = sin_t[j]
            r = rho[j]
            dprev = xs[0] * c + ys[0] * s - r
            if fabs(dprev) < tol:
                ov[j] = -1
                continue
            cnt = 0
            degen = 0
            for i in range(1, nv):
                d = xs[i] * c + ys[i] * s - r
                if fabs(d) < tol:
                    degen = 1
                    break
                if (d < 0.0) != (dprev < 0.0):
                    cnt += 1
                dprev = d
            ov[j] = -1 if degen else cnt
    return out
