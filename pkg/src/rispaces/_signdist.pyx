# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel enumerating all sign-vector sums of a coefficient list.

Bitwise-identical to the pure fallback in _signdist_py: both accumulate each
sign vector's sum left to right over the coefficients.
"""

import numpy as np

USING_EXTENSION = True


def enumerate_signed_sums(coeffs):
    """All 2^n values of sum_i eps_i * coeffs[i] over sign vectors eps."""
    cdef double[::1] a = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    if n > 62:
        raise ValueError("too many coefficients for enumeration")
    out = np.empty(1 << n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t size = 1, i, j
    cdef double c
    o[0] = 0.0
    for i in range(n):
        c = a[i]
        for j in range(size):
            o[size + j] = o[j] - c
            o[j] = o[j] + c
        size <<= 1
    return out
