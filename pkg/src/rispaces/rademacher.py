"""Rademacher functions and exact distributions of signed sums.

The n-th Rademacher function alternates +1/-1 on the 2^n dyadic intervals of
(0, 1]. Signed sums over the first n of them realize the uniform distribution
on sign vectors exactly, so norms of Rademacher sums reduce to the exact
distribution of sum_i a_i * eps_i, obtained either by full enumeration (hot
kernel, compiled when available) or by binomial weights when all coefficients
are equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

try:
    from . import _signdist as _kernel
except ImportError:  # extension not built; numpy fallback is bitwise identical
    from . import _signdist_py as _kernel

from .spaces import SpaceSpec, ri_norm
from .stepfn import StepFunction

__all__ = [
    "MAX_ENUM_N",
    "MAX_EQUAL_N",
    "USING_EXTENSION",
    "RademacherError",
    "rademacher",
    "signed_sum",
    "sum_rearrangement",
    "rademacher_sum_norm",
]

MAX_ENUM_N = 24  # 16.7M sign vectors, still desk-scale
MAX_EQUAL_N = 60  # binomial fast path for equal coefficients
USING_EXTENSION = _kernel.USING_EXTENSION


class RademacherError(ValueError):
    """Index or size outside the enumeration caps."""


def _dyadic_breaks(n: int) -> np.ndarray:
    return np.arange((1 << n) + 1, dtype=np.float64) / float(1 << n)


def rademacher(n: int) -> StepFunction:
    """r_n: +1 on (0, 2^-n], then alternating on dyadic intervals."""
    if not 1 <= n <= MAX_ENUM_N:
        raise RademacherError(f"need 1 <= n <= {MAX_ENUM_N}, got {n}")
    vals = np.where(np.arange(1 << n) % 2 == 0, 1.0, -1.0)
    return StepFunction(_dyadic_breaks(n), vals)


def signed_sum(coeffs: Sequence[float], signs: Sequence[int]) -> StepFunction:
    """The step function sum_i signs[i] * coeffs[i] * r_i on (0, 1]."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    signs = np.asarray(signs)
    n = len(coeffs)
    if n != len(signs) or n < 1:
        raise RademacherError("need equally many coefficients and signs, n >= 1")
    if n > MAX_ENUM_N:
        raise RademacherError(f"n={n} exceeds the enumeration cap {MAX_ENUM_N}")
    if not np.all(np.abs(signs) == 1):
        raise RademacherError("signs must be exactly +1 or -1")
    idx = np.arange(1 << n)
    vals = np.zeros(1 << n)
    for i in range(n):
        r_i = 1.0 - 2.0 * ((idx >> (n - 1 - i)) & 1)
        vals = vals + (float(signs[i]) * coeffs[i]) * r_i
    return StepFunction(_dyadic_breaks(n), vals)


def _atoms_to_step(values_desc: np.ndarray, counts, denominator: int) -> StepFunction:
    """Step function from atoms (value, count/denominator), values descending."""
    cum = 0
    breaks = [0.0]
    for c in counts:
        cum += int(c)
        breaks.append(float(Fraction(cum, denominator)))
    breaks[-1] = 1.0
    return StepFunction(np.asarray(breaks), values_desc)


def sum_rearrangement(coeffs: Sequence[float]) -> StepFunction:
    """Non-increasing rearrangement of |sum_i a_i eps_i| under uniform signs.

    2^n atoms of measure 2^-n, compacted; equal coefficients go through
    binomial weights C(n,k) on the values |n-2k|*|a| instead of enumeration.
    """
    a = np.asarray(coeffs, dtype=np.float64)
    n = len(a)
    if n < 1:
        raise RademacherError("need at least one coefficient")
    if np.all(a == a[0]):
        if n > MAX_EQUAL_N:
            raise RademacherError(f"n={n} exceeds the equal-coefficient cap {MAX_EQUAL_N}")
        c = abs(float(a[0]))
        values = []
        counts = []
        for k in range(n // 2 + 1):
            weight = math.comb(n, k)
            if 2 * k != n:
                weight *= 2
            values.append(c * (n - 2 * k))
            counts.append(weight)
        return _atoms_to_step(np.asarray(values), counts, 1 << n)
    if n > MAX_ENUM_N:
        raise RademacherError(f"n={n} exceeds the enumeration cap {MAX_ENUM_N}")
    sums = np.abs(_kernel.enumerate_signed_sums(a))
    values, counts = np.unique(sums, return_counts=True)
    return _atoms_to_step(values[::-1], counts[::-1], 1 << n)


def rademacher_sum_norm(coeffs: Sequence[float], E: SpaceSpec) -> float:
    """||sum_i a_i r_i||_E, valid because every catalog norm is
    rearrangement-invariant."""
    return ri_norm(sum_rearrangement(coeffs), E)
