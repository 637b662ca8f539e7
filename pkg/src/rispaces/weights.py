"""Concave weights and the Lorentz / Marcinkiewicz norms built from them.

A weight is an increasing concave evaluator on [0, 1] with phi(0) = 0
(possibly only as a limit). The Lorentz norm is the Stieltjes integral of the
decreasing rearrangement against the weight; the Marcinkiewicz norm is the
supremum over t of the partial integral of the rearrangement divided by
phi(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .stepfn import StepFunction, rearrange, stieltjes

__all__ = [
    "ConcaveWeight",
    "WeightError",
    "WeightDiagnostics",
    "power_weight",
    "log_g",
    "log_g_printed",
    "log_g1",
    "log_psi",
    "custom_weight",
    "parse_weight",
    "validate_weight",
    "lorentz_norm",
    "marcinkiewicz_norm",
    "marcinkiewicz_sup",
]

CONCAVITY_TOL = 1e-9
GUARD_GRID_SIZE = 1024
SEGMENT_TOL = 1e-10
# above this many pieces, screen segments instead of refining each one
_SEGMENT_SCREEN_LIMIT = 4096


class WeightError(ValueError):
    """Inadmissible weight."""


@dataclass(frozen=True)
class WeightDiagnostics:
    valid: bool
    warnings: tuple
    errors: tuple
    phi_near_zero: float
    phi_at_one: float


@dataclass(frozen=True, eq=False)
class ConcaveWeight:
    """Increasing concave evaluator on [0, 1]; `fn` accepts numpy arrays."""

    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    descriptor: str = "custom"

    def __call__(self, t) -> np.ndarray:
        return self.fn(np.asarray(t, dtype=np.float64))

    def __repr__(self) -> str:
        return f"ConcaveWeight({self.descriptor})"


def _diagnose(fn, tol: float = CONCAVITY_TOL) -> WeightDiagnostics:
    t = np.unique(np.concatenate([np.geomspace(1e-10, 1.0, 101), np.linspace(1e-4, 1.0, 101)]))
    y = np.asarray(fn(t), dtype=np.float64)
    errors = []
    warnings = []
    if not np.all(np.isfinite(y)):
        errors.append("non-finite values on the test grid")
        return WeightDiagnostics(False, tuple(warnings), tuple(errors), math.nan, math.nan)
    if np.any(np.diff(y) < -tol * (1.0 + np.abs(y[1:]))):
        errors.append("not non-decreasing")
    # midpoint concavity on both grids
    mid = (t[:-1] + t[1:]) / 2.0
    y_mid = np.asarray(fn(mid), dtype=np.float64)
    slack = tol * (1.0 + (np.abs(y[:-1]) + np.abs(y[1:])) / 2.0)
    if np.any(y_mid + slack < (y[:-1] + y[1:]) / 2.0):
        errors.append("not concave (midpoint test fails)")
    phi0 = float(y[0])
    phi1 = float(fn(np.array([1.0]))[0])
    # logarithmic weights vanish too slowly to see at any fixed probe; accept
    # phi(0+) = 0 "in the limit" when a deep probe is still clearly decaying
    deep, deeper = (float(fn(np.array([p]))[0]) for p in (1e-150, 1e-300))
    if not (deeper <= 1e-6 or deeper <= deep / 1.2):
        warnings.append(f"phi(0+) = {deeper:.6g}, expected 0")
    if abs(phi1 - 1.0) > 1e-12:
        warnings.append(f"phi(1) = {phi1:.6g} != 1")
    if np.any(y[t > 0] <= 0.0):
        warnings.append("weight vanishes somewhere on (0, 1]")
    return WeightDiagnostics(not errors, tuple(warnings), tuple(errors), phi0, phi1)


def validate_weight(w: ConcaveWeight) -> WeightDiagnostics:
    """Monotonicity/concavity diagnostics; phi(1) != 1 is a warning, not an error."""
    return _diagnose(w.fn)


def _checked(fn, descriptor: str, strict: bool) -> ConcaveWeight:
    diag = _diagnose(fn)
    if strict and not diag.valid:
        raise WeightError(f"{descriptor}: " + "; ".join(diag.errors))
    return ConcaveWeight(fn, descriptor)


def power_weight(alpha: float) -> ConcaveWeight:
    """phi(t) = t^alpha, concave increasing for 0 < alpha <= 1."""
    if not 0.0 < alpha <= 1.0:
        raise WeightError(f"power weight needs 0 < alpha <= 1, got {alpha}")
    return ConcaveWeight(lambda t: np.asarray(t, float) ** alpha, f"power:{alpha:g}")


def _safe_log_form(t, form):
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros_like(t)
    pos = t > 0.0
    out[pos] = form(t[pos])
    return out


def log_g() -> ConcaveWeight:
    """phi(t) = t * sqrt(log(e/t)); Marcinkiewicz rendering of the space G."""
    return ConcaveWeight(
        lambda t: _safe_log_form(t, lambda s: s * np.sqrt(1.0 - np.log(s))), "logG"
    )


def log_g_printed() -> ConcaveWeight:
    """phi(t) = t / sqrt(log(e/t)): the other reading of the G weight.

    Fails the concavity check (it is convex near 0) and makes the indicator
    norms of M(phi) blow up; kept for side-by-side comparison in reports.
    """
    return _checked(
        lambda t: _safe_log_form(t, lambda s: s / np.sqrt(1.0 - np.log(s))),
        "logG-printed",
        strict=False,
    )


def log_g1() -> ConcaveWeight:
    """phi(t) = 2 / sqrt(log(e^2/t)), the Lorentz weight of the space G1."""
    return ConcaveWeight(
        lambda t: _safe_log_form(t, lambda s: 2.0 / np.sqrt(2.0 - np.log(s))), "logG1"
    )


def log_psi() -> ConcaveWeight:
    """psi(t) = 2 / sqrt(log(e^4/t)), the indicator envelope of G."""
    return ConcaveWeight(
        lambda t: _safe_log_form(t, lambda s: 2.0 / np.sqrt(4.0 - np.log(s))), "logPsi"
    )


def custom_weight(
    fn: Callable[[np.ndarray], np.ndarray], name: str = "custom", strict: bool = True
) -> ConcaveWeight:
    """Wrap an arbitrary evaluator; strict=True rejects non-concave shapes."""
    return _checked(fn, name, strict)


def parse_weight(descriptor: str) -> ConcaveWeight:
    """Parse `power:a`, `logG`, `logG1`, `logPsi`, or `envelope:<space>`."""
    d = descriptor.strip()
    if d == "logG":
        return log_g()
    if d == "logG1":
        return log_g1()
    if d == "logPsi":
        return log_psi()
    if d.startswith("power:"):
        return power_weight(float(d.split(":", 1)[1]))
    if d.startswith("envelope:"):
        from .spaces import envelope_weight, parse_space

        return envelope_weight(parse_space(d.split(":", 1)[1]))
    raise WeightError(
        f"unknown weight descriptor {descriptor!r}; "
        "valid: power:a, logG, logG1, logPsi, envelope:<space>"
    )


def lorentz_norm(f: StepFunction, w: ConcaveWeight) -> float:
    """Stieltjes integral of the decreasing rearrangement against the weight."""
    return stieltjes(rearrange(f), w)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def marcinkiewicz_sup(f: StepFunction, w: ConcaveWeight):
    """(norm, argmax t) for the Marcinkiewicz norm sup_t F(t)/phi(t).

    F is the partial integral of the rearrangement, piecewise linear and
    concave, so F/phi has at most one interior critical point per breakpoint
    segment. Candidates: all breakpoints, per-segment golden-section maxima,
    and a log-spaced guard grid.
    """
    r = rearrange(f)
    if r.is_zero():
        return 0.0, 1.0
    b = r.breakpoints
    F_nodes = np.concatenate(([0.0], np.cumsum(r.values * np.diff(b))))

    def G(t):
        t = np.asarray(t, dtype=np.float64)
        phi = w(t)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.interp(t, b, F_nodes) / phi
        return np.where(phi > 0.0, out, -np.inf)

    cand_t = [b[1:]]
    cand_t.append(np.geomspace(1e-12, 1.0, GUARD_GRID_SIZE))

    seg_lo = np.maximum(b[:-1], 1e-15)
    seg_hi = b[1:]
    if len(seg_lo) > _SEGMENT_SCREEN_LIMIT:
        # screen: keep segments whose interior samples beat their endpoints
        probe = np.maximum(
            G(seg_lo + 0.25 * (seg_hi - seg_lo)),
            np.maximum(G(0.5 * (seg_lo + seg_hi)), G(seg_lo + 0.75 * (seg_hi - seg_lo))),
        )
        edge = np.maximum(G(seg_lo), G(seg_hi))
        order = np.argsort(-(probe - edge))
        keep = order[: _SEGMENT_SCREEN_LIMIT]
        seg_lo, seg_hi = seg_lo[keep], seg_hi[keep]
    iters = int(math.ceil(math.log(SEGMENT_TOL) / math.log(_INV_GOLDEN))) + 1
    a, bb = seg_lo.copy(), seg_hi.copy()
    x1 = bb - _INV_GOLDEN * (bb - a)
    x2 = a + _INV_GOLDEN * (bb - a)
    f1, f2 = G(x1), G(x2)
    for _ in range(iters):
        right = f1 < f2
        a = np.where(right, x1, a)
        bb = np.where(right, bb, x2)
        x1 = bb - _INV_GOLDEN * (bb - a)
        x2 = a + _INV_GOLDEN * (bb - a)
        f1, f2 = G(x1), G(x2)
        if np.max(bb - a) < SEGMENT_TOL:
            break
    cand_t.append((a + bb) / 2.0)

    t_all = np.concatenate(cand_t)
    g_all = G(t_all)
    i = int(np.argmax(g_all))
    if not np.isfinite(g_all[i]):
        raise WeightError(f"{w.descriptor}: weight vanishes on (0, 1]")
    return float(g_all[i]), float(t_all[i])


def marcinkiewicz_norm(f: StepFunction, w: ConcaveWeight) -> float:
    return marcinkiewicz_sup(f, w)[0]
