"""Unified space descriptors and norm dispatch.

A SpaceSpec names one rearrangement-invariant space: Orlicz, Lorentz,
Marcinkiewicz, Lp, or Linf. The catalog spaces are

    G   exp-square Orlicz norm on step functions,
    G1  Lorentz space with weight 2/sqrt(log(e^2/t)),
    MG  Marcinkiewicz space with weight t*sqrt(log(e/t)),
    L1.

Also here: fundamental functions (indicator norms) with cross-checked closed
forms, the Marcinkiewicz envelope of a space, and the hinge-function bound
that makes the partial integral an Orlicz-equivalent quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from . import orlicz as _orlicz
from . import weights as _weights
from .stepfn import (
    StepFunction,
    indicator,
    linf_norm,
    lp_norm,
    partial_integral,
    rearrange,
)

__all__ = [
    "SpaceSpec",
    "SpaceError",
    "orlicz_space",
    "lorentz_space",
    "marcinkiewicz_space",
    "lp_space",
    "linf_space",
    "space_G",
    "space_G1",
    "space_MG",
    "catalog",
    "parse_space",
    "ri_norm",
    "fundamental_function",
    "envelope_weight",
    "hinge_family_bound",
    "HingeBound",
]


class SpaceError(ValueError):
    """Unknown or inconsistent space descriptor."""


@dataclass(frozen=True, eq=False)
class SpaceSpec:
    kind: str  # "orlicz" | "lorentz" | "marcinkiewicz" | "lp" | "linf"
    name: str
    phi: Optional[_orlicz.OrliczFunction] = None
    weight: Optional[_weights.ConcaveWeight] = None
    p: Optional[float] = None

    def __repr__(self) -> str:
        return f"SpaceSpec({self.name})"


def orlicz_space(phi: _orlicz.OrliczFunction, name: str | None = None) -> SpaceSpec:
    return SpaceSpec("orlicz", name or f"orlicz:{phi.descriptor}", phi=phi)


def lorentz_space(w: _weights.ConcaveWeight, name: str | None = None) -> SpaceSpec:
    return SpaceSpec("lorentz", name or f"lorentz:{w.descriptor}", weight=w)


def marcinkiewicz_space(w: _weights.ConcaveWeight, name: str | None = None) -> SpaceSpec:
    return SpaceSpec("marcinkiewicz", name or f"marcinkiewicz:{w.descriptor}", weight=w)


def lp_space(p: float) -> SpaceSpec:
    if p < 1.0:
        raise SpaceError(f"Lp needs p >= 1, got {p}")
    return SpaceSpec("lp", f"Lp:{p:g}", p=float(p))


def linf_space() -> SpaceSpec:
    return SpaceSpec("linf", "Linf")


@lru_cache(maxsize=None)
def space_G() -> SpaceSpec:
    return orlicz_space(_orlicz.exp_square(), name="G")


@lru_cache(maxsize=None)
def space_G1() -> SpaceSpec:
    return lorentz_space(_weights.log_g1(), name="G1")


@lru_cache(maxsize=None)
def space_MG() -> SpaceSpec:
    return marcinkiewicz_space(_weights.log_g(), name="MG")


def catalog() -> dict:
    return {
        "G": space_G(),
        "G1": space_G1(),
        "MG": space_MG(),
        "L1": lp_space(1.0),
    }


def parse_space(descriptor: str) -> SpaceSpec:
    """Parse `G`, `G1`, `MG`, `L1`, `Lp:p`, `Linf`, `orlicz:<d>`,
    `lorentz:<d>`, `marcinkiewicz:<d>`."""
    d = descriptor.strip()
    fixed = catalog()
    if d in fixed:
        return fixed[d]
    if d == "Linf":
        return linf_space()
    if d.startswith("Lp:"):
        return lp_space(float(d.split(":", 1)[1]))
    if d.startswith("orlicz:"):
        return orlicz_space(_orlicz.parse_orlicz(d.split(":", 1)[1]))
    if d.startswith("lorentz:"):
        return lorentz_space(_weights.parse_weight(d.split(":", 1)[1]))
    if d.startswith("marcinkiewicz:"):
        return marcinkiewicz_space(_weights.parse_weight(d.split(":", 1)[1]))
    raise SpaceError(
        f"unknown space descriptor {descriptor!r}; valid: G, G1, MG, L1, Lp:p, "
        "Linf, orlicz:<d>, lorentz:<d>, marcinkiewicz:<d>"
    )


def ri_norm(f: StepFunction, E: SpaceSpec) -> float:
    if E.kind == "orlicz":
        return _orlicz.luxemburg_norm(f, E.phi)
    if E.kind == "lorentz":
        return _weights.lorentz_norm(f, E.weight)
    if E.kind == "marcinkiewicz":
        return _weights.marcinkiewicz_norm(f, E.weight)
    if E.kind == "lp":
        return lp_norm(f, E.p)
    if E.kind == "linf":
        return linf_norm(f)
    raise SpaceError(f"unhandled space kind {E.kind!r}")


def _closed_form_fundamental(E: SpaceSpec, t: np.ndarray):
    """Vectorized indicator-norm formula, or None when no closed form applies."""
    if E.kind == "lorentz":
        return E.weight(t)
    if E.kind == "marcinkiewicz":
        # s/phi(s) is non-decreasing for concave phi, so the sup sits at s=t
        return t / E.weight(t)
    if E.kind == "lp":
        return t ** (1.0 / E.p)
    if E.kind == "linf":
        return np.ones_like(t)
    if E.kind == "orlicz" and E.phi.descriptor == "exp2":
        return 1.0 / np.sqrt(np.log1p(1.0 / t))
    return None


@lru_cache(maxsize=None)
def _closed_form_checked(E: SpaceSpec) -> bool:
    """Cross-check the closed form against the generic norm path once."""
    if E.kind == "marcinkiewicz" and not _weights.validate_weight(E.weight).valid:
        return False  # s/phi(s) monotone needs concavity; use the generic sup
    t = np.geomspace(1e-4, 1.0, 10)
    cf = _closed_form_fundamental(E, t)
    if cf is None:
        return False
    for ti, ci in zip(t, cf):
        generic = ri_norm(indicator(float(ti)), E)
        if abs(generic - ci) > 1e-8 * max(abs(ci), 1e-300):
            raise SpaceError(
                f"{E.name}: closed-form fundamental {ci} disagrees with generic "
                f"norm {generic} at t={ti}"
            )
    return True


def fundamental_function(E: SpaceSpec, t):
    """Indicator norm ||I_(0,t]||_E; accepts a scalar or an array of t."""
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any((arr <= 0.0) | (arr > 1.0)):
        raise SpaceError(f"fundamental function needs t in (0, 1]")
    if _closed_form_checked(E):
        out = _closed_form_fundamental(E, arr)
    else:
        out = np.array([ri_norm(indicator(float(ti)), E) for ti in arr])
    return float(out[0]) if scalar else out


def envelope_weight(E: SpaceSpec) -> _weights.ConcaveWeight:
    """Weight t / ||I_(0,t]||_E; M(weight) is dominated by E everywhere and
    agrees with it on 0/1-valued functions.

    Concavity of this weight is not guaranteed for arbitrary spaces, so it is
    only diagnosed (warnings), never enforced.
    """

    def fn(t):
        t = np.asarray(t, dtype=np.float64)
        out = np.zeros_like(t)
        pos = t > 0.0
        out[pos] = t[pos] / fundamental_function(E, t[pos])
        return out

    return _weights.custom_weight(fn, name=f"envelope:{E.name}", strict=False)


class HingeBound(NamedTuple):
    lower: float  # half the partial integral of the rearrangement up to t
    upper: float  # the partial integral itself
    norm: float  # Luxemburg norm under Phi(s) = (|s| - 1/t)^+

    @property
    def ok(self) -> bool:
        return self.lower - 1e-9 <= self.norm <= self.upper + 1e-9


def hinge_family_bound(f: StepFunction, t: float) -> HingeBound:
    """Sandwich A/2 <= N <= A for A = int_0^t f* and the hinge Orlicz norm N.

    Both constants follow from int_0^t f* = inf_mu (t*mu + int (|f|-mu)^+).
    """
    if not 0.0 < t <= 1.0:
        raise SpaceError(f"hinge parameter t={t} outside (0, 1]")
    A = partial_integral(rearrange(f), t)
    N = _orlicz.luxemburg_norm(f, _orlicz.hinge(1.0 / t))
    return HingeBound(A / 2.0, A, N)
