"""Numerical toolkit for rearrangement-invariant function spaces on [0, 1].

Step-function calculus, Orlicz/Lorentz/Marcinkiewicz norms, Rademacher-sum
machinery, and a reproducible verification harness for the finite-dimensional
inequalities tying them together.
"""

from .stepfn import StepFunction, constant, indicator, rearrange, step_function
from .orlicz import exp_square, hinge, luxemburg_norm, modular, power
from .weights import (
    log_g,
    log_g1,
    log_psi,
    lorentz_norm,
    marcinkiewicz_norm,
    power_weight,
    validate_weight,
)
from .spaces import (
    SpaceSpec,
    catalog,
    envelope_weight,
    fundamental_function,
    hinge_family_bound,
    parse_space,
    ri_norm,
)
# NB: the rademacher *function* stays in its submodule so that
# `rispaces.rademacher` keeps naming the module
from .rademacher import rademacher_sum_norm, signed_sum, sum_rearrangement

__version__ = "0.1.0"
