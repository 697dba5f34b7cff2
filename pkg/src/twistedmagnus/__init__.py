"""Exact-arithmetic workbench for the twisted Magnus group.

Truncated non-commutative power series over exact coefficient rings, the
harmonic Hopf structures on the W subalgebra and M module, the twisted
Magnus group with its Gamma-twisted actions and double shuffle predicates,
the matching Lie-algebra layer with a degreewise linear solver, a discrete
group-algebra model, and finite-precision pro-p shadows.
"""

from .coeff import DUAL, PADIC, RATIONAL, RingElement, RingSpec, ring_binomial
from .errors import (
    BadConstantTerm,
    ConfigError,
    DegreeOutOfRange,
    HalfNotDefined,
    IntegralityViolation,
    MixedContext,
    NotAUnit,
    NotInW,
    NotStratified,
    ParseError,
    RingUnsupported,
    WorkbenchError,
)
from .freegroup import IDENTITY, X0, X1, GroupWord, eval_exp, eval_magnus
from .harmonic import (
    coproduct_M,
    coproduct_W,
    grouplike_M,
    grouplike_W,
    is_in_W,
    primitive_M,
    project_M,
)
from .lie import LieElement, dual_lift, is_lie_dmr, solve_degree
from .magnus import (
    TwistedMagnusElement,
    gamma_aut_M,
    gamma_aut_W,
    gamma_cocycle_value,
    gamma_of,
    gt_relations_check,
    is_dmr,
    is_dmr0,
    is_quad,
    is_stab_M,
    is_stab_W,
    star,
    star_inverse,
)
from .propadic import (
    ProPElement,
    gtp_relations_check,
    padic_invert,
    padic_star,
)
from .series import PowerSeries1, Series, TensorSeries
from .suites import run_suite

__version__ = "1.0.0"

__all__ = [
    "BadConstantTerm",
    "ConfigError",
    "DegreeOutOfRange",
    "DUAL",
    "GroupWord",
    "HalfNotDefined",
    "IDENTITY",
    "IntegralityViolation",
    "LieElement",
    "MixedContext",
    "NotAUnit",
    "NotInW",
    "NotStratified",
    "PADIC",
    "ParseError",
    "PowerSeries1",
    "ProPElement",
    "RATIONAL",
    "RingElement",
    "RingSpec",
    "RingUnsupported",
    "Series",
    "TensorSeries",
    "TwistedMagnusElement",
    "WorkbenchError",
    "X0",
    "X1",
    "coproduct_M",
    "coproduct_W",
    "dual_lift",
    "eval_exp",
    "eval_magnus",
    "gamma_aut_M",
    "gamma_aut_W",
    "gamma_cocycle_value",
    "gamma_of",
    "grouplike_M",
    "grouplike_W",
    "gt_relations_check",
    "gtp_relations_check",
    "is_dmr",
    "is_dmr0",
    "is_in_W",
    "is_lie_dmr",
    "is_quad",
    "is_stab_M",
    "is_stab_W",
    "padic_invert",
    "padic_star",
    "primitive_M",
    "project_M",
    "ring_binomial",
    "run_suite",
    "solve_degree",
    "star",
    "star_inverse",
]
