"""dualnum: exact first and second derivatives through numerical algorithms.

Forward-mode automatic differentiation on second-order dual numbers
({f, f', f''} triples), together with dualized versions of three
classic algorithms so that derivative information flows through values
that have no closed form:

- :mod:`dualnum.rootfind`: Newton-Raphson / Halley root finding that
  returns an implicitly defined ``u(x)`` with its derivatives,
- :mod:`dualnum.spline`: natural cubic spline interpolation evaluated
  on dual arguments (plus a closed-form tridiagonal inverse),
- :mod:`dualnum.ode`: fixed-step RK4 integration whose solution
  composes with arbitrary dual expressions.

:mod:`dualnum.reference` holds independent oracles (finite differences,
Jordan-block polynomial derivatives, the general tridiagonal inverse)
used to cross-check everything else.
"""

from .core import (
    Dual3,
    ELEMENTALS,
    TaylorJet,
    compose,
    constant,
    cos,
    exp,
    jet_mul,
    lift_elemental,
    log,
    sin,
    sqrt,
    tan,
    variable,
)
from .errors import (
    BlowUpError,
    DivergenceError,
    DomainError,
    NoExtremumError,
    NonConvergenceError,
    NumericalError,
    OutOfRangeError,
    SingularDerivativeError,
    SingularMatrixError,
    UnsupportedSizeError,
    ValidationError,
)
from .ode import OdeProblem, duffing_problem, rk4, rk4dual
from .rootfind import (
    MechanismParams,
    RootConfig,
    find_root,
    halley_dual,
    mechanism_phi,
    nr_dual,
)
from .spline import (
    SplineData,
    SplineModel,
    build_spline,
    diffusivity,
    eval_dual,
    find_derivative_root,
    tinv_entry,
)

__version__ = "0.1.0"

__all__ = [
    "Dual3",
    "TaylorJet",
    "ELEMENTALS",
    "variable",
    "constant",
    "compose",
    "lift_elemental",
    "jet_mul",
    "sin",
    "cos",
    "tan",
    "exp",
    "log",
    "sqrt",
    "RootConfig",
    "MechanismParams",
    "nr_dual",
    "halley_dual",
    "find_root",
    "mechanism_phi",
    "SplineData",
    "SplineModel",
    "build_spline",
    "eval_dual",
    "tinv_entry",
    "find_derivative_root",
    "diffusivity",
    "OdeProblem",
    "rk4",
    "rk4dual",
    "duffing_problem",
    "ValidationError",
    "OutOfRangeError",
    "UnsupportedSizeError",
    "NumericalError",
    "DomainError",
    "SingularDerivativeError",
    "DivergenceError",
    "NonConvergenceError",
    "NoExtremumError",
    "BlowUpError",
    "SingularMatrixError",
]
