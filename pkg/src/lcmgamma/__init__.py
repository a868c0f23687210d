"""Numerical laboratory for logarithmically completely monotonic functions
built from the Gamma function.

    >>> from lcmgamma import FamilyKind, FamilySpec, Interval, check_lcm, make_provider
    >>> p = make_provider(FamilySpec(FamilyKind.RECIP_GAMMA_ROOT))
    >>> check_lcm(p, Interval(-0.99, 50), max_order=4, grid=64).verdict.value
    'PASS'
"""

from .errors import (
    DomainError,
    LcmGammaError,
    NonFiniteEvaluation,
    QuadratureError,
    SolverError,
    UnsupportedInnerFunction,
)
from .families import (
    Composite,
    ExponentialProvider,
    FamilyKind,
    FamilyProvider,
    FamilySpec,
    InnerFunction,
    LogDerivProvider,
    PowerProduct,
    ShiftRatio,
    compose,
    factorial_root_ratio,
    g_derivs,
    g_quadrature,
    h_n,
    make_provider,
    mu_alpha_n,
    power_product,
    shift_ratio,
)
from .jets import Jet, jet_atan, jet_const, jet_div, jet_exp, jet_lngamma1p, jet_ln, jet_mul, jet_pow, jet_sqrt, jet_var
from .lcm_check import CheckReport, Interval, OrderRecord, Verdict, check_lcm, fd_oracle, min_signed_derivative
from .specfun import (
    EULER_GAMMA,
    AsymptoticKind,
    AsymptoticSeries,
    asym_eval,
    digamma,
    ln_gamma,
    polygamma,
    zeta_int,
)
from .tau_lab import (
    HIRSCH_CONSTANT,
    TauResult,
    hirsch_constant,
    tau,
    tau0_estimate,
    tau0_lower_bound,
    tau_max,
    tau_ray_bound,
)

__version__ = "0.1.0"
