"""Poly-double gamma numerics: multi-route evaluation of the logarithmic
derivatives of the Barnes G (double gamma) function, machine verification of
their monotonicity/inequality theory, and an audit of printed identities."""

from .errors import CapacityError, ConvergenceError, DomainError
from .polydg import (
    AsymptoticParams,
    PolyDoubleArg,
    Psi2Kernel,
    log_barnes_g,
    psi2_asymptotic,
    psi2_cached,
    psi2_didouble,
    psi2_eval,
    psi2_from_polygamma,
    psi2_integral,
    psi2_series,
    psi2_value,
    psi2_zeta_form,
)
from .quadrature import (
    IntegrandSpec,
    QuadratureResult,
    integrate_finite,
    integrate_semi_infinite,
)
from .specfun import (
    BERNOULLI,
    CONSTANTS,
    DEFAULT_PRECISION,
    EvalResult,
    Precision,
    bernoulli,
    hurwitz_zeta,
    log_gamma,
    polygamma,
    polygamma_cached,
)
from .verify import (
    AuditEntry,
    CheckReport,
    FParams,
    GParams,
    Grid,
    HankelParams,
    SubAddParams,
    audit_identities,
    check_F_cm,
    check_G_convexity,
    check_cauchy_schwarz,
    check_cm,
    check_hankel_cm,
    check_lemma_I1,
    check_ratio_bounds,
    check_subadditivity,
    check_turan,
    lemma_I1_value,
)

__all__ = [
    "AsymptoticParams",
    "AuditEntry",
    "BERNOULLI",
    "CONSTANTS",
    "CapacityError",
    "CheckReport",
    "ConvergenceError",
    "DEFAULT_PRECISION",
    "DomainError",
    "EvalResult",
    "FParams",
    "GParams",
    "Grid",
    "HankelParams",
    "IntegrandSpec",
    "PolyDoubleArg",
    "Precision",
    "Psi2Kernel",
    "QuadratureResult",
    "SubAddParams",
    "audit_identities",
    "bernoulli",
    "check_F_cm",
    "check_G_convexity",
    "check_cauchy_schwarz",
    "check_cm",
    "check_hankel_cm",
    "check_lemma_I1",
    "check_ratio_bounds",
    "check_subadditivity",
    "check_turan",
    "hurwitz_zeta",
    "integrate_finite",
    "integrate_semi_infinite",
    "lemma_I1_value",
    "log_barnes_g",
    "log_gamma",
    "polygamma",
    "polygamma_cached",
    "psi2_asymptotic",
    "psi2_cached",
    "psi2_didouble",
    "psi2_eval",
    "psi2_from_polygamma",
    "psi2_integral",
    "psi2_series",
    "psi2_value",
    "psi2_zeta_form",
]

__version__ = "0.1.0"
