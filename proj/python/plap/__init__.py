"""First eigenvalue of the one-dimensional p-Laplacian."""

from ._core import (
    ZETA_OFFSET,
    BoundSandwich,
    BracketError,
    DomainError,
    IntegrationError,
    Regime,
    ShootingResult,
    StructuralError,
    ToleranceError,
    UnknownCaseError,
    VerificationReport,
    asymptotic_gap,
    bounds,
    catalog_ids,
    conjugate,
    eigenvalue_shooting,
    find_pstar,
    lambda_approx,
    lambda_exact,
    lambda_prime,
    lambda_scaled,
    log_lambda,
    pi_p_closed_form,
    pi_p_quadrature,
    series_coefficients,
    sinc_bounds,
    verify_all,
    verify_case,
)

__all__ = [
    "ZETA_OFFSET",
    "BoundSandwich",
    "BracketError",
    "DomainError",
    "IntegrationError",
    "Regime",
    "ShootingResult",
    "StructuralError",
    "ToleranceError",
    "UnknownCaseError",
    "VerificationReport",
    "asymptotic_gap",
    "bounds",
    "catalog_ids",
    "conjugate",
    "eigenvalue_shooting",
    "find_pstar",
    "lambda_approx",
    "lambda_exact",
    "lambda_prime",
    "lambda_scaled",
    "log_lambda",
    "pi_p_closed_form",
    "pi_p_quadrature",
    "series_coefficients",
    "sinc_bounds",
    "verify_all",
    "verify_case",
]
