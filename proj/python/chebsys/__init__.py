"""Star Chebyshev multiple orthogonal polynomials.

Rationals are passed and returned as "p/q" strings; complex values are
Python complex numbers.
"""

from ._core import (
    Error,
    asymptotic_scan,
    biorthogonality,
    branch_points,
    branches,
    conjecture_probe,
    decompose_index,
    explicit_t,
    gram_is_identity,
    limit_L,
    roots_of_t,
    run_cli,
    star_radius,
    type1,
    type2,
    verify_factorization,
)

__all__ = [
    "Error",
    "asymptotic_scan",
    "biorthogonality",
    "branch_points",
    "branches",
    "conjecture_probe",
    "decompose_index",
    "explicit_t",
    "gram_is_identity",
    "limit_L",
    "roots_of_t",
    "run_cli",
    "star_radius",
    "type1",
    "type2",
    "verify_factorization",
]
