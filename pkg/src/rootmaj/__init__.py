"""Majorization and power majorization between roots of palindromic-quadratic products."""

from .linalg import char_poly, gram, klemes_example, sym_eigenvalues
from .polyfact import (
    PolynomialCoefficients,
    QuadraticFactorization,
    evaluate,
    expand,
    recover_factorization,
    roots,
)
from .powermaj import ExponentGrid, default_grid, margin, power_majorizes, power_sum
from .schur import chebyshev_pair_sum, g, g_prime, phi, schur_condition_check
from .vectors import hlp_check, majorizes, random_majorization_pair, sort_descending

__all__ = [
    "ExponentGrid",
    "PolynomialCoefficients",
    "QuadraticFactorization",
    "char_poly",
    "chebyshev_pair_sum",
    "default_grid",
    "evaluate",
    "expand",
    "g",
    "g_prime",
    "gram",
    "hlp_check",
    "klemes_example",
    "majorizes",
    "margin",
    "phi",
    "power_majorizes",
    "power_sum",
    "random_majorization_pair",
    "recover_factorization",
    "roots",
    "schur_condition_check",
    "sort_descending",
    "sym_eigenvalues",
]
