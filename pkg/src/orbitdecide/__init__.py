"""Exact decision procedures for the orbit problem with subspace targets.

Given a rational square matrix A, a rational point x and a rational
subspace V of dimension 1, 2 or 3, the solver decides whether A^n x
lands in V for some natural n, returning a verified witness, a witness
congruence, a proof of impossibility, or an honest "unknown" carrying
the best effective bound found.
"""

from .ratpoly import RatPoly, rat, parse_rat, format_rat
from .cball import CRat, ComplexBox
from .algnum import (
    AlgebraicNumber,
    AlgebraicDomainError,
    abs_compare,
    abs_norm,
    alg_equals,
    alg_eval_poly,
    alg_power,
    binop,
    complex_conjugate,
    conjugates,
    factor_rational_poly,
    isolate_roots,
    norm_valuation,
    root_of_unity_check,
    separation_lower_bound,
)

__all__ = [
    "RatPoly", "rat", "parse_rat", "format_rat",
    "CRat", "ComplexBox",
    "AlgebraicNumber", "AlgebraicDomainError",
    "abs_compare", "abs_norm", "alg_equals", "alg_eval_poly", "alg_power",
    "binop", "complex_conjugate", "conjugates", "factor_rational_poly",
    "isolate_roots", "norm_valuation", "root_of_unity_check",
    "separation_lower_bound",
]
