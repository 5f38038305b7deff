"""
Exact polynomial arithmetic.

This module contains:
- Coefficient domains Q, Z and F_p (domains.py)
- Ring contexts, multivariate polynomials and monomial bases (polynomials.py)
- The polynomial input grammar (parser.py)
- Polynomials in the auxiliary variable t (tpoly.py)
"""
from .domains import CoefficientDomain, RATIONALS, INTEGERS, PRIME_FIELD
from .polynomials import (
    RingContext,
    MultiPoly,
    format_poly,
    format_monomial,
    poly_arith,
    monomial_basis,
)
from .parser import parse_poly
from .tpoly import TPoly, tpoly_mul, tpoly_eval

__all__ = [
    'CoefficientDomain',
    'RATIONALS',
    'INTEGERS',
    'PRIME_FIELD',
    'RingContext',
    'MultiPoly',
    'format_poly',
    'format_monomial',
    'poly_arith',
    'monomial_basis',
    'parse_poly',
    'TPoly',
    'tpoly_mul',
    'tpoly_eval',
]
