"""
Cyclic matrix factorizations.

This module contains:
- Sum-of-products decompositions of branch polynomials (decompositions.py)
- Construction of factorizations, skew forms and rank bounds (construction.py)
- Power and characteristic-polynomial checks (verification.py)
"""
from .decompositions import Decomposition, random_decomposition
from .verification import VerificationResult, verify_power, verify_determinantal
from .construction import (
    CyclicFactorization,
    SkewForm,
    resolve_zeta,
    clock_matrix,
    shift_matrix,
    build_factorization,
    negate_factorization,
    skew_symmetrize_d2,
    rank_bound,
)

__all__ = [
    'Decomposition',
    'random_decomposition',
    'VerificationResult',
    'verify_power',
    'verify_determinantal',
    'CyclicFactorization',
    'SkewForm',
    'resolve_zeta',
    'clock_matrix',
    'shift_matrix',
    'build_factorization',
    'negate_factorization',
    'skew_symmetrize_d2',
    'rank_bound',
]
