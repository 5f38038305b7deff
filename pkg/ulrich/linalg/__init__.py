"""
Exact linear algebra.

This module contains:
- Dense field and integer matrices (matrices.py)
- Echelon forms, ranks and kernels (elimination.py)
- Smith normal form with row transforms (smith.py)
- Polynomial matrices, determinants and Pfaffians (polymatrix.py)
"""
from .matrices import FieldMatrix, IntMatrix, clear_denominators
from .elimination import (
    RREFResult,
    rref_rank,
    field_rank,
    nullspace,
    bareiss_rank,
    integer_rank,
    rational_rank,
    matrix_rank,
)
from .smith import SNFResult, smith_normal_form
from .polymatrix import PolyMatrix, char_poly, poly_det, pfaffian

__all__ = [
    'FieldMatrix',
    'IntMatrix',
    'clear_denominators',
    'RREFResult',
    'rref_rank',
    'field_rank',
    'nullspace',
    'bareiss_rank',
    'integer_rank',
    'rational_rank',
    'matrix_rank',
    'SNFResult',
    'smith_normal_form',
    'PolyMatrix',
    'char_poly',
    'poly_det',
    'pfaffian',
]
