"""
Graded pieces of ideals and their quotients.

This module contains:
- Ideal pieces and multiplication matrices (pieces.py)
- Quotient dimensions, bases and torsion over Z (quotients.py)
- Differential surjectivity and seeded genericity trials (genericity.py)
"""
from .pieces import GradedIdealPiece, multiplication_matrix, multiplication_columns
from .quotients import (
    QuotientPieceReport,
    hilbert_function_quotient,
    quotient_basis,
    quotient_structure_Z,
    quotient_report,
    class_order,
)
from .genericity import (
    TrialReport,
    forms_piece,
    differential_corank,
    differential_weights,
    differential_kernel_witnesses,
    apply_differential,
    jacobian_surjective,
    random_form,
    trial_rng,
    generic_writability_trial,
)

__all__ = [
    'GradedIdealPiece',
    'multiplication_matrix',
    'multiplication_columns',
    'QuotientPieceReport',
    'hilbert_function_quotient',
    'quotient_basis',
    'quotient_structure_Z',
    'quotient_report',
    'class_order',
    'TrialReport',
    'forms_piece',
    'differential_corank',
    'differential_weights',
    'differential_kernel_witnesses',
    'apply_differential',
    'jacobian_surjective',
    'random_form',
    'trial_rng',
    'generic_writability_trial',
]
