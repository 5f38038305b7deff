"""
Closed-form cohomology and invariant calculators.

This module contains:
- Hilbert polynomials (hilbert.py)
- Bott formula and covering invariants (cohomology.py)
- Koszul cohomology of (m, m) complete intersections (complete_intersections.py)
- Normal-bundle and ext tables (deformations.py)
- Parameter-count inequalities (counting.py)
"""
from .hilbert import HilbertPoly, binomial_value, binomial_poly
from .cohomology import (
    bott,
    euler_characteristic,
    CoverSpec,
    pushforward_splitting,
    canonical_twist,
    ulrich_hilbert,
    ulrich_degree,
    c2_degree_rank2,
)
from .complete_intersections import (
    CIData,
    ci_cohomology,
    ci_euler_characteristic,
    hilbert_poly_ci,
    ci_arithmetic_genus,
    normal_h1_bound,
)
from .deformations import ExtTable, ext_row, ext_table
from .counting import (
    CountingReport,
    rank1_gap,
    rank2_gap,
    noic_dim,
    noic_codim,
    counting_inequalities,
)

__all__ = [
    'HilbertPoly',
    'binomial_value',
    'binomial_poly',
    'bott',
    'euler_characteristic',
    'CoverSpec',
    'pushforward_splitting',
    'canonical_twist',
    'ulrich_hilbert',
    'ulrich_degree',
    'c2_degree_rank2',
    'CIData',
    'ci_cohomology',
    'ci_euler_characteristic',
    'hilbert_poly_ci',
    'ci_arithmetic_genus',
    'normal_h1_bound',
    'ExtTable',
    'ext_row',
    'ext_table',
    'CountingReport',
    'rank1_gap',
    'rank2_gap',
    'noic_dim',
    'noic_codim',
    'counting_inequalities',
]
