"""
Cohomology of line bundles on P^n and invariants of divisorial coverings.

This module contains:
- bott: h^j(P^n, O(i))
- CoverSpec: a covering X -> P^n with f_*O_X = O + O(-m) + .. + O(-(d-1)m)
- pushforward_splitting, canonical_twist, ulrich_hilbert, ulrich_degree, c2_degree_rank2
"""
import logging
from dataclasses import dataclass
from math import comb

from ulrich.choices import BOTT_DUALITY, BOTT_PRINTED
from ulrich.exceptions import ValidationError
from .hilbert import HilbertPoly

logger = logging.getLogger(__name__)


def bott(n, i, j, top_row=BOTT_DUALITY):
    """
    ``h^j(P^n, O(i))``.

    Args:
        n: projective dimension, at least 1
        i: twist
        j: cohomological degree, ``0 <= j <= n``
        top_row: ``BOTT_DUALITY`` uses ``C(-i-1, n)`` for ``i <= -n-1``;
            ``BOTT_PRINTED`` uses ``C(-i-n-1, n)``, which breaks Serre duality
            and is kept only as a regression sentinel
    """
    if n < 1:
        raise ValidationError('n must be at least 1')
    if not 0 <= j <= n:
        raise ValidationError(f'Cohomological degree {j} outside [0, {n}]')
    if j == 0:
        return comb(n + i, n) if i >= 0 else 0
    if j == n and i <= -n - 1:
        if top_row == BOTT_PRINTED:
            return comb(-i - n - 1, n)
        return comb(-i - 1, n)
    return 0


def euler_characteristic(n, i, top_row=BOTT_DUALITY):
    return sum((-1) ** j * bott(n, i, j, top_row) for j in range(n + 1))


@dataclass(frozen=True)
class CoverSpec:
    """Covering of ``P^n`` of degree d inside the total space of ``O(m)``."""
    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.d < 1:
            raise ValidationError('n, m and d must be positive')


def pushforward_splitting(cover):
    """Twists of ``f_*O_X``: ``[0, -m, .., -(d-1)m]``."""
    return [-k * cover.m for k in range(cover.d)]


def canonical_twist(cover):
    """``omega_X = O_X(m(d-1) - n - 1)``."""
    return cover.m * (cover.d - 1) - cover.n - 1


def ulrich_hilbert(r, cover):
    """Hilbert polynomial ``r*d*C(t+n, n)`` of a rank-r Ulrich sheaf."""
    if r < 1:
        raise ValidationError('Rank must be positive')
    return HilbertPoly.from_binomials(cover.n, [(r * cover.d, cover.n)])


def ulrich_degree(r, cover):
    """Degree ``r*m*d(d-1)/2`` of the first Chern class."""
    if r < 1:
        raise ValidationError('Rank must be positive')
    return r * cover.m * cover.d * (cover.d - 1) // 2


def c2_degree_rank2(cover):
    """``H^(n-2) . c2(E) = m^2`` for the rank-2 bundles on double covers."""
    if cover.d != 2:
        raise ValidationError('The c2 degree is computed for double covers only')
    return cover.m ** 2
