"""
Cohomology of (m, m) complete intersections Z in P^n through the Koszul resolution

    0 -> O(-2m) -> O(-m)^2 -> I_Z -> 0

and the ideal sequence ``0 -> I_Z -> O -> O_Z -> 0``.
"""
import logging
from dataclasses import dataclass

from ulrich.choices import SHEAF_IDEAL, SHEAF_STRUCTURE
from ulrich.exceptions import ValidationError
from .cohomology import bott
from .hilbert import HilbertPoly, binomial_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CIData:
    """Codimension-2 complete intersection of two degree-m hypersurfaces in ``P^n``."""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 3:
            raise ValidationError('Complete intersections are studied for n >= 3')
        if self.m < 1:
            raise ValidationError('m must be positive')


def _h0(n, k):
    return bott(n, k, 0)


def ideal_cohomology(ci, i, j):
    """``h^j(I_Z(i))``."""
    n, m = ci.n, ci.m
    dual = -i - n - 1
    if j == 0:
        return 2 * _h0(n, i - m) - _h0(n, i - 2 * m)
    if j == n - 1:
        # dual of the cokernel of H^0(O(dual+m))^2 -> H^0(O(dual+2m))
        return _h0(n, dual + 2 * m) - 2 * _h0(n, dual + m) + _h0(n, dual)
    if j == n:
        return _h0(n, dual)
    return 0


def structure_cohomology(ci, i, j):
    """``h^j(O_Z(i))``."""
    n = ci.n
    if j == 0:
        return _h0(n, i) - ideal_cohomology(ci, i, 0)
    if j == n - 2:
        return ideal_cohomology(ci, i, n - 1)
    return 0


def ci_cohomology(ci, sheaf, i, j):
    """
    ``h^j`` of ``I_Z(i)`` or ``O_Z(i)``.

    Args:
        ci: the complete intersection
        sheaf: ``SHEAF_IDEAL`` or ``SHEAF_STRUCTURE``
        i: twist
        j: cohomological degree, ``0 <= j <= n``
    """
    if not 0 <= j <= ci.n:
        raise ValidationError(f'Cohomological degree {j} outside [0, {ci.n}]')
    if sheaf == SHEAF_IDEAL:
        return ideal_cohomology(ci, i, j)
    if sheaf == SHEAF_STRUCTURE:
        return structure_cohomology(ci, i, j)
    raise ValidationError(f'Unknown sheaf {sheaf!r}')


def ci_euler_characteristic(ci, sheaf, i):
    return sum((-1) ** j * ci_cohomology(ci, sheaf, i, j) for j in range(ci.n + 1))


def hilbert_poly_ci(ci):
    """``P(t) = chi(I_Z(m + t)) = 2*C(t+n, n) - C(t+n-m, n)``."""
    return HilbertPoly.from_binomials(ci.n, [(2, ci.n), (-1, ci.n - ci.m)])


def ci_arithmetic_genus(ci):
    """``(-1)^(n-2) * (chi(O_Z) - 1)``."""
    n, m = ci.n, ci.m
    chi_ideal = 2 * binomial_value(n - m, n) - binomial_value(n - 2 * m, n)
    chi_structure = 1 - chi_ideal
    return (-1) ** (n - 2) * (chi_structure - 1)


def normal_h1_bound(ci):
    """``h^1(O_Z) + h^1(O_Z(m))`` for curves in P^3."""
    if ci.n != 3:
        raise ValidationError('The normal bundle bound is stated for curves in P^3')
    return ci_arithmetic_genus(ci) + structure_cohomology(ci, ci.m, 1)
