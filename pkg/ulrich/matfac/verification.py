"""
Symbolic checks of claimed cyclic matrix factorizations.
"""
import logging
from dataclasses import dataclass

from ulrich.exceptions import ShapeError
from ulrich.linalg import poly_det

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a check; truthy when it passed. ``mismatch`` locates the first failing entry."""
    verified: bool
    mismatch: dict = None

    def __bool__(self):
        return self.verified


def verify_power(matrix, d, b):
    """
    Check ``A^d == b * I`` entry by entry.

    Returns:
        VerificationResult with ``mismatch = {row, col, expected, actual}`` on failure
    """
    if d < 1:
        raise ShapeError('d must be positive')
    power = matrix.power(d)
    zero = b.context.zero
    for i, row in enumerate(power.entries):
        for j, actual in enumerate(row):
            expected = b if i == j else zero
            if actual != expected:
                logger.info(
                    f"A^{d} differs from b*I at ({i}, {j})",
                    extra={'row': i, 'col': j, 'd': d},
                )
                return VerificationResult(False, {
                    'row': i,
                    'col': j,
                    'expected': expected.format(),
                    'actual': actual.format(),
                })
    return VerificationResult(True)


def verify_determinantal(matrix, p, r):
    """
    Check ``det(t*I - A) == p^r``.

    Args:
        matrix: the square matrix A
        p: a ``TPoly``, typically ``t^d - b``
        r: the expected multiplicity, ``size = r * deg(p)``

    Raises:
        ShapeError: size is not ``r * deg(p)``
        SizeExceededError: the determinant is too large to expand
    """
    if r < 1 or matrix.size != r * p.degree:
        raise ShapeError(f'Size {matrix.size} is not {r} * {p.degree}')
    actual = poly_det(matrix, in_t=True)
    expected = p ** r
    if actual == expected:
        return VerificationResult(True)
    return VerificationResult(False, {'expected': expected.format(), 'actual': actual.format()})
