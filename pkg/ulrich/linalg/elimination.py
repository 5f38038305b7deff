"""
Gaussian elimination over fields and fraction-free elimination over Z.

Pivots are always the first nonzero entry in column order, scanning rows from
the top, so echelon forms are reproducible.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from ulrich.polyring import CoefficientDomain
from .matrices import FieldMatrix, IntMatrix, clear_denominators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RREFResult:
    rank: int
    rref: FieldMatrix
    pivot_cols: tuple


def _field_ops(domain):
    if domain.is_prime_field:
        p = domain.modulus
        return (lambda a: pow(a, -1, p)), (lambda a: a % p)
    return (lambda a: 1 / Fraction(a)), (lambda a: a)


def _eliminate(rows, ncols, domain, reduced):
    """In-place elimination on a list of row lists; returns pivot columns."""
    inverse, reduce = _field_ops(domain)
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = inverse(rows[r][c])
        pivot_row = [reduce(x * inv) for x in rows[r]]
        rows[r] = pivot_row
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            factor = rows[i][c]
            if factor:
                rows[i] = [reduce(x - factor * y) for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def rref_rank(matrix):
    """
    Reduced row echelon form of a field matrix.

    Returns:
        RREFResult with the rank, the RREF and the pivot columns
    """
    rows = [list(row) for row in matrix.entries]
    pivots = _eliminate(rows, matrix.cols, matrix.domain, reduced=True)
    rref = FieldMatrix(matrix.domain, matrix.rows, matrix.cols, tuple(tuple(row) for row in rows))
    return RREFResult(len(pivots), rref, tuple(pivots))


def field_rank(matrix):
    """Rank by forward elimination only."""
    if matrix.domain.is_prime_field:
        rows = [list(row) for row in matrix.entries]
        return len(_eliminate(rows, matrix.cols, matrix.domain, reduced=False))
    return rational_rank(matrix)


def nullspace(matrix):
    """Basis of the right kernel, one vector per free column."""
    result = rref_rank(matrix)
    domain = matrix.domain
    zero, one = domain.normalize(0), domain.normalize(1)
    pivot_of_row = dict(enumerate(result.pivot_cols))
    free = [c for c in range(matrix.cols) if c not in set(result.pivot_cols)]
    basis = []
    for f in free:
        vector = [zero] * matrix.cols
        vector[f] = one
        for r, c in pivot_of_row.items():
            vector[c] = domain.normalize(-result.rref.entries[r][f])
        basis.append(tuple(vector))
    return basis


def bareiss_rank(matrix):
    """
    Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the divisions by the
    previous pivot are exact.
    """
    rows = [list(row) for row in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    rank = 0
    previous = 1
    for c in range(ncols):
        if rank == nrows:
            break
        pivot = next((i for i in range(rank, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        top = rows[rank]
        a = top[c]
        for i in range(rank + 1, nrows):
            row = rows[i]
            b = row[c]
            row[c] = 0
            for j in range(c + 1, ncols):
                row[j] = (a * row[j] - b * top[j]) // previous
        previous = a
        rank += 1
    return rank


def integer_rank(matrix):
    """
    Rank of an integer matrix over Q.

    A rank computed modulo a large prime never exceeds the rational rank; when
    it already equals ``min(rows, cols)`` it is exact, otherwise Bareiss
    elimination decides.
    """
    check_prime = getattr(settings, 'ULRICH_RANK_CHECK_PRIME', 2 ** 61 - 1)
    modular = field_rank(matrix.reduce_mod(CoefficientDomain.prime_field(check_prime)))
    if modular == min(matrix.rows, matrix.cols):
        return modular
    logger.debug(
        f"Modular rank {modular} not maximal for {matrix.rows}x{matrix.cols}; using Bareiss",
        extra={'rows': matrix.rows, 'cols': matrix.cols},
    )
    return bareiss_rank(matrix)


def rational_rank(matrix):
    return integer_rank(clear_denominators(matrix))


def matrix_rank(matrix):
    """Rank of a ``FieldMatrix`` or an ``IntMatrix`` (over Q)."""
    if isinstance(matrix, IntMatrix):
        return integer_rank(matrix)
    return field_rank(matrix)
