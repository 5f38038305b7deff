"""
Dimensions, bases and Z-module structure of graded quotient pieces.
"""
import logging
from dataclasses import dataclass, field
from math import gcd, lcm

from ulrich.exceptions import ValidationError
from ulrich.linalg import matrix_rank, rref_rank, smith_normal_form
from ulrich.polyring import format_monomial
from .pieces import multiplication_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientPieceReport:
    """
    Structure of ``(k[x]/I)_deg``.

    Over a field ``quotient_dim`` is set; over Z ``free_rank``, ``torsion`` and
    ``torsion_reps`` are set and ``quotient_dim`` is None.
    """
    domain: str
    degree: int
    ambient_dim: int
    ideal_dim: int
    quotient_dim: int = None
    free_rank: int = None
    torsion: tuple = ()
    torsion_reps: tuple = ()
    basis: tuple = field(default=())

    @property
    def is_integral(self):
        return self.free_rank is not None

    @property
    def vanishes(self):
        if self.is_integral:
            return self.free_rank == 0 and not self.torsion
        return self.quotient_dim == 0


def _require_field(piece, operation):
    if not piece.domain.is_field:
        raise ValidationError(f'{operation} needs a field; use quotient_structure_Z over Z')


def hilbert_function_quotient(piece):
    """
    ``dim_k (k[x]/I)_deg`` as ``ambient_dim - rank``.

    Raises:
        ValidationError: the piece is over Z
    """
    _require_field(piece, 'hilbert_function_quotient')
    return piece.ambient_dim - matrix_rank(multiplication_matrix(piece))


def quotient_basis(piece):
    """
    Monomials of the target degree spanning the quotient piece.

    These are the non-pivot columns of the RREF of the transposed
    multiplication matrix, so leading monomials are removed greedily in
    graded-lex order.
    """
    _require_field(piece, 'quotient_basis')
    matrix = multiplication_matrix(piece).transpose()
    if matrix.rows == 0:
        return list(piece.basis)
    pivots = set(rref_rank(matrix).pivot_cols)
    return [exps for i, exps in enumerate(piece.basis) if i not in pivots]


def quotient_structure_Z(piece):
    """
    Cokernel of the integer multiplication matrix via Smith normal form.

    Each torsion summand is represented by the basis monomial carrying the
    largest absolute coefficient in the matching column of ``U^-1`` (ties go
    to the lowest index).

    Returns:
        QuotientPieceReport with free rank and torsion invariants
    """
    if piece.domain.is_field:
        raise ValidationError('quotient_structure_Z needs integer coefficients')
    matrix = multiplication_matrix(piece)
    snf = smith_normal_form(matrix)
    basis = piece.basis
    names = piece.context.names
    torsion, reps = [], []
    inverse = snf.row_transform_inverse.entries
    for i, d in enumerate(snf.invariant_factors[:snf.rank]):
        if d == 1:
            continue
        column = [row[i] for row in inverse]
        best = max(range(len(column)), key=lambda k: (abs(column[k]), -k))
        torsion.append(d)
        reps.append(format_monomial(basis[best], names) or '1')
    logger.info(
        f"Quotient in degree {piece.target_degree} over Z: free rank {snf.free_rank}, torsion {torsion}",
        extra={'degree': piece.target_degree, 'free_rank': snf.free_rank, 'torsion': torsion},
    )
    return QuotientPieceReport(
        domain=str(piece.domain),
        degree=piece.target_degree,
        ambient_dim=piece.ambient_dim,
        ideal_dim=snf.rank,
        free_rank=snf.free_rank,
        torsion=tuple(torsion),
        torsion_reps=tuple(reps),
    )


def class_order(piece, poly):
    """
    Additive order of the class of ``poly`` in the quotient piece over Z.

    Returns:
        the order, 1 when the class is zero, 0 when it has infinite order
    """
    if piece.domain.is_field:
        raise ValidationError('class_order needs integer coefficients')
    snf = smith_normal_form(multiplication_matrix(piece))
    vector = piece.vector(poly)
    order = 1
    for i, row in enumerate(snf.row_transform.entries):
        y = sum(a * b for a, b in zip(row, vector))
        if i >= snf.rank:
            if y:
                return 0
            continue
        d = snf.invariant_factors[i]
        order = lcm(order, d // gcd(d, y))
    return order


def quotient_report(piece, with_basis=False):
    """Field or integer report, whichever the piece's domain calls for."""
    if not piece.domain.is_field:
        return quotient_structure_Z(piece)
    matrix = multiplication_matrix(piece)
    if with_basis:
        basis = quotient_basis(piece)
        quotient_dim = len(basis)
        names = piece.context.names
        basis = tuple(format_monomial(exps, names) or '1' for exps in basis)
    else:
        quotient_dim = piece.ambient_dim - matrix_rank(matrix)
        basis = ()
    return QuotientPieceReport(
        domain=str(piece.domain),
        degree=piece.target_degree,
        ambient_dim=piece.ambient_dim,
        ideal_dim=piece.ambient_dim - quotient_dim,
        quotient_dim=quotient_dim,
        basis=basis,
    )
