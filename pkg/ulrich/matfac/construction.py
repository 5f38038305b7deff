"""
Cyclic matrix factorizations ``A^d = b * I`` built from decompositions.

Starting from the 1x1 matrix ``[p0]``, each product term ``p1 * .. * pd``
extends ``A`` to ``Q (x) A + S (x) I`` where ``Q = diag(1, z, .., z^(d-1))``
for a primitive d-th root of unity ``z`` and ``S`` is the cyclic shift with
weights ``p1, .., pd``. Since ``S Q = z Q S`` the two summands z-commute and
the d-th power of their sum is ``A^d (x) I + S^d (x) I``. For d = 2 this is
the doubling ``[[A, p1*I], [p2*I, -A]]``.
"""
import logging
from dataclasses import dataclass
from itertools import permutations, product

from sympy import totient

from ulrich.exceptions import (
    CharacteristicError,
    FalsifiedError,
    RootOfUnityError,
    ShapeError,
    ValidationError,
)
from ulrich.linalg import PolyMatrix
from .verification import verify_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicFactorization:
    """
    Certificate ``A^d = b * I``, checked on construction.

    ``decomposition`` is None for matrices supplied from outside.
    """
    d: int
    b: object
    matrix: PolyMatrix
    decomposition: object = None
    zeta: int = None

    def __post_init__(self):
        check = verify_power(self.matrix, self.d, self.b)
        if not check:
            raise FalsifiedError(f'A^{self.d} != b*I: first mismatch {check.mismatch}')

    @property
    def size(self):
        return self.matrix.size

    @property
    def rank(self):
        return self.size // self.d

    @property
    def provenance(self):
        return 'decomposition' if self.decomposition is not None else 'external'


def resolve_zeta(domain, d, zeta=None):
    """
    Validate or choose the primitive d-th root of unity.

    For d <= 2 the root defaults to 1 or -1; for d > 2 it must be supplied.

    Raises:
        CharacteristicError: the characteristic divides d
        RootOfUnityError: the root is missing or not primitive
    """
    p = domain.characteristic
    if p and d % p == 0:
        raise CharacteristicError(f'Characteristic {p} divides d = {d}')
    if not domain.is_prime_field and d > 2:
        raise RootOfUnityError(f'Over {domain} only d = 1, 2 are supported')
    if zeta is None:
        if d > 2:
            raise RootOfUnityError(f'A primitive {d}-th root of unity is required for d = {d}')
        zeta = 1 if d == 1 else -1
    if not domain.is_primitive_root(zeta, d):
        raise RootOfUnityError(f'{zeta} is not a primitive {d}-th root of unity in {domain}')
    return domain.normalize(zeta)


def clock_matrix(context, d, zeta):
    """``diag(1, zeta, .., zeta^(d-1))`` as polynomial constants."""
    powers = [context.constant(1)]
    for _ in range(d - 1):
        powers.append(powers[-1].scale(zeta))
    return [[powers[i] if i == j else context.zero for j in range(d)] for i in range(d)]


def shift_matrix(context, weights):
    """Cyclic shift with ``S[i][i+1 mod d] = weights[i]``, so ``S^d = prod(weights) * I``."""
    d = len(weights)
    rows = [[context.zero] * d for _ in range(d)]
    for i, w in enumerate(weights):
        rows[i][(i + 1) % d] = w
    return rows


def extend(matrix, context, weights, zeta):
    """``Q (x) A + S (x) I`` for one product term."""
    d = len(weights)
    n = matrix.size
    clock = clock_matrix(context, d, zeta)
    shift = shift_matrix(context, weights)
    zero = context.zero
    rows = []
    for bi in range(d):
        for i in range(n):
            row = []
            for bj in range(d):
                for j in range(n):
                    entry = clock[bi][bj] * matrix.entries[i][j] if bi == bj else zero
                    if i == j:
                        entry = entry + shift[bi][bj]
                    row.append(entry)
            rows.append(row)
    return PolyMatrix(context, rows)


def build_factorization(dec, zeta=None):
    """
    Build a cyclic factorization of ``dec.b`` of size ``d^(s-1)``.

    Args:
        dec: the decomposition
        zeta: primitive d-th root of unity (required for d > 2)

    Returns:
        CyclicFactorization whose power check already passed

    Raises:
        RootOfUnityError, CharacteristicError, DegreeMismatchError
    """
    context = dec.context
    zeta = resolve_zeta(context.domain, dec.d, zeta)
    dec.check_degrees()
    matrix = PolyMatrix(context, [[dec.power]])
    for term in dec.product_terms:
        matrix = extend(matrix, context, term, zeta)
    logger.info(
        f"Built {matrix.size}x{matrix.size} factorization for d={dec.d}, s={dec.s}",
        extra={'d': dec.d, 's': dec.s, 'size': matrix.size},
    )
    return CyclicFactorization(dec.d, dec.b, matrix, dec, zeta)


def negate_factorization(factorization):
    """
    ``-A`` factors the same ``b`` when d is even: the involution ``t -> -t``.
    """
    if factorization.d % 2:
        raise ValidationError('Negation preserves A^d only for even d')
    return CyclicFactorization(
        factorization.d,
        factorization.b,
        -factorization.matrix,
        factorization.decomposition,
        factorization.zeta,
    )


@dataclass(frozen=True)
class SkewForm:
    matrix: PolyMatrix
    row_order: tuple
    signs: tuple


def skew_symmetrize_d2(matrix):
    """
    Reorder and re-sign the rows of ``t*I - A`` for a 4x4 doubling until it is skew.

    Accepts either ``A`` (promoted to ``t*I - A``) or a matrix already in
    ``TPoly`` form. Row orders are tried in lexicographic order, sign patterns
    with ``+1`` first.

    Raises:
        ShapeError: no row permutation and sign pattern yields a skew matrix
    """
    if matrix.size != 4:
        raise ShapeError(f'Expected a 4x4 matrix, got {matrix.size}x{matrix.size}')
    if not matrix.is_tpoly:
        matrix = matrix.char_matrix()
    rows = matrix.entries
    for order in permutations(range(4)):
        if any(rows[order[i]][i] for i in range(4)):
            continue
        for signs in product((1, -1), repeat=4):
            candidate = PolyMatrix(matrix.context, [
                [x if sign > 0 else -x for x in rows[k]] for k, sign in zip(order, signs)
            ])
            if candidate.is_skew_symmetric():
                return SkewForm(candidate, order, signs)
    raise ShapeError('Matrix is not a row-signed permutation of a skew-symmetric matrix')


def rank_bound(d, s, has_root_of_unity=True):
    """
    Rank of the sheaf attached to a decomposition with s summands.

    ``d^(s-2)`` with a primitive d-th root of unity in the field, otherwise
    ``d^(s-2) * phi(d)``.
    """
    if d < 2:
        raise ValidationError('d must be at least 2')
    if s < 2:
        raise ValidationError('s must be at least 2; a single summand gives a reducible cover')
    bound = d ** (s - 2)
    return bound if has_root_of_unity else bound * int(totient(d))
