"""
Square matrices with polynomial entries, their determinants and Pfaffians.

Entries are ``MultiPoly`` values or ``TPoly`` values of one ring context.
Determinants use Laplace expansion with minors memoized on the set of
remaining columns. Characteristic polynomials come from traces of powers.
Pfaffians expand along the first row, memoized on the set of remaining indices.
"""
import logging
from fractions import Fraction

from django.conf import settings

from ulrich.exceptions import NotSkewSymmetricError, ShapeError, SizeExceededError, ValidationError
from ulrich.polyring import CoefficientDomain, TPoly

logger = logging.getLogger(__name__)


class PolyMatrix:
    """Immutable square matrix of ``MultiPoly`` or ``TPoly`` entries."""
    __slots__ = ('context', 'size', 'entries')

    def __init__(self, context, entries):
        entries = tuple(tuple(row) for row in entries)
        size = len(entries)
        if any(len(row) != size for row in entries):
            raise ShapeError('Polynomial matrices must be square')
        self.context = context
        self.size = size
        self.entries = entries

    @classmethod
    def from_strings(cls, context, rows):
        return cls(context, [[context.parse(str(text)) for text in row] for row in rows])

    @classmethod
    def identity(cls, context, size):
        return cls.scalar(context, size, context.one)

    @classmethod
    def scalar(cls, context, size, value):
        zero = value - value
        return cls(context, [[value if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, context, size):
        return cls.scalar(context, size, context.zero)

    @property
    def is_tpoly(self):
        return bool(self.entries) and isinstance(self.entries[0][0], TPoly)

    def _one(self):
        return TPoly.constant(self.context.one) if self.is_tpoly else self.context.one

    def _zero(self):
        return TPoly(self.context) if self.is_tpoly else self.context.zero

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.context == other.context and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        self._check(other)
        return PolyMatrix(self.context, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        self._check(other)
        return PolyMatrix(self.context, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ])

    def __neg__(self):
        return PolyMatrix(self.context, [[-a for a in row] for row in self.entries])

    def _check(self, other):
        if not isinstance(other, PolyMatrix) or other.size != self.size:
            raise ShapeError('Matrix sizes differ')

    def matmul(self, other):
        self._check(other)
        zero = self._zero()
        columns = list(zip(*other.entries))
        rows = []
        for row in self.entries:
            out = []
            for col in columns:
                total = zero
                for a, b in zip(row, col):
                    if not a.is_zero and not b.is_zero:
                        total = total + a * b
                out.append(total)
            rows.append(out)
        return PolyMatrix(self.context, rows)

    __matmul__ = matmul

    def power(self, k):
        if k < 0:
            raise ValidationError('Matrix powers must be non-negative')
        result = PolyMatrix.scalar(self.context, self.size, self._one())
        for _ in range(k):
            result = result.matmul(self)
        return result

    def scale(self, value):
        return PolyMatrix(self.context, [[value * a for a in row] for row in self.entries])

    def transpose(self):
        return PolyMatrix(self.context, list(zip(*self.entries)))

    def block(self, blocks):
        """Assemble a block matrix from a square grid of ``PolyMatrix`` blocks."""
        rows = []
        for block_row in blocks:
            for i in range(block_row[0].size):
                rows.append([x for b in block_row for x in b.entries[i]])
        return PolyMatrix(self.context, rows)

    def char_matrix(self):
        """``t*I - A`` with ``TPoly`` entries."""
        t = TPoly.variable(self.context)
        return PolyMatrix(self.context, [
            [(t if i == j else 0) - TPoly.constant(a) for j, a in enumerate(row)]
            for i, row in enumerate(self.entries)
        ])

    def entry_degree(self):
        """
        The common degree of all nonzero entries, or None for the zero matrix.

        Raises:
            ValidationError: entries are inhomogeneous or of different degrees
        """
        degrees = set()
        for row in self.entries:
            for a in row:
                if a.is_zero:
                    continue
                if not a.is_homogeneous():
                    raise ValidationError(f'Entry {a} is not homogeneous')
                degrees.add(a.degree())
        if len(degrees) > 1:
            raise ValidationError(f'Entries have mixed degrees {sorted(degrees)}')
        return degrees.pop() if degrees else None

    def is_skew_symmetric(self):
        return all(
            self.entries[i][j] == -self.entries[j][i] and (i != j or self.entries[i][i].is_zero)
            for i in range(self.size) for j in range(i, self.size)
        )

    def map_entries(self, func):
        return PolyMatrix(self.context, [[func(a) for a in row] for row in self.entries])

    def to_strings(self):
        return [[a.format() for a in row] for row in self.entries]

    def format(self):
        return '\n'.join('[' + ', '.join(row) + ']' for row in self.to_strings())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'PolyMatrix(size={self.size}, {self.context.domain})'


def _max_size(name, default):
    return getattr(settings, name, default)


def poly_det(matrix, in_t=False):
    """
    Exact determinant of a polynomial matrix.

    ``det(A)`` uses memoized Laplace expansion along rows; ``det(t*I - A)``
    goes through ``char_poly``.

    Args:
        matrix: square ``PolyMatrix``
        in_t: return ``det(t*I - A)`` as a ``TPoly`` instead of ``det(A)``

    Raises:
        SizeExceededError: the matrix is larger than ``ULRICH_MAX_DET_SIZE``
    """
    limit = _max_size('ULRICH_MAX_DET_SIZE', 12)
    if matrix.size > limit:
        raise SizeExceededError(f'Determinant of a {matrix.size}x{matrix.size} matrix exceeds the limit {limit}')
    if in_t:
        return char_poly(matrix)
    return _cofactor_expansion(matrix)


def _cofactor_expansion(matrix):
    n = matrix.size
    if n == 0:
        return matrix._one()
    entries = matrix.entries
    one, zero = matrix._one(), matrix._zero()
    memo = {}

    def minor(mask):
        # rows n - popcount(mask) .. n-1 against the columns set in mask
        if mask == 0:
            return one
        if mask in memo:
            return memo[mask]
        row = entries[n - bin(mask).count('1')]
        total = zero
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            a = row[j]
            if not a.is_zero:
                sub = minor(mask & ~bit)
                if not sub.is_zero:
                    total = total + a * sub if sign > 0 else total - a * sub
            sign = -sign
        memo[mask] = total
        return total

    result = minor((1 << n) - 1)
    logger.debug(f"Determinant of {n}x{n} matrix used {len(memo)} minors", extra={'size': n})
    return result


def _trace(matrix, other=None):
    """``tr(A)``, or ``tr(A @ other)`` without forming the product."""
    total = matrix.context.zero
    for i, row in enumerate(matrix.entries):
        if other is None:
            total = total + row[i]
            continue
        for j, a in enumerate(row):
            b = other.entries[j][i]
            if not a.is_zero and not b.is_zero:
                total = total + a * b
    return total


def char_poly(matrix):
    """
    ``det(t*I - A)`` for a matrix of ``MultiPoly`` entries.

    The power sums ``tr(A^k)`` give the elementary symmetric functions of the
    eigenvalues by Newton's identities, ``k*e_k = sum (-1)^(i-1) e_(k-i) tr(A^i)``.
    Integer matrices are handled over Q. Prime fields with ``p <= size`` cannot
    divide by ``k`` and expand ``t*I - A`` by cofactors instead.

    Returns:
        TPoly of degree ``size``, monic
    """
    n = matrix.size
    context = matrix.context
    domain = context.domain
    if matrix.is_tpoly:
        raise ValidationError('char_poly needs a matrix without t')
    if n == 0:
        return TPoly.constant(context.one)
    if domain.is_prime_field and domain.modulus <= n:
        logger.debug(
            f"GF({domain.modulus}) cannot divide by {n}; expanding t*I - A",
            extra={'size': n, 'modulus': domain.modulus},
        )
        return _cofactor_expansion(matrix.char_matrix())
    work = matrix
    if not domain.is_field:
        rationals = context.with_domain(CoefficientDomain.rationals())
        work = PolyMatrix(rationals, [
            [a.map_domain(rationals.domain) for a in row] for row in matrix.entries
        ])
    traces = [_trace(work)]
    power = work
    for k in range(2, n + 1):
        if k < n:
            power = power.matmul(work)
            traces.append(_trace(power))
        else:
            traces.append(_trace(power, work))
    elementary = [work.context.one]
    for k in range(1, n + 1):
        total = work.context.zero
        for i in range(1, k + 1):
            a, b = elementary[k - i], traces[i - 1]
            if a.is_zero or b.is_zero:
                continue
            total = total + a * b if i % 2 else total - a * b
        elementary.append(total.scale(Fraction(1, k)))
    # coefficient of t^j is (-1)^(n-j) e_(n-j)
    coefficients = []
    for j in range(n + 1):
        e = elementary[n - j]
        coefficients.append(-e if (n - j) % 2 else e)
    if not domain.is_field:
        coefficients = [c.map_domain(domain) for c in coefficients]
    logger.debug(f"Characteristic polynomial of {n}x{n} matrix from {n} traces", extra={'size': n})
    return TPoly(context, coefficients)


def pfaffian(matrix):
    """
    Pfaffian of a skew-symmetric matrix by expansion along the first row.

    Raises:
        NotSkewSymmetricError: entries fail ``A[j][i] == -A[i][j]`` or the diagonal is nonzero
        ShapeError: odd size
        SizeExceededError: the matrix is larger than ``ULRICH_MAX_PFAFFIAN_SIZE``
    """
    limit = _max_size('ULRICH_MAX_PFAFFIAN_SIZE', 8)
    if matrix.size % 2:
        raise ShapeError(f'Pfaffians need even size, got {matrix.size}')
    if matrix.size > limit:
        raise SizeExceededError(f'Pfaffian of a {matrix.size}x{matrix.size} matrix exceeds the limit {limit}')
    if not matrix.is_skew_symmetric():
        raise NotSkewSymmetricError('Matrix is not skew-symmetric')
    entries = matrix.entries
    one, zero = matrix._one(), matrix._zero()
    memo = {}

    def expand(indices):
        if not indices:
            return one
        if indices in memo:
            return memo[indices]
        i, rest = indices[0], indices[1:]
        total = zero
        for k, j in enumerate(rest):
            a = entries[i][j]
            if a.is_zero:
                continue
            term = a * expand(rest[:k] + rest[k + 1:])
            total = total + term if k % 2 == 0 else total - term
        memo[indices] = total
        return total

    return expand(tuple(range(matrix.size)))
