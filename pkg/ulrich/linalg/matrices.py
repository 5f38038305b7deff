"""
Dense exact matrices over fields and over the integers.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ulrich.exceptions import ShapeError, ValidationError


def _check_shape(rows, cols, entries):
    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise ShapeError(f'Entries do not form a {rows}x{cols} matrix')


@dataclass(frozen=True)
class FieldMatrix:
    """Row-major matrix over Q (``Fraction`` entries) or F_p (``int`` entries in ``[0, p)``)."""
    domain: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if not self.domain.is_field:
            raise ValidationError(f'{self.domain} is not a field')
        _check_shape(self.rows, self.cols, self.entries)

    @classmethod
    def from_rows(cls, domain, rows, cols=None):
        normalize = domain.normalize
        entries = tuple(tuple(normalize(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(domain, len(entries), cols, entries)

    @classmethod
    def zeros(cls, domain, rows, cols):
        return cls(domain, rows, cols, tuple((domain.normalize(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, domain, size):
        one, zero = domain.normalize(1), domain.normalize(0)
        return cls(domain, size, size, tuple(
            tuple(one if i == j else zero for j in range(size)) for i in range(size)
        ))

    def transpose(self):
        return FieldMatrix(self.domain, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def to_lists(self):
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        _check_shape(self.rows, self.cols, self.entries)

    @classmethod
    def from_rows(cls, rows, cols=None):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def diagonal(cls, values):
        size = len(values)
        return cls(size, size, tuple(
            tuple(values[i] if i == j else 0 for j in range(size)) for i in range(size)
        ))

    def transpose(self):
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def reduce_mod(self, domain):
        """Image over a prime field."""
        p = domain.modulus
        return FieldMatrix(domain, self.rows, self.cols, tuple(
            tuple(x % p for x in row) for row in self.entries
        ))

    def to_rationals(self, domain):
        return FieldMatrix(domain, self.rows, self.cols, tuple(
            tuple(Fraction(x) for x in row) for row in self.entries
        ))

    def matmul(self, other):
        if self.cols != other.rows:
            raise ShapeError(f'Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}')
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in columns) for row in self.entries
        ))

    def to_lists(self):
        return [list(row) for row in self.entries]


def clear_denominators(matrix):
    """Scale every row of a rational matrix by the lcm of its denominators."""
    rows = []
    for row in matrix.entries:
        scale = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append(tuple(int(Fraction(x) * scale) for x in row))
    return IntMatrix(matrix.rows, matrix.cols, tuple(rows))
