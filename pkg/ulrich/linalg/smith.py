"""
Smith normal form over Z.

The reduction keeps the row transform ``U`` and its inverse so the cokernel
``Z^rows / image(M)`` can be read in diagonal coordinates: the class of a
vector ``v`` has coordinates ``U v``, and column ``i`` of ``U^-1`` generates
the ``i``-th cyclic summand.
"""
import logging
from dataclasses import dataclass

from .matrices import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple
    rank: int
    rows: int
    cols: int
    row_transform: IntMatrix
    row_transform_inverse: IntMatrix

    @property
    def free_rank(self):
        """Rank of the free part of the cokernel."""
        return self.rows - self.rank

    @property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d > 1)


class _Reducer:
    """Scratch state for one reduction."""

    def __init__(self, matrix):
        self.a = [list(row) for row in matrix.entries]
        self.m, self.n = matrix.rows, matrix.cols
        self.u = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.u_inv = [[int(i == j) for j in range(self.m)] for i in range(self.m)]

    def swap_rows(self, i, k):
        if i == k:
            return
        a, u = self.a, self.u
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for row in self.u_inv:
            row[i], row[k] = row[k], row[i]

    def swap_cols(self, j, k):
        if j == k:
            return
        for row in self.a:
            row[j], row[k] = row[k], row[j]

    def add_row(self, target, source, q, start):
        """row[target] += q * row[source]."""
        a_t, a_s = self.a[target], self.a[source]
        for j in range(start, self.n):
            if a_s[j]:
                a_t[j] += q * a_s[j]
        u_t, u_s = self.u[target], self.u[source]
        for j in range(self.m):
            if u_s[j]:
                u_t[j] += q * u_s[j]
        for row in self.u_inv:
            if row[target]:
                row[source] -= q * row[target]

    def add_col(self, target, source, q, start):
        """col[target] += q * col[source]."""
        for i in range(start, self.m):
            row = self.a[i]
            if row[source]:
                row[target] += q * row[source]

    def negate_row(self, t):
        self.a[t] = [-x for x in self.a[t]]
        self.u[t] = [-x for x in self.u[t]]
        for row in self.u_inv:
            row[t] = -row[t]

    def smallest(self, t):
        best = None
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def smallest_in_cross(self, t):
        best = None
        for i in range(t, self.m):
            x = self.a[i][t]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, t)
        for j in range(t + 1, self.n):
            x = self.a[t][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), t, j)
        return best

    def move_to(self, t, i, j):
        self.swap_rows(t, i)
        self.swap_cols(t, j)

    def clear_cross(self, t):
        """One sweep of division steps; returns True once row and column t are clear."""
        a = self.a
        pivot = a[t][t]
        clean = True
        for i in range(t + 1, self.m):
            if a[i][t]:
                self.add_row(i, t, -(a[i][t] // pivot), t)
                clean = clean and not a[i][t]
        for j in range(t + 1, self.n):
            if a[t][j]:
                self.add_col(j, t, -(a[t][j] // pivot), t)
                clean = clean and not a[t][j]
        return clean

    def find_non_multiple(self, t):
        pivot = self.a[t][t]
        if abs(pivot) == 1:
            return None
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % pivot:
                    return i
        return None

    def run(self):
        t = 0
        while t < min(self.m, self.n):
            best = self.smallest(t)
            if best is None:
                break
            self.move_to(t, best[1], best[2])
            while True:
                if not self.clear_cross(t):
                    _, i, j = self.smallest_in_cross(t)
                    self.move_to(t, i, j)
                    continue
                offender = self.find_non_multiple(t)
                if offender is None:
                    break
                self.add_row(t, offender, 1, t)
            if self.a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(matrix):
    """
    Smith normal form of an integer matrix.

    Pivots are entries of least absolute value, ties broken by lowest row then
    column. The returned invariant factors have length ``min(rows, cols)``,
    with trailing zeros past the rank, and satisfy ``d1 | d2 | ...``.

    Returns:
        SNFResult
    """
    reducer = _Reducer(matrix)
    rank = reducer.run()
    size = min(matrix.rows, matrix.cols)
    factors = tuple(reducer.a[i][i] for i in range(rank)) + (0,) * (size - rank)
    logger.debug(
        f"Smith normal form of {matrix.rows}x{matrix.cols}: rank {rank}",
        extra={'rows': matrix.rows, 'cols': matrix.cols, 'rank': rank},
    )
    return SNFResult(
        invariant_factors=factors,
        rank=rank,
        rows=matrix.rows,
        cols=matrix.cols,
        row_transform=IntMatrix.from_rows(reducer.u, matrix.rows),
        row_transform_inverse=IntMatrix.from_rows(reducer.u_inv, matrix.rows),
    )
