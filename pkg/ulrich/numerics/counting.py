from dataclasses import dataclass

from ulrich.exceptions import ValidationError
from .hilbert import binomial_value


@dataclass(frozen=True)
class CountingReport:
    """Parameter counts deciding existence of Ulrich bundles of rank 1 and 2."""
    n: int
    m: int
    v_m_dim: int
    v_2m_dim: int
    parameter_count: int
    rank1_gap: int
    rank2_gap: int
    noic_dim: int
    noic_codim: int


def rank1_gap(m):
    """``C(2m+3, 3) - 3 - 3*C(m+3, 3)``; positive means rank-1 sheaves cannot cover a general b."""
    return binomial_value(2 * m + 3, 3) - 3 - 3 * binomial_value(m + 3, 3)


def rank2_gap(n, m):
    """``C(2m+n, n) - 5*C(m+n, n)``."""
    return binomial_value(2 * m + n, n) - 5 * binomial_value(m + n, n)


def noic_dim(m):
    """``4*C(m+3, 3) - 5``, the dimension count for surfaces ``p1*p2 + p3*p4 = 0`` in P^3."""
    return 4 * binomial_value(m + 3, 3) - 5


def noic_codim(m):
    """``C(2m+3, 3) - noic_dim + 1``: 1, 10, 31 for m = 2, 3, 4."""
    return binomial_value(2 * m + 3, 3) - noic_dim(m) + 1


def counting_inequalities(n, m):
    """
    All counts for ``P^n`` and forms of degree m.

    ``rank1_gap`` and the ``noic`` counts concern n = 3 and are None otherwise.
    """
    if n < 1 or m < 1:
        raise ValidationError('n and m must be positive')
    in_p3 = n == 3
    return CountingReport(
        n=n,
        m=m,
        v_m_dim=binomial_value(m + n, n),
        v_2m_dim=binomial_value(2 * m + n, n),
        parameter_count=5 * binomial_value(m + n, n),
        rank1_gap=rank1_gap(m) if in_p3 else None,
        rank2_gap=rank2_gap(n, m),
        noic_dim=noic_dim(m) if in_p3 else None,
        noic_codim=noic_codim(m) if in_p3 else None,
    )
