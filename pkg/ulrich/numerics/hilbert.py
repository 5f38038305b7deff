"""
Hilbert polynomials in one variable ``t`` with rational coefficients.
"""
from fractions import Fraction
from math import factorial

from sympy import Poly, QQ, Rational, Symbol, binomial

T = Symbol('t')


def binomial_value(top, k):
    """Generalized binomial ``C(top, k)`` for any integer ``top`` and ``k >= 0``."""
    if k < 0:
        return 0
    return int(binomial(top, k))


def binomial_poly(shift, k):
    """``C(t + shift, k)`` as a polynomial in ``t``."""
    poly = Poly(1, T, domain=QQ)
    for j in range(k):
        poly = poly * Poly(T + shift - j, T, domain=QQ)
    return poly * Rational(1, factorial(k))


def _fraction(value):
    return Fraction(str(value))


class HilbertPoly:
    """
    A numerical polynomial on ``P^n``.

    Stored as a sympy ``Poly`` over QQ; ``binomial_coefficients`` rewrites it
    in the basis ``C(t + n - k, n - k)``, ``k = 0 .. n``.
    """

    def __init__(self, poly, n):
        self.poly = poly if isinstance(poly, Poly) else Poly(poly, T, domain=QQ)
        self.n = n

    @classmethod
    def from_binomials(cls, n, terms):
        """Sum of ``c * C(t + shift, n)`` for ``(c, shift)`` in ``terms``."""
        poly = Poly(0, T, domain=QQ)
        for c, shift in terms:
            poly = poly + binomial_poly(shift, n) * c
        return cls(poly, n)

    def __call__(self, t):
        return _fraction(self.poly.eval(t))

    @property
    def degree(self):
        return -1 if self.poly.is_zero else self.poly.degree()

    @property
    def leading_coefficient(self):
        return _fraction(self.poly.LC())

    @property
    def coefficients(self):
        """Coefficients of ``t^degree .. t^0``."""
        return [_fraction(c) for c in self.poly.all_coeffs()]

    def binomial_coefficients(self):
        remaining = self.poly
        result = []
        for k in range(self.n + 1):
            deg = self.n - k
            a = _fraction(remaining.coeff_monomial(T ** deg)) * factorial(deg)
            result.append(a)
            if a:
                remaining = remaining - binomial_poly(deg, deg) * Rational(a.numerator, a.denominator)
        return result

    def is_integer_valued(self, radius=None):
        radius = 2 * self.n if radius is None else radius
        return all(self(t).denominator == 1 for t in range(-radius, radius + 1))

    def __eq__(self, other):
        if not isinstance(other, HilbertPoly):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def format(self):
        return str(self.poly.as_expr())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'HilbertPoly({self.format()}, n={self.n})'
