"""
Coefficient domains: the rationals, the integers and prime fields.

Each domain wraps the matching sympy domain (``QQ``, ``ZZ``, ``GF(p)``), which
carries the coefficient arithmetic of polynomial rings. Values crossing the
public API are plain Python numbers: ``int`` for ZZ and GF(p) (reduced into
``[0, p)``), ``fractions.Fraction`` for QQ.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import QQ, ZZ, FiniteField

from ulrich.exceptions import CharacteristicError, CoefficientDomainError, ValidationError

logger = logging.getLogger(__name__)

RATIONALS = 'QQ'
INTEGERS = 'ZZ'
PRIME_FIELD = 'GF'

MAX_MODULUS = 2 ** 62


@dataclass(frozen=True)
class CoefficientDomain:
    """One of Q, Z or F_p. Prime-field moduli are checked for primality."""
    tag: str
    modulus: int = 0

    def __post_init__(self):
        if self.tag not in (RATIONALS, INTEGERS, PRIME_FIELD):
            raise ValidationError(f'Unknown coefficient domain {self.tag!r}')
        if self.tag == PRIME_FIELD:
            if not 2 <= self.modulus < MAX_MODULUS or not isprime(self.modulus):
                raise ValidationError(f'Modulus {self.modulus} is not a prime below 2^62')
        elif self.modulus:
            raise ValidationError(f'{self.tag} takes no modulus')

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def integers(cls):
        return cls(INTEGERS)

    @classmethod
    def prime_field(cls, p):
        return cls(PRIME_FIELD, int(p))

    @classmethod
    def parse(cls, text):
        """
        Parse the command-line spelling of a domain.

        Args:
            text: ``q``, ``z`` or ``fp:<p>`` (case-insensitive)

        Returns:
            CoefficientDomain
        """
        value = text.strip().lower()
        if value in ('q', 'qq'):
            return cls.rationals()
        if value in ('z', 'zz'):
            return cls.integers()
        if value.startswith('fp:'):
            digits = value[3:]
            if not (digits.isascii() and digits.isdigit()):
                raise ValidationError(f'Invalid prime in field spec {text!r}')
            return cls.prime_field(int(digits))
        raise ValidationError(f'Invalid field spec {text!r}; use q, z or fp:<p>')

    def __str__(self):
        if self.tag == PRIME_FIELD:
            return f'GF({self.modulus})'
        return self.tag

    @property
    def spelling(self):
        """The form accepted by ``parse``."""
        if self.tag == PRIME_FIELD:
            return f'fp:{self.modulus}'
        return 'q' if self.tag == RATIONALS else 'z'

    @property
    def is_field(self):
        return self.tag != INTEGERS

    @property
    def is_prime_field(self):
        return self.tag == PRIME_FIELD

    @property
    def characteristic(self):
        return self.modulus if self.tag == PRIME_FIELD else 0

    @cached_property
    def sympy_domain(self):
        if self.tag == RATIONALS:
            return QQ
        if self.tag == INTEGERS:
            return ZZ
        return FiniteField(self.modulus, symmetric=False)

    def element(self, value):
        """Convert an ``int`` or ``Fraction`` into a sympy domain element."""
        K = self.sympy_domain
        value = Fraction(value)
        if self.tag == RATIONALS:
            return K(value.numerator, value.denominator)
        if self.tag == INTEGERS:
            if value.denominator != 1:
                raise CoefficientDomainError(f'{value} is not an integer')
            return K(value.numerator)
        return K(self.reduce(value))

    def reduce(self, value):
        """Reduce an ``int`` or ``Fraction`` into ``[0, p)``."""
        value = Fraction(value)
        p = self.modulus
        if value.denominator % p == 0:
            raise CoefficientDomainError(f'{value} has no image in GF({p})')
        return value.numerator * pow(value.denominator, -1, p) % p

    def to_python(self, element):
        """Convert a sympy domain element back into ``int`` or ``Fraction``."""
        K = self.sympy_domain
        if self.tag == RATIONALS:
            return Fraction(int(K.numer(element)), int(K.denom(element)))
        if self.tag == INTEGERS:
            return int(element)
        return int(element) % self.modulus

    def normalize(self, value):
        """Canonical Python representative of ``value`` inside this domain."""
        if self.tag == PRIME_FIELD:
            return self.reduce(value)
        value = Fraction(value)
        if self.tag == INTEGERS:
            if value.denominator != 1:
                raise CoefficientDomainError(f'{value} is not an integer')
            return value.numerator
        return value

    def inverse(self, value):
        if not self.is_field:
            raise CharacteristicError('Inverses need a field')
        if value == 0:
            raise ZeroDivisionError('Zero has no inverse')
        if self.tag == PRIME_FIELD:
            return pow(value, -1, self.modulus)
        return 1 / Fraction(value)

    def primitive_root_of_unity(self, d):
        """
        Find a primitive d-th root of unity, or None when the domain has none.

        Over Q and Z only d = 1, 2 succeed. Over GF(p) a root exists iff d | p - 1;
        the smallest base g with g^((p-1)/d) of exact order d is used.
        """
        if d < 1:
            raise ValidationError('Root order must be positive')
        if not self.is_prime_field:
            return {1: 1, 2: -1}.get(d)
        p = self.modulus
        if (p - 1) % d:
            return None
        prime_factors = _prime_factors(d)
        for g in range(2, p):
            zeta = pow(g, (p - 1) // d, p)
            if all(pow(zeta, d // q, p) != 1 for q in prime_factors):
                return zeta
        return 1 if d == 1 else None

    def is_primitive_root(self, zeta, d):
        zeta = self.normalize(zeta)
        if self.is_prime_field:
            power = lambda k: pow(zeta, k, self.modulus)
        else:
            power = lambda k: zeta ** k
        if power(d) != 1:
            return False
        return all(power(k) != 1 for k in range(1, d))


def _prime_factors(n):
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        factors.append(n)
    return factors
