import logging

from ulrich.exceptions import DomainMismatchError, ValidationError
from .polynomials import MultiPoly

logger = logging.getLogger(__name__)


class TPoly:
    """Polynomial in an auxiliary variable ``t`` with ``MultiPoly`` coefficients."""
    __slots__ = ('context', 'coefficients')

    def __init__(self, context, coefficients=()):
        coefficients = list(coefficients)
        for c in coefficients:
            if c.context != context:
                raise DomainMismatchError('TPoly coefficients must share one ring context')
        while coefficients and coefficients[-1].is_zero:
            coefficients.pop()
        self.context = context
        self.coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value):
        return cls(value.context, [value])

    @classmethod
    def variable(cls, context):
        return cls(context, [context.zero, context.one])

    @classmethod
    def power_minus(cls, d, b):
        """``t^d - b``."""
        coefficients = [b.context.zero] * (d + 1)
        coefficients[0] = -b
        coefficients[d] = coefficients[d] + b.context.one
        return cls(b.context, coefficients)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    def __bool__(self):
        return bool(self.coefficients)

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return self.context.zero

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else self.context.zero

    def _coerce(self, other):
        if isinstance(other, TPoly):
            if other.context != self.context:
                raise DomainMismatchError('TPoly operands live in different rings')
            return other
        if isinstance(other, MultiPoly):
            if other.context != self.context:
                raise DomainMismatchError('TPoly operands live in different rings')
            return TPoly.constant(other)
        if isinstance(other, int):
            return TPoly.constant(self.context.constant(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return TPoly(self.context, [self.coefficient(k) + other.coefficient(k) for k in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly(self.context, [-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return TPoly(self.context)
        product = [self.context.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coefficients):
                if not b.is_zero:
                    product[i + j] = product[i + j] + a * b
        return TPoly(self.context, product)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValidationError('Exponent must be a non-negative integer')
        result = TPoly.constant(self.context.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, value):
        """Substitute a ``MultiPoly`` (or an int) for ``t`` by Horner's rule."""
        if isinstance(value, int):
            value = self.context.constant(value)
        result = self.context.zero
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def map_domain(self, target):
        context = self.context.with_domain(target)
        return TPoly(context, [c.map_domain(target) for c in self.coefficients])

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            other = TPoly.constant(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.context == other.context and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.context, self.coefficients))

    def format(self, var='t'):
        if not self.coefficients:
            return '0'
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c.is_zero:
                continue
            power = '' if k == 0 else (var if k == 1 else f'{var}^{k}')
            text = c.format()
            single = len(c.terms()) == 1
            if not power:
                body = text if single else f'({text})'
            elif c == 1:
                body = power
            elif c == -1:
                body = f'-{power}'
            elif single:
                body = f'{text}*{power}'
            else:
                body = f'({text})*{power}'
            if parts and body.startswith('-'):
                parts.append(f' - {body[1:]}')
            elif parts:
                parts.append(f' + {body}')
            else:
                parts.append(body)
        return ''.join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f'TPoly({self.format()!r}, {self.context.domain})'


def tpoly_mul(a, b):
    """Exact product of two polynomials in ``t``."""
    return a * b


def tpoly_eval(a, value):
    return a.evaluate(value)
