"""
Sparse multivariate polynomials over a fixed ring context.

A ``RingContext`` pins the coefficient domain and the variable names; a
``MultiPoly`` is an immutable value bound to one context. Arithmetic is carried
by sympy's sparse ``PolyRing`` under graded-lex order.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from ulrich.exceptions import DomainMismatchError, ValidationError
from .domains import CoefficientDomain

logger = logging.getLogger(__name__)

VARIABLE_NAME = re.compile(r'[a-zA-Z][a-zA-Z0-9]*\Z')
# the variable of characteristic polynomials
RESERVED_NAMES = frozenset({'t'})


@dataclass(frozen=True)
class RingContext:
    """Coefficient domain plus ordered variable names."""
    domain: CoefficientDomain
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, 'names', names)
        if not names:
            raise ValidationError('A ring needs at least one variable')
        for name in names:
            if not VARIABLE_NAME.match(name):
                raise ValidationError(f'Invalid variable name {name!r}')
            if name in RESERVED_NAMES:
                raise ValidationError(f'Variable name {name!r} is reserved for polynomials in t')
        if len(set(names)) != len(names):
            raise ValidationError(f'Duplicate variable names in {",".join(names)}')

    @classmethod
    def default(cls, domain, nvars):
        return cls(domain, tuple(f'x{i}' for i in range(nvars)))

    @classmethod
    def from_names(cls, domain, names):
        if isinstance(names, str):
            names = [name.strip() for name in names.split(',') if name.strip()]
        return cls(domain, tuple(names))

    @property
    def nvars(self):
        return len(self.names)

    @cached_property
    def poly_ring(self):
        return PolyRing(self.names, self.domain.sympy_domain, grlex)

    @cached_property
    def index(self):
        return {name: i for i, name in enumerate(self.names)}

    def with_domain(self, domain):
        return RingContext(domain, self.names)

    def wrap(self, element):
        return MultiPoly(self, element)

    @property
    def zero(self):
        return MultiPoly(self, self.poly_ring.zero)

    @property
    def one(self):
        return MultiPoly(self, self.poly_ring.one)

    def constant(self, value):
        return self.from_terms({(0,) * self.nvars: value})

    def variable(self, which):
        i = self.index[which] if isinstance(which, str) else which
        exps = [0] * self.nvars
        exps[i] = 1
        return self.from_terms({tuple(exps): 1})

    @property
    def gens(self):
        return tuple(self.variable(i) for i in range(self.nvars))

    def monomial(self, exps, coefficient=1):
        return self.from_terms({tuple(exps): coefficient})

    def from_terms(self, terms):
        """Build a polynomial from ``{exponent tuple: int | Fraction}``; zero terms are dropped."""
        domain = self.domain
        data = {}
        for exps, value in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValidationError(f'Bad exponent vector {exps} for {self.nvars} variables')
            element = domain.element(value)
            if element:
                data[exps] = element
        return MultiPoly(self, self.poly_ring.from_dict(data) if data else self.poly_ring.zero)

    def parse(self, text):
        from .parser import parse_poly
        return parse_poly(text, self)


class MultiPoly:
    """Immutable multivariate polynomial bound to a ``RingContext``."""
    __slots__ = ('context', '_element')

    def __init__(self, context, element):
        self.context = context
        self._element = element

    @property
    def domain(self):
        return self.context.domain

    @property
    def nvars(self):
        return self.context.nvars

    @property
    def is_zero(self):
        return not self._element

    def __bool__(self):
        return bool(self._element)

    def terms(self):
        """``[(exponents, coefficient)]`` in descending graded-lex order."""
        to_python = self.domain.to_python
        items = [(tuple(exps), to_python(c)) for exps, c in self._element.items()]
        items.sort(key=lambda item: (sum(item[0]), item[0]), reverse=True)
        return items

    def as_dict(self):
        return dict(self.terms())

    def coefficient(self, exps):
        c = self._element.get(tuple(exps))
        return self.domain.to_python(c) if c is not None else 0

    def monomials(self):
        return [exps for exps, _ in self.terms()]

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._element:
            return -1
        return max(sum(exps) for exps in self._element.keys())

    def is_homogeneous(self, deg=None):
        degrees = {sum(exps) for exps in self._element.keys()}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return deg is None or degrees == {deg}

    def is_constant(self):
        return all(not any(exps) for exps in self._element.keys())

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.context != self.context:
                if other.context.names == self.context.names and other.domain.tag == self.domain.tag:
                    raise DomainMismatchError(
                        f'Modulus mismatch: {self.domain} versus {other.domain}'
                    )
                raise DomainMismatchError(
                    f'Cannot combine polynomials over {self.domain}[{",".join(self.context.names)}] '
                    f'and {other.domain}[{",".join(other.context.names)}]'
                )
            return other._element
        if isinstance(other, (int, Fraction)):
            return self.context.constant(other)._element
        return NotImplemented

    def __add__(self, other):
        element = self._coerce(other)
        if element is NotImplemented:
            return NotImplemented
        return MultiPoly(self.context, self._element + element)

    __radd__ = __add__

    def __sub__(self, other):
        element = self._coerce(other)
        if element is NotImplemented:
            return NotImplemented
        return MultiPoly(self.context, self._element - element)

    def __rsub__(self, other):
        element = self._coerce(other)
        if element is NotImplemented:
            return NotImplemented
        return MultiPoly(self.context, element - self._element)

    def __mul__(self, other):
        element = self._coerce(other)
        if element is NotImplemented:
            return NotImplemented
        return MultiPoly(self.context, self._element * element)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(self.context, -self._element)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValidationError('Exponent must be a non-negative integer')
        return MultiPoly(self.context, self._element ** k)

    def power(self, k):
        return self ** k

    def scale(self, value):
        return self * self.context.constant(value)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.context.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.context == other.context and self._element == other._element

    def __hash__(self):
        return hash((self.context, frozenset(self.terms())))

    def map_domain(self, target):
        """
        Re-read the coefficients in another domain.

        Integer and rational coefficients reduce into prime fields; prime-field
        coefficients lift to their representatives in ``[0, p)``.

        Raises:
            CoefficientDomainError: a coefficient has no image in ``target``
        """
        context = self.context.with_domain(target)
        return context.from_terms({exps: target.normalize(c) for exps, c in self.terms()})

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of ``int``/``Fraction`` values."""
        if len(point) != self.nvars:
            raise ValidationError(f'Expected {self.nvars} coordinates, got {len(point)}')
        total = 0
        for exps, c in self.terms():
            value = c
            for x, e in zip(point, exps):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return self.domain.normalize(total)

    def format(self):
        return format_poly(self)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f'MultiPoly({format_poly(self)!r}, {self.domain})'


def _format_coefficient(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_monomial(exps, names):
    return '*'.join(name if e == 1 else f'{name}^{e}' for name, e in zip(names, exps) if e)


def format_poly(poly):
    """Canonical text: graded-lex descending, ``c*x^e`` terms, explicit ``-`` separators."""
    terms = poly.terms()
    if not terms:
        return '0'
    parts = []
    for position, (exps, c) in enumerate(terms):
        negative = c < 0
        magnitude = -c if negative else c
        monomial = format_monomial(exps, poly.context.names)
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f'{_format_coefficient(magnitude)}*{monomial}'
        if position == 0:
            parts.append(f'-{body}' if negative else body)
        else:
            parts.append(f' - {body}' if negative else f' + {body}')
    return ''.join(parts)


def poly_arith(a, b, op):
    """
    Add, subtract or multiply two polynomials of one ring.

    Args:
        a: left operand
        b: right operand
        op: ``'add'``, ``'sub'`` or ``'mul'``

    Raises:
        DomainMismatchError: operands live in different rings
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValidationError(f'Unknown operation {op!r}')


def monomial_basis(nvars, deg):
    """
    All exponent vectors of total degree ``deg`` in ``nvars`` variables.

    Ordered graded-lex descending: ``x0^deg`` first, ``x_{n-1}^deg`` last.
    """
    if nvars < 1:
        raise ValidationError('monomial_basis needs at least one variable')
    if deg < 0:
        raise ValidationError('monomial_basis needs a non-negative degree')
    basis = []
    for choice in combinations_with_replacement(range(nvars), deg):
        exps = [0] * nvars
        for i in choice:
            exps[i] += 1
        basis.append(tuple(exps))
    return basis
