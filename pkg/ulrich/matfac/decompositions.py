import logging
from dataclasses import dataclass

from ulrich.exceptions import DegreeMismatchError, ValidationError
from ulrich.graded import random_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """
    ``b = p0^d + sum_i prod_j p_ij`` with every form of one degree m.

    ``power_term`` None stands for ``p0 = 0``. ``s`` counts the power slot
    plus the product terms.
    """
    context: object
    d: int
    power_term: object
    product_terms: tuple

    def __post_init__(self):
        object.__setattr__(self, 'product_terms', tuple(tuple(term) for term in self.product_terms))
        if self.d < 1:
            raise ValidationError('The covering degree d must be positive')
        for term in self.product_terms:
            if len(term) != self.d:
                raise ValidationError(f'Each product term needs {self.d} factors, got {len(term)}')
        self.check_degrees()

    @classmethod
    def from_strings(cls, context, d, power_term=None, product_terms=()):
        power = context.parse(power_term) if power_term else None
        products = [tuple(context.parse(text) for text in term) for term in product_terms]
        return cls(context, d, power, products)

    @property
    def s(self):
        return 1 + len(self.product_terms)

    @property
    def forms(self):
        forms = [self.power_term] if self.power_term is not None else []
        for term in self.product_terms:
            forms.extend(term)
        return forms

    @property
    def degree(self):
        """The common degree m of the nonzero forms, None if all vanish."""
        return self.check_degrees()

    def check_degrees(self):
        degrees = set()
        for form in self.forms:
            if form.context != self.context:
                raise ValidationError(f'{form} lives in another ring')
            if form.is_zero:
                continue
            if not form.is_homogeneous():
                raise DegreeMismatchError(f'{form} is not homogeneous')
            degrees.add(form.degree())
        if len(degrees) > 1:
            raise DegreeMismatchError(f'Forms have different degrees {sorted(degrees)}')
        return degrees.pop() if degrees else None

    @property
    def power(self):
        return self.power_term if self.power_term is not None else self.context.zero

    @property
    def b(self):
        total = self.power ** self.d
        for term in self.product_terms:
            product = self.context.one
            for form in term:
                product = product * form
            total = total + product
        return total


def random_decomposition(context, d, s, m, rng):
    """Seeded decomposition with a power term and ``s - 1`` product terms of degree-m forms."""
    if s < 1:
        raise ValidationError('s must be at least 1')
    power = random_form(context, m, rng)
    products = [tuple(random_form(context, m, rng) for _ in range(d)) for _ in range(s - 1)]
    return Decomposition(context, d, power, products)
