"""
Genericity checks for writing a form as ``p0^2 + p1*p2 + p3*p4``.

The differential of ``(p0, .., p4) -> p0^2 + p1*p2 + p3*p4`` at a point sends
``(q0, .., q4)`` to ``2*p0*q0 + p2*q1 + p1*q2 + p4*q3 + p3*q4``. Away from
characteristic 2 its image is the degree-2m piece of the ideal
``(p0, .., p4)``, so surjectivity at one point certifies that a general
form of degree 2m has such an expression.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from ulrich.exceptions import CharacteristicError, DegreeMismatchError, ValidationError
from ulrich.polyring import CoefficientDomain, RingContext, monomial_basis
from .pieces import GradedIdealPiece
from .quotients import hilbert_function_quotient

logger = logging.getLogger(__name__)

FORM_COUNT = 5
RATIONAL_COEFFICIENT_BOUND = 10


def _common_degree(forms, degree):
    degrees = {f.degree() for f in forms if not f.is_zero}
    if any(not f.is_homogeneous() for f in forms):
        raise DegreeMismatchError('Forms must be homogeneous')
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatchError(f'Forms have different degrees {sorted(degrees)}')
    return degrees.pop() if degrees else None


def forms_piece(forms, degree=None):
    """The degree-2m piece of the ideal generated by five forms of degree m."""
    forms = tuple(forms)
    if len(forms) != FORM_COUNT:
        raise ValidationError(f'Expected {FORM_COUNT} forms, got {len(forms)}')
    m = _common_degree(forms, degree)
    if m is None:
        raise ValidationError('All forms are zero; pass the degree explicitly')
    domain = forms[0].domain
    if not domain.is_field:
        raise ValidationError('The differential is studied over a field')
    if domain.characteristic == 2:
        raise CharacteristicError('Characteristic 2 is excluded')
    return GradedIdealPiece(forms[0].context, forms, 2 * m)


def differential_corank(forms, degree=None):
    """Codimension of the image of the differential at ``forms``."""
    return hilbert_function_quotient(forms_piece(forms, degree))


def differential_weights(forms):
    """Coefficients of ``(q0, .., q4)`` in the differential: ``(2*p0, p2, p1, p4, p3)``."""
    p0, p1, p2, p3, p4 = forms
    return (p0.scale(2), p2, p1, p4, p3)


def differential_kernel_witnesses(forms):
    """
    The ten kernel vectors obtained from pairs of coordinates.

    For ``i < j`` the vector with ``q_i = w_j``, ``q_j = -w_i`` is killed by the
    differential, ``w`` being ``differential_weights(forms)``.
    """
    forms = tuple(forms)
    if len(forms) != FORM_COUNT:
        raise ValidationError(f'Expected {FORM_COUNT} forms, got {len(forms)}')
    weights = differential_weights(forms)
    zero = forms[0].context.zero
    witnesses = []
    for i in range(FORM_COUNT):
        for j in range(i + 1, FORM_COUNT):
            vector = [zero] * FORM_COUNT
            vector[i] = weights[j]
            vector[j] = -weights[i]
            witnesses.append(tuple(vector))
    return witnesses


def apply_differential(forms, vector):
    """``2*p0*q0 + p2*q1 + p1*q2 + p4*q3 + p3*q4``."""
    total = forms[0].context.zero
    for w, q in zip(differential_weights(forms), vector):
        total = total + w * q
    return total


def jacobian_surjective(forms, degree=None):
    """
    Whether the differential at ``forms`` is onto the forms of degree 2m.

    Args:
        forms: five homogeneous forms of a common degree m
        degree: m, needed only when every form is zero

    Raises:
        CharacteristicError: characteristic 2
    """
    forms = tuple(forms)
    if forms and all(f.is_zero for f in forms):
        if forms[0].domain.characteristic == 2:
            raise CharacteristicError('Characteristic 2 is excluded')
        return False
    return differential_corank(forms, degree) == 0


def random_form(context, degree, rng):
    """
    A form with independent random coefficients on every monomial.

    Prime fields draw uniformly from ``[0, p)``; Q draws integers from
    ``[-10, 10]``.
    """
    domain = context.domain
    terms = {}
    for exps in monomial_basis(context.nvars, degree):
        if domain.is_prime_field:
            terms[exps] = rng.randrange(domain.modulus)
        else:
            terms[exps] = rng.randint(-RATIONAL_COEFFICIENT_BOUND, RATIONAL_COEFFICIENT_BOUND)
    return context.from_terms(terms)


def trial_rng(seed, index):
    """Per-trial generator derived from ``(seed, index)`` only."""
    return random.Random(f'{seed}:{index}')


@dataclass(frozen=True)
class TrialReport:
    n: int
    m: int
    domain: str
    seed: int
    trials: int
    successes: int
    failures: tuple

    @property
    def ratio(self):
        return Fraction(self.successes, self.trials)


def generic_writability_trial(n, m, domain=None, trials=20, seed=0):
    """
    Sample five random forms of degree m in n + 1 variables and test surjectivity.

    Args:
        n: projective dimension (the claims concern n = 3)
        m: degree of the forms
        domain: a prime field or Q; defaults to ``GF(ULRICH_DEFAULT_PRIME)``
        trials: number of samples, at least 1
        seed: base seed; trial ``i`` uses ``random.Random(f"{seed}:{i}")``

    Returns:
        TrialReport
    """
    if domain is None:
        domain = CoefficientDomain.prime_field(getattr(settings, 'ULRICH_DEFAULT_PRIME', 101))
    if trials < 1:
        raise ValidationError('At least one trial is required')
    if n < 1 or m < 1:
        raise ValidationError('n and m must be positive')
    if not domain.is_field:
        raise ValidationError('Genericity trials need Q or a prime field')
    if domain.characteristic == 2:
        raise CharacteristicError('Characteristic 2 is excluded')
    context = RingContext.default(domain, n + 1)
    successes = 0
    failures = []
    for index in range(trials):
        rng = trial_rng(seed, index)
        forms = [random_form(context, m, rng) for _ in range(FORM_COUNT)]
        if jacobian_surjective(forms, m):
            successes += 1
        else:
            failures.append(index)
    logger.info(
        f"Genericity trial n={n} m={m} over {domain}: {successes}/{trials}",
        extra={'n': n, 'm': m, 'seed': seed, 'successes': successes, 'trials': trials},
    )
    return TrialReport(n, m, str(domain), seed, trials, successes, tuple(failures))
