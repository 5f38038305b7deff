"""
Normal-bundle and ext dimensions for rank-2 Ulrich bundles on double solids.

For five forms ``p0, .., p4`` of degree m in four variables, q is the
dimension of the degree-2m piece of ``k[x] / (p0, .., p4)``. The table holds
for m = 2, 3, 4 and is exact when q = 0.
"""
import logging
from dataclasses import dataclass

from ulrich.exceptions import ValidationError
from ulrich.graded import differential_corank
from .complete_intersections import CIData, structure_cohomology
from .hilbert import binomial_value

logger = logging.getLogger(__name__)

TABLE_DEGREES = (2, 3, 4)
AMBIENT_VARIABLES = 4


@dataclass(frozen=True)
class ExtTable:
    m: int
    q: int
    h0N: int
    h1N: int
    hom: int
    ext1: int
    ext2: int
    ext3: int

    @property
    def valid(self):
        """True when the forms generate every form of degree 2m."""
        return self.q == 0

    def row(self):
        return (self.h0N, self.h1N, self.hom, self.ext1, self.ext2, self.ext3)


def ext_row(m, q=0):
    """
    The table row for degree m and quotient dimension q.

    Raises:
        ValidationError: m outside {2, 3, 4} or negative q
    """
    if m not in TABLE_DEGREES:
        raise ValidationError(f'The ext table is defined for m in {TABLE_DEGREES}, got {m}')
    if q < 0:
        raise ValidationError('q must be non-negative')
    h1_structure = structure_cohomology(CIData(3, m), m, 1)
    h1N = q + 3 * h1_structure
    h0N = 5 * binomial_value(m + 3, 3) - binomial_value(2 * m + 3, 3) - 7 + q
    ext1 = h0N - 3
    if m == 4:
        ext2, ext3 = ext1, 1
    else:
        ext2, ext3 = h1N, 0
    return ExtTable(m=m, q=q, h0N=h0N, h1N=h1N, hom=1, ext1=ext1, ext2=ext2, ext3=ext3)


def ext_table(forms, m=None):
    """
    Ext table for five forms of degree m in four variables.

    Args:
        forms: ``p0, .., p4``
        m: the degree, inferred from the forms when omitted

    Raises:
        ValidationError: wrong number of variables or forms
        CharacteristicError: characteristic 2
    """
    forms = tuple(forms)
    if forms and forms[0].nvars != AMBIENT_VARIABLES:
        raise ValidationError(f'The ext table needs forms in {AMBIENT_VARIABLES} variables')
    if m is None:
        degrees = {f.degree() for f in forms if not f.is_zero}
        m = degrees.pop() if len(degrees) == 1 else None
        if m is None:
            raise ValidationError('Cannot infer a common degree from the forms')
    q = differential_corank(forms, m)
    table = ext_row(m, q)
    logger.info(
        f"Ext table for m={m}: q={q}, row {table.row()}",
        extra={'m': m, 'q': q},
    )
    return table
