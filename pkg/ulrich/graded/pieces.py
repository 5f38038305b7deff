import logging
from dataclasses import dataclass

from ulrich.exceptions import DegreeMismatchError, ValidationError
from ulrich.linalg import FieldMatrix, IntMatrix
from ulrich.polyring import monomial_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedIdealPiece:
    """
    The degree-``target_degree`` piece of the ideal spanned by homogeneous generators.

    Zero generators are allowed and contribute nothing.
    """
    context: object
    generators: tuple
    target_degree: int

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        if self.target_degree < 0:
            raise ValidationError('Target degree must be non-negative')
        for g in self.generators:
            if g.context != self.context:
                raise ValidationError(f'Generator {g} lives in another ring')
            if not g.is_homogeneous():
                raise DegreeMismatchError(f'Generator {g} is not homogeneous')
            if g.degree() > self.target_degree:
                raise DegreeMismatchError(
                    f'Generator {g} has degree {g.degree()} above the target degree {self.target_degree}'
                )

    @classmethod
    def from_strings(cls, context, texts, target_degree):
        return cls(context, tuple(context.parse(text) for text in texts), target_degree)

    @property
    def nvars(self):
        return self.context.nvars

    @property
    def domain(self):
        return self.context.domain

    @property
    def ambient_dim(self):
        return len(self.basis)

    @property
    def basis(self):
        return monomial_basis(self.nvars, self.target_degree)

    def over(self, domain):
        """The same generators with coefficients mapped into ``domain``."""
        context = self.context.with_domain(domain)
        return GradedIdealPiece(context, tuple(g.map_domain(domain) for g in self.generators), self.target_degree)

    def with_generator(self, generator):
        return GradedIdealPiece(self.context, self.generators + (generator,), self.target_degree)

    def vector(self, poly):
        """Coordinates of a degree-``target_degree`` polynomial in the monomial basis."""
        index = {exps: i for i, exps in enumerate(self.basis)}
        vector = [0] * len(index)
        for exps, c in poly.terms():
            if exps not in index:
                raise DegreeMismatchError(f'{poly} is not homogeneous of degree {self.target_degree}')
            vector[index[exps]] = c
        return vector


def multiplication_columns(piece):
    """Columns ``g * mu`` over generators, then complementary monomials ``mu``."""
    basis = piece.basis
    index = {exps: i for i, exps in enumerate(basis)}
    columns = []
    for g in piece.generators:
        if g.is_zero:
            continue
        terms = g.terms()
        for mu in monomial_basis(piece.nvars, piece.target_degree - g.degree()):
            column = [0] * len(basis)
            for exps, c in terms:
                column[index[tuple(a + b for a, b in zip(exps, mu))]] = c
            columns.append(column)
    return columns


def multiplication_matrix(piece):
    """
    Matrix whose column space is the ideal piece.

    Rows follow ``monomial_basis(nvars, target_degree)``.

    Returns:
        FieldMatrix over Q or F_p, IntMatrix over Z
    """
    columns = multiplication_columns(piece)
    nrows = piece.ambient_dim
    rows = tuple(zip(*columns)) if columns else tuple(() for _ in range(nrows))
    logger.debug(
        f"Multiplication matrix {nrows}x{len(columns)} in degree {piece.target_degree}",
        extra={'rows': nrows, 'cols': len(columns), 'degree': piece.target_degree},
    )
    if piece.domain.is_field:
        return FieldMatrix(piece.domain, nrows, len(columns), rows)
    return IntMatrix(nrows, len(columns), rows)
