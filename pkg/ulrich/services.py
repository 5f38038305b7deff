"""
Services turning parsed command input into library calls and reports.
"""
import json
import logging

from django.conf import settings
from sympy import nextprime

from .choices import BOTT_DUALITY, PROVENANCE
from .exceptions import ParseError, RootOfUnityError, ValidationError
from .graded import (
    GradedIdealPiece,
    class_order,
    generic_writability_trial,
    quotient_report,
    quotient_structure_Z,
    trial_rng,
)
from .linalg import PolyMatrix, pfaffian, poly_det
from .matfac import (
    Decomposition,
    build_factorization,
    random_decomposition,
    skew_symmetrize_d2,
    verify_determinantal,
    verify_power,
)
from .numerics import (
    CIData,
    CoverSpec,
    bott,
    c2_degree_rank2,
    canonical_twist,
    ci_arithmetic_genus,
    ci_cohomology,
    ci_euler_characteristic,
    counting_inequalities,
    euler_characteristic,
    ext_table,
    hilbert_poly_ci,
    pushforward_splitting,
    ulrich_degree,
    ulrich_hilbert,
)
from .polyring import CoefficientDomain, RingContext, TPoly
from .serializers import (
    BottSerializer,
    CohomologyTableSerializer,
    CountingSerializer,
    CoverSerializer,
    EnvelopeSerializer,
    ExtTableSerializer,
    FactorizationSerializer,
    MatrixInputSerializer,
    PfaffianSerializer,
    QuotientPieceSerializer,
    ReportRenderer,
    TrialSerializer,
    VerificationSerializer,
)

logger = logging.getLogger(__name__)


class InputService:
    """Service for reading domains, rings and polynomials from command options"""

    @staticmethod
    def domain(text, default='q'):
        return CoefficientDomain.parse(text or default)

    @staticmethod
    def context(domain, names=None, nvars=None):
        """Ring context from ``--vars`` (comma separated) or the default ``x0..x{n-1}``."""
        if names:
            return RingContext.from_names(domain, names)
        if nvars:
            return RingContext.default(domain, nvars)
        raise ValidationError('Pass --vars to name the variables')

    @staticmethod
    def read_lines(path):
        """Non-empty lines of a generator file; ``#`` starts a comment."""
        try:
            with open(path, encoding='utf-8') as handle:
                raw = handle.read()
        except OSError as exc:
            raise ValidationError(f'Cannot read {path}: {exc.strerror}')
        lines = []
        for line in raw.splitlines():
            text = line.split('#', 1)[0].strip()
            if text:
                lines.append(text)
        return lines

    @staticmethod
    def polynomials(context, inline=None, path=None):
        texts = list(inline or [])
        if path:
            texts.extend(InputService.read_lines(path))
        return [context.parse(text) for text in texts]

    @staticmethod
    def read_matrix(path):
        """Validated ``--matrix`` payload: rows of strings, a certificate, or a factorize envelope."""
        try:
            with open(path, encoding='utf-8') as handle:
                payload = json.load(handle)
        except OSError as exc:
            raise ValidationError(f'Cannot read {path}: {exc.strerror}')
        except json.JSONDecodeError as exc:
            raise ParseError(f'Invalid JSON in {path}: {exc.msg}', position=exc.pos)
        if isinstance(payload, dict) and isinstance(payload.get('result'), dict):
            # factorize --json output
            payload = payload['result']
        serializer = MatrixInputSerializer(data=payload)
        if not serializer.is_valid():
            raise ValidationError(f'Invalid matrix file {path}: {json.dumps(serializer.errors)}')
        return serializer.validated_data


class GradedService:
    """Service for graded ideal pieces and genericity trials"""

    @staticmethod
    def hilbert(context, generators, degree, with_basis=False):
        piece = GradedIdealPiece(context, tuple(generators), degree)
        if not context.domain.is_field:
            raise ValidationError('hilb needs a field; use quotient-z over Z')
        report = quotient_report(piece, with_basis=with_basis)
        logger.info(
            f"Quotient dimension {report.quotient_dim} in degree {degree}",
            extra={'degree': degree, 'quotient_dim': report.quotient_dim},
        )
        return QuotientPieceSerializer(report).data

    @staticmethod
    def quotient_z(context, generators, degree, checks=()):
        piece = GradedIdealPiece(context, tuple(generators), degree)
        data = dict(QuotientPieceSerializer(quotient_structure_Z(piece)).data)
        if checks:
            data['class_orders'] = {poly.format(): class_order(piece, poly) for poly in checks}
        return data

    @staticmethod
    def generic_check(n, m, domain, trials, seed):
        return TrialSerializer(generic_writability_trial(n, m, domain, trials, seed)).data


class FactorizationService:
    """Service for building and checking cyclic matrix factorizations"""

    @staticmethod
    def prime_with_roots(d, start=None):
        """Smallest prime ``p >= start`` with ``d | p - 1``."""
        p = start or getattr(settings, 'ULRICH_DEFAULT_PRIME', 101)
        if p < 2 or (p - 1) % d:
            p = nextprime(p)
        while (p - 1) % d:
            p = nextprime(p)
        return p

    @staticmethod
    def field_for(d, field_text):
        """The requested field, or a prime field carrying d-th roots of unity when none was given."""
        if field_text:
            return CoefficientDomain.parse(field_text)
        if d <= 2:
            return CoefficientDomain.rationals()
        return CoefficientDomain.prime_field(FactorizationService.prime_with_roots(d))

    @staticmethod
    def zeta_for(domain, d, zeta=None):
        if zeta is not None or d <= 2:
            return zeta
        zeta = domain.primitive_root_of_unity(d)
        if zeta is None:
            raise RootOfUnityError(f'{domain} has no primitive {d}-th root of unity')
        return zeta

    @staticmethod
    def decomposition(context, d, power_text=None, product_texts=(), random_spec=None, seed=0):
        if random_spec is not None:
            s, m = random_spec
            return random_decomposition(context, d, s, m, trial_rng(seed, 0))
        products = [[part.strip() for part in text.split(',')] for text in product_texts]
        return Decomposition.from_strings(context, d, power_text, products)

    @staticmethod
    def determinantal_check(matrix, d, b):
        """``det(tI - A) == (t^d - b)^(size/d)`` when the size allows expansion, else None."""
        limit = getattr(settings, 'ULRICH_MAX_DET_SIZE', 12)
        if matrix.size % d or matrix.size > limit:
            return None
        return verify_determinantal(matrix, TPoly.power_minus(d, b), matrix.size // d)

    @staticmethod
    def factorize(dec, zeta=None):
        factorization = build_factorization(dec, zeta)
        check = FactorizationService.determinantal_check(factorization.matrix, dec.d, dec.b)
        determinantal = None if check is None else check.verified
        return factorization, FactorizationSerializer(
            factorization, context={'determinantal': determinantal}
        ).data

    @staticmethod
    def verify(context, d, b, rows, r=None):
        """
        Check a claimed factorization.

        Returns:
            (verified, report data)
        """
        matrix = PolyMatrix.from_strings(context, rows)
        power = verify_power(matrix, d, b)
        determinantal = None
        limit = getattr(settings, 'ULRICH_MAX_DET_SIZE', 12)
        if matrix.size <= limit and (r is not None or matrix.size % d == 0):
            r = r if r is not None else matrix.size // d
            determinantal = verify_determinantal(matrix, TPoly.power_minus(d, b), r)
        verified = power.verified and (determinantal is None or determinantal.verified)
        data = VerificationSerializer({
            'd': d,
            'size': matrix.size,
            'r': r,
            'b': b.format(),
            'power': power.verified,
            'power_mismatch': power.mismatch,
            'determinantal': None if determinantal is None else determinantal.verified,
            'determinantal_mismatch': None if determinantal is None else determinantal.mismatch,
            'verified': verified,
        }).data
        return verified, data

    @staticmethod
    def pfaffian(context, forms):
        """
        Skew form of the 4x4 doubling of ``p0^2 + p1*p2 + p3*p4`` and its Pfaffian.

        Returns:
            (pf == +-(t^2 - b), report data)
        """
        if len(forms) != 5:
            raise ValidationError(f'pfaffian takes five forms p0..p4, got {len(forms)}')
        p0, p1, p2, p3, p4 = forms
        factorization = build_factorization(Decomposition(context, 2, p0, [(p1, p2), (p3, p4)]))
        skew = skew_symmetrize_d2(factorization.matrix)
        pf = pfaffian(skew.matrix)
        target = TPoly.power_minus(2, factorization.b)
        sign = 1 if pf == target else (-1 if pf == -target else None)
        squares_to_det = pf * pf == poly_det(factorization.matrix, in_t=True)
        data = PfaffianSerializer({
            'b': factorization.b.format(),
            'A': factorization.matrix.to_strings(),
            'skew': skew.matrix.to_strings(),
            'row_order': list(skew.row_order),
            'signs': list(skew.signs),
            'pfaffian': pf.format(),
            'sign': sign,
            'squares_to_det': squares_to_det,
        }).data
        return sign is not None and squares_to_det, data


class NumericsService:
    """Service for closed-form cohomology and counting"""

    @staticmethod
    def bott(n, i, top_row=BOTT_DUALITY):
        return BottSerializer({
            'n': n,
            'i': i,
            'top_row': top_row,
            'h': [bott(n, i, j, top_row) for j in range(n + 1)],
            'euler_characteristic': euler_characteristic(n, i, top_row),
        }).data

    @staticmethod
    def cover(n, m, d, r=1):
        cover = CoverSpec(n, m, d)
        hilbert = ulrich_hilbert(r, cover)
        return CoverSerializer({
            'n': n,
            'm': m,
            'd': d,
            'r': r,
            'pushforward': pushforward_splitting(cover),
            'canonical_twist': canonical_twist(cover),
            'ulrich_degree': ulrich_degree(r, cover),
            'ulrich_h0': int(hilbert(0)),
            'ulrich_hilbert': hilbert.format(),
            'c2_degree': c2_degree_rank2(cover) if d == 2 else None,
        }).data

    @staticmethod
    def ci(n, m, sheaf, i):
        ci = CIData(n, m)
        poly = hilbert_poly_ci(ci)
        return CohomologyTableSerializer({
            'n': n,
            'm': m,
            'sheaf': sheaf,
            'i': i,
            'h': [ci_cohomology(ci, sheaf, i, j) for j in range(n + 1)],
            'euler_characteristic': ci_euler_characteristic(ci, sheaf, i),
            'hilbert_poly': poly.format(),
            'hilbert_binomial': [str(c) for c in poly.binomial_coefficients()],
            'arithmetic_genus': ci_arithmetic_genus(ci),
        }).data

    @staticmethod
    def ext_table(forms, m=None):
        table = ext_table(forms, m)
        data = ExtTableSerializer({**table.__dict__, 'valid': table.valid}).data
        return table, data

    @staticmethod
    def counts(n, m):
        return CountingSerializer(counting_inequalities(n, m)).data


class ReportService:
    """Service for wrapping results in the versioned envelope and rendering them"""

    @staticmethod
    def envelope(command, result):
        return EnvelopeSerializer({
            'command': command,
            'provenance': PROVENANCE.get(command, ''),
            'result': result,
        }).data

    @staticmethod
    def render_json(envelope):
        return ReportRenderer().render(envelope).decode('ascii')

    @staticmethod
    def render_text(envelope):
        lines = [f"command: {envelope['command']}", f"provenance: {envelope['provenance']}"]
        lines.extend(_text_lines(envelope['result'], ''))
        return '\n'.join(lines) + '\n'


def _scalar(value):
    if value is True:
        return 'true'
    if value is False:
        return 'false'
    if value is None:
        return 'null'
    return str(value)


def _text_lines(data, prefix):
    for key, value in data.items():
        label = f'{prefix}{key}'
        if isinstance(value, dict):
            yield from _text_lines(value, f'{label}.')
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            yield f'{label}:'
            for row in value:
                yield '  [' + ', '.join(_scalar(x) for x in row) + ']'
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            yield f'{label}:'
            for item in value:
                yield '  ' + ', '.join(f'{k}={_scalar(v)}' for k, v in item.items())
        elif isinstance(value, list):
            yield f'{label}: ' + ', '.join(_scalar(x) for x in value)
        else:
            yield f'{label}: {_scalar(value)}'
