"""
Golden values and property checks run by ``manage.py selftest``.

Every check returns ``(passed, detail)``; an exception counts as a failure
with the exception text as detail.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from ulrich.choices import BOTT_DUALITY, SHEAF_IDEAL, SHEAF_STRUCTURE
from ulrich.graded import (
    GradedIdealPiece,
    apply_differential,
    class_order,
    differential_corank,
    differential_kernel_witnesses,
    generic_writability_trial,
    hilbert_function_quotient,
    quotient_report,
    quotient_structure_Z,
    trial_rng,
)
from ulrich.linalg import pfaffian, poly_det
from ulrich.matfac import (
    Decomposition,
    build_factorization,
    random_decomposition,
    rank_bound,
    skew_symmetrize_d2,
    verify_determinantal,
)
from ulrich.numerics import (
    CIData,
    CoverSpec,
    binomial_value,
    bott,
    canonical_twist,
    ci_arithmetic_genus,
    ci_cohomology,
    ci_euler_characteristic,
    ext_row,
    ext_table,
    hilbert_poly_ci,
    noic_codim,
    noic_dim,
    normal_h1_bound,
    pushforward_splitting,
    rank1_gap,
    rank2_gap,
    ulrich_degree,
    ulrich_hilbert,
)
from ulrich.polyring import CoefficientDomain, RingContext, TPoly

logger = logging.getLogger(__name__)

XYZW = 'x,y,z,w'

SQUARES_AND_XY = ['x^2', 'y^2', 'z^2', 'w^2', 'x*y']
# with (x+y+z+w)^m appended, the grammar has no parentheses
PURE_CUBES = ['x^3', 'y^3', 'z^3', 'w^3']
PURE_QUARTICS = ['x^4', 'y^4', 'z^4', 'w^4']

INTEGER_J = ['x^3+y*z*w', 'y^3+z*w*x', 'z^3+w*y*x', 'w^3+x*y*z', 'x^2*z']
INTEGER_K = [
    'x^4+x^3*y+x^2*y*z',
    'y^4+y^3*z+y^2*z*w',
    'z^4+z^3*w+z^2*w*x',
    'w^4+w^3*x+w^2*x*y',
    'x*y*z*w+x^2*y^2+x^2*w^2+z^2*w^2+y^2*z^2+y^2*w^2+x^2*y*z',
]

# degree-8 piece of Z[x,y,z,w]/K is cyclic of this prime order; w^8 generates it
INTEGER_K_TORSION = 32105609
REDUCTION_PRIMES = (2, 3, 5, 101)

CORANK_WITNESS = {'x*y*z*v', 'x*y*z*w', 'x*y*v*w', 'x*z*v*w', 'y*z*v*w'}

EXT_ROWS = {
    2: (8, 0, 1, 5, 0, 0),
    3: (9, 0, 1, 6, 0, 0),
    4: (3, 3, 1, 0, 0, 1),
}

FACTORIZATION_SAMPLES = 50
PFAFFIAN_SAMPLES = 20
GENERICITY_SEEDS = 10

_checks = []


@dataclass(frozen=True)
class GoldenItem:
    name: str
    passed: bool
    detail: str = ''


def golden(name):
    """Register a check under ``name``; checks run in registration order."""
    def register(func):
        _checks.append((name, func))
        return func
    return register


def _context(domain, names=XYZW):
    return RingContext.from_names(domain, names)


def power_sum_forms(context, texts, m):
    """``texts`` parsed, followed by ``(x + y + z + w)^m``."""
    total = context.zero
    for gen in context.gens:
        total = total + gen
    return [context.parse(text) for text in texts] + [total ** m]


def spanning_forms(context, m):
    """The five degree-m forms whose squares span degree 2m."""
    if m == 2:
        return [context.parse(text) for text in SQUARES_AND_XY]
    return power_sum_forms(context, PURE_CUBES if m == 3 else PURE_QUARTICS, m)


def _piece(domain, texts, degree, names=XYZW):
    return GradedIdealPiece.from_strings(_context(domain, names), texts, degree)


def _quotient_dim_over_q(m):
    context = _context(CoefficientDomain.rationals())
    report = quotient_report(GradedIdealPiece(context, tuple(spanning_forms(context, m)), 2 * m))
    return report.quotient_dim == 0, f'quotient_dim={report.quotient_dim}'


@golden('quotient_q_quadrics_degree4')
def check_quadrics(top_row):
    return _quotient_dim_over_q(2)


@golden('quotient_q_cubics_degree6')
def check_cubics(top_row):
    return _quotient_dim_over_q(3)


@golden('quotient_q_quartics_degree8')
def check_quartics(top_row):
    return _quotient_dim_over_q(4)


def _integer_structure(texts, degree):
    report = quotient_structure_Z(_piece(CoefficientDomain.integers(), texts, degree))
    return report, f'free_rank={report.free_rank} torsion={list(report.torsion)}'


@golden('quotient_z_I_degree4')
def check_integer_i(top_row):
    report, detail = _integer_structure(SQUARES_AND_XY, 4)
    return report.free_rank == 0 and not report.torsion, detail


@golden('quotient_z_J_degree6')
def check_integer_j(top_row):
    report, detail = _integer_structure(INTEGER_J, 6)
    return report.free_rank == 0 and not report.torsion, detail


@golden('quotient_z_K_degree8')
def check_integer_k(top_row):
    piece = _piece(CoefficientDomain.integers(), INTEGER_K, 8)
    report = quotient_structure_Z(piece)
    order = class_order(piece, piece.context.parse('w^8'))
    reductions = {p: hilbert_function_quotient(piece.over(CoefficientDomain.prime_field(p))) for p in REDUCTION_PRIMES}
    consistent = all(
        reductions[p] == report.free_rank + sum(1 for d in report.torsion if d % p == 0)
        for p in REDUCTION_PRIMES
    )
    passed = (
        report.free_rank == 0
        and report.torsion == (INTEGER_K_TORSION,)
        and order == INTEGER_K_TORSION
        and not any(reductions.values())
        and consistent
    )
    return passed, (
        f'free_rank={report.free_rank} torsion={list(report.torsion)} order(w^8)={order} '
        f'dims={[reductions[p] for p in REDUCTION_PRIMES]}'
    )


@golden('corank5_witness')
def check_corank_witness(top_row):
    names = 'x,y,z,v,w'
    texts = ['x^2', 'y^2', 'z^2', 'v^2', 'w^2']
    report = quotient_report(_piece(CoefficientDomain.rationals(), texts, 4, names), with_basis=True)
    context = _context(CoefficientDomain.rationals(), names)
    forms = [context.parse(text) for text in texts]
    corank = differential_corank(forms)
    witnesses = differential_kernel_witnesses(forms)
    killed = all(apply_differential(forms, vector).is_zero for vector in witnesses)
    passed = set(report.basis) == CORANK_WITNESS and corank == 5 and len(witnesses) == 10 and killed
    return passed, f'basis={sorted(report.basis)} corank={corank}'


@golden('ext_table_rows')
def check_ext_rows(top_row):
    rows = {}
    context = _context(CoefficientDomain.rationals())
    for m in EXT_ROWS:
        rows[m] = ext_table(spanning_forms(context, m), m).row()
    passed = all(rows[m] == EXT_ROWS[m] for m in EXT_ROWS)
    return passed, ' '.join(f'm={m}:{rows[m]}' for m in sorted(rows))


@golden('ext_table_closed_form')
def check_ext_closed_form(top_row):
    for m in EXT_ROWS:
        row = ext_row(m)
        closed = 5 * binomial_value(m + 3, 3) - binomial_value(2 * m + 3, 3) - 7
        if row.h0N != closed or row.ext1 != row.h0N - 3 or row.hom != 1:
            return False, f'm={m}: h0N={row.h0N} closed form {closed}'
    return True, ''


@golden('bott_values')
def check_bott_values(top_row):
    values = (bott(3, 2, 0, top_row), bott(3, -4, 3, top_row), [bott(3, -2, j, top_row) for j in range(4)])
    return values == (10, 1, [0, 0, 0, 0]), f'{values}'


@golden('bott_serre_duality')
def check_serre_duality(top_row):
    for n in range(1, 6):
        for i in range(-12, 13):
            for j in range(n + 1):
                if bott(n, i, j, top_row) != bott(n, -i - n - 1, n - j, top_row):
                    return False, f'h^{j}(P^{n}, O({i})) breaks duality'
    return True, ''


@golden('bott_euler_characteristic')
def check_bott_euler(top_row):
    for n in range(1, 6):
        for i in range(-12, 13):
            chi = sum((-1) ** j * bott(n, i, j, top_row) for j in range(n + 1))
            if chi != binomial_value(i + n, n):
                return False, f'chi(P^{n}, O({i})) = {chi}'
    return True, ''


@golden('ci_cohomology_values')
def check_ci_values(top_row):
    values = (
        ci_cohomology(CIData(3, 2), SHEAF_IDEAL, 2, 0),
        ci_cohomology(CIData(3, 2), SHEAF_STRUCTURE, 2, 0),
        ci_cohomology(CIData(3, 4), SHEAF_STRUCTURE, 4, 1),
    )
    return values == (2, 8, 1), f'{values}'


@golden('ci_hilbert_polynomial')
def check_ci_hilbert(top_row):
    for m in (2, 3, 4):
        ci = CIData(3, m)
        poly = hilbert_poly_ci(ci)
        for t in range(-2 * m - 3, 2 * m + 4):
            if ci_euler_characteristic(ci, SHEAF_IDEAL, m + t) != poly(t):
                return False, f'm={m} t={t}'
    poly = hilbert_poly_ci(CIData(3, 2))
    return poly.degree == 3 and poly.leading_coefficient == Fraction(1, 6), poly.format()


@golden('ci_genus_and_normal_bound')
def check_ci_genus(top_row):
    genera = [ci_arithmetic_genus(CIData(3, m)) for m in (2, 3, 4)]
    bounds = [normal_h1_bound(CIData(3, m)) for m in (2, 3, 4)]
    return genera == [1, 10, 33] and bounds == [1, 10, 34], f'p_a={genera} h1={bounds}'


@golden('counting_inequalities')
def check_counting(top_row):
    passed = (
        all(rank1_gap(m) > 0 for m in range(2, 21))
        and rank2_gap(4, 2) == -5
        and all(rank2_gap(3, m) < 0 for m in (2, 3, 4))
        and all(rank2_gap(3, m) > 0 for m in range(5, 21))
        and [noic_dim(m) for m in (2, 3, 4)] == [35, 75, 135]
        and [noic_codim(m) for m in (2, 3, 4)] == [1, 10, 31]
    )
    return passed, f'noic_dim={[noic_dim(m) for m in (2, 3, 4)]} rank2_gap(4,2)={rank2_gap(4, 2)}'


@golden('cover_invariants')
def check_cover(top_row):
    quartic = CoverSpec(3, 2, 2)
    hilbert = ulrich_hilbert(2, quartic)
    passed = (
        pushforward_splitting(quartic) == [0, -2]
        and pushforward_splitting(CoverSpec(3, 2, 3)) == [0, -2, -4]
        and canonical_twist(quartic) == -2
        and canonical_twist(CoverSpec(3, 4, 2)) == 0
        and ulrich_degree(2, quartic) == 4
        and hilbert(0) == 4
        and all(hilbert(t) == 0 for t in (-1, -2, -3))
    )
    return passed, hilbert.format()


@golden('rank_bounds')
def check_rank_bounds(top_row):
    values = (rank_bound(2, 3, True), rank_bound(3, 2, True), rank_bound(4, 3, False))
    return values == (2, 1, 8), f'{values}'


@golden('random_factorizations_gf101')
def check_random_factorizations(top_row):
    context = RingContext.default(CoefficientDomain.prime_field(101), 4)
    for index in range(FACTORIZATION_SAMPLES):
        m = 1 + index % 3
        s = 2 + (index // 3) % 3
        dec = random_decomposition(context, 2, s, m, trial_rng(0, index))
        factorization = build_factorization(dec)
        if factorization.size != 2 ** (s - 1):
            return False, f'sample {index}: size {factorization.size}'
        r = factorization.size // 2
        if not verify_determinantal(factorization.matrix, TPoly.power_minus(2, dec.b), r):
            return False, f'sample {index}: det(tI - A) != (t^2 - b)^{r}'
    return True, f'{FACTORIZATION_SAMPLES} samples'


@golden('cubic_template_gf7')
def check_cubic_template(top_row):
    context = _context(CoefficientDomain.prime_field(7))
    dec = Decomposition.from_strings(context, 3, 'x', [('y', 'z', 'w')])
    factorization = build_factorization(dec, zeta=2)
    det = poly_det(factorization.matrix, in_t=True)
    return det == TPoly.power_minus(3, dec.b), det.format()


@golden('pfaffian_identity')
def check_pfaffian(top_row):
    context = RingContext.default(CoefficientDomain.prime_field(101), 4)
    for index in range(PFAFFIAN_SAMPLES):
        dec = random_decomposition(context, 2, 3, 2, trial_rng(1, index))
        factorization = build_factorization(dec)
        pf = pfaffian(skew_symmetrize_d2(factorization.matrix).matrix)
        target = TPoly.power_minus(2, dec.b)
        if pf * pf != poly_det(factorization.matrix, in_t=True) or pf not in (target, -target):
            return False, f'sample {index}: pf = {pf.format()}'
    return True, f'{PFAFFIAN_SAMPLES} samples'


@golden('genericity_trials_gf101')
def check_genericity(top_row):
    ratios = []
    for m in (2, 3, 4):
        successes = sum(generic_writability_trial(3, m, trials=1, seed=seed).successes for seed in range(GENERICITY_SEEDS))
        ratios.append(successes)
    return all(count >= GENERICITY_SEEDS - 1 for count in ratios), f'successes={ratios}'


def run_golden_suite(top_row=BOTT_DUALITY, names=None):
    """
    Run the registered checks.

    Args:
        top_row: Bott top-row variant handed to every check
        names: optional subset of check names

    Returns:
        list of GoldenItem in registration order
    """
    items = []
    for name, check in _checks:
        if names and name not in names:
            continue
        try:
            passed, detail = check(top_row)
        except Exception as exc:
            logger.warning(f"Golden check {name} raised {type(exc).__name__}", extra={'check': name})
            passed, detail = False, f'{type(exc).__name__}: {exc}'
        logger.info(f"Golden check {name}: {'pass' if passed else 'FAIL'}", extra={'check': name})
        items.append(GoldenItem(name, bool(passed), detail))
    return items


def golden_names():
    return [name for name, _ in _checks]
