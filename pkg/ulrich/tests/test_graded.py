import random

from django.test import SimpleTestCase

from ulrich.exceptions import CharacteristicError, DegreeMismatchError, ValidationError
from ulrich.graded import (
    GradedIdealPiece,
    apply_differential,
    class_order,
    differential_corank,
    differential_kernel_witnesses,
    generic_writability_trial,
    hilbert_function_quotient,
    jacobian_surjective,
    multiplication_matrix,
    quotient_basis,
    quotient_report,
    quotient_structure_Z,
    random_form,
    trial_rng,
)
from ulrich.golden import INTEGER_J, INTEGER_K, INTEGER_K_TORSION
from ulrich.linalg import IntMatrix, matrix_rank
from ulrich.polyring import CoefficientDomain, RingContext, format_monomial

SQUARES_AND_XY = ['x^2', 'y^2', 'z^2', 'w^2', 'x*y']


class GradedIdealPieceTest(SimpleTestCase):
    """Tests for graded ideal pieces over fields"""

    def setUp(self):
        self.qq = RingContext.from_names(CoefficientDomain.rationals(), 'x,y,z,w')
        self.plane = RingContext.from_names(CoefficientDomain.rationals(), 'x,y')

    def test_small_quotient(self):
        """Test (x^2, y^2) leaves xy in degree 2 and nothing in degree 3"""
        piece = GradedIdealPiece.from_strings(self.plane, ['x^2', 'y^2'], 2)
        self.assertEqual(hilbert_function_quotient(piece), 1)
        self.assertEqual(quotient_basis(piece), [(1, 1)])
        piece = GradedIdealPiece.from_strings(self.plane, ['x^2', 'y^2'], 3)
        self.assertEqual(hilbert_function_quotient(piece), 0)

    def test_quadrics_vanish_in_degree_four(self):
        """Test (x^2, y^2, z^2, w^2, xy) fills degree 4"""
        report = quotient_report(GradedIdealPiece.from_strings(self.qq, SQUARES_AND_XY, 4))
        self.assertEqual(report.quotient_dim, 0)
        self.assertEqual(report.ambient_dim, 35)
        self.assertEqual(report.ideal_dim + report.quotient_dim, report.ambient_dim)
        self.assertTrue(report.vanishes)

    def test_corank_five_witness(self):
        """Test the squarefree quartics span the quotient by five squares"""
        context = RingContext.from_names(CoefficientDomain.rationals(), 'x,y,z,v,w')
        piece = GradedIdealPiece.from_strings(context, ['x^2', 'y^2', 'z^2', 'v^2', 'w^2'], 4)
        basis = {format_monomial(exps, context.names) for exps in quotient_basis(piece)}
        self.assertEqual(basis, {'x*y*z*v', 'x*y*z*w', 'x*y*v*w', 'x*z*v*w', 'y*z*v*w'})
        self.assertEqual(hilbert_function_quotient(piece), 5)

    def test_basis_size_matches_dimension(self):
        """Test quotient_basis has hilbert_function_quotient elements on seeded forms"""
        rng = random.Random(4)
        gf = self.qq.with_domain(CoefficientDomain.prime_field(101))
        for _ in range(5):
            gens = tuple(random_form(gf, 2, rng) for _ in range(3))
            piece = GradedIdealPiece(gf, gens, 3)
            self.assertEqual(len(quotient_basis(piece)), hilbert_function_quotient(piece))

    def test_monotone_in_generators(self):
        """Test adding a generator never increases the quotient dimension"""
        rng = random.Random(8)
        gf = self.qq.with_domain(CoefficientDomain.prime_field(101))
        piece = GradedIdealPiece(gf, (), 3)
        previous = hilbert_function_quotient(piece)
        self.assertEqual(previous, 20)
        for _ in range(6):
            piece = piece.with_generator(random_form(gf, rng.choice([1, 2, 3]), rng))
            current = hilbert_function_quotient(piece)
            self.assertLessEqual(current, previous)
            previous = current

    def test_permutation_invariance(self):
        """Test generator order does not change the report"""
        gens = list(SQUARES_AND_XY[:3]) + ['x*z']
        first = quotient_report(GradedIdealPiece.from_strings(self.qq, gens, 3), with_basis=True)
        second = quotient_report(GradedIdealPiece.from_strings(self.qq, gens[::-1], 3), with_basis=True)
        self.assertEqual(first.quotient_dim, second.quotient_dim)
        self.assertEqual(set(first.basis), set(second.basis))

    def test_invalid_generators(self):
        """Test inhomogeneous and overly large generators are refused"""
        with self.assertRaises(DegreeMismatchError):
            GradedIdealPiece.from_strings(self.qq, ['x^2 + y'], 3)
        with self.assertRaises(DegreeMismatchError):
            GradedIdealPiece.from_strings(self.qq, ['x^4'], 3)

    def test_integer_piece_needs_integer_routine(self):
        """Test the field routines refuse Z"""
        zz = self.qq.with_domain(CoefficientDomain.integers())
        piece = GradedIdealPiece.from_strings(zz, ['x'], 1)
        with self.assertRaises(ValidationError):
            hilbert_function_quotient(piece)


class IntegerQuotientTest(SimpleTestCase):
    """Tests for quotient pieces over Z"""

    def setUp(self):
        self.zz = RingContext.from_names(CoefficientDomain.integers(), 'x,y')

    def test_two_torsion(self):
        """Test (2x, y) in degree 1 leaves Z/2 generated by x"""
        piece = GradedIdealPiece.from_strings(self.zz, ['2*x', 'y'], 1)
        report = quotient_structure_Z(piece)
        self.assertEqual(report.free_rank, 0)
        self.assertEqual(report.torsion, (2,))
        self.assertEqual(report.torsion_reps, ('x',))
        self.assertIsNone(report.quotient_dim)
        self.assertFalse(report.vanishes)

    def test_class_orders(self):
        """Test additive orders of classes, 0 meaning infinite"""
        piece = GradedIdealPiece.from_strings(self.zz, ['2*x', 'y'], 1)
        self.assertEqual(class_order(piece, self.zz.parse('x')), 2)
        self.assertEqual(class_order(piece, self.zz.parse('y')), 1)
        free = GradedIdealPiece.from_strings(self.zz, ['y'], 1)
        self.assertEqual(class_order(free, self.zz.parse('x')), 0)

    def test_reduction_mod_p(self):
        """Test dim over F_p = free rank + number of torsion factors divisible by p"""
        piece = GradedIdealPiece.from_strings(self.zz, ['2*x', 'y'], 1)
        report = quotient_structure_Z(piece)
        for p in (2, 3, 5, 101):
            expected = report.free_rank + sum(1 for d in report.torsion if d % p == 0)
            reduced = piece.over(CoefficientDomain.prime_field(p))
            self.assertEqual(hilbert_function_quotient(reduced), expected, msg=f'p={p}')

    def test_quadrics_over_z(self):
        """Test the quadric ideal has no free part and no torsion in degree 4"""
        zz = RingContext.from_names(CoefficientDomain.integers(), 'x,y,z,w')
        report = quotient_structure_Z(GradedIdealPiece.from_strings(zz, SQUARES_AND_XY, 4))
        self.assertEqual(report.free_rank, 0)
        self.assertEqual(report.torsion, ())
        self.assertTrue(report.vanishes)

    def test_zero_ideal(self):
        """Test an empty generator list leaves a free quotient"""
        piece = GradedIdealPiece(self.zz, (), 1)
        report = quotient_structure_Z(piece)
        self.assertEqual(report.free_rank, 2)
        self.assertEqual(report.torsion, ())


class ReductionConsistencyTest(SimpleTestCase):
    """Tests comparing quotients over Z with their reductions mod p"""

    def setUp(self):
        self.zz = RingContext.from_names(CoefficientDomain.integers(), 'x,y,z,w')

    def assert_consistent(self, texts, degree):
        piece = GradedIdealPiece.from_strings(self.zz, texts, degree)
        report = quotient_structure_Z(piece)
        for p in (2, 3, 5, 101):
            expected = report.free_rank + sum(1 for d in report.torsion if d % p == 0)
            reduced = piece.over(CoefficientDomain.prime_field(p))
            self.assertEqual(hilbert_function_quotient(reduced), expected, msg=f'p={p}')
        return piece, report

    def test_quadrics_in_degree_four(self):
        """Test dim over F_p matches the Z structure for the quadric ideal"""
        _, report = self.assert_consistent(SQUARES_AND_XY, 4)
        self.assertTrue(report.vanishes)

    def test_cubics_in_degree_six(self):
        """Test the cubic ideal vanishes over Z in degree 6 and over every F_p"""
        _, report = self.assert_consistent(INTEGER_J, 6)
        self.assertEqual(report.free_rank, 0)
        self.assertEqual(report.torsion, ())

    def test_quartics_in_degree_eight(self):
        """Test the quartic ideal leaves one large prime torsion factor in degree 8"""
        piece, report = self.assert_consistent(INTEGER_K, 8)
        self.assertEqual(report.free_rank, 0)
        self.assertEqual(report.torsion, (INTEGER_K_TORSION,))
        self.assertFalse(report.vanishes)
        self.assertEqual(class_order(piece, self.zz.parse('w^8')), INTEGER_K_TORSION)


class MultiplicationMatrixTest(SimpleTestCase):
    """Tests for the matrix spanning an ideal piece"""

    def test_linear_forms_in_the_plane(self):
        """Test (x, y) in degree 2 gives a 3x4 matrix of rank 3"""
        plane = RingContext.from_names(CoefficientDomain.rationals(), 'x,y')
        matrix = multiplication_matrix(GradedIdealPiece.from_strings(plane, ['x', 'y'], 2))
        self.assertEqual((matrix.rows, matrix.cols), (3, 4))
        self.assertEqual(matrix_rank(matrix), 3)

    def test_no_generators(self):
        """Test the zero ideal has no columns"""
        plane = RingContext.from_names(CoefficientDomain.rationals(), 'x,y')
        matrix = multiplication_matrix(GradedIdealPiece(plane, (), 2))
        self.assertEqual((matrix.rows, matrix.cols), (3, 0))
        self.assertEqual(matrix_rank(matrix), 0)

    def test_quadrics_in_degree_four(self):
        """Test five quadrics times ten quadrics span all 35 quartics"""
        context = RingContext.from_names(CoefficientDomain.prime_field(101), 'x,y,z,w')
        matrix = multiplication_matrix(GradedIdealPiece.from_strings(context, SQUARES_AND_XY, 4))
        self.assertEqual((matrix.rows, matrix.cols), (35, 50))
        self.assertEqual(matrix_rank(matrix), 35)

    def test_integer_matrix(self):
        """Test integer coefficients give an IntMatrix"""
        zz = RingContext.from_names(CoefficientDomain.integers(), 'x,y')
        matrix = multiplication_matrix(GradedIdealPiece.from_strings(zz, ['2*x', 'y'], 1))
        self.assertIsInstance(matrix, IntMatrix)
        self.assertEqual(sorted(map(sorted, matrix.transpose().to_lists())), [[0, 1], [0, 2]])


class DifferentialTest(SimpleTestCase):
    """Tests for the differential of p0^2 + p1*p2 + p3*p4"""

    def setUp(self):
        self.qq = RingContext.from_names(CoefficientDomain.rationals(), 'x,y,z,w')

    def forms(self, texts):
        return [self.qq.parse(text) for text in texts]

    def test_spanning_forms_are_surjective(self):
        """Test surjectivity at x^2, y^2, z^2, w^2, xy"""
        self.assertTrue(jacobian_surjective(self.forms(SQUARES_AND_XY)))

    def test_zero_forms(self):
        """Test the zero point is never surjective"""
        self.assertFalse(jacobian_surjective([self.qq.zero] * 5, 2))

    def test_characteristic_two(self):
        """Test characteristic 2 is refused"""
        gf2 = self.qq.with_domain(CoefficientDomain.prime_field(2))
        with self.assertRaises(CharacteristicError):
            jacobian_surjective([gf2.parse(text) for text in SQUARES_AND_XY])

    def test_kernel_witnesses(self):
        """Test the ten pair vectors lie in the kernel"""
        forms = self.forms(['x^2 + y*z', 'x*w', 'z^2', 'y^2 - w^2', 'x*y'])
        witnesses = differential_kernel_witnesses(forms)
        self.assertEqual(len(witnesses), 10)
        for vector in witnesses:
            self.assertTrue(apply_differential(forms, vector).is_zero)

    def test_corank_of_squares_in_five_variables(self):
        """Test corank 5 at the five squares"""
        context = RingContext.from_names(CoefficientDomain.rationals(), 'x,y,z,v,w')
        forms = [context.parse(text) for text in ('x^2', 'y^2', 'z^2', 'v^2', 'w^2')]
        self.assertEqual(differential_corank(forms), 5)

    def test_wrong_form_count(self):
        """Test exactly five forms are required"""
        with self.assertRaises(ValidationError):
            differential_corank(self.forms(['x^2', 'y^2']))


class GenericityTrialTest(SimpleTestCase):
    """Tests for seeded genericity trials"""

    def test_quadrics_over_gf101(self):
        """Test random quadrics almost always give a surjective differential"""
        report = generic_writability_trial(3, 2, trials=10, seed=0)
        self.assertGreaterEqual(report.successes, 9)
        self.assertEqual(report.domain, 'GF(101)')
        self.assertEqual(len(report.failures), report.trials - report.successes)

    def test_deterministic(self):
        """Test identical seeds give identical reports"""
        self.assertEqual(generic_writability_trial(3, 1, trials=3, seed=5), generic_writability_trial(3, 1, trials=3, seed=5))
        self.assertEqual(trial_rng(1, 2).random(), trial_rng(1, 2).random())
        self.assertNotEqual(trial_rng(1, 2).random(), trial_rng(2, 1).random())

    def test_zero_trials_rejected(self):
        """Test a trial count of zero is an error"""
        with self.assertRaises(ValidationError):
            generic_writability_trial(3, 2, trials=0)

    def test_characteristic_two_rejected(self):
        """Test the trials refuse characteristic 2"""
        with self.assertRaises(CharacteristicError):
            generic_writability_trial(3, 2, CoefficientDomain.prime_field(2), trials=1)

    def test_cubics_and_quartics_over_gf101(self):
        """Test seeds 0..9 give at most one failure for cubic and quartic forms"""
        for m in (3, 4):
            successes = sum(generic_writability_trial(3, m, trials=1, seed=seed).successes for seed in range(10))
            self.assertGreaterEqual(successes, 9, msg=f'm={m}')
