import random
from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from ulrich.exceptions import NotSkewSymmetricError, ShapeError, SizeExceededError, ValidationError
from ulrich.linalg import (
    FieldMatrix,
    IntMatrix,
    PolyMatrix,
    bareiss_rank,
    char_poly,
    integer_rank,
    matrix_rank,
    nullspace,
    pfaffian,
    poly_det,
    rref_rank,
    smith_normal_form,
)
from ulrich.polyring import CoefficientDomain, RingContext, TPoly, tpoly_eval


class FieldEliminationTest(SimpleTestCase):
    """Tests for rank, RREF and kernels over fields"""

    def setUp(self):
        self.qq = CoefficientDomain.rationals()
        self.gf7 = CoefficientDomain.prime_field(7)

    def test_rank_over_q(self):
        """Test a rank-2 rational matrix"""
        m = FieldMatrix.from_rows(self.qq, [[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 0, 1]])
        self.assertEqual(matrix_rank(m), 2)
        self.assertEqual(rref_rank(m).pivot_cols, (0, 1))

    def test_rank_depends_on_characteristic(self):
        """Test a matrix singular mod 7 only"""
        rows = [[1, 2], [3, 13]]
        self.assertEqual(matrix_rank(FieldMatrix.from_rows(self.qq, rows)), 2)
        self.assertEqual(matrix_rank(FieldMatrix.from_rows(self.gf7, rows)), 1)

    def test_rref_is_reduced(self):
        """Test pivot columns of the RREF are unit vectors"""
        m = FieldMatrix.from_rows(self.gf7, [[2, 4, 1], [1, 2, 3], [0, 0, 5]])
        result = rref_rank(m)
        for r, c in enumerate(result.pivot_cols):
            column = result.rref.column(c)
            self.assertEqual(column[r], 1)
            self.assertEqual(sum(1 for x in column if x), 1)

    def test_nullspace(self):
        """Test kernel vectors are killed and rank-nullity holds"""
        rng = random.Random(5)
        for _ in range(10):
            rows = [[rng.randrange(7) for _ in range(5)] for _ in range(3)]
            m = FieldMatrix.from_rows(self.gf7, rows)
            kernel = nullspace(m)
            self.assertEqual(len(kernel) + matrix_rank(m), 5)
            for vector in kernel:
                for row in rows:
                    self.assertEqual(sum(a * b for a, b in zip(row, vector)) % 7, 0)


class IntegerRankTest(SimpleTestCase):
    """Tests for fraction-free ranks"""

    def test_bareiss_agrees_with_rational_rank(self):
        """Test Bareiss rank against elimination over Q on seeded inputs"""
        rng = random.Random(9)
        qq = CoefficientDomain.rationals()
        for _ in range(20):
            rows = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(5)]
            rows[4] = [a + b for a, b in zip(rows[0], rows[1])]
            m = IntMatrix.from_rows(rows)
            expected = rref_rank(m.to_rationals(qq)).rank
            self.assertEqual(bareiss_rank(m), expected)
            self.assertEqual(integer_rank(m), expected)

    @override_settings(ULRICH_RANK_CHECK_PRIME=2)
    def test_rank_falls_back_when_modular_rank_drops(self):
        """Test the exact path when the check prime sees a smaller rank"""
        m = IntMatrix.from_rows([[2, 0], [0, 2]])
        self.assertEqual(integer_rank(m), 2)


class SmithNormalFormTest(SimpleTestCase):
    """Tests for the Smith normal form"""

    def test_textbook_example(self):
        """Test the invariant factors 2, 6, 12"""
        m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        snf = smith_normal_form(m)
        self.assertEqual(snf.invariant_factors, (2, 6, 12))
        self.assertEqual(snf.rank, 3)
        self.assertEqual(snf.torsion, (2, 6, 12))
        self.assertEqual(snf.free_rank, 0)

    def test_coprime_diagonal(self):
        """Test diag(2, 3) has invariant factors 1, 6"""
        snf = smith_normal_form(IntMatrix.diagonal([2, 3]))
        self.assertEqual(snf.invariant_factors, (1, 6))
        self.assertEqual(snf.torsion, (6,))

    def test_rank_deficient(self):
        """Test trailing zeros and the free rank of the cokernel"""
        snf = smith_normal_form(IntMatrix.from_rows([[1, 2], [2, 4], [0, 0]]))
        self.assertEqual(snf.invariant_factors, (1, 0))
        self.assertEqual(snf.rank, 1)
        self.assertEqual(snf.free_rank, 2)

    def test_transforms_are_inverse_and_divisibility_holds(self):
        """Test U * U^-1 = I and d1 | d2 | ... on seeded matrices"""
        rng = random.Random(21)
        for _ in range(15):
            rows = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)]
            snf = smith_normal_form(IntMatrix.from_rows(rows))
            product = snf.row_transform.matmul(snf.row_transform_inverse)
            self.assertEqual(product.to_lists(), IntMatrix.diagonal([1, 1, 1]).to_lists())
            nonzero = snf.invariant_factors[:snf.rank]
            for a, b in zip(nonzero, nonzero[1:]):
                self.assertEqual(b % a, 0)
            self.assertTrue(all(d > 0 for d in nonzero))
            qq = CoefficientDomain.rationals()
            self.assertEqual(snf.rank, rref_rank(IntMatrix.from_rows(rows).to_rationals(qq)).rank)


class PolyMatrixTest(SimpleTestCase):
    """Tests for polynomial determinants and Pfaffians"""

    def setUp(self):
        self.context = RingContext.from_names(CoefficientDomain.rationals(), 'a,b,c,d,e,f')

    def test_determinant_of_2x2(self):
        """Test det [[a, b], [c, d]] = ad - bc"""
        m = PolyMatrix.from_strings(self.context, [['a', 'b'], ['c', 'd']])
        self.assertEqual(poly_det(m), self.context.parse('a*d - b*c'))

    def test_characteristic_polynomial_of_identity(self):
        """Test det(tI - I) = (t - 1)^size"""
        identity = PolyMatrix.identity(self.context, 3)
        t_minus_one = TPoly.variable(self.context) - 1
        self.assertEqual(poly_det(identity, in_t=True), t_minus_one ** 3)

    def test_determinant_is_multiplicative(self):
        """Test det(AB) = det(A) det(B)"""
        a = PolyMatrix.from_strings(self.context, [['a', 'b', '0'], ['c', 'd', 'e'], ['1', 'f', 'a']])
        b = PolyMatrix.from_strings(self.context, [['f', '1', 'b'], ['0', 'e', 'c'], ['d', '0', '1']])
        self.assertEqual(poly_det(a @ b), poly_det(a) * poly_det(b))

    @override_settings(ULRICH_MAX_DET_SIZE=2)
    def test_determinant_size_limit(self):
        """Test oversized determinants are refused"""
        with self.assertRaises(SizeExceededError):
            poly_det(PolyMatrix.identity(self.context, 3))

    def test_pfaffian_of_4x4(self):
        """Test pf = af - be + cd on the generic skew 4x4"""
        m = PolyMatrix.from_strings(self.context, [
            ['0', 'a', 'b', 'c'],
            ['-a', '0', 'd', 'e'],
            ['-b', '-d', '0', 'f'],
            ['-c', '-e', '-f', '0'],
        ])
        pf = pfaffian(m)
        self.assertEqual(pf, self.context.parse('a*f - b*e + c*d'))
        self.assertEqual(pf * pf, poly_det(m))

    def test_pfaffian_errors(self):
        """Test odd sizes and non-skew inputs are rejected"""
        with self.assertRaises(ShapeError):
            pfaffian(PolyMatrix.zeros(self.context, 3))
        with self.assertRaises(NotSkewSymmetricError):
            pfaffian(PolyMatrix.from_strings(self.context, [['0', 'a'], ['a', '0']]))
        with self.assertRaises(NotSkewSymmetricError):
            pfaffian(PolyMatrix.from_strings(self.context, [['a', 'b'], ['-b', '0']]))

    def test_power_and_transpose(self):
        """Test A^2 = A @ A and (A^T)^T = A"""
        m = PolyMatrix.from_strings(self.context, [['a', 'b'], ['c', 'd']])
        self.assertEqual(m.power(2), m @ m)
        self.assertEqual(m.transpose().transpose(), m)
        self.assertEqual(m.power(0), PolyMatrix.identity(self.context, 2))

    def test_pfaffian_of_2x2(self):
        """Test pf [[0, a], [-a, 0]] = a"""
        m = PolyMatrix.from_strings(self.context, [['0', 'a'], ['-a', '0']])
        self.assertEqual(pfaffian(m), self.context.parse('a'))

    def test_characteristic_polynomial_at_zero(self):
        """Test det(tI - A) at t = 0 is (-1)^size det(A)"""
        m = PolyMatrix.from_strings(self.context, [['a', 'b', 'c'], ['d', 'e', '0'], ['f', '1', 'a']])
        self.assertEqual(tpoly_eval(poly_det(m, in_t=True), 0), -poly_det(m))
        m = PolyMatrix.from_strings(self.context, [['a', 'b'], ['c', 'd']])
        self.assertEqual(tpoly_eval(poly_det(m, in_t=True), 0), poly_det(m))

    def test_characteristic_polynomial_matches_cofactors(self):
        """Test traces of powers agree with expanding t*I - A"""
        m = PolyMatrix.from_strings(self.context, [
            ['a', 'b', '0', 'c'],
            ['d', '-a', 'e', '1'],
            ['0', 'f', 'a*b', 'd'],
            ['c', '2', 'e', 'f'],
        ])
        self.assertEqual(char_poly(m), poly_det(m.char_matrix()))
        self.assertEqual(char_poly(m).degree, 4)

    def test_characteristic_polynomial_over_z(self):
        """Test det(tI - [[1, 2], [3, 4]]) = t^2 - 5t - 2 over Z"""
        zz = RingContext.from_names(CoefficientDomain.integers(), 'a,b')
        m = PolyMatrix.from_strings(zz, [['1', '2'], ['3', '4']])
        self.assertEqual(char_poly(m), TPoly(zz, [zz.constant(-2), zz.constant(-5), zz.one]))
        m = PolyMatrix.from_strings(zz, [['a', '2*b'], ['b', '-a']])
        self.assertEqual(char_poly(m), TPoly.power_minus(2, zz.parse('a^2 + 2*b^2')))

    def test_characteristic_polynomial_in_small_characteristic(self):
        """Test GF(2) and GF(3) fall back to cofactors for sizes at least p"""
        for p in (2, 3):
            gf = self.context.with_domain(CoefficientDomain.prime_field(p))
            m = PolyMatrix.from_strings(gf, [['a', 'b', 'c'], ['1', 'd', 'e'], ['f', '0', 'a']])
            self.assertEqual(char_poly(m), poly_det(m.char_matrix()), msg=f'p={p}')
            self.assertEqual(tpoly_eval(char_poly(m), 0), -poly_det(m), msg=f'p={p}')

    def test_characteristic_polynomial_needs_plain_entries(self):
        """Test a matrix already in t is refused"""
        m = PolyMatrix.identity(self.context, 2).char_matrix()
        with self.assertRaises(ValidationError):
            char_poly(m)


def _unimodular(rng, size):
    """Product of seeded elementary integer operations."""
    rows = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(3 * size):
        i, j = rng.sample(range(size), 2)
        q = rng.randint(-3, 3)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
        if rng.random() < 0.3:
            rows[i], rows[j] = rows[j], rows[i]
    return IntMatrix.from_rows(rows)


class InvarianceTest(SimpleTestCase):
    """Rank and Smith form properties on seeded integer matrices"""

    def setUp(self):
        self.rng = random.Random(33)
        self.qq = CoefficientDomain.rationals()

    def random_matrix(self, rows, cols):
        return IntMatrix.from_rows([[self.rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])

    def test_rank_of_transpose(self):
        """Test rank(M) = rank(M^T) over Q and F_5"""
        gf5 = CoefficientDomain.prime_field(5)
        for _ in range(10):
            m = self.random_matrix(3, 5)
            self.assertEqual(matrix_rank(m.to_rationals(self.qq)), matrix_rank(m.transpose().to_rationals(self.qq)))
            self.assertEqual(matrix_rank(m.reduce_mod(gf5)), matrix_rank(m.transpose().reduce_mod(gf5)))

    def test_smith_form_is_unimodular_invariant(self):
        """Test U M V has the invariant factors of M"""
        for _ in range(10):
            m = self.random_matrix(3, 4)
            moved = _unimodular(self.rng, 3).matmul(m).matmul(_unimodular(self.rng, 4))
            self.assertEqual(
                smith_normal_form(moved).invariant_factors,
                smith_normal_form(m).invariant_factors,
            )

    def test_modular_rank_from_smith_form(self):
        """Test the F_p rank counts invariant factors prime to p"""
        m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        factors = smith_normal_form(m).invariant_factors
        for p in (2, 3, 5, 7):
            expected = sum(1 for d in factors if d % p)
            self.assertEqual(matrix_rank(m.reduce_mod(CoefficientDomain.prime_field(p))), expected)
        for _ in range(10):
            m = self.random_matrix(4, 4)
            factors = smith_normal_form(m).invariant_factors
            for p in (2, 3):
                expected = sum(1 for d in factors if d % p)
                self.assertEqual(matrix_rank(m.reduce_mod(CoefficientDomain.prime_field(p))), expected)
