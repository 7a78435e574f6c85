import unittest
from fractions import Fraction

from exactla.lp import (FREE, NONNEG, LPFeasibility, affine_dependence_with_signs, lp_feasible, lp_maximize,
                        verify_certificate, verify_point)
from exactla.matrix import RationalMatrix, nullspace, rank
from exactla.rational import format_rational, to_rational
from utils.exceptions import StructuralError


class TestRational(unittest.TestCase):
    def test_to_rational_reduces(self):
        """문자열 유리수는 기약분수로 변환"""
        self.assertEqual(to_rational("6/4"), Fraction(3, 2))
        self.assertEqual(to_rational("-2/-4"), Fraction(1, 2))
        self.assertEqual(format_rational(Fraction(0, 5)), "0")

    def test_float_is_rejected(self):
        """부동소수점은 정확하지 않으므로 거부"""
        with self.assertRaises(StructuralError):
            to_rational(0.5)
        with self.assertRaises(StructuralError):
            to_rational("1/0")


class TestRank(unittest.TestCase):
    def test_identity_and_zero(self):
        self.assertEqual(rank(RationalMatrix.identity(3)), 3)
        self.assertEqual(rank(RationalMatrix(2, 4)), 0)

    def test_hollow_triangle_boundary(self):
        """속이 빈 삼각형의 ∂_1 (간선 3 × 정점 3) 의 계수는 2"""
        # 행: 정점 a, b, c / 열: 간선 ab, ac, bc
        boundary = RationalMatrix.from_rows([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
        self.assertEqual(rank(boundary), 2)

    def test_no_stored_zero_entries(self):
        m = RationalMatrix(2, 2, {(0, 0): 0, (1, 1): "1/3"})
        self.assertEqual(m.nonzero_count(), 1)
        self.assertEqual(m.get(1, 1), Fraction(1, 3))

    def test_index_out_of_range(self):
        with self.assertRaises(StructuralError):
            RationalMatrix(1, 1, {(1, 0): 1})

    def test_nullspace_is_annihilated(self):
        m = RationalMatrix.from_rows([[1, 1, 1], [0, 1, 2]])
        basis = nullspace(m)
        self.assertEqual(len(basis), 1)
        self.assertEqual(m.apply(basis[0]), (0, 0))


class TestLP(unittest.TestCase):
    def test_feasible_point_is_exact(self):
        """x ∈ conv{(0,0), (2,0), (0,2)} 인 (1/2, 1/2) 의 볼록 계수"""
        rows = [[1, 1, 1], [0, 2, 0], [0, 0, 2]]
        problem = LPFeasibility.build(rows, [1, "1/2", "1/2"], [NONNEG] * 3)
        result = lp_feasible(problem)
        self.assertTrue(result.feasible)
        a, b = problem.augmented()
        self.assertTrue(verify_point(a, b, problem.signs, result.point))

    def test_infeasible_has_certificate(self):
        """x ≥ 0, x = −1 은 불가능하고 Farkas 증명서가 검증됨"""
        problem = LPFeasibility.build([[1]], [-1], [NONNEG])
        result = lp_feasible(problem)
        self.assertFalse(result.feasible)
        a, b = problem.augmented()
        self.assertTrue(verify_certificate(a, b, problem.signs, result.certificate))

    def test_free_variable(self):
        problem = LPFeasibility.build([[1, 1]], [-3], [FREE, NONNEG])
        result = lp_feasible(problem)
        self.assertTrue(result.feasible)
        self.assertGreaterEqual(result.point[1], 0)
        self.assertEqual(result.point[0] + result.point[1], -3)

    def test_dimension_mismatch(self):
        with self.assertRaises(StructuralError):
            LPFeasibility.build([[1, 2]], [1, 2], [NONNEG, NONNEG])

    def test_nonzero_group_requires_homogeneous(self):
        with self.assertRaises(StructuralError):
            LPFeasibility.build([[1, 1]], [1], [NONNEG, NONNEG], nonzero_group=[0])

    def test_maximize(self):
        """x + y ≤ 4 (여유 변수 s), 최대 x + 2y = 8"""
        problem = LPFeasibility.build([[1, 1, 1]], [4], [NONNEG] * 3)
        optimum = lp_maximize(problem, [1, 2, 0])
        self.assertEqual(optimum.status, 'optimal')
        self.assertEqual(optimum.value, 8)

    def test_maximize_unbounded(self):
        problem = LPFeasibility.build([[1, -1]], [0], [NONNEG, NONNEG])
        self.assertEqual(lp_maximize(problem, [1, 1]).status, 'unbounded')

    def test_affine_dependence_with_signs(self):
        """ℝ¹ 의 0, 1, 2: 가운데 점만 반대 부호인 Radon 계수"""
        alpha = affine_dependence_with_signs([[0], [1], [2]], ['>=0', '<=0', '>=0'])
        self.assertIsNotNone(alpha)
        self.assertEqual(sum(alpha), 0)
        self.assertEqual(sum(a * x for a, x in zip(alpha, [0, 1, 2])), 0)
        self.assertLess(alpha[1], 0)
        self.assertIsNone(affine_dependence_with_signs([[0], [1], [2]], ['<=0', '>=0', '>=0']))


if __name__ == '__main__':
    unittest.main()
