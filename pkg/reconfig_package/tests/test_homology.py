import math
import random
import unittest
from itertools import combinations

from complex.simplicial import SimplicialComplex, join
from exactla.matrix import rank
from homology.betti import (INFINITY, betti_profile, boundary_matrix, eta_h, eta_h_by_matrices, format_eta,
                            is_homologically_connected, parse_eta, reduced_betti)
from homology.leray import is_d_leray, leray_number
from utils.exceptions import CapacityError


def hollow_triangle() -> SimplicialComplex:
    return SimplicialComplex('abc', [('a', 'b'), ('b', 'c'), ('a', 'c')])


def octahedron_boundary() -> SimplicialComplex:
    """S⁰ ∗ S⁰ ∗ S⁰ ≅ S²"""
    s0 = [SimplicialComplex(pair, [(pair[0],), (pair[1],)]) for pair in (('x1', 'x2'), ('y1', 'y2'), ('z1', 'z2'))]
    return join(join(s0[0], s0[1]), s0[2])


class TestBetti(unittest.TestCase):
    def test_hollow_triangle(self):
        """β̃_0 = 0, β̃_1 = 1, η_H = 2"""
        c = hollow_triangle()
        self.assertEqual(reduced_betti(c, 0), 0)
        self.assertEqual(reduced_betti(c, 1), 1)
        self.assertEqual(eta_h(c), 2)

    def test_empty_complex(self):
        """{∅}: β̃_{−1} = 1, η_H = 0"""
        c = SimplicialComplex.empty()
        self.assertEqual(reduced_betti(c, -1), 1)
        self.assertEqual(eta_h(c), 0)

    def test_two_points(self):
        c = SimplicialComplex('ab', [('a',), ('b',)])
        self.assertEqual(reduced_betti(c, 0), 1)
        self.assertEqual(eta_h(c), 1)

    def test_cone_is_acyclic(self):
        """점 ∗ 속이 빈 삼각형 = 뿔: 모든 축약 Betti 수가 0"""
        cone = join(SimplicialComplex('p', [('p',)]), hollow_triangle())
        self.assertEqual(eta_h(cone), INFINITY)
        self.assertEqual(eta_h_by_matrices(cone), INFINITY)
        self.assertTrue(all(b == 0 for b in betti_profile(cone).betti.values()))

    def test_sphere(self):
        self.assertEqual(eta_h(octahedron_boundary()), 3)
        self.assertEqual(reduced_betti(octahedron_boundary(), 2), 1)

    def test_boundary_of_boundary_is_zero(self):
        c = SimplicialComplex.simplex(range(4))
        for p in range(1, 4):
            product = boundary_matrix(c, p - 1).matmul(boundary_matrix(c, p))
            self.assertTrue(product.is_zero())

    def test_euler_poincare(self):
        """Σ(−1)^p f_p = Σ(−1)^p β̃_p (빈 면 포함)"""
        c = SimplicialComplex(range(6), [(0, 1, 2), (2, 3), (3, 4, 5), (0, 5), (1, 4)])
        faces = sum((-1) ** (p % 2) * c.face_count(p) for p in range(-1, c.dim + 1))
        betti = sum((-1) ** (p % 2) * reduced_betti(c, p) for p in range(-1, c.dim + 1))
        self.assertEqual(faces, betti)

    def test_join_additivity(self):
        """η_H(C ∗ D) = η_H(C) + η_H(D)"""
        c = hollow_triangle()
        d = SimplicialComplex('xy', [('x',), ('y',)])
        self.assertEqual(eta_h(join(c, d)), eta_h(c) + eta_h(d))

    def test_join_additivity_on_random_pairs(self):
        def random_complex(rng, labels):
            faces = [tuple(rng.sample(labels, rng.randint(1, 3))) for _ in range(rng.randint(1, 3))]
            return SimplicialComplex(labels, faces)

        rng = random.Random(11)
        for _ in range(10):
            c = random_complex(rng, ['a', 'b', 'c', 'd'])
            d = random_complex(rng, ['x', 'y', 'z'])
            self.assertEqual(eta_h(join(c, d)), eta_h(c) + eta_h(d), (c, d))

    def test_shortcut_agrees_with_matrices(self):
        for c in (hollow_triangle(), octahedron_boundary(), SimplicialComplex('ab', [('a',), ('b',)])):
            self.assertEqual(eta_h(c), eta_h_by_matrices(c))

    def test_profile_serialization(self):
        payload = betti_profile(hollow_triangle()).to_dict()
        self.assertEqual(payload['betti'], {'-1': 0, '0': 0, '1': 1})
        self.assertEqual(payload['eta_h'], 2)
        self.assertEqual(format_eta(math.inf), 'inf')
        self.assertEqual(parse_eta('inf'), INFINITY)

    def test_homologically_connected(self):
        self.assertTrue(is_homologically_connected(hollow_triangle(), 0))
        self.assertFalse(is_homologically_connected(hollow_triangle(), 1))

    def test_boundary_rank_of_triangle(self):
        self.assertEqual(rank(boundary_matrix(hollow_triangle(), 1)), 2)


class TestLeray(unittest.TestCase):
    def test_simplex_is_zero_leray(self):
        self.assertTrue(is_d_leray(SimplicialComplex.simplex('abc'), 0))

    def test_hollow_triangle_is_two_leray(self):
        """H̃_1(∂Δ²) ≠ 0 이므로 1-Leray 가 아니고 2-Leray"""
        self.assertFalse(is_d_leray(hollow_triangle(), 1))
        self.assertEqual(leray_number(hollow_triangle()), 2)

    def test_points_are_one_leray(self):
        points = SimplicialComplex('abc', [(v,) for v in 'abc'])
        self.assertEqual(leray_number(points), 1)

    def test_leray_capacity(self):
        big = SimplicialComplex(range(6), [face for face in combinations(range(6), 2)])
        with self.assertRaises(CapacityError):
            is_d_leray(big, 1, cap=4)


if __name__ == '__main__':
    unittest.main()
