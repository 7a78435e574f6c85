import unittest
from itertools import product
from fractions import Fraction

from complex.simplicial import SimplicialComplex
from geometry.caratheodory import halfspace_dual, polytope_nerve, rg_colorful_caratheodory, rg_colorful_helly
from geometry.order_complexes import colcat_complex, colhel_complex, geo_order_complex, tver_complex
from geometry.points import (HalfSpace, OrderedPartition, PointConfig, conv_contains, intersection_point,
                             partition_from_dict, point_config_from_dict, random_point_config)
from geometry.radon_path import certifies, radon_coefficients, radon_path
from geometry.tverberg import (enumerate_tverberg_partitions, is_tverberg, rg_tverberg, sarkaria_tensors,
                               tverberg_adjacent)
from hallcheck.reports import CONFIRMED, TIGHT_NEGATIVE, VACUOUS
from hallcheck.TheoremBase import TheoremManager
from homology.betti import eta_h
from matroid.matroid import free_matroid, uniform_matroid
from utils.exceptions import CapacityError, PreconditionError, StructuralError

# ℝ¹ 의 A_i = {−1, 1}, 목표점 0
SIGNED_SETS = [[[-1], [1]], [[-1], [1]], [[-1], [1]]]


def interval(low: int, high: int):
    """[low, high] = {y ≥ low} ∩ {−y ≥ −high}"""
    return (HalfSpace((1,), low), HalfSpace((-1,), -high))


class TestPoints(unittest.TestCase):
    def test_scalar_coordinates(self):
        config = PointConfig.from_coordinates([0, 1, 2])
        self.assertEqual(config.d, 1)
        self.assertEqual(config.point(1), (Fraction(1),))

    def test_payload(self):
        config = point_config_from_dict({'d': 2, 'points': {'p': ['1/2', 0], 'q': [1, 1]}})
        self.assertEqual(config.labels, ('p', 'q'))
        self.assertEqual(config.to_dict()['points']['p'], ['1/2', '0'])
        with self.assertRaises(StructuralError):
            point_config_from_dict({'d': 2, 'points': {'p': [1]}})

    def test_ordered_partition(self):
        config = PointConfig.from_coordinates([0, 1, 2])
        partition = OrderedPartition.from_parts(config, [[0, 2], [1]])
        self.assertEqual(partition.assignment, (0, 1, 0))
        self.assertEqual(partition.parts(), [[0, 2], [1]])
        self.assertEqual(partition_from_dict(config, {'assignment': {'0': 0, '1': 1, '2': 0}}), partition)
        with self.assertRaises(StructuralError):
            OrderedPartition.from_parts(config, [[0], [1]])
        with self.assertRaises(StructuralError):
            OrderedPartition((0, 2), 2)

    def test_conv_contains(self):
        inside = conv_contains([[0], [2]], [1])
        self.assertTrue(inside.contains)
        self.assertEqual(sum(inside.weights), 1)
        outside = conv_contains([[0], [2]], [3])
        self.assertFalse(outside.contains)
        self.assertIsNotNone(outside.certificate)
        self.assertFalse(conv_contains([], [0]).contains)

    def test_intersection_point(self):
        (y,) = intersection_point([interval(0, 2), interval(1, 3)], 1)
        self.assertTrue(1 <= y <= 2)
        self.assertIsNone(intersection_point([interval(0, 1), interval(2, 3)], 1))
        self.assertEqual(intersection_point([], 2), (0, 0))

    def test_random_config_is_seeded(self):
        self.assertEqual(random_point_config(5, 2, seed=4), random_point_config(5, 2, seed=4))


class TestTverberg(unittest.TestCase):
    def setUp(self):
        self.three = PointConfig.from_coordinates([0, 1, 2])
        self.four = PointConfig.from_coordinates([0, 1, 2, 3])

    def test_is_tverberg(self):
        result = is_tverberg(self.three, OrderedPartition((0, 1, 0), 2))
        self.assertTrue(result.is_tverberg)
        self.assertEqual(result.point, (Fraction(1),))
        self.assertFalse(is_tverberg(self.three, OrderedPartition((0, 0, 1), 2)).is_tverberg)
        self.assertFalse(is_tverberg(self.three, OrderedPartition((0, 0, 0), 2)).is_tverberg)

    def test_three_points_have_two_isolated_partitions(self):
        rg = rg_tverberg(self.three, 2)
        self.assertEqual(len(rg), 2)
        self.assertEqual(rg.component_count, 2)
        self.assertEqual([p.assignment for p in enumerate_tverberg_partitions(self.three, 2)],
                         [(0, 1, 0), (1, 0, 1)])

    def test_four_points_connected(self):
        """4점의 14개 이분할 중 분리되지 않는 8개"""
        rg = rg_tverberg(self.four, 2)
        self.assertEqual(len(rg), 8)
        self.assertEqual(rg.component_count, 1)

    def test_adjacency_requires_reduced_partition(self):
        p = OrderedPartition((0, 1, 0, 0), 2)
        self.assertTrue(tverberg_adjacent(self.four, p, OrderedPartition((0, 1, 0, 1), 2)))
        self.assertFalse(tverberg_adjacent(self.four, p, OrderedPartition((1, 0, 1, 1), 2)))

    def test_assignment_capacity(self):
        with self.assertRaises(CapacityError):
            rg_tverberg(self.four, 3, cap=80)

    def test_sarkaria(self):
        tensors = sarkaria_tensors(PointConfig.from_coordinates([1]), 2)
        self.assertEqual(tensors, [[(1, 1), (-1, -1)]])
        with self.assertRaises(StructuralError):
            sarkaria_tensors(self.three, 1)

    def test_sarkaria_lemma_on_random_configurations(self):
        """P 가 Tverberg 분할 ⇔ 0 ∈ conv(T_P), 두 재구성 그래프도 같음"""
        for d, r, n in ((1, 2, 4), (1, 3, 4), (2, 2, 5)):
            for seed in range(3):
                config = random_point_config(n, d, seed=seed)
                tensors = sarkaria_tensors(config, r)
                origin = [0] * ((d + 1) * (r - 1))
                for assignment in product(range(r), repeat=n):
                    chosen = [tensors[i][j] for i, j in enumerate(assignment)]
                    self.assertEqual(is_tverberg(config, OrderedPartition(assignment, r)).is_tverberg,
                                     conv_contains(chosen, origin).contains, (d, r, seed, assignment))
                self.assertTrue(rg_tverberg(config, r).same_as(rg_colorful_caratheodory(tensors, origin)),
                                (d, r, seed))

    def test_connected_at_threshold_size(self):
        """|X| = (d + 1)(r − 1) + 2 이면 RG_Tv(X, r) 는 비어 있지 않고 연결"""
        cases = [(1, 2, seed) for seed in range(4)] + [(2, 2, seed) for seed in range(3)] + [(1, 3, 0)]
        for d, r, seed in cases:
            config = random_point_config((d + 1) * (r - 1) + 2, d, seed=seed)
            rg = rg_tverberg(config, r)
            self.assertGreater(len(rg), 0, (d, r, seed))
            self.assertEqual(rg.component_count, 1, (d, r, seed))


class TestRadonPath(unittest.TestCase):
    def setUp(self):
        self.config = PointConfig.from_coordinates([0, 1, 2, 3])
        self.p = OrderedPartition((0, 1, 0, 0), 2)

    def test_antiparallel_goes_through_detour(self):
        q = OrderedPartition((1, 0, 1, 1), 2)
        path = radon_path(self.config, self.p, q, alpha=[1, -2, 1, 0], beta=[-1, 2, -1, 0])
        self.assertIsNotNone(path.detour)
        self.assertEqual(path.partitions[0], self.p)
        self.assertEqual(path.partitions[-1], q)
        self.assertEqual(len(path.moved), len(path.partitions) - 1)

    def test_generic_path(self):
        q = OrderedPartition((0, 1, 1, 0), 2)
        path = radon_path(self.config, self.p, q)
        self.assertIsNone(path.detour)
        for left, right in zip(path.partitions, path.partitions[1:]):
            self.assertTrue(tverberg_adjacent(self.config, left, right))

    def test_same_endpoints(self):
        self.assertEqual(radon_path(self.config, self.p, self.p).partitions, [self.p])

    def test_certifies(self):
        self.assertTrue(certifies(self.config, self.p, [Fraction(1), Fraction(-2), Fraction(1), Fraction(0)]))
        self.assertFalse(certifies(self.config, self.p, [Fraction(0)] * 4))

    def test_rejections(self):
        with self.assertRaises(PreconditionError):
            radon_path(PointConfig.from_coordinates([0, 1, 2]), OrderedPartition((0, 1, 0), 2),
                       OrderedPartition((1, 0, 1), 2))
        with self.assertRaises(StructuralError):
            radon_path(self.config, self.p, OrderedPartition((0, 0, 1, 1), 2))
        with self.assertRaises(StructuralError):
            radon_path(self.config, self.p, self.p, alpha=[1, 1, -2, 0])

    def test_walks_between_all_radon_pairs(self):
        """|X| = d + 3 인 랜덤 배치에서 모든 순서 Radon 분할 쌍 사이의 보행"""
        detours = 0
        for d, seeds in ((1, 5), (2, 2)):
            for seed in range(seeds):
                config = random_point_config(d + 3, d, seed=seed)
                partitions = enumerate_tverberg_partitions(config, 2)
                for p in partitions:
                    for q in partitions:
                        path = radon_path(config, p, q)
                        self.assertEqual((path.partitions[0], path.partitions[-1]), (p, q))
                        for left, right in zip(path.partitions, path.partitions[1:]):
                            self.assertTrue(tverberg_adjacent(config, left, right), (d, seed))
                    # 부분을 맞바꾼 분할은 −α 로 증명되고 경로는 우회 분할을 거침
                    alpha = radon_coefficients(config, p)
                    swapped = OrderedPartition(tuple(1 - j for j in p.assignment), 2)
                    path = radon_path(config, p, swapped, alpha=alpha, beta=[-a for a in alpha])
                    self.assertIsNotNone(path.detour)
                    self.assertEqual(path.partitions[-1], swapped)
                    for left, right in zip(path.partitions, path.partitions[1:]):
                        self.assertTrue(tverberg_adjacent(config, left, right), (d, seed))
                    detours += 1
        self.assertGreater(detours, 0)


class TestCaratheodoryHelly(unittest.TestCase):
    def test_colorful_caratheodory(self):
        rg = rg_colorful_caratheodory(SIGNED_SETS, [0])
        self.assertEqual(len(rg), 6)
        self.assertEqual(rg.component_count, 1)

    def test_halfspace_dual_matches(self):
        d, families = halfspace_dual(SIGNED_SETS, [0])
        self.assertEqual(d, 1)
        self.assertTrue(rg_colorful_caratheodory(SIGNED_SETS, [0]).same_as(rg_colorful_helly(families, d)))

    def test_empty_inputs(self):
        with self.assertRaises(StructuralError):
            rg_colorful_caratheodory([[[0]], []], [0])
        with self.assertRaises(StructuralError):
            rg_colorful_helly([], 1)

    def test_polytope_nerve(self):
        nerve = polytope_nerve([('A', interval(0, 2)), ('B', interval(1, 3)), ('C', interval(4, 5))], 1)
        self.assertTrue(nerve.contains(['A', 'B']))
        self.assertFalse(nerve.contains(['A', 'C']))


class TestOrderComplexes(unittest.TestCase):
    def test_tver_of_three_points(self):
        """Radon 분할 두 개뿐이고 서로 비교 불가"""
        complex_ = tver_complex(PointConfig.from_coordinates([0, 1, 2]), 2)
        self.assertEqual(len(complex_.ground_set), 2)
        self.assertEqual(eta_h(complex_), 1)

    def test_colcat_single_point(self):
        complex_ = colcat_complex([[[0]]], [0])
        self.assertEqual(len(complex_.ground_set), 1)

    def test_colhel(self):
        empty_polytope = (HalfSpace((1,), 1), HalfSpace((-1,), 0))
        self.assertEqual(len(colhel_complex([[empty_polytope]], 1).ground_set), 1)
        self.assertTrue(colhel_complex([[interval(0, 1)]], 1).is_empty_complex())

    def test_unknown_kind(self):
        with self.assertRaises(StructuralError):
            geo_order_complex('nerve')


class TestGeometryTheorems(unittest.TestCase):
    def setUp(self):
        self.manager = TheoremManager()

    def test_tverberg_reconfig(self):
        four = {'points': PointConfig.from_coordinates([0, 1, 2, 3]), 'r': 2}
        self.assertEqual(self.manager.verify_instance(four, 'tverberg-reconfig').classification, CONFIRMED)
        three = {'points': PointConfig.from_coordinates([0, 1, 2]), 'r': 2}
        self.assertEqual(self.manager.verify_instance(three, 'tverberg-reconfig').classification, TIGHT_NEGATIVE)

    def test_colorful_caratheodory(self):
        instance = {'a_sets': SIGNED_SETS, 'x': [0]}
        verdict = self.manager.verify_instance(instance, 'colorful-caratheodory')
        self.assertEqual(verdict.classification, CONFIRMED)

    def test_topological_helly_with_zero_dual_rank(self):
        """자유 매트로이드의 쌍대 계수는 0 이고 RG(C⋆, M*) 는 정점 ∅ 하나라 연결"""
        instance = {'complex': SimplicialComplex('abc', [('a',), ('b',), ('c',)]),
                    'matroid': free_matroid('abc'), 'd': 1}
        verdict = self.manager.verify_instance(instance, 'topological-helly')
        self.assertTrue(verdict.conclusion)
        self.assertEqual(verdict.oracle['dual_rank'], 0)
        self.assertEqual(verdict.oracle['vertices'], 1)
        self.assertEqual(verdict.classification, VACUOUS)

    def test_topological_helly_zero_dual_rank_with_hypothesis(self):
        """가설이 성립하는 자유 매트로이드: 반례가 아니라 confirmed"""
        instance = {'complex': SimplicialComplex('abcd', [('a',)]), 'matroid': uniform_matroid('abcd', 4), 'd': 0}
        verdict = self.manager.verify_instance(instance, 'topological-helly')
        self.assertTrue(verdict.hypothesis)
        self.assertTrue(verdict.conclusion)
        self.assertEqual(verdict.classification, CONFIRMED)

    def test_topological_helly_connectedness_needs_positive_dual_rank(self):
        instance = {'complex': SimplicialComplex('abcd', [('a',)]), 'matroid': uniform_matroid('abcd', 4), 'd': 0}
        with self.assertRaises(PreconditionError):
            self.manager.verify_instance(instance, 'topological-helly-connectedness')


if __name__ == '__main__':
    unittest.main()
