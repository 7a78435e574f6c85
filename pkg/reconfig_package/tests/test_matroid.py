import random
import unittest
from itertools import combinations

from homology.betti import INFINITY, eta_h
from matroid.matroid import free_matroid, from_dict, linear_matroid, partition_matroid, uniform_matroid
from matroid.operations import (bases, common_independent_sets, flats, independence_complex_of, intersection_number,
                                is_flat, loops_and_coloops)
from utils.exceptions import CapacityError, StructuralError


def all_subsets(ground):
    return [frozenset(s) for size in range(len(ground) + 1) for s in combinations(ground, size)]


class TestMatroidRank(unittest.TestCase):
    def setUp(self):
        """각 테스트 전에 실행되는 설정"""
        self.partition = partition_matroid([['a', 'b'], ['c']])
        self.u24 = uniform_matroid([0, 1, 2, 3], 2)
        self.plane = linear_matroid(['x', 'y', 'z'], [[1, 0], [0, 1], [1, 1]])

    def test_partition_rank(self):
        self.assertEqual(self.partition.rank({'a', 'b', 'c'}), 2)
        self.assertEqual(self.partition.rank({'a', 'b'}), 1)
        self.assertEqual(self.partition.rank(set()), 0)

    def test_uniform_dual(self):
        """U_{2,4} 의 쌍대는 U_{2,4}"""
        dual = self.u24.dual()
        self.assertEqual(dual.full_rank, 2)
        for subset in all_subsets(self.u24.ground_set):
            self.assertEqual(dual.rank(subset), min(len(subset), 2))

    def test_linear_rank(self):
        self.assertEqual(self.plane.full_rank, 2)
        self.assertEqual(self.plane.rank({'x', 'z'}), 2)

    def test_double_dual(self):
        """(M⋆)⋆ = M"""
        double = self.plane.dual().dual()
        for subset in all_subsets(self.plane.ground_set):
            self.assertEqual(double.rank(subset), self.plane.rank(subset))

    def test_truncate_contract_restrict(self):
        self.assertEqual(self.u24.truncate(1).rank({0, 1, 2}), 1)
        contracted = self.u24.contract({0})
        self.assertEqual(contracted.ground_set, (1, 2, 3))
        self.assertEqual(contracted.full_rank, 1)
        self.assertEqual(self.u24.restrict({0, 1}).full_rank, 2)

    def test_direct_sum(self):
        total = self.partition.direct_sum(self.u24)
        self.assertEqual(total.full_rank, 4)
        with self.assertRaises(StructuralError):
            self.u24.direct_sum(self.u24)

    def test_out_of_ground_set(self):
        with self.assertRaises(StructuralError):
            self.partition.rank({'z'})

    def test_submodularity_sampled(self):
        rng = random.Random(7)
        subsets = all_subsets(self.plane.ground_set)
        for _ in range(30):
            a, b = rng.choice(subsets), rng.choice(subsets)
            self.assertGreaterEqual(self.plane.rank(a) + self.plane.rank(b),
                                    self.plane.rank(a | b) + self.plane.rank(a & b))

    def test_payload_round_trip(self):
        m = self.u24.dual().truncate(1)
        restored = from_dict(m.to_dict())
        for subset in all_subsets(m.ground_set):
            self.assertEqual(restored.rank(subset), m.rank(subset))

    def test_unknown_kind(self):
        with self.assertRaises(StructuralError):
            from_dict({'kind': 'graphic'})


class TestMatroidOperations(unittest.TestCase):
    def test_partition_flats(self):
        found = flats(partition_matroid([['a', 'b'], ['c']]), 1)
        self.assertEqual(found, [frozenset(), frozenset({'c'}), frozenset({'a', 'b'})])

    def test_uniform_rank_one_flats_are_singletons(self):
        rank_one = [f for f in flats(uniform_matroid(range(4), 2), 1) if len(f) == 1]
        self.assertEqual(len(rank_one), 4)

    def test_free_matroid_every_set_is_flat(self):
        m = free_matroid('abc')
        self.assertEqual(len(flats(m, 3)), 8)
        self.assertTrue(all(is_flat(m, s) for s in all_subsets('abc')))

    def test_loops_and_coloops(self):
        _, coloops = loops_and_coloops(partition_matroid([['a', 'b'], ['c']]))
        self.assertEqual(coloops, ('c',))
        self.assertEqual(loops_and_coloops(uniform_matroid(range(4), 2)), ((), ()))
        loops, _ = loops_and_coloops(linear_matroid(['p', 'q', 'o'], [[1, 0], [0, 1], [0, 0]]))
        self.assertEqual(loops, ('o',))

    def test_independence_complex_without_coloops(self):
        """코루프가 없으면 η_H(I(M)) = r(M)"""
        self.assertEqual(eta_h(independence_complex_of(uniform_matroid('abc', 2))), 2)
        self.assertEqual(eta_h(independence_complex_of(partition_matroid([['a', 'b'], ['c', 'd']]))), 2)

    def test_independence_complex_rank_over_corpus(self):
        """코루프 없는 균등/분할/선형 매트로이드 모음에서 η_H(I(M)) = r(M)"""
        corpus = [uniform_matroid(range(n), k) for n in range(2, 6) for k in range(1, n)]
        corpus += [partition_matroid(blocks) for blocks in ([['a', 'b']], [['a', 'b', 'c'], ['d', 'e']],
                                                            [['a', 'b'], ['c', 'd'], ['e', 'f']])]
        rng = random.Random(5)
        while len(corpus) < 20:
            vectors = [[rng.randint(-2, 2), rng.randint(-2, 2)] for _ in range(4)]
            if any(v == [0, 0] for v in vectors):
                continue
            matroid = linear_matroid(['p', 'q', 'r', 's'], vectors)
            if loops_and_coloops(matroid)[1]:
                continue
            corpus.append(matroid)
        for matroid in corpus:
            self.assertEqual(eta_h(independence_complex_of(matroid)), matroid.full_rank, matroid)

    def test_independence_complex_with_coloops(self):
        self.assertEqual(eta_h(independence_complex_of(free_matroid('abc'))), INFINITY)

    def test_bases_capacity(self):
        with self.assertRaises(CapacityError):
            bases(uniform_matroid(range(20), 2))

    def test_intersection_number(self):
        m = partition_matroid([[0, 1], [2, 3]])
        n = partition_matroid([[0, 2], [1, 3]])
        self.assertEqual(intersection_number(m, n), 2)
        self.assertEqual(common_independent_sets(m, n, 2), [(0, 3), (1, 2)])


if __name__ == '__main__':
    unittest.main()
