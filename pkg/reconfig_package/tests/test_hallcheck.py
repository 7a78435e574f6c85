import unittest
from typing import Any, Dict, Tuple

from complex.partition import VertexPartition
from complex.simplicial import SimplicialComplex
from graphs.complexes import independence_complex
from graphs.generators import (bipartite_counterexample, grid, kdd_double, kdd_single_class, latin_partition,
                               random_graph, random_partition)
from graphs.graph import Graph, Hypergraph, ListAssignment
from hallcheck import checkers
from hallcheck.reports import (CONFIRMED, COUNTEREXAMPLE, TIGHT_NEGATIVE, VACUOUS, HypothesisReport,
                               VerificationVerdict)
from hallcheck.TheoremBase import TheoremBase, TheoremManager
from hallcheck.witness import extract_domination_witness, verify_domination_witness
from matroid.matroid import partition_matroid, uniform_matroid
from reconfig.builders import rg_colorful
from utils.exceptions import (ConsistencyError, CounterexampleFound, LookupFailure, PreconditionError,
                              StructuralError)


def cycle(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


class AlwaysBrokenTheorem(TheoremBase):
    """가설은 항상 참, 결론은 항상 거짓"""

    theorem_id = 'always-broken'
    required_keys = ('complex',)

    def hypothesis(self, instance: Dict[str, Any]) -> HypothesisReport:
        return HypothesisReport.single(self.theorem_id, True)

    def conclusion(self, instance: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
        return False, {'oracle': 'none'}


class TestReports(unittest.TestCase):
    def test_classification_table(self):
        self.assertEqual(VerificationVerdict.classify(True, True), CONFIRMED)
        self.assertEqual(VerificationVerdict.classify(True, False), COUNTEREXAMPLE)
        self.assertEqual(VerificationVerdict.classify(False, True), VACUOUS)
        self.assertEqual(VerificationVerdict.classify(False, False), TIGHT_NEGATIVE)

    def test_first_failure_is_witness(self):
        rows = [{'I': [1], 'ok': True}, {'I': [2], 'ok': False}, {'I': [1, 2], 'ok': False}]
        report = HypothesisReport.from_rows('demo', rows)
        self.assertFalse(report.holds)
        self.assertEqual(report.failing_witness['I'], [2])

    def test_holds_matches_witness(self):
        with self.assertRaises(ConsistencyError):
            HypothesisReport('demo', True, {'I': [1]})


class TestHallCheckers(unittest.TestCase):
    def setUp(self):
        """K_{2,2} 와 모든 정점을 담은 단일 클래스"""
        self.graph, self.partition = kdd_single_class(2)
        self.complex = independence_complex(self.graph)

    def test_existence_bound_holds(self):
        report = checkers.check_hall(self.complex, self.partition, m=0)
        self.assertTrue(report.holds)
        self.assertEqual(report.table[0]['eta'], 1)

    def test_reconfig_bound_fails_with_one_based_witness(self):
        report = checkers.check_hall(self.complex, self.partition, m=1)
        self.assertFalse(report.holds)
        self.assertEqual(report.failing_witness['I'], [1])
        self.assertEqual(report.failing_witness['bound'], 2)

    def test_deficiency_skips_small_subsets(self):
        """|I| < d 인 부분집합은 검사하지 않음"""
        c = SimplicialComplex.simplex(['a', 'b', 'c'])
        v = VertexPartition([['a'], ['b'], ['c']])
        report = checkers.check_hall(c, v, m=0, d=2)
        self.assertTrue(all(len(row['I']) >= 2 for row in report.table))
        self.assertEqual(len(report.table), 4)

    def test_negative_parameters(self):
        with self.assertRaises(StructuralError):
            checkers.check_hall(self.complex, self.partition, m=-1)

    def test_complex_matroid(self):
        c = SimplicialComplex.simplex([0, 1, 2])
        report = checkers.check_complex_matroid(c, uniform_matroid([0, 1, 2], 2), 2)
        self.assertTrue(report.holds)
        self.assertEqual(len(report.table), 4)

    def test_matroid_intersection(self):
        m = partition_matroid([[0, 1], [2, 3]])
        n = partition_matroid([[0, 2], [1, 3]])
        self.assertTrue(checkers.check_matroid_intersection(m, n, 1).holds)
        report = checkers.check_matroid_intersection(m, n, 2)
        self.assertFalse(report.holds)
        self.assertEqual(report.failing_witness['flat'], [])
        corollary = checkers.check_matroid_intersection_corollary(m, n, 1)
        self.assertTrue(corollary.holds)
        self.assertEqual(corollary.table[0]['nu'], 2)

    def test_bko_tight_example(self):
        report = checkers.check_bko(self.graph, self.partition, 2)
        self.assertFalse(report.holds)
        self.assertTrue(report.failing_witness['kdd_union'])

    def test_bko_preconditions(self):
        with self.assertRaises(PreconditionError):
            checkers.check_bko(self.graph, self.partition, 1)
        with self.assertRaises(PreconditionError):
            checkers.check_bko(self.graph, self.partition, 3)

    def test_domination_total(self):
        report = checkers.check_domination_total(cycle(4), VertexPartition([[0, 1, 2, 3]]))
        self.assertFalse(report.holds)
        self.assertEqual(report.failing_witness['total_domination'], 2)

    def test_max_degree(self):
        g = Graph('abcd', [('a', 'b')])
        self.assertFalse(checkers.check_max_degree(g, VertexPartition([['a', 'c'], ['b', 'd']])).holds)
        self.assertTrue(checkers.check_max_degree(g, VertexPartition([['a', 'b', 'c', 'd']])).holds)

    def test_rainbow_grid_fails(self):
        h, partition = grid(2)
        report = checkers.check_rainbow(h, partition)
        self.assertEqual(report.failing_witness['bound'], 5)

    def test_konig_and_ryser(self):
        h, a_side = bipartite_counterexample(2)
        self.assertTrue(checkers.check_konig(h, a_side, 1).holds)
        self.assertFalse(checkers.check_konig(h, a_side, 2).holds)
        with self.assertRaises(PreconditionError):
            checkers.check_ryser3(h, a_side, 1)

    def test_hall_bipartite(self):
        star = Graph(['a', 'x', 'y'], [('a', 'x'), ('a', 'y')])
        self.assertTrue(checkers.check_hall_bipartite(star, ['a']).holds)
        with self.assertRaises(StructuralError):
            checkers.check_hall_bipartite(Hypergraph('abc', [('a', 'b', 'c')]), ['a'])

    def test_latin_square(self):
        self.assertEqual(checkers.latin_square_k(1), 0)
        self.assertEqual(checkers.latin_square_k(3), 1)
        self.assertEqual(checkers.latin_square_k(6), 3)
        h, partition = latin_partition(3, seed=2)
        self.assertTrue(checkers.check_latin_square(h, partition).holds)

    def test_vertex_list_coloring(self):
        path = Graph('ab', [('a', 'b')])
        self.assertTrue(checkers.check_vertex_list_coloring(path, ListAssignment({'a': [1, 2, 3], 'b': [1, 2, 3]})).holds)
        self.assertFalse(checkers.check_vertex_list_coloring(path, ListAssignment({'a': [1, 2], 'b': [1, 2]})).holds)


class TestTheoremManager(unittest.TestCase):
    def setUp(self):
        self.manager = TheoremManager()
        self.graph, self.partition = kdd_single_class(2)

    def test_registry(self):
        ids = self.manager.get_all_theorems()
        for theorem_id in ('hall-existence', 'reconfig-hall', 'latin-square', 'tverberg-reconfig', 'konig'):
            self.assertIn(theorem_id, ids)
        self.assertEqual(ids, sorted(ids))

    def test_unknown_theorem(self):
        with self.assertRaises(LookupFailure):
            self.manager.get_theorem('no-such-theorem')

    def test_missing_keys(self):
        with self.assertRaises(StructuralError):
            self.manager.verify_instance({'complex': independence_complex(self.graph)}, 'reconfig-hall')

    def test_tight_negative(self):
        instance = {'complex': independence_complex(self.graph), 'partition': self.partition}
        verdict = self.manager.verify_instance(instance, 'reconfig-hall')
        self.assertEqual(verdict.classification, TIGHT_NEGATIVE)
        self.assertEqual(verdict.oracle['components'], 2)

    def test_existence_confirmed(self):
        instance = {'complex': independence_complex(self.graph), 'partition': self.partition}
        verdict = self.manager.verify_instance(instance, 'hall-existence')
        self.assertEqual(verdict.classification, CONFIRMED)

    def test_vacuous_max_degree(self):
        """|V_i| < 2Δ + 1 이지만 RG 는 연결"""
        instance = {'graph': Graph('abcd', [('a', 'b')]), 'partition': VertexPartition([['a', 'c'], ['b', 'd']])}
        verdict = self.manager.verify_instance(instance, 'max-degree')
        self.assertEqual(verdict.classification, VACUOUS)

    def test_hall_bipartite_on_graph(self):
        star = Graph(['a', 'x', 'y'], [('a', 'x'), ('a', 'y')])
        verdict = self.manager.verify_instance({'graph': star, 'a_side': ['a']}, 'hall-bipartite')
        self.assertEqual(verdict.classification, CONFIRMED)

    def test_counterexample_raises_with_dump(self):
        self.manager.add_theorem(AlwaysBrokenTheorem())
        instance = {'complex': SimplicialComplex.simplex('ab')}
        with self.assertRaises(CounterexampleFound) as caught:
            self.manager.verify_instance(instance, 'always-broken')
        dump = caught.exception.dump
        self.assertEqual(dump['theorem'], 'always-broken')
        self.assertEqual(len(dump['instance_hash']), 64)
        self.assertTrue(caught.exception.verdict.is_counterexample)

    def test_hypothesis_only(self):
        instance = {'complex': independence_complex(self.graph), 'partition': self.partition}
        self.assertFalse(self.manager.evaluate_hypothesis(instance, 'reconfig-hall').holds)


class TestDominationWitness(unittest.TestCase):
    def test_disconnected_kdd(self):
        graph, partition = kdd_single_class(2)
        witness = extract_domination_witness(graph, partition)
        self.assertFalse(witness.connected)
        self.assertLessEqual(len(witness.dominating), 2)
        self.assertTrue(verify_domination_witness(graph, partition, witness.index_set, witness.dominating))
        self.assertEqual(witness.to_dict()['I'], [1])

    def test_connected(self):
        witness = extract_domination_witness(Graph('ab', []), VertexPartition([['a', 'b']]))
        self.assertTrue(witness.connected)
        self.assertEqual(witness.to_dict(), {'connected': True})

    def test_empty_rg_uses_brute_force(self):
        graph = Graph('ab', [('a', 'b')])
        partition = VertexPartition([['a'], ['b']])
        witness = extract_domination_witness(graph, partition)
        self.assertFalse(witness.connected)
        self.assertTrue(verify_domination_witness(graph, partition, witness.index_set, witness.dominating))

    def test_rejects_bad_witness(self):
        graph, partition = kdd_single_class(2)
        self.assertFalse(verify_domination_witness(graph, partition, (), {'a1'}))
        self.assertFalse(verify_domination_witness(graph, partition, (0,), {'a1'}))

    def test_partition_must_cover(self):
        with self.assertRaises(PreconditionError):
            extract_domination_witness(Graph('abc', []), VertexPartition([['a', 'b']]))

    def test_witnesses_on_random_graphs(self):
        """끊어진 경우마다 증거를 독립 재검증하고, 연결 판정은 RG 와 대조"""
        cases = [kdd_single_class(3), kdd_double(1), kdd_double(2)]
        for seed, sizes in enumerate([[2, 2], [2, 2, 2], [3, 3], [2, 3], [2, 2, 3], [3, 3, 2], [1, 2, 2], [2, 2, 2]]):
            cases.append((random_graph(sum(sizes), '1/2', seed), random_partition(sizes, seed)))
        disconnected = 0
        for graph, partition in cases:
            witness = extract_domination_witness(graph, partition)
            rg = rg_colorful(independence_complex(graph), partition)
            self.assertEqual(witness.connected, rg.component_count == 1)
            if witness.connected:
                continue
            disconnected += 1
            self.assertLessEqual(len(witness.dominating), 2 * len(witness.index_set))
            self.assertTrue(verify_domination_witness(graph, partition, witness.index_set, witness.dominating))
        self.assertGreaterEqual(disconnected, 3)


if __name__ == '__main__':
    unittest.main()
