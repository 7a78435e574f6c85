import unittest

from complex.partition import VertexPartition
from complex.simplicial import SimplicialComplex
from graphs.complexes import independence_complex, matching_complex
from graphs.generators import bipartite_counterexample, grid, kdd_single_class
from graphs.graph import Graph, ListAssignment
from matroid.matroid import partition_matroid, uniform_matroid
from reconfig.builders import (build_choice_rule, loose_walk_graph, rg_bipartite_matching, rg_colorful,
                               rg_complex_matroid, rg_list_coloring, rg_matroid_intersection, up_down_walk)
from reconfig.reconfig_graph import ReconfigGraph, analyze, rg_to_payload, shortest_path
from utils.exceptions import CapacityError, ConsistencyError, LookupFailure, StructuralError


class TestReconfigGraph(unittest.TestCase):
    def setUp(self):
        """경로 a – b – c 와 고립 정점 d"""
        self.rg = ReconfigGraph([('a',), ('b',), ('c',), ('d',)], [(0, 1), (1, 2)])

    def test_components(self):
        self.assertEqual(self.rg.component_count, 2)
        self.assertEqual(self.rg.component_labels, (0, 0, 0, 1))
        self.assertEqual(self.rg.components(), [[('a',), ('b',), ('c',)], [('d',)]])

    def test_shortest_path(self):
        self.assertEqual(shortest_path(self.rg, ['a'], ['c']), [('a',), ('b',), ('c',)])
        self.assertIsNone(shortest_path(self.rg, ['a'], ['d']))
        with self.assertRaises(LookupFailure):
            shortest_path(self.rg, ['a'], ['z'])

    def test_duplicate_configuration(self):
        with self.assertRaises(ConsistencyError):
            ReconfigGraph([('a',), ('a',)], [])

    def test_analyze_empty_graph(self):
        result = analyze(ReconfigGraph([], []))
        self.assertTrue(result.empty)
        self.assertFalse(result.is_connected)
        self.assertEqual(result.component_count, 0)

    def test_analyze_diameter(self):
        path = ReconfigGraph([('a',), ('b',), ('c',)], [(0, 1), (1, 2)])
        result = analyze(path, ['a'], ['c'], with_diameter=True)
        self.assertEqual(result.diameter, 2)
        self.assertEqual(result.to_dict()['path'], [['a'], ['b'], ['c']])
        self.assertIsNone(analyze(path, with_diameter=True, cap=2).diameter)

    def test_payload_summary(self):
        payload = rg_to_payload(self.rg)
        self.assertEqual(payload['components'], 2)
        self.assertEqual(payload['witness_vertices_per_component'], [['a'], ['d']])


class TestColorfulRG(unittest.TestCase):
    def test_kdd_single_class_splits(self):
        """I(K_{Δ,Δ}) 의 두 면 → 같은 쪽 정점끼리만 인접, 요소 2개"""
        graph, partition = kdd_single_class(3)
        rg = rg_colorful(independence_complex(graph), partition)
        self.assertEqual(len(rg), 6)
        self.assertEqual(rg.component_count, 2)
        self.assertTrue(rg.adjacent(('a1',), ('a2',)))
        self.assertFalse(rg.adjacent(('a1',), ('b1',)))

    def test_weak_adjacency_ignores_union(self):
        graph, partition = kdd_single_class(2)
        rg = rg_colorful(independence_complex(graph), partition, weak=True)
        self.assertEqual(rg.component_count, 1)
        self.assertEqual(rg.edge_count, 6)

    def test_grid_rainbow_matchings(self):
        """2×2 격자: 행끼리, 열끼리만 서로소"""
        h, partition = grid(2)
        rg = rg_colorful(matching_complex(h), partition)
        self.assertEqual(rg.component_count, 2)
        self.assertTrue(rg.adjacent(('e1',), ('e2',)))

    def test_partial_k(self):
        c = SimplicialComplex.simplex(['u0', 'v0', 'u1', 'v1'])
        v = VertexPartition([['u0', 'v0'], ['u1', 'v1']])
        rg = rg_colorful(c, v, k=1)
        self.assertEqual(len(rg), 4)
        self.assertEqual(rg.component_count, 1)

    def test_k_out_of_range(self):
        graph, partition = kdd_single_class(2)
        with self.assertRaises(StructuralError):
            rg_colorful(independence_complex(graph), partition, k=2)

    def test_loose_walk_graph(self):
        graph, partition = kdd_single_class(2)
        walk = loose_walk_graph(independence_complex(graph), partition)
        self.assertEqual(walk.component_count, 4)


class TestMatroidRG(unittest.TestCase):
    def test_complex_matroid_triangle(self):
        rg = rg_complex_matroid(SimplicialComplex.simplex([0, 1, 2]), uniform_matroid([0, 1, 2], 2), 2)
        self.assertEqual(len(rg), 3)
        self.assertEqual(rg.edge_count, 3)

    def test_candidate_capacity(self):
        with self.assertRaises(CapacityError):
            rg_complex_matroid(SimplicialComplex.simplex([0, 1, 2]), uniform_matroid([0, 1, 2], 2), 2, cap=1)

    def test_ground_set_mismatch(self):
        with self.assertRaises(StructuralError):
            rg_complex_matroid(SimplicialComplex.simplex([0, 1]), uniform_matroid([0, 1, 2], 2), 1)

    def test_matroid_intersection(self):
        """두 분할 매트로이드의 공통 기저 {0,3}, {1,2} 는 인접하지 않음"""
        m = partition_matroid([[0, 1], [2, 3]])
        n = partition_matroid([[0, 2], [1, 3]])
        top = rg_matroid_intersection(m, n, 2)
        self.assertEqual(set(top.configurations), {(0, 3), (1, 2)})
        self.assertEqual(top.component_count, 2)
        self.assertEqual(rg_matroid_intersection(m, n, 1).component_count, 1)

    def test_up_down_walk(self):
        walk = up_down_walk(SimplicialComplex('abc', [('a', 'b'), ('b', 'c')]), 1)
        self.assertEqual(walk.component_count, 1)
        self.assertFalse(walk.adjacent(('a',), ('c',)))


class TestMatchingAndColoringRG(unittest.TestCase):
    def setUp(self):
        self.h, self.a_side = bipartite_counterexample(2)

    def test_bipartite_matching_isolated(self):
        rg = rg_bipartite_matching(self.h, self.a_side)
        self.assertEqual(set(rg.configurations), {('e1', 'e2'), ('e3', 'e4')})
        self.assertEqual(rg.edge_count, 0)

    def test_bipartite_matching_size_one(self):
        rg = rg_bipartite_matching(self.h, self.a_side, k=1)
        self.assertEqual(rg.edge_count, 4)
        self.assertFalse(rg.adjacent(('e1',), ('e4',)))

    def test_too_large_k_is_empty(self):
        self.assertEqual(len(rg_bipartite_matching(self.h, self.a_side, k=3)), 0)

    def test_two_colors_on_an_edge_are_frozen(self):
        path = Graph('ab', [('a', 'b')])
        rg = rg_list_coloring(path, ListAssignment({'a': [1, 2], 'b': [1, 2]}))
        self.assertEqual(len(rg), 2)
        self.assertEqual(rg.component_count, 2)

    def test_three_colors_on_an_edge_connect(self):
        path = Graph('ab', [('a', 'b')])
        rg = rg_list_coloring(path, ListAssignment({'a': [1, 2, 3], 'b': [1, 2, 3]}))
        self.assertEqual(len(rg), 6)
        self.assertEqual(rg.component_count, 1)


class TestChoiceRule(unittest.TestCase):
    def test_square(self):
        rg = build_choice_rule([2, 2], lambda choice: True, lambda j, choice: True)
        self.assertEqual(len(rg), 4)
        self.assertEqual(rg.edge_count, 4)
        self.assertTrue(rg.contains(((0, 0), (1, 1))))

    def test_reduced_rejection(self):
        rg = build_choice_rule([2, 2], lambda choice: True, lambda j, choice: j == 0)
        self.assertEqual(rg.edge_count, 2)
        self.assertEqual(rg.component_count, 2)

    def test_capacity(self):
        with self.assertRaises(CapacityError):
            build_choice_rule([3, 3], lambda c: True, lambda j, c: True, cap=8)


if __name__ == '__main__':
    unittest.main()
