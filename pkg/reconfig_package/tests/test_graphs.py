import math
import unittest
from fractions import Fraction

from complex.partition import VertexPartition
from graphs.complexes import independence_complex, matching_complex
from graphs.generators import (all_graphs, all_partitions, bipartite_counterexample, generate, grid, kdd_double,
                               kdd_single_class, latin_partition, random_graph, random_partition)
from graphs.graph import Graph, Hypergraph, ListAssignment, lists_from_dict
from graphs.list_coloring import (EDGE_MODE, VERTEX_MODE, coloring_from_configuration, list_coloring_reduction,
                                  max_color_degree)
from graphs.params import (cover_number, domination_params, fractional_matching_number, is_disjoint_kdd_union, link,
                           matching_number, matching_numbers, neighborhood)
from homology.betti import eta_h
from utils.exceptions import CapacityError, StructuralError


def cycle(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


class TestGraphTypes(unittest.TestCase):
    def test_rejects_loops_and_duplicates(self):
        with self.assertRaises(StructuralError):
            Graph('ab', [('a', 'a')])
        with self.assertRaises(StructuralError):
            Graph('ab', [('a', 'b'), ('b', 'a')])
        with self.assertRaises(StructuralError):
            Graph('ab', [('a', 'z')])

    def test_hypergraph_uniformity_and_ids(self):
        with self.assertRaises(StructuralError):
            Hypergraph('abc', [('a', 'b'), ('c',)], r=2)
        with self.assertRaises(StructuralError):
            Hypergraph('abc', [('a', 'b'), ('b', 'c')], edge_ids=['e', 'e'])

    def test_parallel_edges_allowed(self):
        h = Hypergraph('ab', [('a', 'b'), ('a', 'b')])
        self.assertEqual(h.max_degree(), 2)
        self.assertFalse(h.is_matching(h.edge_ids))

    def test_from_graph(self):
        h = Hypergraph.from_graph(cycle(4))
        self.assertEqual(h.r, 2)
        self.assertEqual(len(h.edges), 4)

    def test_lists_restore_integer_keys(self):
        lists = lists_from_dict({'lists': {'0': [1, 2], '1': [2]}}, [0, 1])
        self.assertEqual(lists[0], (1, 2))
        with self.assertRaises(StructuralError):
            lists_from_dict({'lists': {'7': [1]}}, [0, 1])

    def test_empty_list_rejected(self):
        with self.assertRaises(StructuralError):
            ListAssignment({'a': []})


class TestComplexesOfGraphs(unittest.TestCase):
    def test_independence_complex_of_c4(self):
        """I(C₄) 는 서로소인 두 간선 {0,2}, {1,3}"""
        ic = independence_complex(cycle(4))
        self.assertEqual(ic.maximal_faces, frozenset({frozenset({0, 2}), frozenset({1, 3})}))
        self.assertEqual(eta_h(ic), 1)

    def test_independence_complex_of_edgeless_graph_is_simplex(self):
        ic = independence_complex(Graph('abc', []))
        self.assertEqual(ic.dim, 2)

    def test_matching_complex_of_path(self):
        """경로 P₄ 의 간선 e0, e1, e2: e0 과 e2 만 서로소"""
        path = Hypergraph(range(4), [(0, 1), (1, 2), (2, 3)])
        mc = matching_complex(path)
        self.assertTrue(mc.contains(['e0', 'e2']))
        self.assertFalse(mc.contains(['e0', 'e1']))


class TestParams(unittest.TestCase):
    def test_domination_of_c4(self):
        params = domination_params(cycle(4))
        self.assertEqual(params.total, 2)
        self.assertEqual(params.independent, 1)

    def test_isolated_vertex_is_infinite(self):
        params = domination_params(Graph('abc', [('a', 'b')]))
        self.assertEqual(params.total, math.inf)
        self.assertEqual(params.independent, math.inf)

    def test_domination_capacity(self):
        with self.assertRaises(CapacityError):
            domination_params(cycle(6), cap=5)

    def test_triangle_matching_numbers(self):
        """K₃: ν = 1, ν* = 3/2, τ = 2"""
        triangle = Hypergraph.from_graph(cycle(3))
        numbers = matching_numbers(triangle)
        self.assertEqual(numbers.nu, 1)
        self.assertEqual(numbers.nu_star, Fraction(3, 2))
        self.assertEqual(numbers.tau, 2)

    def test_empty_hypergraph(self):
        h = Hypergraph('ab', [])
        self.assertEqual(matching_number(h), 0)
        self.assertEqual(cover_number(h), 0)
        self.assertEqual(fractional_matching_number(h), 0)

    def test_link_and_neighborhood(self):
        h, a_side = bipartite_counterexample(2)
        lk = link(h, a_side, ['x1'])
        self.assertEqual(set(lk.edge_ids), {'e1', 'e3'})
        self.assertEqual(set(lk.vertices), {'x2', 'y2'})
        self.assertEqual(lk.r, 1)
        self.assertEqual(neighborhood(h, a_side, ['x1']), frozenset({'x2', 'y2'}))

    def test_link_requires_bipartite(self):
        h, _ = bipartite_counterexample(2)
        with self.assertRaises(StructuralError):
            link(h, ['x1'], ['x1'])
        with self.assertRaises(StructuralError):
            link(h, ['x1', 'y1'], ['x2'])

    def test_kdd_union_detection(self):
        self.assertTrue(is_disjoint_kdd_union(kdd_single_class(2)[0], 2))
        self.assertTrue(is_disjoint_kdd_union(kdd_double(3)[0], 3))
        self.assertFalse(is_disjoint_kdd_union(cycle(6), 2))
        self.assertFalse(is_disjoint_kdd_union(cycle(8), 2))


class TestListColoring(unittest.TestCase):
    def setUp(self):
        self.path = Graph('ab', [('a', 'b')])
        self.lists = ListAssignment({'a': [1, 2], 'b': [1]})

    def test_vertex_reduction(self):
        aux, partition = list_coloring_reduction(self.path, self.lists, VERTEX_MODE)
        self.assertEqual(partition.classes, ((('a', 1), ('a', 2)), (('b', 1),)))
        self.assertTrue(aux.adjacent(('a', 1), ('b', 1)))
        self.assertFalse(aux.adjacent(('a', 2), ('b', 1)))
        self.assertEqual(max_color_degree(self.path, self.lists), 1)

    def test_edge_reduction(self):
        h = Hypergraph.from_graph(Graph('abc', [('a', 'b'), ('b', 'c')]))
        lists = ListAssignment({'e0': ['r', 'g'], 'e1': ['r']})
        aux, partition = list_coloring_reduction(h, lists, EDGE_MODE)
        self.assertEqual(partition.n, 2)
        self.assertEqual(len(aux.edges), 3)
        self.assertEqual(max_color_degree(h, lists, EDGE_MODE), 2)

    def test_unknown_mode(self):
        with self.assertRaises(StructuralError):
            list_coloring_reduction(self.path, self.lists, 'face')

    def test_coloring_from_configuration(self):
        self.assertEqual(coloring_from_configuration((('a', 2), ('b', 1))), {'a': 2, 'b': 1})


class TestGenerators(unittest.TestCase):
    def test_kdd_double_partition(self):
        graph, partition = kdd_double(2)
        self.assertEqual(len(graph.vertices), 8)
        self.assertEqual(partition.classes, (('a1', 'a2', 'c1', 'c2'), ('b1', 'b2', 'd1', 'd2')))

    def test_grid(self):
        h, partition = grid(3)
        self.assertEqual(len(h.vertices), 9)
        self.assertEqual(len(h.edges), 6)
        self.assertEqual(partition.n, 1)

    def test_latin_partition(self):
        h, partition = latin_partition(3, seed=1)
        self.assertEqual(partition.n, 3)
        self.assertTrue(all(len(cls) == 3 for cls in partition.classes))
        self.assertEqual(partition.union(), frozenset(h.edge_ids))

    def test_seeded_randomness_is_reproducible(self):
        self.assertEqual(random_graph(6, "1/2", seed=3), random_graph(6, "1/2", seed=3))
        self.assertEqual(random_partition([2, 3], seed=5), random_partition([2, 3], seed=5))

    def test_invalid_probability(self):
        with self.assertRaises(StructuralError):
            random_graph(3, 2, seed=0)

    def test_enumeration_counts(self):
        """정점 1, 2, 3개 라벨 그래프: 1 + 2 + 8"""
        self.assertEqual(sum(1 for _ in all_graphs(3)), 11)
        self.assertEqual(sum(1 for _ in all_partitions('abc', 3, 3)), 5)
        self.assertEqual(list(all_partitions('abc', 3, 1)), [VertexPartition([['a'], ['b'], ['c']])])

    def test_generate_by_name(self):
        instance = generate('kdd_single_class', delta=2)
        self.assertEqual(instance['partition'].n, 1)
        with self.assertRaises(StructuralError):
            generate('petersen')
        with self.assertRaises(StructuralError):
            generate('grid')


if __name__ == '__main__':
    unittest.main()
