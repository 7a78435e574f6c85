import unittest

from config.capacity_config import get_capacity_config, settings
from hallcheck.reports import COUNTEREXAMPLE
from sweep.sweep_manager import (SKIPPED, SweepManager, graph_items, materialize, matroid_items, run_chunk,
                                 tverberg_items)
from utils.exceptions import LookupFailure, StructuralError


class TestItems(unittest.TestCase):
    def test_graph_items(self):
        """n=1: 그래프 1 × 분할 1, n=2: 그래프 2 × 분할 2"""
        items = list(graph_items(2, 2))
        self.assertEqual(len(items), 5)
        self.assertEqual(items[0], {'vertices': [0], 'edges': [], 'classes': [[0]]})

    def test_matroid_items(self):
        self.assertEqual(list(matroid_items(1)), [{'n': 1, 'classes': [[0]], 'rank': 1, 'k': 1}])

    def test_tverberg_items_default_size(self):
        items = list(tverberg_items(1, 2, 3))
        self.assertEqual([item['seed'] for item in items], [0, 1, 2])
        self.assertTrue(all(item['n'] == 4 for item in items))

    def test_materialize(self):
        instance = materialize('graphs', 'reconfig-hall', {'vertices': [0, 1], 'edges': [], 'classes': [[0, 1]]})
        self.assertEqual(instance['delta'], 1)
        self.assertIn('complex', instance)
        matroids = materialize('matroids', 'complex-matroid', {'n': 2, 'classes': [[0, 1]], 'rank': 1, 'k': 1})
        self.assertEqual(set(matroids), {'complex', 'matroid', 'k'})
        with self.assertRaises(StructuralError):
            materialize('lattices', 'reconfig-hall', {})


class TestRunChunk(unittest.TestCase):
    def test_precondition_failure_is_skipped(self):
        """|V_i| < 2Δ 이면 bko 전제 조건 위반으로 건너뜀"""
        chunk = [{'index': 0, 'item': {'vertices': [0], 'edges': [], 'classes': [[0]]}}]
        rows = run_chunk('graphs', 'bko', chunk)
        self.assertEqual(rows[0]['classification'], SKIPPED)
        self.assertIn('reason', rows[0])

    def test_forwarded_caps_apply_in_worker(self):
        """부모 프로세스의 RG 후보 상한이 작업자에서도 적용됨"""
        saved = settings.RG_CANDIDATE_CAP
        try:
            caps = dict(get_capacity_config(), rg_candidate_cap=1)
            rows = run_chunk('tverberg', 'tverberg-reconfig', [{'index': 0, 'item': next(tverberg_items(1, 2, 1))}],
                             caps=caps)
            self.assertEqual(rows[0]['classification'], SKIPPED)
            self.assertEqual(settings.RG_CANDIDATE_CAP, 1)
        finally:
            settings.RG_CANDIDATE_CAP = saved


class TestSweepManager(unittest.TestCase):
    def setUp(self):
        self.manager = SweepManager(workers=1, chunk_size=2)

    def test_graph_sweep(self):
        result = self.manager.run('graphs', 'reconfig-hall', graph_items(2, 2))
        self.assertEqual(result['count'], 5)
        self.assertEqual(sum(result['summary'].values()), 5)
        self.assertEqual(result['counterexamples'], [])
        self.assertEqual(result['witness_count'], len(result['witnesses']))
        self.assertNotIn(f'reconfig-hall:{COUNTEREXAMPLE}', result['summary'])

    def test_tverberg_sweep(self):
        result = self.manager.run('tverberg', 'tverberg-reconfig', tverberg_items(1, 2, 2))
        self.assertEqual(result['count'], 2)
        self.assertEqual(result['family'], 'tverberg')
        self.assertEqual(result['counterexamples'], [])

    def test_unknown_family(self):
        with self.assertRaises(StructuralError):
            self.manager.run('lattices', 'reconfig-hall', iter([]))

    def test_unknown_theorem(self):
        with self.assertRaises(LookupFailure):
            self.manager.run('graphs', 'no-such-theorem', iter([]))

    def test_empty_summary(self):
        result = SweepManager.summarize('graphs', 'reconfig-hall', [])
        self.assertEqual(result['count'], 0)
        self.assertEqual(result['summary'], {})


if __name__ == '__main__':
    unittest.main()
