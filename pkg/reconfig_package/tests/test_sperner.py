import unittest

from sperner.paths import colorful_simplices, follow_paths
from sperner.prism import (BASE_BOTTOM, BASE_TOP, LATERAL, corner_coloring, random_r_sperner_coloring,
                           staircase_triangulation, supporting_face, triangulation_from_dict, validate_r_sperner)
from utils.exceptions import PreconditionError, StructuralError


class TestStaircase(unittest.TestCase):
    def test_top_simplex_count(self):
        """층 수 × 밑면 단체 수 × (n + 1)"""
        self.assertEqual(len(staircase_triangulation(1, 1).top_simplices), 2)
        self.assertEqual(len(staircase_triangulation(2, 3, base_subdivisions=2).top_simplices), 36)

    def test_invalid_parameters(self):
        with self.assertRaises(StructuralError):
            staircase_triangulation(1, 0)
        with self.assertRaises(StructuralError):
            staircase_triangulation(-1, 1)

    def test_payload_round_trip(self):
        t = staircase_triangulation(2, 2)
        restored = triangulation_from_dict(t.to_dict())
        self.assertEqual(restored.top_simplices, t.top_simplices)
        self.assertEqual(restored.vertices, t.vertices)

    def test_branching_rejected(self):
        payload = staircase_triangulation(1, 1).to_dict()
        payload['top_simplices'].append(list(payload['top_simplices'][0]))
        with self.assertRaises(StructuralError):
            triangulation_from_dict(payload)

    def test_supporting_faces(self):
        t = staircase_triangulation(1, 2)
        self.assertEqual(supporting_face(t, '1.0@0').kind, BASE_BOTTOM)
        self.assertEqual(supporting_face(t, '0.1@2').kind, BASE_TOP)
        middle = supporting_face(t, '1.0@1')
        self.assertEqual(middle.kind, LATERAL)
        self.assertEqual(middle.to_dict(), {'index_set': [0], 'kind': LATERAL})
        with self.assertRaises(StructuralError):
            supporting_face(t, 'nowhere')


class TestColoring(unittest.TestCase):
    def test_corner_coloring_is_valid(self):
        t = staircase_triangulation(2, 2, base_subdivisions=2)
        self.assertTrue(validate_r_sperner(t, corner_coloring(t)).valid)

    def test_violation_is_reported(self):
        t = staircase_triangulation(1, 1)
        coloring = {v: 0 for v in t.vertex_ids()}
        result = validate_r_sperner(t, coloring)
        self.assertFalse(result.valid)
        self.assertEqual({row['vertex'] for row in result.violations}, {'0.1@0', '0.1@1'})

    def test_missing_color(self):
        t = staircase_triangulation(1, 1)
        with self.assertRaises(StructuralError):
            validate_r_sperner(t, {})


class TestFollowPaths(unittest.TestCase):
    def test_segment_prism(self):
        """n = 1, 층 하나: 바닥 간선에서 천장 간선으로 가는 경로 하나"""
        t = staircase_triangulation(1, 1)
        coloring = corner_coloring(t)
        self.assertEqual(colorful_simplices(t, coloring)[0], ('0.1@0', '1.0@0'))
        report = follow_paths(t, coloring)
        self.assertEqual(len(report.connecting), 1)
        self.assertEqual(report.bottom_count, 1)
        self.assertEqual(report.top_count, 1)
        self.assertTrue(report.to_dict()['parity_ok'])

    def test_random_colorings_keep_parity(self):
        t = staircase_triangulation(2, 2, base_subdivisions=2)
        for seed in range(5):
            report = follow_paths(t, random_r_sperner_coloring(t, seed))
            self.assertTrue(report.parity_ok)
            self.assertEqual(len(report.connecting) % 2, 1)

    def test_parity_across_settings(self):
        """차원, 층 수, 밑면 분할을 바꿔도 연결 경로 수 ≡ 바닥 개수 ≡ 천장 개수 (mod 2)"""
        for n, subdivisions, base in ((1, 1, 1), (1, 3, 2), (1, 4, 3), (2, 1, 1), (2, 3, 1), (3, 1, 1), (3, 2, 1)):
            t = staircase_triangulation(n, subdivisions, base_subdivisions=base)
            for seed in range(3):
                report = follow_paths(t, random_r_sperner_coloring(t, seed))
                self.assertTrue(report.parity_ok, (n, subdivisions, base, seed))
                self.assertEqual(len(report.connecting) % 2, report.bottom_count % 2)
                self.assertEqual(len(report.connecting) % 2, report.top_count % 2)

    def test_paths_start_at_bottom(self):
        t = staircase_triangulation(2, 3, base_subdivisions=2)
        report = follow_paths(t, random_r_sperner_coloring(t, 11))
        for path in report.connecting:
            self.assertEqual(t.facet_of_face(path[0])[0], BASE_BOTTOM)

    def test_invalid_coloring_rejected(self):
        t = staircase_triangulation(1, 1)
        with self.assertRaises(PreconditionError):
            follow_paths(t, {v: 0 for v in t.vertex_ids()})


if __name__ == '__main__':
    unittest.main()
