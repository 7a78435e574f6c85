"""
복합체, 매트로이드, 그래프, 하이퍼그래프 정리 구현 모듈

각 정리는 TheoremBase를 상속받아 checkers 의 가설 평가기와 브루트포스 오라클을 연결합니다.

인스턴스 키:
    complex (SimplicialComplex), partition (VertexPartition), matroid / matroid2 (Matroid),
    graph (Graph), hypergraph (Hypergraph), a_side (List), lists (ListAssignment),
    m, d, k, delta (int), oracle (str), cap (int, 선택)
"""

import logging
from typing import Any, Dict, Tuple

from complex.derived import colorful_complex, colorful_nerve, colorful_simplices, intersection_complex
from complex.simplicial import SimplicialComplex
from graphs.complexes import independence_complex, matching_complex
from graphs.graph import Hypergraph
from graphs.list_coloring import EDGE_MODE, VERTEX_MODE
from hallcheck import checkers
from hallcheck.reports import HypothesisReport
from hallcheck.TheoremBase import Instance, TheoremBase
from homology.betti import eta_h
from reconfig.builders import (loose_walk_graph, rg_bipartite_matching, rg_colorful, rg_complex_matroid,
                               rg_list_coloring, rg_matroid_intersection)
from reconfig.reconfig_graph import ReconfigGraph, rg_to_payload
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')

HOMOLOGY_ORACLE = 'homology'
LOOSE_WALK_ORACLE = 'loose-walk'


def connected_oracle(rg: ReconfigGraph) -> Tuple[bool, Dict[str, Any]]:
    """RG 가 비어 있지 않고 연결인지"""
    return rg.component_count == 1, dict(rg_to_payload(rg), oracle='rg-connectivity')


def eta_oracle(c: SimplicialComplex, m: int) -> Tuple[bool, Dict[str, Any]]:
    """η_H(c) ≥ m + 1 인지"""
    eta = eta_h(c)
    return eta >= m + 1, {'oracle': HOMOLOGY_ORACLE, 'eta': eta, 'bound': m + 1}


def _hypergraph(instance: Instance) -> Hypergraph:
    if 'hypergraph' in instance:
        return instance['hypergraph']
    if 'graph' in instance:
        return Hypergraph.from_graph(instance['graph'])
    raise StructuralError("인스턴스에 hypergraph 또는 graph 키가 필요합니다")


def _deficient_size(instance: Instance) -> int:
    return instance['partition'].n - instance.get('d', 0)


class HallExistenceTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| ⇒ 컬러풀 단체 존재"""

    theorem_id = 'hall-existence'
    required_keys = ('complex', 'partition')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=0,
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        found = colorful_simplices(instance['complex'], instance['partition'])
        return bool(found), {'oracle': 'colorful-simplex', 'count': len(found),
                             'witness': list(found[0]) if found else None}


class ReconfigHallTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| + 1 ⇒ RG(C, V) 가 비어 있지 않고 연결"""

    theorem_id = 'reconfig-hall'
    required_keys = ('complex', 'partition')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=1,
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_colorful(instance['complex'], instance['partition'], cap=instance.get('cap')))


class ColorfulComplexTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| + m ⇒ η_H(Col(C, V)) ≥ m + 1"""

    theorem_id = 'colorful-complex'
    required_keys = ('complex', 'partition')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=instance.get('m', 1),
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        v = instance['partition']
        return eta_oracle(colorful_complex(instance['complex'], v, v.n), instance.get('m', 1))


class DeficiencyExistenceTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| − d (|I| ≥ d) ⇒ 크기 n − d 인 부분 컬러풀 단체 존재"""

    theorem_id = 'deficiency-existence'
    required_keys = ('complex', 'partition', 'd')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=0, d=instance['d'],
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        k = _deficient_size(instance)
        if k < 1:
            return True, {'oracle': 'partial-colorful-simplex', 'size': k, 'count': 1}
        rg = rg_colorful(instance['complex'], instance['partition'], k=k, cap=instance.get('cap'))
        return len(rg) > 0, {'oracle': 'partial-colorful-simplex', 'size': k, 'count': len(rg)}


class DeficiencyComplexTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| − d + m ⇒ η_H(Col(C, V; n − d)) ≥ m + 1"""

    theorem_id = 'deficiency-complex'
    required_keys = ('complex', 'partition', 'd')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=instance.get('m', 1),
                                   d=instance['d'], theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        col = colorful_complex(instance['complex'], instance['partition'], _deficient_size(instance))
        return eta_oracle(col, instance.get('m', 1))


class DeficiencyReconfigTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| − d + 1 ⇒ RG(C, V; n − d) 연결"""

    theorem_id = 'deficiency-reconfig'
    required_keys = ('complex', 'partition', 'd')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=1, d=instance['d'],
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        rg = rg_colorful(instance['complex'], instance['partition'], k=_deficient_size(instance),
                         cap=instance.get('cap'))
        return connected_oracle(rg)


class ColorfulNerveTheorem(TheoremBase):
    """η_H(C[V_I]) ≥ |I| + m ⇒ η_H(CN(C, V)) ≥ m + 1

    oracle 키로 결론의 해석을 고릅니다: homology (기본) 는 신경의 연결성,
    loose-walk 는 컬러풀 단체 교차 그래프의 연결성 (m = 1 전용)입니다.
    """

    theorem_id = 'colorful-nerve'
    required_keys = ('complex', 'partition')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall(instance['complex'], instance['partition'], m=instance.get('m', 1),
                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        oracle = instance.get('oracle', HOMOLOGY_ORACLE)
        m = instance.get('m', 1)
        if oracle == HOMOLOGY_ORACLE:
            return eta_oracle(colorful_nerve(instance['complex'], instance['partition']), m)
        if oracle == LOOSE_WALK_ORACLE:
            if m != 1:
                raise StructuralError(f"loose-walk 오라클은 m = 1 에서만 정의됩니다: m={m}")
            ok, payload = connected_oracle(loose_walk_graph(instance['complex'], instance['partition']))
            return ok, dict(payload, oracle=LOOSE_WALK_ORACLE)
        raise StructuralError(f"지원하지 않는 colorful-nerve 오라클입니다: {oracle}")


class ComplexMatroidReconfigTheorem(TheoremBase):
    """η(C[X]) + r(M[V − X]) ≥ k + 1 ⇒ RG(C, M; k) 연결"""

    theorem_id = 'complex-matroid-reconfig'
    required_keys = ('complex', 'matroid', 'k')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_complex_matroid(instance['complex'], instance['matroid'], instance['k'], m_conn=1,
                                              theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_complex_matroid(instance['complex'], instance['matroid'], instance['k'],
                                                   cap=instance.get('cap')))


class ComplexMatroidConnectednessTheorem(TheoremBase):
    """η(C[X]) + r(M[V − X]) ≥ k + m ⇒ η_H(Int(C, M; k)) ≥ m + 1"""

    theorem_id = 'complex-matroid-connectedness'
    required_keys = ('complex', 'matroid', 'k')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_complex_matroid(instance['complex'], instance['matroid'], instance['k'],
                                              m_conn=instance.get('m', 1), theorem_id=self.theorem_id,
                                              cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        inter = intersection_complex(instance['complex'], instance['matroid'], instance['k'])
        return eta_oracle(inter, instance.get('m', 1))


class MatroidIntersectionTheorem(TheoremBase):
    """r(M[X]) + r(N[V − X]) ≥ k + 1 ⇒ RG(M, N; k) 연결"""

    theorem_id = 'matroid-intersection'
    required_keys = ('matroid', 'matroid2', 'k')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_matroid_intersection(instance['matroid'], instance['matroid2'], instance['k'],
                                                   theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_matroid_intersection(instance['matroid'], instance['matroid2'], instance['k'],
                                                        cap=instance.get('cap')))


class MatroidIntersectionCorollaryTheorem(MatroidIntersectionTheorem):
    """k ≤ ν(M, N) − 1 ⇒ RG(M, N; k) 연결"""

    theorem_id = 'matroid-intersection-corollary'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_matroid_intersection_corollary(instance['matroid'], instance['matroid2'],
                                                             instance['k'], theorem_id=self.theorem_id,
                                                             cap=instance.get('cap'))


class _IndependentTransversalTheorem(TheoremBase):
    """결론: RG(I(G), V) 연결"""

    required_keys = ('graph', 'partition')

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_colorful(independence_complex(instance['graph']), instance['partition'],
                                            cap=instance.get('cap')))


class BKOTheorem(_IndependentTransversalTheorem):
    """최대 차수 Δ, |V_i| ≥ 2Δ 에서 어떤 G[V_I] 도 |I| 개 K_{Δ,Δ} 의 서로소 합이 아니면 연결"""

    theorem_id = 'bko'
    required_keys = ('graph', 'partition', 'delta')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_bko(instance['graph'], instance['partition'], instance['delta'],
                                  theorem_id=self.theorem_id, cap=instance.get('cap'))


class TotalDominationTheorem(_IndependentTransversalTheorem):
    theorem_id = 'domination-total'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_domination_total(instance['graph'], instance['partition'],
                                               theorem_id=self.theorem_id, cap=instance.get('cap'))


class IndependentDominationTheorem(_IndependentTransversalTheorem):
    theorem_id = 'domination-independent'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_domination_independent(instance['graph'], instance['partition'],
                                                     theorem_id=self.theorem_id, cap=instance.get('cap'))


class MaxDegreeTheorem(_IndependentTransversalTheorem):
    theorem_id = 'max-degree'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_max_degree(instance['graph'], instance['partition'], theorem_id=self.theorem_id)


class RainbowMatchingTheorem(TheoremBase):
    """|E_i| ≥ rΔ + 1 ⇒ 무지개 매칭 RG(M(H), E) 연결"""

    theorem_id = 'rainbow'
    required_keys = ('partition',)

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_rainbow(_hypergraph(instance), instance['partition'], theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_colorful(matching_complex(_hypergraph(instance)), instance['partition'],
                                            cap=instance.get('cap')))


class LatinSquareTheorem(TheoremBase):
    """K_{n,n} 간선을 크기 n 인 n 개 클래스로 나누면 크기 ⌈2n/3 − 3/2⌉ 무지개 매칭 RG 연결

    가설의 2n/3 하한은 외부 결과이므로 작은 n 에서 오라클 확인만 합니다.
    """

    theorem_id = 'latin-square'
    required_keys = ('hypergraph', 'partition')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_latin_square(instance['hypergraph'], instance['partition'], theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        v = instance['partition']
        k = min(max(checkers.latin_square_k(v.n), 1), v.n)
        rg = rg_colorful(matching_complex(instance['hypergraph']), v, k=k, cap=instance.get('cap'))
        ok, payload = connected_oracle(rg)
        return ok, dict(payload, k=k)


class _BipartiteMatchingTheorem(TheoremBase):
    """결론: RG_Mat(H, A; k) 연결 (k 기본값 |A|)"""

    required_keys = ('a_side',)

    def matching_size(self, instance: Instance) -> int:
        return instance.get('k', len(instance['a_side']))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        k = self.matching_size(instance)
        if k < 1:
            return True, {'oracle': 'rg-connectivity', 'k': k, 'vertices': 1, 'components': 1}
        rg = rg_bipartite_matching(_hypergraph(instance), instance['a_side'], k=k, cap=instance.get('cap'))
        ok, payload = connected_oracle(rg)
        return ok, dict(payload, k=k)


class DeficiencyLinkTheorem(_BipartiteMatchingTheorem):
    """η_H(M(lk_H(X))) ≥ |X| − d + 1 ⇒ RG_Mat(H, A; |A| − d) 연결"""

    theorem_id = 'deficiency-link'
    required_keys = ('hypergraph', 'a_side')

    def matching_size(self, instance: Instance) -> int:
        return len(instance['a_side']) - instance.get('d', 0)

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_deficiency_link(instance['hypergraph'], instance['a_side'], instance.get('d', 0),
                                              theorem_id=self.theorem_id, cap=instance.get('cap'))


class HallHypergraphTheorem(_BipartiteMatchingTheorem):
    """ν(lk_H(X)) ≥ (r − 1)|X| + 1 ⇒ RG_Mat(H, A) 연결"""

    theorem_id = 'hall-hypergraph'
    required_keys = ('hypergraph', 'a_side')

    def matching_size(self, instance: Instance) -> int:
        return len(instance['a_side'])

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall_hypergraph(instance['hypergraph'], instance['a_side'],
                                              theorem_id=self.theorem_id, cap=instance.get('cap'))


class HallBipartiteTheorem(_BipartiteMatchingTheorem):
    """|N(X)| ≥ |X| + 1 ⇒ A 를 덮는 매칭들의 RG 연결"""

    theorem_id = 'hall-bipartite'

    def matching_size(self, instance: Instance) -> int:
        return len(instance['a_side'])

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_hall_bipartite(_hypergraph(instance), instance['a_side'],
                                             theorem_id=self.theorem_id, cap=instance.get('cap'))


class KonigTheorem(_BipartiteMatchingTheorem):
    theorem_id = 'konig'
    required_keys = ('hypergraph', 'a_side', 'k')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_konig(instance['hypergraph'], instance['a_side'], instance['k'],
                                    theorem_id=self.theorem_id)


class Ryser3Theorem(_BipartiteMatchingTheorem):
    theorem_id = 'ryser-3'
    required_keys = ('hypergraph', 'a_side', 'k')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_ryser3(instance['hypergraph'], instance['a_side'], instance['k'],
                                     theorem_id=self.theorem_id)


class VertexListColoringTheorem(TheoremBase):
    """|L(v)| ≥ 2Δ + 1 ⇒ 적절한 L-색칠들의 RG 연결"""

    theorem_id = 'vertex-list-coloring'
    required_keys = ('graph', 'lists')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_vertex_list_coloring(instance['graph'], instance['lists'], theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_list_coloring(instance['graph'], instance['lists'], VERTEX_MODE,
                                                 cap=instance.get('cap')))


class EdgeListColoringTheorem(TheoremBase):
    """|L(e)| ≥ rΔ + 1 ⇒ 적절한 간선 L-색칠들의 RG 연결"""

    theorem_id = 'edge-list-coloring'
    required_keys = ('lists',)

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_edge_list_coloring(_hypergraph(instance), instance['lists'], theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_list_coloring(_hypergraph(instance), instance['lists'], EDGE_MODE,
                                                 cap=instance.get('cap')))
