"""
Helly 형 정리와 기하 정리 구현 모듈

인스턴스 키:
    complex (SimplicialComplex), matroid (Matroid), d (int: Leray 수 또는 공간 차원),
    points (PointConfig), r (int), a_sets (List[List[벡터]]), x (벡터),
    families (HPolytopeFamily), m (int), cap (int, 선택)
"""

import logging
from typing import Any, Dict, Tuple

from complex.derived import alexander_dual, intersection_complex
from geometry.caratheodory import rg_colorful_caratheodory, rg_colorful_helly
from geometry.order_complexes import colcat_complex, colhel_complex, tver_complex
from geometry.tverberg import rg_tverberg
from hallcheck import checkers
from hallcheck.reports import HypothesisReport
from hallcheck.TheoremBase import Instance, TheoremBase
from hallcheck.Theorems import connected_oracle, eta_oracle
from reconfig.builders import rg_complex_matroid
from utils.exceptions import PreconditionError

logger = logging.getLogger('reconfig-center')


class _DualTheorem(TheoremBase):
    """C⋆ 와 M* 위의 결론을 쓰는 위상 Helly 정리 공통부"""

    required_keys = ('complex', 'matroid', 'd')

    @staticmethod
    def dual_pair(instance: Instance):
        """(C⋆, M*, r(M*))

        Raises:
            PreconditionError: 바탕 집합 전체가 C 의 면인 경우
        """
        dual_matroid = instance['matroid'].dual()
        return alexander_dual(instance['complex']), dual_matroid, dual_matroid.full_rank


class TopologicalHellyTheorem(_DualTheorem):
    """C 가 d-Leray 이고 모든 A ∈ C 에서 r(M[V − A]) ≥ d + 2 ⇒ RG(C⋆, M*) 연결"""

    theorem_id = 'topological-helly'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_topological_helly(instance['complex'], instance['matroid'], instance['d'], m_conn=1,
                                                theorem_id=self.theorem_id, cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        dual_complex, dual_matroid, rank = self.dual_pair(instance)
        if rank == 0:
            # V ∉ C 이므로 ∅ ∈ C⋆ 이고 RG 는 정점 ∅ 하나
            return True, {'oracle': 'rg-connectivity', 'dual_rank': 0, 'vertices': 1, 'components': 1}
        ok, payload = connected_oracle(rg_complex_matroid(dual_complex, dual_matroid, rank, cap=instance.get('cap')))
        return ok, dict(payload, dual_rank=rank)


class TopologicalHellyConnectednessTheorem(_DualTheorem):
    """… ≥ d + m + 1 ⇒ η_H(Int(C⋆, M*)) ≥ m + 1"""

    theorem_id = 'topological-helly-connectedness'

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_topological_helly(instance['complex'], instance['matroid'], instance['d'],
                                                m_conn=instance.get('m', 1), theorem_id=self.theorem_id,
                                                cap=instance.get('cap'))

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        """
        Raises:
            PreconditionError: r(M*) = 0 인 경우
        """
        dual_complex, dual_matroid, rank = self.dual_pair(instance)
        if rank == 0:
            raise PreconditionError("r(M*) = 0 이면 Int(C⋆, M*) 는 {∅} 뿐이라 연결도 결론이 정의되지 않습니다")
        ok, payload = eta_oracle(intersection_complex(dual_complex, dual_matroid, rank), instance.get('m', 1))
        return ok, dict(payload, dual_rank=rank)


class ColorfulCaratheodoryTheorem(TheoremBase):
    """x ∈ conv(A_i) ∀i, n ≥ d + 2 ⇒ RG_CC 연결"""

    theorem_id = 'colorful-caratheodory'
    required_keys = ('a_sets', 'x')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_colorful_caratheodory(instance['a_sets'], instance['x'], m_conn=1,
                                                    theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_colorful_caratheodory(instance['a_sets'], instance['x'], cap=instance.get('cap')))


class ColorfulHellyTheorem(TheoremBase):
    """⋂F_i = ∅ ∀i, n ≥ d + 2 ⇒ RG_CH 연결"""

    theorem_id = 'colorful-helly'
    required_keys = ('families', 'd')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_colorful_helly(instance['families'], instance['d'], m_conn=1,
                                             theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_colorful_helly(instance['families'], instance['d'], cap=instance.get('cap')))


class TverbergReconfigTheorem(TheoremBase):
    """|X| ≥ (d + 1)(r − 1) + 2 ⇒ RG_Tv(X, r) 연결"""

    theorem_id = 'tverberg-reconfig'
    required_keys = ('points', 'r')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_tverberg(instance['points'], instance['r'], m_conn=1, theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return connected_oracle(rg_tverberg(instance['points'], instance['r'], cap=instance.get('cap')))


class TverComplexTheorem(TheoremBase):
    """|X| ≥ (d + 1)(r − 1) + m + 1 ⇒ η_H(Tver(X, r)) ≥ m + 1"""

    theorem_id = 'tver-complex'
    required_keys = ('points', 'r')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_tverberg(instance['points'], instance['r'], m_conn=instance.get('m', 1),
                                       theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return eta_oracle(tver_complex(instance['points'], instance['r'], cap=instance.get('cap')),
                          instance.get('m', 1))


class ColCatComplexTheorem(TheoremBase):
    """x ∈ conv(A_i) ∀i, n ≥ d + m + 1 ⇒ η_H(ColCat) ≥ m + 1"""

    theorem_id = 'colcat-complex'
    required_keys = ('a_sets', 'x')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_colorful_caratheodory(instance['a_sets'], instance['x'], m_conn=instance.get('m', 1),
                                                    theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return eta_oracle(colcat_complex(instance['a_sets'], instance['x'], cap=instance.get('cap')),
                          instance.get('m', 1))


class ColHelComplexTheorem(TheoremBase):
    """⋂F_i = ∅ ∀i, n ≥ d + m + 1 ⇒ η_H(ColHel) ≥ m + 1"""

    theorem_id = 'colhel-complex'
    required_keys = ('families', 'd')

    def hypothesis(self, instance: Instance) -> HypothesisReport:
        return checkers.check_colorful_helly(instance['families'], instance['d'], m_conn=instance.get('m', 1),
                                             theorem_id=self.theorem_id)

    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        return eta_oracle(colhel_complex(instance['families'], instance['d'], cap=instance.get('cap')),
                          instance.get('m', 1))
