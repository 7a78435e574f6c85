"""
컬러풀 Carathéodory / Helly 재구성 그래프와 반공간 쌍대, 다면체 신경

구성 인코딩은 (인덱스, 선택 번호) 쌍이므로 쌍대 구성으로 만든 두 그래프는
구성 단위로 직접 비교할 수 있습니다.
"""

import logging
from fractions import Fraction
from typing import Hashable, List, Optional, Sequence, Tuple

from complex.simplicial import SimplicialComplex
from config.capacity_config import rg_candidate_cap
from exactla.rational import RationalLike, to_vector
from geometry.points import HalfSpace, HPolytope, HPolytopeFamily, conv_contains, intersection_is_empty
from reconfig.builders import build_choice_rule
from reconfig.reconfig_graph import ReconfigGraph
from utils.exceptions import StructuralError, check_cap

logger = logging.getLogger('reconfig-center')


def point_sets(a_sets: Sequence[Sequence[Sequence[RationalLike]]],
                x: Sequence[RationalLike]) -> Tuple[List[List[Tuple[Fraction, ...]]], Tuple[Fraction, ...]]:
    target = to_vector(x)
    sets = [[to_vector(p) for p in a] for a in a_sets]
    for i, a in enumerate(sets):
        if not a:
            raise StructuralError(f"A_{i + 1}이(가) 비어 있습니다")
        if any(len(p) != len(target) for p in a):
            raise StructuralError(f"A_{i + 1}의 점 차원이 목표점과 다릅니다")
    return sets, target


def rg_colorful_caratheodory(a_sets: Sequence[Sequence[Sequence[RationalLike]]], x: Sequence[RationalLike],
                             cap: Optional[int] = None) -> ReconfigGraph:
    """RG_CC((A_1, …, A_n), x)

    정점은 x ∈ conv({a_1, …, a_n}) 인 선택 (a_i ∈ A_i), 두 선택이 유일한 좌표 j에서만
    다르고 x ∈ conv({a_i : i ≠ j}) 이면 인접합니다.

    Args:
        a_sets: 점 집합 목록 (모두 비어 있지 않아야 함)
        x: 목표점
        cap: 선택 튜플 수 상한

    Raises:
        StructuralError: 빈 집합 또는 차원 불일치
        CapacityError: 선택 튜플 수가 상한을 넘는 경우
    """
    sets, target = point_sets(a_sets, x)

    def admissible(choice):
        return conv_contains([sets[i][j] for i, j in enumerate(choice)], target).contains

    def reduced(omitted, choice):
        return conv_contains([sets[i][j] for i, j in enumerate(choice) if i != omitted], target).contains

    rg = build_choice_rule([len(a) for a in sets], admissible, reduced, cap=cap)
    logger.info(f"RG_CC 생성: n={len(sets)}, {rg}")
    return rg


def rg_colorful_helly(families: HPolytopeFamily, d: int, cap: Optional[int] = None) -> ReconfigGraph:
    """RG_CH(F_1, …, F_n)

    정점은 ⋂ C_i = ∅ 인 선택 (C_i ∈ F_i), 유일한 좌표 j에서만 다르고
    ⋂_{i≠j} C_i = ∅ 이면 인접합니다. 볼록 집합은 반공간 다면체로 표현합니다.

    Raises:
        StructuralError: 족이 없거나 빈 족이 있는 경우
    """
    if not families:
        raise StructuralError("족이 하나 이상 필요합니다")
    if any(not family for family in families):
        raise StructuralError("빈 족이 있습니다")

    def admissible(choice):
        return intersection_is_empty([families[i][j] for i, j in enumerate(choice)], d)

    def reduced(omitted, choice):
        return intersection_is_empty([families[i][j] for i, j in enumerate(choice) if i != omitted], d)

    rg = build_choice_rule([len(family) for family in families], admissible, reduced, cap=cap)
    logger.info(f"RG_CH 생성: n={len(families)}, {rg}")
    return rg


def halfspace_dual(a_sets: Sequence[Sequence[Sequence[RationalLike]]],
                   x: Sequence[RationalLike]) -> Tuple[int, HPolytopeFamily]:
    """H_{i,j} = {y : (a_{ij} − x)ᵀ y ≥ 1} 로 이루어진 족

    Farkas 보조정리에 의해 x ∈ conv(B) ⇔ ⋂_{b∈B} H_b = ∅ 입니다.

    Returns:
        Tuple[int, HPolytopeFamily]: (차원, 족)
    """
    sets, target = point_sets(a_sets, x)
    families = [[(HalfSpace(tuple(p[k] - target[k] for k in range(len(target))), Fraction(1)),)
                 for p in a] for a in sets]
    return len(target), families


def polytope_nerve(polytopes: Sequence[Tuple[Hashable, HPolytope]], d: int,
                   cap: Optional[int] = None) -> SimplicialComplex:
    """다면체 신경: 교집합이 비어 있지 않은 부분족들의 복합체

    공집합 교집합은 상위 집합으로 전파되므로, 크기별로 살아남은 면만 확장합니다.

    Args:
        polytopes: (라벨, 다면체) 목록
        d: 차원
        cap: 검사할 후보 부분족 수 상한
    """
    labels = [label for label, _ in polytopes]
    if len(set(labels)) != len(labels):
        raise StructuralError("다면체 라벨이 중복되었습니다")
    limit = cap if cap is not None else rg_candidate_cap()
    members = dict(polytopes)
    faces = [frozenset()]
    layer = [()]
    checked = 0
    while layer:
        alive = set(layer)
        candidates = set()
        for face in layer:
            start = labels.index(face[-1]) + 1 if face else 0
            for label in labels[start:]:
                candidate = face + (label,)
                if all(candidate[:t] + candidate[t + 1:] in alive for t in range(len(candidate) - 1)):
                    candidates.add(candidate)
        checked += len(candidates)
        check_cap(checked, limit, "신경 후보 부분족")
        layer = sorted((c for c in candidates if not intersection_is_empty([members[l] for l in c], d)),
                       key=lambda c: [labels.index(l) for l in c])
        faces.extend(frozenset(c) for c in layer)
    return SimplicialComplex(labels, faces)
