"""
기하 순서 복합체 Tver(X, r), ColCat((A_i), x), ColHel(F_1, …, F_n)

원소는 좌표별 선택 번호 튜플이며 STAR(−1)는 선택 없음(⋆)을 뜻합니다.
순서는 a ≤ b ⇔ 모든 i에 대해 a_i ∈ {b_i, ⋆} 입니다.
"""

import logging
from itertools import product
from typing import Callable, Optional, Sequence, Tuple

from complex.poset import FinitePoset, order_complex
from complex.simplicial import SimplicialComplex
from config.capacity_config import rg_candidate_cap
from exactla.rational import RationalLike
from geometry.caratheodory import point_sets
from geometry.points import HPolytopeFamily, OrderedPartition, PointConfig, conv_contains, intersection_is_empty
from geometry.tverberg import is_tverberg
from utils.exceptions import StructuralError, check_cap

logger = logging.getLogger('reconfig-center')

STAR = -1

StarTuple = Tuple[int, ...]


def _below(a: StarTuple, b: StarTuple) -> bool:
    return a != b and all(x == STAR or x == y for x, y in zip(a, b))


def _grade(a: StarTuple) -> int:
    return sum(1 for x in a if x != STAR)


def _star_complex(sizes: Sequence[int], qualifies: Callable[[StarTuple], bool],
                  cap: Optional[int], what: str) -> SimplicialComplex:
    total = 1
    for size in sizes:
        total *= size + 1
    check_cap(total, cap if cap is not None else rg_candidate_cap(), what)
    elements = [t for t in product(*(range(STAR, size) for size in sizes)) if qualifies(t)]
    if not elements:
        return SimplicialComplex.empty()
    poset = FinitePoset.from_order(elements, _below, grade=_grade)
    complex_ = order_complex(poset)
    logger.debug(f"{what} 순서 복합체: 원소 {len(elements)}개, 극대면 {len(complex_.maximal_faces)}개")
    return complex_


def tver_complex(config: PointConfig, r: int, cap: Optional[int] = None) -> SimplicialComplex:
    """Tver(X, r): 서로소 부분집합 튜플 (X_1, …, X_r) 중 ⋂ conv(X_i) ≠ ∅ 인 것들

    원소 t 의 t_i 는 x_i 가 속한 부분 번호 (⋆ 이면 사용하지 않음).
    """
    if r < 1:
        raise StructuralError(f"r은 1 이상이어야 합니다: {r}")

    def qualifies(t: StarTuple) -> bool:
        used = [i for i, j in enumerate(t) if j != STAR]
        if not used:
            return False
        sub = PointConfig(config.d, [(config.labels[i], config.points[i]) for i in used])
        return is_tverberg(sub, OrderedPartition(tuple(t[i] for i in used), r)).is_tverberg

    return _star_complex([r] * len(config), qualifies, cap, "Tver")


def colcat_complex(a_sets: Sequence[Sequence[Sequence[RationalLike]]], x: Sequence[RationalLike],
                   cap: Optional[int] = None) -> SimplicialComplex:
    """ColCat((A_1, …, A_n), x): x ∈ conv({a_i : a_i ≠ ⋆}) 인 튜플들"""
    sets, target = point_sets(a_sets, x)

    def qualifies(t: StarTuple) -> bool:
        return conv_contains([sets[i][j] for i, j in enumerate(t) if j != STAR], target).contains

    return _star_complex([len(a) for a in sets], qualifies, cap, "ColCat")


def colhel_complex(families: HPolytopeFamily, d: int, cap: Optional[int] = None) -> SimplicialComplex:
    """ColHel(F_1, …, F_n): ⋂_{C_i ≠ ⋆} C_i = ∅ 인 튜플들 (모두 ⋆ 이면 ℝ^d 이므로 제외)"""
    if any(not family for family in families):
        raise StructuralError("빈 족이 있습니다")

    def qualifies(t: StarTuple) -> bool:
        return intersection_is_empty([families[i][j] for i, j in enumerate(t) if j != STAR], d)

    return _star_complex([len(family) for family in families], qualifies, cap, "ColHel")


def geo_order_complex(kind: str, **instance) -> SimplicialComplex:
    """종류 이름으로 순서 복합체 선택

    Raises:
        StructuralError: 지원하지 않는 종류
    """
    if kind == 'tver':
        return tver_complex(instance['config'], instance['r'], instance.get('cap'))
    if kind == 'colcat':
        return colcat_complex(instance['a_sets'], instance['x'], instance.get('cap'))
    if kind == 'colhel':
        return colhel_complex(instance['families'], instance['d'], instance.get('cap'))
    raise StructuralError(f"지원하지 않는 순서 복합체 종류입니다: {kind}")
