"""
Tverberg 분할 판정과 순서 Tverberg 재구성 그래프
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from config.capacity_config import rg_candidate_cap
from exactla.lp import FREE, NONNEG, LPFeasibility, lp_feasible
from geometry.points import OrderedPartition, Point, PointConfig
from reconfig.builders import build_choice_rule
from reconfig.reconfig_graph import ReconfigGraph
from utils.exceptions import StructuralError, check_cap

logger = logging.getLogger('reconfig-center')


@dataclass(frozen=True)
class TverbergResult:
    is_tverberg: bool
    point: Optional[Point] = None


def is_tverberg(config: PointConfig, partition: OrderedPartition) -> TverbergResult:
    """⋂ conv(X_j) ≠ ∅ 인지 단일 LP로 판정

    변수는 공통점 y (자유)와 점별 계수 λ_i (≥ 0)이며, 부분 j마다
    Σ_{i∈X_j} λ_i = 1, Σ_{i∈X_j} λ_i x_i − y = 0 을 둡니다. 빈 부분이 있으면 거짓입니다.

    Raises:
        StructuralError: 분할 길이가 점 개수와 다른 경우
    """
    if len(partition.assignment) != len(config):
        raise StructuralError(f"분할 길이 {len(partition.assignment)}가 점 개수 {len(config)}와 다릅니다")
    parts = partition.parts()
    if any(not part for part in parts):
        return TverbergResult(False)
    d, n = config.d, len(config)
    rows, rhs = [], []
    for part in parts:
        rows.append([0] * d + [1 if i in part else 0 for i in range(n)])
        rhs.append(1)
        for k in range(d):
            row = [-1 if t == k else 0 for t in range(d)]
            row += [config.points[i][k] if i in part else 0 for i in range(n)]
            rows.append(row)
            rhs.append(0)
    result = lp_feasible(LPFeasibility.build(rows, rhs, [FREE] * d + [NONNEG] * n))
    if not result.feasible:
        return TverbergResult(False)
    return TverbergResult(True, result.point[:d])


def _check_assignment_cap(config: PointConfig, r: int, cap: Optional[int]) -> None:
    if r < 1:
        raise StructuralError(f"r은 1 이상이어야 합니다: {r}")
    check_cap(r ** len(config), cap if cap is not None else rg_candidate_cap(), "배정 함수")


def enumerate_tverberg_partitions(config: PointConfig, r: int,
                                  cap: Optional[int] = None) -> List[OrderedPartition]:
    """모든 순서 Tverberg r-분할 (배정 함수의 사전식 순서)"""
    _check_assignment_cap(config, r, cap)
    result = []
    for assignment in product(range(r), repeat=len(config)):
        partition = OrderedPartition(assignment, r)
        if is_tverberg(config, partition).is_tverberg:
            result.append(partition)
    return result


def reduced_is_tverberg(config: PointConfig, partition: OrderedPartition, i: int) -> bool:
    """x_i 를 뺀 분할이 X − {x_i} 의 Tverberg 분할인지"""
    return is_tverberg(config.without(i), partition.without(i)).is_tverberg


def tverberg_adjacent(config: PointConfig, p: OrderedPartition, q: OrderedPartition) -> bool:
    """RG_Tv 인접: 두 Tverberg 분할이 한 점에서만 다르고 그 점을 뺀 분할이 Tverberg"""
    moved = [i for i, (a, b) in enumerate(zip(p.assignment, q.assignment)) if a != b]
    if len(moved) != 1 or p.r != q.r:
        return False
    if not (is_tverberg(config, p).is_tverberg and is_tverberg(config, q).is_tverberg):
        return False
    return reduced_is_tverberg(config, p, moved[0])


def rg_tverberg(config: PointConfig, r: int, cap: Optional[int] = None) -> ReconfigGraph:
    """RG_Tv(X, r): 순서 Tverberg r-분할, 한 점의 배치만 다르고 축약 분할이 Tverberg이면 인접

    두 분할은 x 밖에서 같으므로 어느 쪽에서 x를 빼도 축약 분할은 같고, 한 번만 판정합니다.

    Raises:
        CapacityError: r^n 이 상한을 넘는 경우
    """
    _check_assignment_cap(config, r, cap)
    rg = build_choice_rule(
        [r] * len(config),
        lambda choice: is_tverberg(config, OrderedPartition(choice, r)).is_tverberg,
        lambda j, choice: reduced_is_tverberg(config, OrderedPartition(choice, r), j),
        cap=cap,
    )
    logger.info(f"RG_Tv 생성: n={len(config)}, d={config.d}, r={r}, {rg}")
    return rg


def sarkaria_tensors(config: PointConfig, r: int) -> List[List[Tuple[Fraction, ...]]]:
    """x̄_{i,j} = (x_i; 1) ⊗ w_j 를 (d+1)×(r−1) 행 우선으로 펼친 벡터

    w_j 는 j < r−1 이면 ℝ^{r−1} 의 j번째 표준 기저, w_{r−1} = −(1, …, 1) 입니다.

    Raises:
        StructuralError: r < 2
    """
    if r < 2:
        raise StructuralError(f"Sarkaria 변환은 r ≥ 2 에서만 정의됩니다: {r}")
    basis = [tuple(Fraction(1) if t == j else Fraction(0) for t in range(r - 1)) for j in range(r - 1)]
    basis.append(tuple(Fraction(-1) for _ in range(r - 1)))
    tensors = []
    for point in config.points:
        lifted = tuple(point) + (Fraction(1),)
        tensors.append([tuple(c * w for c in lifted for w in w_j) for w_j in basis])
    return tensors
