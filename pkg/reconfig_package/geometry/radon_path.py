"""
순서 Radon 분할 사이의 보간 경로

Radon 분할 (X_1, X_2) 는 X_1 에서 ≥ 0, X_2 에서 ≤ 0 인 0이 아닌 아핀 종속 계수 α 로
증명됩니다. 두 분할의 계수 α, β 를 잇는 선분 L(t) = (1 − t)α + tβ 를 따라가며
성분 i 의 부호가 바뀔 때마다 x_i 를 다른 부분으로 옮깁니다.
L(t_0) = 0 이 되는 경우(β 가 α 의 음수배)에는 x_i 의 계수가 0 인 제3의 분할을 거쳐 갑니다.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exactla.lp import affine_dependence_with_signs
from exactla.matrix import RationalMatrix, nullspace
from exactla.rational import RationalLike, to_vector
from geometry.points import OrderedPartition, PointConfig
from geometry.tverberg import tverberg_adjacent
from utils.exceptions import ConsistencyError, PreconditionError, StructuralError

logger = logging.getLogger('reconfig-center')

Coefficients = Tuple[Fraction, ...]


@dataclass
class RadonPath:
    """radon_path 결과

    Attributes:
        partitions (List[OrderedPartition]): p 에서 q 까지의 보행
        moved (List[int]): 단계별로 옮긴 점 인덱스
        detour (Optional[OrderedPartition]): 반평행 경우에 거쳐 간 분할
    """
    partitions: List[OrderedPartition]
    moved: List[int] = field(default_factory=list)
    detour: Optional[OrderedPartition] = None

    def to_dict(self, config: Optional[PointConfig] = None):
        return {
            'path': [p.to_dict(config) for p in self.partitions],
            'moved': [config.labels[i] if config is not None else i for i in self.moved],
            'detour': self.detour.to_dict(config) if self.detour is not None else None,
        }


def _signs(partition: OrderedPartition) -> List[str]:
    return ['>=0' if j == 0 else '<=0' for j in partition.assignment]


def certifies(config: PointConfig, partition: OrderedPartition, alpha: Sequence[Fraction]) -> bool:
    """α 가 분할의 부호 패턴을 지키는 0이 아닌 아핀 종속인지"""
    if len(alpha) != len(config) or not any(alpha):
        return False
    if sum(alpha) != 0:
        return False
    for k in range(config.d):
        if sum(a * p[k] for a, p in zip(alpha, config.points)) != 0:
            return False
    return all((a >= 0) if j == 0 else (a <= 0) for a, j in zip(alpha, partition.assignment))


def radon_coefficients(config: PointConfig, partition: OrderedPartition) -> Coefficients:
    """분할을 증명하는 계수 벡터

    Raises:
        StructuralError: Radon 분할이 아닌 경우
    """
    alpha = affine_dependence_with_signs(config.points, _signs(partition))
    if alpha is None:
        raise StructuralError(f"Radon 분할이 아닙니다: {partition.labeled_parts(config)}")
    return alpha


def _is_antiparallel(alpha: Coefficients, beta: Coefficients) -> bool:
    """β = −cα (c > 0) 인지 정확히 판정"""
    k = next(i for i, a in enumerate(alpha) if a != 0)
    c = -beta[k] / alpha[k]
    return c > 0 and all(b == -c * a for a, b in zip(alpha, beta))


def _critical_times(alpha: Coefficients, beta: Coefficients) -> List[Fraction]:
    times = {Fraction(0), Fraction(1)}
    for a, b in zip(alpha, beta):
        if a != b:
            t = a / (a - b)
            if 0 < t < 1:
                times.add(t)
    return sorted(times)


def _part_for(value: Fraction, current: int) -> int:
    if value > 0:
        return 0
    if value < 0:
        return 1
    return current


def _segment_walk(start: OrderedPartition, target: OrderedPartition,
                  alpha: Coefficients, beta: Coefficients) -> Tuple[List[OrderedPartition], List[int]]:
    """L(t) 가 0이 되지 않는 선분 위에서 start 에서 target 까지의 이동 목록

    임계 시각마다 그 시각에 0인 성분 중 다음 구간의 부호와 배치가 어긋난 점을
    라벨 순서로 옮깁니다. 마지막 시각에는 β 가 0인 성분을 target 배치로 맞춥니다.
    """
    times = _critical_times(alpha, beta)
    current = start
    partitions, moved = [start], []

    def value(i: int, t: Fraction) -> Fraction:
        return (1 - t) * alpha[i] + t * beta[i]

    for position, t in enumerate(times):
        if all(value(i, t) == 0 for i in range(len(alpha))):
            raise ConsistencyError(f"보간 선분이 t={t}에서 0이 되었습니다")
        last = position == len(times) - 1
        midpoint = None if last else (t + times[position + 1]) / 2
        for i in range(len(alpha)):
            if value(i, t) != 0:
                continue
            if last:
                wanted = target.assignment[i]
            else:
                wanted = _part_for(value(i, midpoint), current.assignment[i])
            if wanted != current.assignment[i]:
                current = current.moved(i, wanted)
                partitions.append(current)
                moved.append(i)
    if current != target:
        raise ConsistencyError("보간 경로가 목표 분할에 도달하지 못했습니다")
    return partitions, moved


def _detour(config: PointConfig, alpha: Coefficients) -> Tuple[OrderedPartition, Coefficients]:
    """α_i > 0 인 첫 점 x_i 에 대해 X − {x_i} 의 Radon 분할 (Z_1, Z_2) 를 찾아 (Z_1 ∪ {x_i}, Z_2) 와 γ 반환"""
    i = next(k for k, a in enumerate(alpha) if a > 0)
    rest = [k for k in range(len(config)) if k != i]
    rows = [[1] * len(rest)]
    rows += [[config.points[k][c] for k in rest] for c in range(config.d)]
    basis = nullspace(RationalMatrix.from_rows(rows, cols=len(rest)))
    if not basis:
        raise ConsistencyError("X − {x_i} 에 아핀 종속이 없습니다")
    vector = basis[0]
    if not any(v > 0 for v in vector):
        vector = tuple(-v for v in vector)
    gamma = list(vector)
    gamma.insert(i, Fraction(0))
    assignment = tuple(0 if (k == i or gamma[k] > 0) else 1 for k in range(len(config)))
    return OrderedPartition(assignment, 2), tuple(gamma)


def _checked_coefficients(config: PointConfig, partition: OrderedPartition,
                          given: Optional[Sequence[RationalLike]]) -> Coefficients:
    if given is None:
        return radon_coefficients(config, partition)
    coefficients = to_vector(given)
    if not certifies(config, partition, coefficients):
        raise StructuralError("주어진 계수 벡터가 분할을 증명하지 않습니다")
    return coefficients


def radon_path(config: PointConfig, p: OrderedPartition, q: OrderedPartition,
               alpha: Optional[Sequence[RationalLike]] = None,
               beta: Optional[Sequence[RationalLike]] = None) -> RadonPath:
    """RG_Tv(X, 2) 안에서 p 에서 q 로 가는 보행

    Args:
        config (PointConfig): 점 배치 (|X| ≥ d + 3)
        p, q (OrderedPartition): 순서 Radon 분할
        alpha, beta: 선택적 증명 계수 (생략 시 LP 로 구함)

    Returns:
        RadonPath: 연속한 두 분할이 모두 인접함이 검증된 보행

    Raises:
        PreconditionError: |X| < d + 3 이거나 r ≠ 2
        StructuralError: p 또는 q 가 Radon 분할이 아니거나 계수가 분할을 증명하지 않는 경우
        ConsistencyError: 생성된 보행이 검증을 통과하지 못한 경우
    """
    if len(config) < config.d + 3:
        raise PreconditionError(f"|X| = {len(config)} < d + 3 = {config.d + 3}")
    if p.r != 2 or q.r != 2:
        raise PreconditionError("radon_path 는 r = 2 분할만 지원합니다")
    a = _checked_coefficients(config, p, alpha)
    b = _checked_coefficients(config, q, beta)
    if p == q:
        return RadonPath([p])

    detour = None
    if _is_antiparallel(a, b):
        detour, gamma = _detour(config, a)
        logger.info(f"반평행 계수 감지: {detour.labeled_parts(config)} 를 경유합니다")
        first, first_moves = _segment_walk(p, detour, a, gamma)
        second, second_moves = _segment_walk(detour, q, gamma, b)
        partitions, moved = first + second[1:], first_moves + second_moves
    else:
        partitions, moved = _segment_walk(p, q, a, b)

    for left, right in zip(partitions, partitions[1:]):
        if not tverberg_adjacent(config, left, right):
            raise ConsistencyError(f"보간 경로의 인접하지 않은 단계: {left.assignment} → {right.assignment}")
    logger.debug(f"Radon 경로 길이 {len(partitions) - 1}")
    return RadonPath(partitions, moved, detour)
