"""
점 배치, 순서 분할, 반공간 다면체와 볼록 포함 판정

모든 좌표는 Fraction이며, 볼록 포함/교집합 공집합 여부는 exactla.lp 로 정확히 판정합니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from exactla.lp import FREE, NONNEG, LPFeasibility, lp_feasible
from exactla.rational import RationalLike, format_rational, format_vector, to_rational, to_vector
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')

Point = Tuple[Fraction, ...]


class PointConfig:
    """라벨이 붙은 ℝ^d 의 유한 점 배치

    라벨 순서(생성 시 순서)가 정규 순서입니다.

    Attributes:
        d (int): 차원
        labels (Tuple[Hashable, ...]): 점 라벨
        points (Tuple[Point, ...]): 라벨 순서의 좌표
    """

    def __init__(self, d: int, labeled_points: Iterable[Tuple[Hashable, Sequence[RationalLike]]]):
        if not isinstance(d, int) or d < 0:
            raise StructuralError(f"차원은 0 이상의 정수여야 합니다: {d}")
        labels, points = [], []
        for label, coordinates in labeled_points:
            point = to_vector(coordinates)
            if len(point) != d:
                raise StructuralError(f"점 {label}의 좌표 수 {len(point)}가 차원 {d}와 다릅니다")
            labels.append(label)
            points.append(point)
        if len(set(labels)) != len(labels):
            raise StructuralError("점 라벨이 중복되었습니다")
        self.d = d
        self.labels = tuple(labels)
        self.points = tuple(points)
        self._index = {label: i for i, label in enumerate(self.labels)}

    @classmethod
    def from_coordinates(cls, coordinates: Sequence[Sequence[RationalLike]],
                         d: Optional[int] = None) -> 'PointConfig':
        """라벨 0..n-1 로 생성 (1차원은 [0, 1, 2] 처럼 스칼라 목록도 허용)"""
        rows = [list(c) if isinstance(c, (list, tuple)) else [c] for c in coordinates]
        if d is None:
            if not rows:
                raise StructuralError("빈 배치는 차원을 명시해야 합니다")
            d = len(rows[0])
        return cls(d, enumerate(rows))

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError as e:
            raise StructuralError(f"배치에 없는 점 라벨입니다: {label}") from e

    def point(self, label: Hashable) -> Point:
        return self.points[self.index(label)]

    def without(self, i: int) -> 'PointConfig':
        """i번째 점을 뺀 배치"""
        return PointConfig(self.d, [(label, p) for k, (label, p) in enumerate(zip(self.labels, self.points))
                                    if k != i])

    def to_dict(self) -> Dict[str, Any]:
        return {'d': self.d, 'points': {str(label): format_vector(p) for label, p in zip(self.labels, self.points)}}

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PointConfig) and self.d == other.d
                and self.labels == other.labels and self.points == other.points)

    def __hash__(self) -> int:
        return hash((self.d, self.labels, self.points))

    def __repr__(self) -> str:
        return f"PointConfig(d={self.d}, n={len(self)})"


def point_config_from_dict(payload: Dict[str, Any]) -> PointConfig:
    """{"d": n, "points": {"label": ["p/q", ...]}}"""
    try:
        return PointConfig(int(payload['d']), payload['points'].items())
    except (KeyError, AttributeError) as e:
        raise StructuralError(f"점 배치 페이로드 형식 오류: {e}") from e


@dataclass(frozen=True)
class OrderedPartition:
    """[n] → [r] 배정 함수로 표현한 순서 분할 (부분은 비어 있을 수 있음)

    부분 번호는 0..r-1 입니다.

    Attributes:
        assignment (Tuple[int, ...]): 라벨 순서의 부분 번호
        r (int): 부분 수
    """
    assignment: Tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, 'assignment', tuple(int(j) for j in self.assignment))
        if self.r < 1:
            raise StructuralError(f"부분 수는 1 이상이어야 합니다: {self.r}")
        if any(not 0 <= j < self.r for j in self.assignment):
            raise StructuralError(f"부분 번호는 0..{self.r - 1} 범위여야 합니다: {self.assignment}")

    @classmethod
    def from_parts(cls, config: PointConfig, parts: Sequence[Iterable[Hashable]]) -> 'OrderedPartition':
        """라벨 집합 목록 (X_1, ..., X_r) 으로부터 생성

        Raises:
            StructuralError: 분할이 배치의 라벨을 정확히 한 번씩 덮지 않는 경우
        """
        assignment: Dict[int, int] = {}
        for j, part in enumerate(parts):
            for label in part:
                i = config.index(label)
                if i in assignment:
                    raise StructuralError(f"점 {label}이(가) 두 부분에 들어 있습니다")
                assignment[i] = j
        if len(assignment) != len(config):
            raise StructuralError("분할이 모든 점을 덮지 않습니다")
        return cls(tuple(assignment[i] for i in range(len(config))), len(parts))

    def parts(self) -> List[List[int]]:
        """부분별 점 인덱스"""
        groups: List[List[int]] = [[] for _ in range(self.r)]
        for i, j in enumerate(self.assignment):
            groups[j].append(i)
        return groups

    def labeled_parts(self, config: PointConfig) -> List[List[Hashable]]:
        return [[config.labels[i] for i in part] for part in self.parts()]

    def moved(self, i: int, j: int) -> 'OrderedPartition':
        return OrderedPartition(self.assignment[:i] + (j,) + self.assignment[i + 1:], self.r)

    def without(self, i: int) -> 'OrderedPartition':
        return OrderedPartition(self.assignment[:i] + self.assignment[i + 1:], self.r)

    def configuration(self) -> Tuple[Tuple[int, int], ...]:
        """RG 구성 인코딩 (인덱스, 부분) 쌍"""
        return tuple(enumerate(self.assignment))

    def to_dict(self, config: Optional[PointConfig] = None) -> Dict[str, Any]:
        if config is None:
            return {'assignment': {str(i): j for i, j in enumerate(self.assignment)}, 'r': self.r}
        return {'assignment': {str(label): j for label, j in zip(config.labels, self.assignment)}, 'r': self.r}


def partition_from_dict(config: PointConfig, payload: Dict[str, Any]) -> OrderedPartition:
    """{"assignment": {"label": part}, "r": r} (r 생략 시 최대 부분 번호 + 1)"""
    by_label = {str(label): i for i, label in enumerate(config.labels)}
    raw = payload.get('assignment', {})
    if set(raw) != set(by_label):
        raise StructuralError("배정이 배치의 라벨과 일치하지 않습니다")
    assignment = [0] * len(config)
    for label, j in raw.items():
        assignment[by_label[label]] = int(j)
    r = int(payload.get('r', max(assignment, default=0) + 1))
    return OrderedPartition(tuple(assignment), r)


@dataclass(frozen=True)
class HalfSpace:
    """닫힌 반공간 {y : aᵀy ≥ b}"""
    a: Tuple[Fraction, ...]
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'a', to_vector(self.a))
        object.__setattr__(self, 'b', to_rational(self.b))

    def to_dict(self) -> Dict[str, Any]:
        return {'a': format_vector(self.a), 'b': format_rational(self.b)}


HPolytope = Tuple[HalfSpace, ...]
HPolytopeFamily = List[List[HPolytope]]


def halfspace_from_dict(payload: Dict[str, Any]) -> HalfSpace:
    return HalfSpace(tuple(payload['a']), payload['b'])


def family_from_dict(payload: Dict[str, Any]) -> Tuple[int, HPolytopeFamily]:
    """{"d": n, "families": [[[{"a": [...], "b": "p/q"}, ...], ...], ...]}"""
    d = int(payload['d'])
    families = [[tuple(halfspace_from_dict(h) for h in polytope) for polytope in family]
                for family in payload['families']]
    for family in families:
        for polytope in family:
            if any(len(h.a) != d for h in polytope):
                raise StructuralError(f"반공간 차원이 {d}와 다릅니다")
    return d, families


def family_to_dict(d: int, families: HPolytopeFamily) -> Dict[str, Any]:
    return {'d': d, 'families': [[[h.to_dict() for h in polytope] for polytope in family]
                                 for family in families]}


@dataclass(frozen=True)
class ConvexMembership:
    """conv_contains 결과: 포함이면 볼록 계수, 아니면 Farkas 분리 증명서"""
    contains: bool
    weights: Optional[Tuple[Fraction, ...]] = None
    certificate: Optional[Tuple[Fraction, ...]] = None


def conv_contains(points: Sequence[Sequence[RationalLike]], x: Sequence[RationalLike]) -> ConvexMembership:
    """x ∈ conv(points) 판정 (Σλ_i p_i = x, Σλ_i = 1, λ ≥ 0)

    conv(∅) = ∅ 이므로 빈 점 집합은 항상 거짓입니다.

    Raises:
        StructuralError: 차원 불일치
    """
    target = to_vector(x)
    vectors = [to_vector(p) for p in points]
    if any(len(p) != len(target) for p in vectors):
        raise StructuralError("점과 목표점의 차원이 일치하지 않습니다")
    if not vectors:
        return ConvexMembership(False)
    rows = [[p[k] for p in vectors] for k in range(len(target))]
    rows.append([1] * len(vectors))
    result = lp_feasible(LPFeasibility.build(rows, list(target) + [1], [NONNEG] * len(vectors)))
    if result.feasible:
        return ConvexMembership(True, weights=result.point)
    return ConvexMembership(False, certificate=result.certificate)


def intersection_point(polytopes: Sequence[HPolytope], d: int) -> Optional[Point]:
    """반공간 다면체들의 공통점 (없으면 None)

    aᵀy − s = b, y 자유, s ≥ 0. 제약이 없으면 원점을 반환합니다.
    """
    halfspaces = [h for polytope in polytopes for h in polytope]
    if any(len(h.a) != d for h in halfspaces):
        raise StructuralError(f"반공간 차원이 {d}와 다릅니다")
    if not halfspaces:
        return tuple(Fraction(0) for _ in range(d))
    m = len(halfspaces)
    rows = []
    for k, h in enumerate(halfspaces):
        rows.append(list(h.a) + [-1 if t == k else 0 for t in range(m)])
    result = lp_feasible(LPFeasibility.build(rows, [h.b for h in halfspaces], [FREE] * d + [NONNEG] * m))
    return result.point[:d] if result.feasible else None


def intersection_is_empty(polytopes: Sequence[HPolytope], d: int) -> bool:
    return intersection_point(polytopes, d) is None


def random_point_config(n: int, d: int, seed: int, scale: int = 10) -> PointConfig:
    """정수 분자 [−scale, scale], 분모 1..3 의 시드 고정 유리수 배치 (라벨 0..n-1)"""
    if n < 0 or d < 0 or scale < 1:
        raise StructuralError(f"잘못된 랜덤 배치 파라미터입니다: n={n}, d={d}, scale={scale}")
    rng = np.random.default_rng(seed)
    numerators = rng.integers(-scale, scale + 1, size=(n, d))
    denominators = rng.integers(1, 4, size=(n, d))
    rows = [[Fraction(int(numerators[i, k]), int(denominators[i, k])) for k in range(d)] for i in range(n)]
    return PointConfig(d, enumerate(rows))
