"""
정확한 유리수 선형계획 (실현 가능성 판정, Farkas 증명서, 단순 최대화)

Notes:
    - 1단계 단순법 + Bland 규칙 (순환 없음 보장)
    - 자유 변수는 x = x⁺ − x⁻ 로 분해
    - 반환되는 점/증명서는 반환 전에 입력 제약에 대해 정확히 재검증
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from exactla.matrix import RationalMatrix, dot
from exactla.rational import RationalLike, to_vector
from utils.exceptions import ConsistencyError, StructuralError

logger = logging.getLogger('reconfig-center')

FREE = 'free'
NONNEG = 'nonneg'
NONPOS = 'nonpos'

_SIGN_ALIASES = {
    'free': FREE, '>=0': NONNEG, 'nonneg': NONNEG, '+': NONNEG,
    '<=0': NONPOS, 'nonpos': NONPOS, '-': NONPOS,
}


def normalize_sign(sign: str) -> str:
    try:
        return _SIGN_ALIASES[sign]
    except KeyError as e:
        raise StructuralError(f"지원하지 않는 부호 제약입니다: {sign}") from e


@dataclass(frozen=True)
class LPFeasibility:
    """A·x = b, 변수별 부호 제약 (free | nonneg), 선택적 비영 그룹

    Attributes:
        a (RationalMatrix): 제약 행렬
        b (Tuple[Fraction, ...]): 우변
        signs (Tuple[str, ...]): 변수별 부호 제약
        nonzero_group (Optional[Tuple[int, ...]]): 동차계(b = 0)에서 적어도 하나가
            0이 아니어야 하는 nonneg 변수 묶음. 정규화 행 Σ_{j∈S} x_j = 1 로 구현
    """
    a: RationalMatrix
    b: Tuple[Fraction, ...]
    signs: Tuple[str, ...]
    nonzero_group: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'b', to_vector(self.b))
        object.__setattr__(self, 'signs', tuple(normalize_sign(s) for s in self.signs))
        if len(self.b) != self.a.rows:
            raise StructuralError(f"우변 길이 불일치: {len(self.b)} != {self.a.rows}")
        if len(self.signs) != self.a.cols:
            raise StructuralError(f"부호 제약 길이 불일치: {len(self.signs)} != {self.a.cols}")
        if NONPOS in self.signs:
            raise StructuralError("LPFeasibility 변수 부호는 free 또는 nonneg만 허용됩니다")
        if self.nonzero_group is not None:
            group = tuple(self.nonzero_group)
            object.__setattr__(self, 'nonzero_group', group)
            if not group:
                raise StructuralError("비영 그룹이 비어 있습니다")
            if any(not 0 <= j < self.a.cols for j in group):
                raise StructuralError(f"비영 그룹 인덱스 범위 초과: {group}")
            if any(self.signs[j] != NONNEG for j in group):
                raise StructuralError("비영 그룹 변수는 nonneg이어야 합니다")
            if any(v != 0 for v in self.b):
                raise StructuralError("비영 그룹은 동차계(b = 0)에서만 지원됩니다")

    @classmethod
    def build(cls, rows: Sequence[Sequence[RationalLike]], b: Sequence[RationalLike],
              signs: Sequence[str], nonzero_group: Optional[Sequence[int]] = None) -> 'LPFeasibility':
        cols = len(signs)
        return cls(RationalMatrix.from_rows(rows, cols=cols), tuple(b), tuple(signs),
                   tuple(nonzero_group) if nonzero_group is not None else None)

    def augmented(self) -> Tuple[RationalMatrix, Tuple[Fraction, ...]]:
        """비영 그룹 정규화 행을 붙인 (A, b)"""
        if self.nonzero_group is None:
            return self.a, self.b
        entries = dict(self.a.items())
        for j in self.nonzero_group:
            entries[(self.a.rows, j)] = Fraction(1)
        return (RationalMatrix(self.a.rows + 1, self.a.cols, entries),
                self.b + (Fraction(1),))


@dataclass(frozen=True)
class FeasibilityResult:
    """실현 가능성 결과 (점 또는 증명서 중 정확히 하나)

    certificate는 비영 그룹이 있으면 정규화 행까지 포함한 행 개수를 가집니다.
    """
    feasible: bool
    point: Optional[Tuple[Fraction, ...]] = None
    certificate: Optional[Tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class LPOptimum:
    status: str  # optimal | infeasible | unbounded
    value: Optional[Fraction] = None
    point: Optional[Tuple[Fraction, ...]] = None


class _Tableau:
    """1단계 단순법 표 [A' | I | b']"""

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction]):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.width = self.n + self.m
        self.table = [row + [Fraction(int(i == k)) for k in range(self.m)] + [value]
                      for i, (row, value) in enumerate(zip(rows, rhs))]
        self.basis = [self.n + i for i in range(self.m)]

    def pivot(self, i: int, j: int) -> None:
        row = self.table[i]
        inverse = 1 / row[j]
        row = [v * inverse for v in row]
        self.table[i] = row
        for k in range(self.m):
            if k != i:
                factor = self.table[k][j]
                if factor != 0:
                    self.table[k] = [a - factor * b for a, b in zip(self.table[k], row)]
        self.basis[i] = j

    def reduced_costs(self, cost: Sequence[Fraction], columns: range) -> Dict[int, Fraction]:
        return {j: cost[j] - sum((cost[self.basis[i]] * self.table[i][j] for i in range(self.m)), Fraction(0))
                for j in columns}

    def bland_minimize(self, cost: Sequence[Fraction], columns: range) -> bool:
        """Bland 규칙으로 최소화. 비유계면 False"""
        while True:
            reduced = self.reduced_costs(cost, columns)
            entering = next((j for j in columns if reduced[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i in range(self.m):
                coefficient = self.table[i][entering]
                if coefficient > 0:
                    ratio = self.table[i][-1] / coefficient
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[self.basis[i]] * self.table[i][-1] for i in range(self.m)), Fraction(0))

    def basic_solution(self, count: int) -> List[Fraction]:
        values = [Fraction(0)] * count
        for i, j in enumerate(self.basis):
            if j < count:
                values[j] = self.table[i][-1]
        return values


def _expand(signs: Sequence[str]) -> List[Tuple[int, int]]:
    """원래 변수 -> (확장 열, 부호) 목록"""
    columns = []
    for j, sign in enumerate(signs):
        columns.append((j, 1))
        if sign == FREE:
            columns.append((j, -1))
    return columns


def _phase_one(a: RationalMatrix, b: Sequence[Fraction], signs: Sequence[str]):
    expansion = _expand(signs)
    dense = a.to_rows()
    flips = [-1 if value < 0 else 1 for value in b]
    rows = [[flips[i] * s * dense[i][j] for (j, s) in expansion] for i in range(a.rows)]
    rhs = [flips[i] * b[i] for i in range(a.rows)]
    tableau = _Tableau(rows, rhs)
    cost = [Fraction(0)] * len(expansion) + [Fraction(1)] * a.rows
    tableau.bland_minimize(cost, range(tableau.width))
    return tableau, expansion, flips, cost


def verify_point(a: RationalMatrix, b: Sequence[Fraction], signs: Sequence[str],
                 x: Sequence[Fraction]) -> bool:
    if a.apply(x) != tuple(b):
        return False
    return all(sign != NONNEG or value >= 0 for sign, value in zip(signs, x))


def verify_certificate(a: RationalMatrix, b: Sequence[Fraction], signs: Sequence[str],
                       y: Sequence[Fraction]) -> bool:
    """Farkas 증명서: nonneg 열은 yᵀA_j ≥ 0, free 열은 = 0, yᵀb < 0"""
    products = a.apply_transpose(y)
    for sign, value in zip(signs, products):
        if sign == NONNEG and value < 0:
            return False
        if sign == FREE and value != 0:
            return False
    return dot(y, b) < 0


def lp_feasible(p: LPFeasibility) -> FeasibilityResult:
    """A·x = b 의 실현 가능성을 정확히 판정

    Args:
        p (LPFeasibility): 제약 시스템

    Returns:
        FeasibilityResult: 실현 가능하면 점, 아니면 Farkas 증명서

    Raises:
        ConsistencyError: 결과가 재검증을 통과하지 못한 경우
    """
    a, b = p.augmented()
    if a.rows == 0:
        return FeasibilityResult(True, point=tuple(Fraction(0) for _ in p.signs))
    tableau, expansion, flips, cost = _phase_one(a, b, p.signs)

    if tableau.objective(cost) == 0:
        expanded = tableau.basic_solution(len(expansion))
        point = [Fraction(0)] * a.cols
        for value, (j, s) in zip(expanded, expansion):
            point[j] += s * value
        point = tuple(point)
        if not verify_point(a, b, p.signs, point):
            raise ConsistencyError("LP 해 재검증 실패")
        return FeasibilityResult(True, point=point)

    # 인공 변수 열의 축약 비용으로부터 쌍대 변수 복원
    width = len(expansion)
    reduced = tableau.reduced_costs(cost, range(width, width + a.rows))
    certificate = tuple(-(1 - reduced[width + k]) * flips[k] for k in range(a.rows))
    if not verify_certificate(a, b, p.signs, certificate):
        raise ConsistencyError("Farkas 증명서 재검증 실패")
    return FeasibilityResult(False, certificate=certificate)


def lp_maximize(p: LPFeasibility, objective: Sequence[RationalLike]) -> LPOptimum:
    """cᵀx 최대화 (1단계 후 2단계 Bland 단순법)

    Args:
        p (LPFeasibility): 제약 시스템
        objective: 목적 함수 계수 c

    Returns:
        LPOptimum: status가 optimal이면 최적값과 최적해 포함
    """
    c = to_vector(objective)
    if len(c) != p.a.cols:
        raise StructuralError(f"목적 함수 길이 불일치: {len(c)} != {p.a.cols}")
    a, b = p.augmented()
    expansion = _expand(p.signs)
    width = len(expansion)
    if a.rows == 0:
        if any(s * c[j] > 0 for j, s in expansion):
            return LPOptimum('unbounded')
        return LPOptimum('optimal', Fraction(0), tuple(Fraction(0) for _ in p.signs))

    tableau, expansion, _, cost = _phase_one(a, b, p.signs)
    if tableau.objective(cost) != 0:
        return LPOptimum('infeasible')

    # 기저에 남은 인공 변수를 원래 열로 교체하거나 중복 행을 제거
    for i in range(tableau.m - 1, -1, -1):
        if tableau.basis[i] >= width:
            column = next((j for j in range(width) if tableau.table[i][j] != 0), None)
            if column is None:
                del tableau.table[i]
                del tableau.basis[i]
                tableau.m -= 1
            else:
                tableau.pivot(i, column)
    tableau.table = [row[:width] + [row[-1]] for row in tableau.table]
    tableau.width = width

    minimize_cost = [-s * c[j] for j, s in expansion]
    if not tableau.bland_minimize(minimize_cost, range(width)):
        return LPOptimum('unbounded')
    expanded = tableau.basic_solution(width)
    point = [Fraction(0)] * a.cols
    for value, (j, s) in zip(expanded, expansion):
        point[j] += s * value
    point = tuple(point)
    if not verify_point(a, b, p.signs, point):
        raise ConsistencyError("LP 최적해 재검증 실패")
    return LPOptimum('optimal', dot(c, point), point)


def affine_dependence_with_signs(points: Sequence[Sequence[RationalLike]],
                                 signs: Sequence[str]) -> Optional[Tuple[Fraction, ...]]:
    """부호 패턴을 지키는 0이 아닌 아핀 종속 계수

    Σα_i = 0, Σα_i·x_i = 0 을 만족하는 α를 찾습니다. y_i = s_i·α_i ≥ 0 로 치환하고
    정규화 Σ y_i = 1 (= Σ|α_i|)을 둔 LP로 풉니다.

    Args:
        points: 점 좌표 목록 (모두 같은 차원)
        signs: 점별 부호 요구 ('>=0' | '<=0')

    Returns:
        Optional[Tuple[Fraction, ...]]: α 또는 존재하지 않으면 None
    """
    if not points:
        raise StructuralError("점이 최소 하나 필요합니다")
    if len(points) != len(signs):
        raise StructuralError(f"부호 개수 불일치: {len(signs)} != {len(points)}")
    coordinates = [to_vector(x) for x in points]
    dimension = len(coordinates[0])
    if any(len(x) != dimension for x in coordinates):
        raise StructuralError("점들의 차원이 일치하지 않습니다")
    factors = []
    for sign in signs:
        normalized = normalize_sign(sign)
        if normalized == FREE:
            raise StructuralError("자유 부호는 nullspace를 사용하세요")
        factors.append(1 if normalized == NONNEG else -1)

    n = len(points)
    rows = [[factors[i] for i in range(n)]]
    for k in range(dimension):
        rows.append([factors[i] * coordinates[i][k] for i in range(n)])
    problem = LPFeasibility.build(rows, [0] * (dimension + 1), [NONNEG] * n,
                                  nonzero_group=range(n))
    result = lp_feasible(problem)
    if not result.feasible:
        return None
    alpha = tuple(factors[i] * result.point[i] for i in range(n))
    logger.debug(f"아핀 종속 계수: {alpha}")
    return alpha
