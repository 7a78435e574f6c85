"""
유리수 계수 축약 호몰로지와 호몰로지 연결도 η_H

Notes:
    - 방향: 정규 정점 순서로 정렬된 면이 양의 방향
    - ∂_0 은 증강 사상 ε (모든 항목 1인 한 행)
    - η_H 는 처음으로 0이 아닌 Betti 수에서 계산을 멈춤
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Union

from complex.simplicial import SimplicialComplex
from exactla.matrix import RationalMatrix, rank
from utils.canonical import instance_hash
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')

INFINITY = math.inf
EtaValue = Union[int, float]


def format_eta(value: EtaValue) -> Union[int, str]:
    return 'inf' if value == INFINITY else int(value)


def parse_eta(value: Union[int, str]) -> EtaValue:
    return INFINITY if value in ('inf', '∞') else int(value)


@dataclass(frozen=True)
class BettiProfile:
    """차원별 축약 Betti 수

    Attributes:
        complex_id (str): 복합체의 정규 해시
        betti (Dict[int, int]): β̃_{−1} … β̃_{dim}
        eta_h (EtaValue): 호몰로지 연결도
    """
    complex_id: str
    betti: Dict[int, int] = field(default_factory=dict)
    eta_h: EtaValue = INFINITY

    def to_dict(self) -> Dict:
        return {
            'complex_id': self.complex_id,
            'betti': {str(p): b for p, b in sorted(self.betti.items())},
            'eta_h': format_eta(self.eta_h),
        }


def boundary_matrix(c: SimplicialComplex, p: int) -> RationalMatrix:
    """∂_p: 행은 (p−1)차원 면, 열은 p차원 면 (정규 정렬)

    Raises:
        StructuralError: p가 −1..dim+1 범위 밖
    """
    if not -1 <= p <= c.dim + 1:
        raise StructuralError(f"경계 차원 범위 오류: p={p}, dim={c.dim}")
    columns = c.faces(p)
    if p == -1:
        return RationalMatrix(0, len(columns))
    rows = c.faces(p - 1)
    if p == 0:
        return RationalMatrix(1, len(columns), {(0, j): 1 for j in range(len(columns))})
    row_index = {face: i for i, face in enumerate(rows)}
    entries = {}
    for j, face in enumerate(columns):
        for i in range(len(face)):
            entries[(row_index[face[:i] + face[i + 1:]], j)] = -1 if i % 2 else 1
    return RationalMatrix(len(rows), len(columns), entries)


@lru_cache(maxsize=8192)
def boundary_rank(c: SimplicialComplex, p: int) -> int:
    if p < -1 or p > c.dim + 1:
        return 0
    return rank(boundary_matrix(c, p))


def reduced_betti(c: SimplicialComplex, p: int) -> int:
    """β̃_p = (#p-면 − rank ∂_p) − rank ∂_{p+1}"""
    if p < -1:
        raise StructuralError(f"차원은 −1 이상이어야 합니다: {p}")
    if p > c.dim:
        return 0
    cycles = c.face_count(p) - boundary_rank(c, p)
    return cycles - boundary_rank(c, p + 1)


@lru_cache(maxsize=8192)
def eta_h(c: SimplicialComplex) -> EtaValue:
    """η_H(C) := max{k : H̃_j(C) = 0, −2 ≤ j ≤ k} + 2

    {∅} 이면 0, 꼭짓점이 있는 뿔(cone)이면 행렬 계산 없이 ∞
    """
    if c.is_empty_complex():
        return 0
    if c.is_cone():
        return INFINITY
    for p in range(0, c.dim + 1):
        if reduced_betti(c, p) != 0:
            return p + 1
    return INFINITY


def eta_h_by_matrices(c: SimplicialComplex) -> EtaValue:
    """뿔 지름길 없이 행렬 계산만으로 η_H"""
    for p in range(-1, c.dim + 1):
        if reduced_betti(c, p) != 0:
            return p + 1
    return INFINITY


def betti_profile(c: SimplicialComplex) -> BettiProfile:
    betti = {p: reduced_betti(c, p) for p in range(-1, c.dim + 1)}
    return BettiProfile(instance_hash(c), betti, eta_h(c))


def is_homologically_connected(c: SimplicialComplex, k: int) -> bool:
    """호몰로지적으로 k-연결 ⇔ η_H ≥ k + 2"""
    return eta_h(c) >= k + 2
