"""
단체 프리즘 Δⁿ × [0,1] 의 삼각분할과 R-Sperner 색칠

정점 좌표는 (무게중심 좌표, 높이) 이며 모두 Fraction입니다.
정점 v 의 지지 면은 무게중심 좌표의 지지 집합 I 와 높이 종류(바닥/천장/측면)로 결정됩니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from exactla.rational import format_rational, format_vector, to_rational, to_vector
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')

BASE_BOTTOM = 'base0'
BASE_TOP = 'base1'
LATERAL = 'lateral'

VertexId = str
Simplex = Tuple[VertexId, ...]


@dataclass(frozen=True)
class PrismVertex:
    bary: Tuple[Fraction, ...]
    height: Fraction

    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, b in enumerate(self.bary) if b != 0)


@dataclass(frozen=True)
class SupportingFace:
    """정점을 포함하는 가장 작은 프리즘 면

    Attributes:
        index_set (FrozenSet[int]): I(F), 밑면 단체의 꼭짓점 번호
        kind (str): base0 | base1 | lateral
    """
    index_set: FrozenSet[int]
    kind: str

    def to_dict(self) -> Dict[str, Any]:
        return {'index_set': sorted(self.index_set), 'kind': self.kind}


class PrismTriangulation:
    """프리즘 삼각분할

    Attributes:
        n (int): 밑면 차원
        vertices (Dict[VertexId, PrismVertex]): 정점 좌표
        top_simplices (Tuple[Simplex, ...]): (n+2)-정점 최고 차원 단체 (정렬된 id 튜플)
    """

    def __init__(self, n: int, vertices: Dict[VertexId, PrismVertex], top_simplices: Sequence[Sequence[VertexId]]):
        self.n = n
        self.vertices = dict(vertices)
        self.top_simplices = tuple(sorted(tuple(sorted(s)) for s in top_simplices))

    def vertex_ids(self) -> List[VertexId]:
        return sorted(self.vertices)

    def boundary_faces(self) -> Dict[Simplex, List[Simplex]]:
        """n-면 → 그 면을 포함하는 최고 차원 단체 목록"""
        incidence: Dict[Simplex, List[Simplex]] = {}
        for top in self.top_simplices:
            for face in combinations(top, self.n + 1):
                incidence.setdefault(face, []).append(top)
        return incidence

    def facet_of_face(self, face: Sequence[VertexId]) -> Optional[Tuple[str, Optional[int]]]:
        """면 전체가 놓인 프리즘 패싯 (바닥, 천장, i번 측면). 없으면 None"""
        points = [self.vertices[v] for v in face]
        if all(p.height == 0 for p in points):
            return BASE_BOTTOM, None
        if all(p.height == 1 for p in points):
            return BASE_TOP, None
        for i in range(self.n + 1):
            if all(p.bary[i] == 0 for p in points):
                return LATERAL, i
        return None

    def validate(self) -> None:
        """순수성, 비분기성, 경계 n-면의 패싯 배치, 좌표 범위를 검사

        Raises:
            StructuralError: 위반이 있는 경우
        """
        for vid, p in self.vertices.items():
            if len(p.bary) != self.n + 1 or any(b < 0 for b in p.bary) or sum(p.bary) != 1:
                raise StructuralError(f"정점 {vid}의 무게중심 좌표가 올바르지 않습니다: {p.bary}")
            if not 0 <= p.height <= 1:
                raise StructuralError(f"정점 {vid}의 높이가 [0,1] 밖입니다: {p.height}")
        for top in self.top_simplices:
            if len(top) != self.n + 2 or len(set(top)) != self.n + 2:
                raise StructuralError(f"최고 차원 단체의 정점 수가 {self.n + 2}가 아닙니다: {top}")
            missing = [v for v in top if v not in self.vertices]
            if missing:
                raise StructuralError(f"좌표가 없는 정점입니다: {missing}")
        for face, tops in self.boundary_faces().items():
            if len(tops) > 2:
                raise StructuralError(f"n-면 {face}이(가) {len(tops)}개 단체에 속합니다 (분기)")
            if len(tops) == 1 and self.facet_of_face(face) is None:
                raise StructuralError(f"경계 n-면 {face}이(가) 프리즘 패싯에 놓이지 않습니다")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'vertices': {vid: {'bary': format_vector(p.bary), 'height': format_rational(p.height)}
                         for vid, p in sorted(self.vertices.items())},
            'top_simplices': [list(s) for s in self.top_simplices],
        }

    def __repr__(self) -> str:
        return f"PrismTriangulation(n={self.n}, |V|={len(self.vertices)}, top={len(self.top_simplices)})"


def triangulation_from_dict(payload: Dict[str, Any]) -> PrismTriangulation:
    n = int(payload['n'])
    vertices = {str(vid): PrismVertex(to_vector(v['bary']), to_rational(v['height']))
                for vid, v in payload['vertices'].items()}
    t = PrismTriangulation(n, vertices, [[str(v) for v in s] for s in payload['top_simplices']])
    t.validate()
    return t


def _freudenthal_base(n: int, s: int) -> List[List[Tuple[int, ...]]]:
    """Δⁿ 의 s배 Freudenthal 세분: 각 단체는 정수 좌표 c (Σc = s) 의 목록

    누적 좌표 y_k = c_k + … + c_n 에서 s ≥ y_1 ≥ … ≥ y_n ≥ 0 영역의 Kuhn 단체를 고릅니다.
    """
    def to_c(y: Sequence[int]) -> Tuple[int, ...]:
        full = (s,) + tuple(y) + (0,)
        return tuple(full[k] - full[k + 1] for k in range(n + 1))

    def inside(y: Sequence[int]) -> bool:
        full = (s,) + tuple(y) + (0,)
        return all(full[k] >= full[k + 1] for k in range(n + 1))

    simplices = []
    for corner in product(range(s), repeat=n):
        for order in permutations(range(n)):
            y = list(corner)
            points = [tuple(y)]
            for axis in order:
                y[axis] += 1
                points.append(tuple(y))
            if all(inside(p) for p in points):
                simplices.append([to_c(p) for p in points])
    if len(simplices) != s ** n:
        raise StructuralError(f"Freudenthal 세분 단체 수 {len(simplices)}가 {s ** n}과 다릅니다")
    return simplices


def _vertex_id(c: Tuple[int, ...], level: int) -> VertexId:
    return f"{'.'.join(str(x) for x in c)}@{level}"


def staircase_triangulation(n: int, subdivisions: int, base_subdivisions: int = 1) -> PrismTriangulation:
    """계단식 프리즘 삼각분할

    밑면 Δⁿ 을 base_subdivisions^n 개 Freudenthal 단체로 나누고, 높이 방향으로
    subdivisions 개 층을 쌓습니다. 층마다 밑면 단체 (v_0 < … < v_n, 전역 정점 순서)는
    T_k = {(v_0,h), …, (v_k,h), (v_k,h+1), …, (v_n,h+1)} (k = 0..n) 로 나뉩니다.

    Raises:
        StructuralError: n < 0, subdivisions < 1, base_subdivisions < 1
    """
    if n < 0 or subdivisions < 1 or base_subdivisions < 1:
        raise StructuralError(f"잘못된 삼각분할 파라미터입니다: n={n}, subdivisions={subdivisions}, "
                              f"base_subdivisions={base_subdivisions}")
    s = base_subdivisions
    base = _freudenthal_base(n, s)
    vertices: Dict[VertexId, PrismVertex] = {}
    tops = []
    for level in range(subdivisions + 1):
        height = Fraction(level, subdivisions)
        for simplex in base:
            for c in simplex:
                vertices[_vertex_id(c, level)] = PrismVertex(tuple(Fraction(x, s) for x in c), height)
    for level in range(subdivisions):
        for simplex in base:
            ordered = sorted(simplex, reverse=True)
            for k in range(n + 1):
                lower = [_vertex_id(c, level) for c in ordered[:k + 1]]
                upper = [_vertex_id(c, level + 1) for c in ordered[k:]]
                tops.append(lower + upper)
    t = PrismTriangulation(n, vertices, tops)
    t.validate()
    logger.debug(f"계단식 삼각분할 생성: {t}")
    return t


def supporting_face(t: PrismTriangulation, vertex: VertexId) -> SupportingFace:
    """정점의 지지 면 (무게중심 지지 집합과 높이 종류)"""
    try:
        p = t.vertices[vertex]
    except KeyError as e:
        raise StructuralError(f"삼각분할에 없는 정점입니다: {vertex}") from e
    if p.height == 0:
        kind = BASE_BOTTOM
    elif p.height == 1:
        kind = BASE_TOP
    else:
        kind = LATERAL
    return SupportingFace(p.support(), kind)


@dataclass
class SpernerValidation:
    valid: bool
    violations: List[Dict[str, Any]]

    def to_dict(self) -> Dict[str, Any]:
        return {'valid': self.valid, 'violations': self.violations}


def validate_r_sperner(t: PrismTriangulation, coloring: Dict[VertexId, int]) -> SpernerValidation:
    """λ(v) ∈ I(supp(v)) 를 모든 정점에서 확인

    꼭짓점 (x_i, 0), (x_i, 1) 의 지지 집합은 {i} 이므로 모서리 조건도 같은 검사로 확인됩니다.

    Raises:
        StructuralError: 색칠이 모든 정점에 정의되지 않은 경우
    """
    missing = [v for v in t.vertex_ids() if v not in coloring]
    if missing:
        raise StructuralError(f"색이 없는 정점입니다: {missing}")
    violations = []
    for v in t.vertex_ids():
        face = supporting_face(t, v)
        if coloring[v] not in face.index_set:
            violations.append({'vertex': v, 'color': coloring[v], 'allowed': sorted(face.index_set),
                               'kind': face.kind})
    return SpernerValidation(not violations, violations)


def corner_coloring(t: PrismTriangulation) -> Dict[VertexId, int]:
    """각 정점에 지지 집합의 가장 작은 번호를 칠하는 R-Sperner 색칠"""
    return {v: min(t.vertices[v].support()) for v in t.vertex_ids()}


def random_r_sperner_coloring(t: PrismTriangulation, seed: int) -> Dict[VertexId, int]:
    """지지 집합에서 균등하게 고른 시드 고정 R-Sperner 색칠"""
    rng = np.random.default_rng(seed)
    coloring = {}
    for v in t.vertex_ids():
        allowed = sorted(t.vertices[v].support())
        coloring[v] = allowed[int(rng.integers(len(allowed)))]
    return coloring
