"""
재구성 그래프 생성기

모든 합집합 규칙 RG는 "크기 k 구성 S, T 가 |S ∩ T| = k−1 이고 S ∪ T 가 면" 이라는
공통 형태를 가지므로, (k−1)-부분집합 버킷으로 후보 쌍을 모은 뒤 조건을 확인합니다.
"""

import logging
from itertools import combinations, product
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from complex.derived import colorful_simplices
from complex.partition import VertexPartition
from complex.simplicial import SimplicialComplex
from config.capacity_config import rg_candidate_cap
from graphs.complexes import independence_complex, matching_complex
from graphs.graph import Graph, Hypergraph, ListAssignment
from graphs.list_coloring import EDGE_MODE, VERTEX_MODE, list_coloring_reduction
from graphs.params import check_bipartite
from matroid.matroid import Matroid
from matroid.operations import independence_complex_of
from reconfig.reconfig_graph import Configuration, ReconfigGraph
from utils.exceptions import ConsistencyError, StructuralError, check_cap

logger = logging.getLogger('reconfig-center')

Adjacency = Callable[[Configuration, Configuration], bool]


def _candidates(c: SimplicialComplex, k: int, cap: Optional[int]) -> Tuple[Configuration, ...]:
    check_cap(c.face_count(k - 1), cap if cap is not None else rg_candidate_cap(), "RG 후보 구성")
    return c.faces(k - 1)


def _one_swap_pairs(configurations: Sequence[Configuration]) -> Iterable[Tuple[int, int]]:
    """|S ∩ T| = |S| − 1 인 쌍 (각 쌍은 공통 부분이 유일하므로 한 번만 나옴)"""
    buckets: Dict[frozenset, List[int]] = {}
    for i, configuration in enumerate(configurations):
        members = frozenset(configuration)
        for dropped in configuration:
            buckets.setdefault(members - {dropped}, []).append(i)
    for indices in buckets.values():
        yield from combinations(indices, 2)


def build_union_rule(configurations: Sequence[Configuration], adjacent: Adjacency) -> ReconfigGraph:
    """한 원소 교체 쌍 중 adjacent를 만족하는 쌍을 간선으로 갖는 RG"""
    edges = [(i, j) for i, j in _one_swap_pairs(configurations)
             if adjacent(configurations[i], configurations[j])]
    rg = ReconfigGraph(configurations, edges)
    logger.debug(f"RG 생성 완료: {rg}")
    return rg


def verify_edges(rg: ReconfigGraph, c: Optional[SimplicialComplex] = None) -> None:
    """모든 간선이 정확히 한 원소만 다르고 (c가 주어지면) 합집합이 면인지 재확인

    Raises:
        ConsistencyError: 위반 간선이 있는 경우
    """
    for a, b in rg.edges():
        first, second = frozenset(a), frozenset(b)
        if len(first ^ second) != 2 or len(first) != len(second):
            raise ConsistencyError(f"한 원소만 다르지 않은 간선입니다: {a} – {b}")
        if c is not None and not c.contains(first | second):
            raise ConsistencyError(f"합집합이 면이 아닌 간선입니다: {a} – {b}")


def rg_colorful(c: SimplicialComplex, v: VertexPartition, k: Optional[int] = None,
                weak: bool = False, cap: Optional[int] = None) -> ReconfigGraph:
    """RG(C, V; k): 정확히 k개 클래스를 한 점씩 만나는 면, 합집합이 크기 k+1 면이면 인접

    Args:
        c (SimplicialComplex): 복합체
        v (VertexPartition): 정점 분할
        k (Optional[int]): 구성 크기 (기본 n)
        weak (bool): True면 합집합 조건 대신 "같은 클래스의 한 정점만 다름" 으로 인접 판정
        cap (Optional[int]): 후보 구성 수 상한

    Raises:
        StructuralError: k가 1..n 범위 밖
        CapacityError: 후보 구성이 상한을 넘는 경우
    """
    n = v.n
    k = n if k is None else k
    if not 1 <= k <= n:
        raise StructuralError(f"k는 1..{n} 범위여야 합니다: {k}")
    v.validate_for(c.vertices(), c.ground_set)
    if k == n:
        configurations = colorful_simplices(c, v)
    else:
        configurations = [face for face in _candidates(c, k, cap) if len(v.classes_met(face)) == k]
    if weak:
        def adjacent(a: Configuration, b: Configuration) -> bool:
            (x,), (y,) = set(a) - set(b), set(b) - set(a)
            return v.class_of(x) == v.class_of(y)
    else:
        def adjacent(a: Configuration, b: Configuration) -> bool:
            return c.contains(set(a) | set(b))
    rg = build_union_rule(configurations, adjacent)
    verify_edges(rg, None if weak else c)
    return rg


def rg_complex_matroid(c: SimplicialComplex, m: Matroid, k: int,
                       cap: Optional[int] = None) -> ReconfigGraph:
    """RG(C, M; k): M에서 독립인 크기 k 면, 합집합이 크기 k+1 면이면 인접

    Raises:
        StructuralError: 바탕 집합 불일치 또는 k 범위 오류
    """
    if set(c.ground_set) != set(m.ground_set):
        raise StructuralError("복합체와 매트로이드의 바탕 집합이 일치하지 않습니다")
    if not 1 <= k <= m.full_rank:
        raise StructuralError(f"k는 1..{m.full_rank} 범위여야 합니다: {k}")
    configurations = [face for face in _candidates(c, k, cap) if m.is_independent(face)]
    rg = build_union_rule(configurations, lambda a, b: c.contains(set(a) | set(b)))
    verify_edges(rg, c)
    return rg


def rg_matroid_intersection(m: Matroid, n: Matroid, k: int, cap: Optional[int] = None) -> ReconfigGraph:
    """RG(M, N; k) = RG(I(M), N; k)"""
    return rg_complex_matroid(independence_complex_of(m), n, k, cap=cap)


def rg_bipartite_matching(h: Hypergraph, a_side: Iterable[Hashable], k: Optional[int] = None,
                          cap: Optional[int] = None) -> ReconfigGraph:
    """RG_Mat(H, A; k): 크기 k 매칭, 대칭차가 B쪽에서 서로소인 두 간선이면 인접

    Raises:
        StructuralError: H가 A에 대해 이분이 아니거나 k 범위 오류
    """
    a_side = frozenset(a_side)
    check_bipartite(h, a_side)
    k = len(a_side) if k is None else k
    if k < 1:
        raise StructuralError(f"k는 1 이상이어야 합니다: {k}")
    complex_ = matching_complex(h)
    if k - 1 > complex_.dim:
        return ReconfigGraph([], [])
    configurations = _candidates(complex_, k, cap)

    def adjacent(a: Configuration, b: Configuration) -> bool:
        (e,), (f,) = set(a) - set(b), set(b) - set(a)
        return not ((h.edge(e) - a_side) & (h.edge(f) - a_side))

    rg = build_union_rule(configurations, adjacent)
    verify_edges(rg)
    return rg


def up_down_walk(col: SimplicialComplex, m: int, cap: Optional[int] = None) -> ReconfigGraph:
    """(m−1)-단체들, 공통 m-단체의 면이면 인접"""
    if m < 1:
        raise StructuralError(f"m은 1 이상이어야 합니다: {m}")
    configurations = _candidates(col, m, cap)
    rg = build_union_rule(configurations, lambda a, b: col.contains(set(a) | set(b)))
    verify_edges(rg, col)
    return rg


def rg_list_coloring(h: Union[Graph, Hypergraph], lists: ListAssignment, mode: str = VERTEX_MODE,
                     cap: Optional[int] = None) -> ReconfigGraph:
    """적절한 L-색칠들의 RG (정점 하나 또는 간선 하나의 재색칠로 인접)"""
    aux, partition = list_coloring_reduction(h, lists, mode)
    if mode == EDGE_MODE:
        complex_ = matching_complex(aux)
    else:
        complex_ = independence_complex(aux)
    return rg_colorful(complex_, partition, cap=cap)


def loose_walk_graph(c: SimplicialComplex, v: VertexPartition) -> ReconfigGraph:
    """컬러풀 심플렉스의 교차 그래프 (느슨한 보행 연결성 오라클)"""
    configurations = colorful_simplices(c, v)
    members = [frozenset(s) for s in configurations]
    edges = [(i, j) for i, j in combinations(range(len(configurations)), 2) if members[i] & members[j]]
    return ReconfigGraph(configurations, edges)


ChoiceTuple = Tuple[int, ...]


def choice_configuration(choice: Sequence[int]) -> Configuration:
    """선택 튜플 (j_1, ..., j_n) → 인덱스 순 (i, j_i) 쌍 구성"""
    return tuple((i, j) for i, j in enumerate(choice))


def build_choice_rule(sizes: Sequence[int], admissible: Callable[[ChoiceTuple], bool],
                      reduced_admissible: Callable[[int, ChoiceTuple], bool],
                      cap: Optional[int] = None) -> ReconfigGraph:
    """좌표마다 하나씩 고르는 구성들의 RG

    정점은 admissible을 만족하는 선택 튜플이고, 정확히 한 좌표 j에서만 다른 두 정점은
    j를 뺀 공통 부분이 reduced_admissible(j, choice)를 만족할 때 인접합니다.
    공통 부분이 같은 정점끼리 버킷으로 묶으므로 축약 판정은 버킷마다 한 번만 수행합니다.

    Args:
        sizes: 좌표별 선택지 개수
        admissible: 정점 판정
        reduced_admissible: (빠진 좌표, 선택 튜플) 판정. 빠진 좌표 값은 무시해야 함
        cap: 전체 선택 튜플 수 상한

    Raises:
        CapacityError: 선택 튜플 수가 상한을 넘는 경우
    """
    total = 1
    for size in sizes:
        total *= size
    check_cap(total, cap if cap is not None else rg_candidate_cap(), "선택 튜플")
    choices = [choice for choice in product(*(range(size) for size in sizes)) if admissible(choice)]
    buckets: Dict[Tuple[int, ChoiceTuple], List[int]] = {}
    for index, choice in enumerate(choices):
        for j in range(len(choice)):
            buckets.setdefault((j, choice[:j] + (-1,) + choice[j + 1:]), []).append(index)
    edges = []
    for (j, _), indices in buckets.items():
        if len(indices) > 1 and reduced_admissible(j, choices[indices[0]]):
            edges.extend(combinations(indices, 2))
    rg = ReconfigGraph([choice_configuration(choice) for choice in choices], edges)
    logger.debug(f"선택 규칙 RG 생성 완료: {rg}")
    return rg
