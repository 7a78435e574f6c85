"""
정리별 가설 평가기

모든 평가기는 HypothesisReport를 반환하며, 부분집합 I 는 1부터 시작하는 번호로 보고합니다.
부분집합 순회는 크기 오름차순, 같은 크기에서는 사전순이므로 첫 실패가 곧 사전순 첫 실패입니다.
"""

import logging
import math
from fractions import Fraction
from typing import Any, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from complex.partition import VertexPartition, index_subsets
from complex.simplicial import SimplicialComplex, induced
from config.capacity_config import hall_subset_cap
from geometry.points import HPolytopeFamily, PointConfig, conv_contains, intersection_is_empty
from graphs.complexes import matching_complex
from graphs.graph import Graph, Hypergraph, ListAssignment
from graphs.list_coloring import EDGE_MODE, VERTEX_MODE, max_color_degree
from graphs.params import (check_bipartite, cover_number, independent_domination_number, is_disjoint_kdd_union,
                           link, matching_number, neighborhood, total_domination_number)
from hallcheck.reports import HypothesisReport
from homology.betti import eta_h
from homology.leray import is_d_leray
from matroid.matroid import Matroid
from matroid.operations import flats, intersection_number
from utils.exceptions import PreconditionError, StructuralError, check_cap

logger = logging.getLogger('reconfig-center')


def _one_based(indices: Iterable[int]) -> List[int]:
    return [i + 1 for i in indices]


def _subsets(n: int, cap: Optional[int]) -> List[Tuple[int, ...]]:
    check_cap(n, cap if cap is not None else hall_subset_cap(), "Hall 부분집합 클래스 수")
    return index_subsets(n)


def _a_subsets(h: Hypergraph, a_side: Iterable[Hashable],
               cap: Optional[int]) -> Tuple[FrozenSet[Hashable], List[Tuple[Hashable, ...]]]:
    """A 를 정점 순서로 정렬해 비어 있지 않은 부분집합 X 를 열거"""
    a_side = frozenset(a_side)
    check_bipartite(h, a_side)
    ordered = [v for v in h.vertices if v in a_side]
    check_cap(len(ordered), cap if cap is not None else hall_subset_cap(), "A 부분집합 크기")
    return a_side, [tuple(ordered[i] for i in subset) for subset in index_subsets(len(ordered))]


def check_hall(c: SimplicialComplex, v: VertexPartition, m: int = 1, d: int = 0,
               theorem_id: str = 'hall', cap: Optional[int] = None) -> HypothesisReport:
    """η_H(C[V_I]) ≥ |I| − d + m 를 |I| ≥ max(d, 1) 인 모든 I 에서 확인

    Args:
        c (SimplicialComplex): 복합체
        v (VertexPartition): V(C)를 덮는 분할
        m (int): 연결성 여유 (0: 존재, 1: 재구성)
        d (int): 결손
        theorem_id (str): 보고서에 기록할 정리 ID
        cap (Optional[int]): 클래스 수 상한

    Raises:
        StructuralError: m 또는 d 가 음수이거나 분할이 복합체와 맞지 않는 경우
        CapacityError: 클래스 수가 상한을 넘는 경우
    """
    if m < 0 or d < 0:
        raise StructuralError(f"m, d 는 0 이상이어야 합니다: m={m}, d={d}")
    v.validate_for(c.vertices(), c.ground_set)
    rows = []
    for subset in _subsets(v.n, cap):
        if len(subset) < max(d, 1):
            continue
        eta = eta_h(induced(c, v.index_union(subset)))
        bound = len(subset) - d + m
        rows.append({'I': _one_based(subset), 'eta': eta, 'bound': bound, 'ok': eta >= bound})
    report = HypothesisReport.from_rows(theorem_id, rows)
    logger.debug(f"{theorem_id}: holds={report.holds}, 검사 {len(rows)}개")
    return report


def check_complex_matroid(c: SimplicialComplex, m: Matroid, k: int, m_conn: int = 1,
                          theorem_id: str = 'complex-matroid', cap: Optional[int] = None) -> HypothesisReport:
    """η_H(C[X]) + r(M[V − X]) ≥ k + m_conn, V − X 는 계수 k−1 이하의 평탄집합

    Raises:
        StructuralError: 바탕 집합 불일치 또는 k 범위 오류
    """
    if set(c.ground_set) != set(m.ground_set):
        raise StructuralError("복합체와 매트로이드의 바탕 집합이 일치하지 않습니다")
    if not 1 <= k <= m.full_rank:
        raise StructuralError(f"k는 1..{m.full_rank} 범위여야 합니다: {k}")
    ground = frozenset(m.ground_set)
    rows = []
    for flat in flats(m, k - 1, cap):
        x = ground - flat
        eta = eta_h(induced(c, x))
        rank = m.rank(flat)
        value = eta + rank
        rows.append({'flat': sorted(flat, key=m.ground_set.index), 'eta': eta, 'rank': rank,
                     'value': value, 'bound': k + m_conn, 'ok': value >= k + m_conn})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_matroid_intersection(m: Matroid, n: Matroid, k: int, theorem_id: str = 'matroid-intersection',
                               cap: Optional[int] = None) -> HypothesisReport:
    """r(M[X]) + r(N[V − X]) ≥ k + 1, V − X 는 N 의 계수 k−1 이하 평탄집합"""
    if set(m.ground_set) != set(n.ground_set):
        raise StructuralError("두 매트로이드의 바탕 집합이 일치하지 않습니다")
    if not 1 <= k <= n.full_rank:
        raise StructuralError(f"k는 1..{n.full_rank} 범위여야 합니다: {k}")
    ground = frozenset(m.ground_set)
    rows = []
    for flat in flats(n, k - 1, cap):
        value = m.rank(ground - flat) + n.rank(flat)
        rows.append({'flat': sorted(flat, key=n.ground_set.index), 'value': value, 'bound': k + 1,
                     'ok': value >= k + 1})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_matroid_intersection_corollary(m: Matroid, n: Matroid, k: int,
                                         theorem_id: str = 'matroid-intersection-corollary',
                                         cap: Optional[int] = None) -> HypothesisReport:
    """k ≤ ν(M, N) − 1"""
    nu = intersection_number(m, n, cap)
    return HypothesisReport.single(theorem_id, 1 <= k <= nu - 1, k=k, nu=nu)


def _graph_partition(g: Graph, v: VertexPartition) -> None:
    v.validate_for(g.vertices, g.vertices)


def check_bko(g: Graph, v: VertexPartition, delta: int, theorem_id: str = 'bko',
              cap: Optional[int] = None) -> HypothesisReport:
    """G[V_I] 가 |I| 개의 K_{Δ,Δ} 의 서로소 합이 아닌지 모든 I 에서 확인

    Raises:
        PreconditionError: 최대 차수 > Δ 이거나 |V_i| < 2Δ 인 클래스가 있는 경우
    """
    _graph_partition(g, v)
    if delta < 1:
        raise PreconditionError(f"Δ는 1 이상이어야 합니다: {delta}")
    if g.max_degree() > delta:
        raise PreconditionError(f"최대 차수 {g.max_degree()}가 Δ={delta}보다 큽니다")
    small = [i + 1 for i, cls in enumerate(v.classes) if len(cls) < 2 * delta]
    if small:
        raise PreconditionError(f"|V_i| < 2Δ 인 클래스가 있습니다: {small}")
    rows = []
    for subset in _subsets(v.n, cap):
        members = v.index_union(subset)
        exact = len(members) == 2 * delta * len(subset) and is_disjoint_kdd_union(g.induced(members), delta)
        rows.append({'I': _one_based(subset), 'size': len(members), 'kdd_union': exact, 'ok': not exact})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_domination_total(g: Graph, v: VertexPartition, theorem_id: str = 'domination-total',
                           cap: Optional[int] = None) -> HypothesisReport:
    """γ̃(G[V_I]) ≥ 2|I| + 1"""
    _graph_partition(g, v)
    rows = []
    for subset in _subsets(v.n, cap):
        gamma = total_domination_number(g.induced(v.index_union(subset)))
        bound = 2 * len(subset) + 1
        rows.append({'I': _one_based(subset), 'total_domination': gamma, 'bound': bound, 'ok': gamma >= bound})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_domination_independent(g: Graph, v: VertexPartition, theorem_id: str = 'domination-independent',
                                 cap: Optional[int] = None) -> HypothesisReport:
    """iγ(G[V_I]) ≥ |I| + 1"""
    _graph_partition(g, v)
    rows = []
    for subset in _subsets(v.n, cap):
        gamma = independent_domination_number(g.induced(v.index_union(subset)))
        bound = len(subset) + 1
        rows.append({'I': _one_based(subset), 'independent_domination': gamma, 'bound': bound,
                     'ok': gamma >= bound})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_max_degree(g: Graph, v: VertexPartition, theorem_id: str = 'max-degree') -> HypothesisReport:
    """모든 클래스에서 |V_i| ≥ 2Δ + 1"""
    _graph_partition(g, v)
    delta = g.max_degree()
    rows = [{'class': i + 1, 'size': len(cls), 'bound': 2 * delta + 1, 'ok': len(cls) >= 2 * delta + 1}
            for i, cls in enumerate(v.classes)]
    return HypothesisReport.from_rows(theorem_id, rows)


def _as_hypergraph(h: Union[Graph, Hypergraph]) -> Hypergraph:
    return h if isinstance(h, Hypergraph) else Hypergraph.from_graph(h)


def check_rainbow(h: Union[Graph, Hypergraph], e: VertexPartition, theorem_id: str = 'rainbow') -> HypothesisReport:
    """간선 분할의 모든 클래스에서 |E_i| ≥ rΔ + 1 (r: 간선 크기 최댓값, Δ: 최대 차수)"""
    hypergraph = _as_hypergraph(h)
    e.validate_for(hypergraph.edge_ids, hypergraph.edge_ids)
    bound = hypergraph.rank() * hypergraph.max_degree() + 1
    rows = [{'class': i + 1, 'size': len(cls), 'bound': bound, 'ok': len(cls) >= bound}
            for i, cls in enumerate(e.classes)]
    return HypothesisReport.from_rows(theorem_id, rows)


def check_deficiency_link(h: Hypergraph, a_side: Iterable[Hashable], d: int = 0,
                          theorem_id: str = 'deficiency-link', cap: Optional[int] = None) -> HypothesisReport:
    """η_H(M(lk_H(X))) ≥ |X| − d + 1 (비어 있지 않은 X ⊆ A)"""
    if d < 0:
        raise StructuralError(f"d 는 0 이상이어야 합니다: {d}")
    a_side, subsets = _a_subsets(h, a_side, cap)
    rows = []
    for x in subsets:
        eta = eta_h(matching_complex(link(h, a_side, x)))
        bound = len(x) - d + 1
        rows.append({'X': list(x), 'eta': eta, 'bound': bound, 'ok': eta >= bound})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_hall_hypergraph(h: Hypergraph, a_side: Iterable[Hashable], theorem_id: str = 'hall-hypergraph',
                          cap: Optional[int] = None) -> HypothesisReport:
    """ν(lk_H(X)) ≥ (r − 1)|X| + 1"""
    a_side, subsets = _a_subsets(h, a_side, cap)
    r = h.rank()
    rows = []
    for x in subsets:
        nu = matching_number(link(h, a_side, x))
        bound = (r - 1) * len(x) + 1
        rows.append({'X': list(x), 'nu': nu, 'bound': bound, 'ok': nu >= bound})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_hall_bipartite(h: Union[Graph, Hypergraph], a_side: Iterable[Hashable],
                         theorem_id: str = 'hall-bipartite', cap: Optional[int] = None) -> HypothesisReport:
    """|N(X)| ≥ |X| + 1 (이분 그래프)"""
    hypergraph = _as_hypergraph(h)
    if hypergraph.edges and hypergraph.rank() != 2:
        raise StructuralError("hall-bipartite 는 그래프(2-균등)에서만 정의됩니다")
    a_side, subsets = _a_subsets(hypergraph, a_side, cap)
    rows = []
    for x in subsets:
        size = len(neighborhood(hypergraph, a_side, x))
        rows.append({'X': list(x), 'neighbors': size, 'bound': len(x) + 1, 'ok': size >= len(x) + 1})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_konig(h: Hypergraph, a_side: Iterable[Hashable], k: int, theorem_id: str = 'konig') -> HypothesisReport:
    """1 ≤ k ≤ ν(H) − 1"""
    check_bipartite(h, frozenset(a_side))
    nu = matching_number(h)
    return HypothesisReport.single(theorem_id, 1 <= k <= nu - 1, k=k, nu=nu)


def is_three_partite(h: Hypergraph, a_side: Iterable[Hashable]) -> bool:
    """A 가 모든 간선을 한 번씩 만나고, B 쪽 두 점 쌍들이 이분 그래프를 이루는지"""
    a_side = frozenset(a_side)
    if any(len(edge) != 3 or len(edge & a_side) != 1 for edge in h.edges):
        return False
    pairs = nx.Graph()
    pairs.add_nodes_from(v for v in h.vertices if v not in a_side)
    pairs.add_edges_from(tuple(edge - a_side) for edge in h.edges)
    return nx.is_bipartite(pairs)


def check_ryser3(h: Hypergraph, a_side: Iterable[Hashable], k: int, theorem_id: str = 'ryser-3') -> HypothesisReport:
    """3-분할 3-균등 하이퍼그래프에서 2k < τ(H)

    Raises:
        PreconditionError: 3-분할 3-그래프가 아닌 경우
    """
    if not is_three_partite(h, a_side):
        raise PreconditionError("ryser-3 는 A 를 한 쪽으로 하는 3-분할 3-그래프에서만 정의됩니다")
    tau = cover_number(h)
    return HypothesisReport.single(theorem_id, k >= 1 and 2 * k < tau, k=k, tau=tau)


def check_vertex_list_coloring(g: Graph, lists: ListAssignment,
                               theorem_id: str = 'vertex-list-coloring') -> HypothesisReport:
    """모든 정점에서 |L(v)| ≥ 2Δ + 1 (Δ: 색 차수 최댓값)"""
    delta = max_color_degree(g, lists, VERTEX_MODE)
    rows = [{'vertex': v, 'size': len(lists[v]), 'bound': 2 * delta + 1, 'ok': len(lists[v]) >= 2 * delta + 1}
            for v in g.vertices]
    return HypothesisReport.from_rows(theorem_id, rows)


def check_edge_list_coloring(h: Union[Graph, Hypergraph], lists: ListAssignment,
                             theorem_id: str = 'edge-list-coloring') -> HypothesisReport:
    """모든 간선에서 |L(e)| ≥ rΔ + 1 (Δ: 색 차수 최댓값)"""
    hypergraph = _as_hypergraph(h)
    delta = max_color_degree(hypergraph, lists, EDGE_MODE)
    bound = hypergraph.rank() * delta + 1
    rows = [{'edge': e, 'size': len(lists[e]), 'bound': bound, 'ok': len(lists[e]) >= bound}
            for e in hypergraph.edge_ids]
    return HypothesisReport.from_rows(theorem_id, rows)


def latin_square_k(n: int) -> int:
    """⌈2n/3 − 3/2⌉"""
    return math.ceil(Fraction(2 * n, 3) - Fraction(3, 2))


def check_latin_square(h: Hypergraph, e: VertexPartition, theorem_id: str = 'latin-square') -> HypothesisReport:
    """E 가 K_{n,n} 의 간선을 크기 n 인 n 개 클래스로 나누는지, 그리고 k = ⌈2n/3 − 3/2⌉ ≥ 1 인지"""
    e.validate_for(h.edge_ids, h.edge_ids)
    n = e.n
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    graph.add_edges_from(tuple(edge) for edge in h.edges if len(edge) == 2)
    complete = (len(h.vertices) == 2 * n and len(h.edges) == n * n and graph.number_of_edges() == n * n
                and nx.is_isomorphic(graph, nx.complete_bipartite_graph(n, n)))
    rows = [{'check': 'complete_bipartite', 'n': n, 'ok': complete}]
    rows += [{'class': i + 1, 'size': len(cls), 'bound': n, 'ok': len(cls) == n} for i, cls in enumerate(e.classes)]
    k = latin_square_k(n)
    rows.append({'check': 'k', 'k': k, 'ok': k >= 1})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_topological_helly(c: SimplicialComplex, m: Matroid, d: int, m_conn: int = 1,
                            theorem_id: str = 'topological-helly', cap: Optional[int] = None) -> HypothesisReport:
    """C 가 d-Leray 이고 모든 A ∈ C 에 대해 r(M[V − A]) ≥ d + 1 + m_conn

    랭크는 단조이므로 극대면만 확인하면 충분합니다.
    """
    if set(c.ground_set) != set(m.ground_set):
        raise StructuralError("복합체와 매트로이드의 바탕 집합이 일치하지 않습니다")
    ground = frozenset(c.ground_set)
    rows = [{'check': 'leray', 'd': d, 'ok': is_d_leray(c, d, cap)}]
    bound = d + 1 + m_conn
    for face in c.sorted_maximal_faces():
        rank = m.rank(ground - frozenset(face))
        rows.append({'face': list(face), 'rank': rank, 'bound': bound, 'ok': rank >= bound})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_colorful_caratheodory(a_sets: Sequence[Sequence[Sequence[Any]]], x: Sequence[Any], m_conn: int = 1,
                                theorem_id: str = 'colorful-caratheodory') -> HypothesisReport:
    """모든 i 에서 x ∈ conv(A_i), 그리고 n ≥ d + 1 + m_conn"""
    d = len(x)
    rows = [{'check': 'count', 'n': len(a_sets), 'bound': d + 1 + m_conn, 'ok': len(a_sets) >= d + 1 + m_conn}]
    for i, a in enumerate(a_sets):
        contains = conv_contains(a, x).contains
        rows.append({'class': i + 1, 'contains': contains, 'ok': contains})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_colorful_helly(families: HPolytopeFamily, d: int, m_conn: int = 1,
                         theorem_id: str = 'colorful-helly') -> HypothesisReport:
    """모든 i 에서 ⋂F_i = ∅, 그리고 n ≥ d + 1 + m_conn"""
    rows = [{'check': 'count', 'n': len(families), 'bound': d + 1 + m_conn,
             'ok': len(families) >= d + 1 + m_conn}]
    for i, family in enumerate(families):
        empty = intersection_is_empty(family, d)
        rows.append({'class': i + 1, 'empty_intersection': empty, 'ok': empty})
    return HypothesisReport.from_rows(theorem_id, rows)


def check_tverberg(config: PointConfig, r: int, m_conn: int = 1,
                   theorem_id: str = 'tverberg-reconfig') -> HypothesisReport:
    """|X| ≥ (d + 1)(r − 1) + 1 + m_conn"""
    bound = (config.d + 1) * (r - 1) + 1 + m_conn
    return HypothesisReport.single(theorem_id, len(config) >= bound, n=len(config), bound=bound)
