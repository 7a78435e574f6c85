"""
그래프/하이퍼그래프 조합 파라미터

- 강지배수 γ̃, 독립 지배수 iγ (전수 탐색)
- 매칭 수 ν, 분수 매칭 수 ν*, 덮개 수 τ
- 이분 하이퍼그래프의 link, 이웃 집합, K_{Δ,Δ} 분해 판정
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, Hashable, Iterable, Optional, Union

import networkx as nx

from config.capacity_config import exhaustion_cap
from exactla.lp import NONNEG, LPFeasibility, lp_maximize
from graphs.complexes import line_graph, maximal_independent_sets
from graphs.graph import Graph, Hypergraph
from utils.exceptions import ConsistencyError, StructuralError, check_cap

logger = logging.getLogger('reconfig-center')

Count = Union[int, float]


@dataclass(frozen=True)
class DominationParams:
    total: Count  # γ̃ (고립 정점이 있으면 inf)
    independent: Count  # iγ


@dataclass(frozen=True)
class MatchingNumbers:
    nu: int
    nu_star: Fraction
    tau: int


def strongly_dominates(g: Graph, x: Iterable[Hashable], y: Iterable[Hashable]) -> bool:
    """Y의 모든 정점이 X 안에 이웃을 가지는지 (X ∩ Y 정점도 이웃이 필요)"""
    x = frozenset(x)
    return all(g.neighbors(v) & x for v in y)


def _min_dominating_size(g: Graph, target: FrozenSet[Hashable]) -> Count:
    if not target:
        return 0
    candidates = set()
    for v in target:
        neighbors = g.neighbors(v)
        if not neighbors:
            return math.inf
        candidates |= neighbors
    ordered = [v for v in g.vertices if v in candidates]
    for size in range(1, len(target) + 1):
        for chosen in combinations(ordered, size):
            if strongly_dominates(g, chosen, target):
                return size
    raise ConsistencyError("정점마다 이웃 하나씩이면 지배되어야 합니다")


def total_domination_number(g: Graph, cap: Optional[int] = None) -> Count:
    """γ̃(G): 강지배 집합의 최소 크기 (고립 정점이 있으면 inf)"""
    check_cap(len(g.vertices), cap if cap is not None else exhaustion_cap(), "지배수 계산 정점")
    return _min_dominating_size(g, frozenset(g.vertices))


def independent_domination_number(g: Graph, cap: Optional[int] = None) -> Count:
    """iγ(G): 모든 독립집합이 크기 ℓ 이하 집합에 강지배되는 최소 ℓ

    부분집합은 같은 집합으로 지배되므로 극대 독립집합만 보면 충분합니다.
    """
    check_cap(len(g.vertices), cap if cap is not None else exhaustion_cap(), "지배수 계산 정점")
    independent: Count = 0
    for maximal in maximal_independent_sets(g.to_networkx()):
        independent = max(independent, _min_dominating_size(g, frozenset(maximal)))
        if independent == math.inf:
            break
    return independent


def domination_params(g: Graph, cap: Optional[int] = None) -> DominationParams:
    """γ̃(G)와 iγ(G)를 부분집합 전수 탐색으로 계산

    Raises:
        CapacityError: 정점 수가 상한을 넘는 경우
    """
    total = total_domination_number(g, cap)
    independent = independent_domination_number(g, cap)
    logger.debug(f"지배수: γ̃={total}, iγ={independent}")
    return DominationParams(total, independent)


def fractional_matching_number(h: Hypergraph) -> Fraction:
    """ν*(H): Σ_{e∋v} x_e ≤ 1, x ≥ 0 에서 Σ x_e 최대 (여유 변수로 등식화)"""
    if not h.edges:
        return Fraction(0)
    m, n = len(h.edges), len(h.vertices)
    rows = []
    for i, v in enumerate(h.vertices):
        row = [1 if v in edge else 0 for edge in h.edges] + [0] * n
        row[m + i] = 1
        rows.append(row)
    problem = LPFeasibility.build(rows, [1] * n, [NONNEG] * (m + n))
    optimum = lp_maximize(problem, [1] * m + [0] * n)
    if optimum.status != 'optimal':
        raise ConsistencyError(f"분수 매칭 LP가 최적이 아닙니다: {optimum.status}")
    return optimum.value


def matching_number(h: Hypergraph) -> int:
    """ν(H): 선 그래프의 최대 독립집합 크기"""
    if not h.edges:
        return 0
    return max(len(s) for s in maximal_independent_sets(line_graph(h)))


def cover_number(h: Hypergraph) -> int:
    """τ(H): 모든 간선을 만나는 최소 정점 집합 크기"""
    if not h.edges:
        return 0
    for size in range(1, len(h.vertices) + 1):
        for chosen in combinations(h.vertices, size):
            chosen = frozenset(chosen)
            if all(edge & chosen for edge in h.edges):
                return size
    raise ConsistencyError("전체 정점 집합은 항상 덮개입니다")


def matching_numbers(h: Hypergraph, cap: Optional[int] = None) -> MatchingNumbers:
    """(ν, ν*, τ) 계산 후 ν ≤ ν*, ν ≤ τ ≤ r·ν 확인

    Raises:
        CapacityError: 간선 또는 정점 수가 상한을 넘는 경우
        ConsistencyError: 부등식 관계가 깨진 경우
    """
    limit = cap if cap is not None else exhaustion_cap()
    check_cap(len(h.edges), limit, "매칭 수 계산 간선")
    check_cap(len(h.vertices), limit, "덮개 수 계산 정점")
    nu = matching_number(h)
    nu_star = fractional_matching_number(h)
    tau = cover_number(h)
    if not (nu <= nu_star and nu <= tau <= h.rank() * nu):
        raise ConsistencyError(f"매칭 수 관계 위반: ν={nu}, ν*={nu_star}, τ={tau}, r={h.rank()}")
    return MatchingNumbers(nu, nu_star, tau)


def check_bipartite(h: Hypergraph, a_side: FrozenSet[Hashable]) -> None:
    for edge_id, edge in zip(h.edge_ids, h.edges):
        if len(edge & a_side) != 1:
            raise StructuralError(f"간선 {edge_id}이(가) A와 정확히 한 점에서 만나지 않습니다")


def link(h: Hypergraph, a_side: Iterable[Hashable], x: Iterable[Hashable]) -> Hypergraph:
    """lk_H(X): B 위의 간선 {e − (e ∩ A) : e ∩ A ⊆ X} (간선 id와 중복도 유지)

    Raises:
        StructuralError: H가 A에 대해 이분이 아니거나 X ⊄ A 인 경우
    """
    a_side = frozenset(a_side)
    x = frozenset(x)
    if not x <= a_side:
        raise StructuralError("X는 A의 부분집합이어야 합니다")
    check_bipartite(h, a_side)
    b_side = [v for v in h.vertices if v not in a_side]
    kept = [(edge_id, edge - a_side) for edge_id, edge in zip(h.edge_ids, h.edges) if edge & x]
    uniformity = h.r - 1 if h.r is not None and h.r > 1 else None
    return Hypergraph(b_side, [edge for _, edge in kept], r=uniformity,
                      edge_ids=[edge_id for edge_id, _ in kept])


def neighborhood(h: Hypergraph, a_side: Iterable[Hashable], x: Iterable[Hashable]) -> FrozenSet[Hashable]:
    """N(X): X의 점을 포함하는 간선들의 B쪽 정점"""
    a_side = frozenset(a_side)
    x = frozenset(x)
    check_bipartite(h, a_side)
    found = set()
    for edge in h.edges:
        if edge & x:
            found |= edge - a_side
    return frozenset(found)


def is_disjoint_kdd_union(g: Graph, delta: int) -> bool:
    """모든 연결 요소가 K_{Δ,Δ} 이고 요소 수가 |V|/(2Δ) 인지"""
    if delta < 1 or not g.vertices or len(g.vertices) % (2 * delta):
        return False
    graph = g.to_networkx()
    components = list(nx.connected_components(graph))
    if len(components) != len(g.vertices) // (2 * delta):
        return False
    pattern = nx.complete_bipartite_graph(delta, delta)
    return all(len(comp) == 2 * delta and nx.is_isomorphic(graph.subgraph(comp), pattern)
               for comp in components)
