"""
재구성 그래프(RG)와 연결성 분석

구성(configuration)은 정렬된 id 튜플이며, 그래프는 구성 인덱스를 정점으로 하는
networkx 그래프에 보관합니다. 연결 요소 라벨은 union-find로 만든 뒤
networkx 연결 요소 수와 대조해 재검증합니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from config.capacity_config import diameter_cap
from utils.exceptions import ConsistencyError, LookupFailure

logger = logging.getLogger('reconfig-center')

Configuration = Tuple[Hashable, ...]


class ReconfigGraph:
    """불변 재구성 그래프

    Attributes:
        configurations (Tuple[Configuration, ...]): 인덱스 순서의 구성 목록
        graph (nx.Graph): 정점 = 구성 인덱스
        component_labels (Tuple[int, ...]): 구성별 연결 요소 라벨 (가장 작은 인덱스 순으로 0, 1, ...)
    """

    def __init__(self, configurations: Sequence[Configuration], edges: Iterable[Tuple[int, int]]):
        self.configurations = tuple(tuple(c) for c in configurations)
        self._index: Dict[Configuration, int] = {}
        for i, configuration in enumerate(self.configurations):
            if configuration in self._index:
                raise ConsistencyError(f"중복 구성입니다: {configuration}")
            self._index[configuration] = i
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(len(self.configurations)))
        for i, j in edges:
            if i == j:
                raise ConsistencyError(f"자기 루프 간선입니다: {self.configurations[i]}")
            self.graph.add_edge(i, j)
        self.component_labels = self._label_components()

    def _label_components(self) -> Tuple[int, ...]:
        forest = UnionFind(range(len(self.configurations)))
        for i, j in self.graph.edges():
            forest.union(i, j)
        labels: Dict[int, int] = {}
        result = []
        for i in range(len(self.configurations)):
            root = forest[i]
            if root not in labels:
                labels[root] = len(labels)
            result.append(labels[root])
        if len(labels) != nx.number_connected_components(self.graph):
            raise ConsistencyError("union-find 연결 요소 수가 BFS 결과와 다릅니다")
        return tuple(result)

    def __len__(self) -> int:
        return len(self.configurations)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    @property
    def component_count(self) -> int:
        return max(self.component_labels, default=-1) + 1

    def index(self, configuration: Iterable[Hashable]) -> int:
        key = tuple(configuration)
        try:
            return self._index[key]
        except KeyError as e:
            raise LookupFailure(f"재구성 그래프에 없는 구성입니다: {list(key)}") from e

    def contains(self, configuration: Iterable[Hashable]) -> bool:
        return tuple(configuration) in self._index

    def adjacent(self, a: Iterable[Hashable], b: Iterable[Hashable]) -> bool:
        return self.graph.has_edge(self.index(a), self.index(b))

    def edges(self) -> List[Tuple[Configuration, Configuration]]:
        pairs = sorted(tuple(sorted(e)) for e in self.graph.edges())
        return [(self.configurations[i], self.configurations[j]) for i, j in pairs]

    def components(self) -> List[List[Configuration]]:
        groups: List[List[Configuration]] = [[] for _ in range(self.component_count)]
        for configuration, label in zip(self.configurations, self.component_labels):
            groups[label].append(configuration)
        return groups

    def relabel(self, mapping) -> 'ReconfigGraph':
        """구성마다 mapping을 적용한 동형 그래프 (동형 비교용)"""
        return ReconfigGraph([mapping(c) for c in self.configurations], self.graph.edges())

    def same_as(self, other: 'ReconfigGraph') -> bool:
        """정점 집합과 간선 집합이 구성 단위로 같은지"""
        if set(self.configurations) != set(other.configurations):
            return False
        mine = {frozenset(pair) for pair in self.edges()}
        theirs = {frozenset(pair) for pair in other.edges()}
        return mine == theirs

    def __repr__(self) -> str:
        return f"ReconfigGraph(|V|={len(self)}, |E|={self.edge_count}, components={self.component_count})"


@dataclass
class RGAnalysis:
    """analyze 결과

    빈 그래프는 is_connected=False, empty=True 로 표시합니다.
    """
    component_count: int
    is_connected: bool
    empty: bool
    components: List[List[Configuration]] = field(default_factory=list)
    path: Optional[List[Configuration]] = None
    diameter: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            'component_count': self.component_count,
            'is_connected': self.is_connected,
            'empty': self.empty,
            'components': [[list(c) for c in comp] for comp in self.components],
        }
        if self.path is not None:
            payload['path'] = [list(c) for c in self.path]
        if self.diameter is not None:
            payload['diameter'] = self.diameter
        return payload


def shortest_path(rg: ReconfigGraph, source: Iterable[Hashable],
                  target: Iterable[Hashable]) -> Optional[List[Configuration]]:
    """두 구성 사이 최단 경로 (다른 연결 요소면 None)

    Raises:
        LookupFailure: 끝점이 그래프에 없는 경우
    """
    s, t = rg.index(source), rg.index(target)
    if rg.component_labels[s] != rg.component_labels[t]:
        return None
    indices = nx.shortest_path(rg.graph, s, t)
    path = [rg.configurations[i] for i in indices]
    for a, b in zip(indices, indices[1:]):
        if not rg.graph.has_edge(a, b):
            raise ConsistencyError("경로의 연속한 두 구성이 인접하지 않습니다")
    return path


def analyze(rg: ReconfigGraph, source: Optional[Iterable[Hashable]] = None,
            target: Optional[Iterable[Hashable]] = None, with_diameter: bool = False,
            cap: Optional[int] = None) -> RGAnalysis:
    """연결 요소, 선택적 경로와 지름 분석

    Args:
        rg (ReconfigGraph): 대상 그래프
        source, target: 경로 끝점 (둘 다 주어질 때만 경로 계산)
        with_diameter (bool): 지름 계산 여부 (연결이고 상한 이하일 때만)
        cap (Optional[int]): 지름 계산 정점 수 상한
    """
    count = rg.component_count
    result = RGAnalysis(component_count=count, is_connected=count == 1, empty=len(rg) == 0,
                        components=rg.components())
    if source is not None and target is not None:
        result.path = shortest_path(rg, source, target)
    if with_diameter and result.is_connected:
        limit = cap if cap is not None else diameter_cap()
        if len(rg) <= limit:
            result.diameter = nx.diameter(rg.graph)
        else:
            logger.warning(f"지름 계산 생략: 정점 {len(rg)}개가 상한 {limit}을 초과했습니다")
    return result


def rg_to_payload(rg: ReconfigGraph) -> Dict[str, Any]:
    """보고서용 요약: 정점/간선/연결 요소 수와 요소별 대표 구성"""
    return {
        'vertices': len(rg),
        'edges': rg.edge_count,
        'components': rg.component_count,
        'witness_vertices_per_component': [list(comp[0]) for comp in rg.components()],
    }
