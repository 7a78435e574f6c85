"""
그래프, 다중 하이퍼그래프, 리스트 할당 타입
"""

from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from complex.simplicial import _ids
from utils.exceptions import StructuralError

Vertex = Hashable


class Graph:
    """단순 그래프 (자기 루프, 다중 간선 없음)

    Attributes:
        vertices (Tuple): 정점 (정규 순서)
        edges (FrozenSet[FrozenSet]): 간선
    """

    __slots__ = ('vertices', 'edges', '_neighbors', '_order')

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Iterable[Vertex]]):
        self.vertices = tuple(vertices)
        self._order = {v: i for i, v in enumerate(self.vertices)}
        if len(self._order) != len(self.vertices):
            raise StructuralError("그래프 정점이 중복되었습니다")
        edge_set = set()
        self._neighbors: Dict[Vertex, set] = {v: set() for v in self.vertices}
        for edge in edges:
            pair = frozenset(edge)
            if len(pair) != 2:
                raise StructuralError(f"자기 루프 또는 잘못된 간선입니다: {list(edge)}")
            if pair in edge_set:
                raise StructuralError(f"중복 간선입니다: {sorted(map(str, pair))}")
            for v in pair:
                if v not in self._order:
                    raise StructuralError(f"그래프에 없는 정점의 간선입니다: {v}")
            edge_set.add(pair)
            u, w = tuple(pair)
            self._neighbors[u].add(w)
            self._neighbors[w].add(u)
        self.edges = frozenset(edge_set)

    def neighbors(self, v: Vertex) -> FrozenSet[Vertex]:
        return frozenset(self._neighbors[v])

    def degree(self, v: Vertex) -> int:
        return len(self._neighbors[v])

    def max_degree(self) -> int:
        return max((len(n) for n in self._neighbors.values()), default=0)

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self._neighbors[u]

    def is_independent(self, vertices: Iterable[Vertex]) -> bool:
        vertices = list(vertices)
        return all(not self.adjacent(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])

    def induced(self, vertices: Iterable[Vertex]) -> 'Graph':
        keep = set(vertices)
        return Graph([v for v in self.vertices if v in keep],
                     [e for e in self.edges if e <= keep])

    def sort_key(self, v: Vertex) -> int:
        return self._order[v]

    def sorted_edges(self) -> List[Tuple[Vertex, Vertex]]:
        pairs = [tuple(sorted(e, key=self._order.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (self._order[p[0]], self._order[p[1]]))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(e) for e in self.edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {'vertices': list(self.vertices), 'edges': [list(e) for e in self.sorted_edges()]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


class Hypergraph:
    """다중 하이퍼그래프 (간선마다 고유 id, 평행 간선 허용)

    Attributes:
        vertices (Tuple): 정점
        edges (Tuple[FrozenSet, ...]): 간선 (edge_ids와 같은 순서)
        edge_ids (Tuple): 간선 id
        r (Optional[int]): 균등 차수
    """

    __slots__ = ('vertices', 'edges', 'edge_ids', 'r', '_by_id')

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Iterable[Vertex]],
                 r: Optional[int] = None, edge_ids: Optional[Sequence[Hashable]] = None):
        self.vertices = tuple(vertices)
        members = set(self.vertices)
        if len(members) != len(self.vertices):
            raise StructuralError("하이퍼그래프 정점이 중복되었습니다")
        self.edges = tuple(frozenset(e) for e in edges)
        self.edge_ids = tuple(edge_ids) if edge_ids is not None else tuple(f"e{i}" for i in range(len(self.edges)))
        if len(self.edge_ids) != len(self.edges) or len(set(self.edge_ids)) != len(self.edge_ids):
            raise StructuralError("간선 id가 간선 수와 맞지 않거나 중복되었습니다")
        for edge_id, edge in zip(self.edge_ids, self.edges):
            if not edge:
                raise StructuralError(f"빈 간선입니다: {edge_id}")
            if not edge <= members:
                raise StructuralError(f"하이퍼그래프에 없는 정점의 간선입니다: {edge_id}")
            if r is not None and len(edge) != r:
                raise StructuralError(f"간선 {edge_id}의 크기가 균등 차수 {r}와 다릅니다")
        self.r = r
        self._by_id = dict(zip(self.edge_ids, self.edges))

    @classmethod
    def from_graph(cls, g: Graph) -> 'Hypergraph':
        pairs = g.sorted_edges()
        return cls(g.vertices, pairs, r=2, edge_ids=[f"e{i}" for i in range(len(pairs))])

    def edge(self, edge_id: Hashable) -> FrozenSet[Vertex]:
        return self._by_id[edge_id]

    def rank(self) -> int:
        """간선 최대 크기 (균등이면 r)"""
        return self.r if self.r is not None else max((len(e) for e in self.edges), default=0)

    def max_degree(self) -> int:
        counts: Dict[Vertex, int] = {}
        for edge in self.edges:
            for v in edge:
                counts[v] = counts.get(v, 0) + 1
        return max(counts.values(), default=0)

    def is_matching(self, edge_ids: Iterable[Hashable]) -> bool:
        seen = set()
        for edge_id in edge_ids:
            edge = self._by_id[edge_id]
            if seen & edge:
                return False
            seen |= edge
        return True

    def to_dict(self) -> Dict[str, Any]:
        order = {v: i for i, v in enumerate(self.vertices)}
        payload = {
            'vertices': list(self.vertices),
            'edges': [sorted(e, key=order.__getitem__) for e in self.edges],
            'edge_ids': list(self.edge_ids),
        }
        if self.r is not None:
            payload['r'] = self.r
        return payload

    def __repr__(self) -> str:
        return f"Hypergraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, r={self.r})"


class ListAssignment:
    """정점(또는 간선)별 색 리스트

    Attributes:
        lists (Dict[Hashable, Tuple]): 키별 색 목록 (비어 있으면 안 됨)
    """

    def __init__(self, lists: Dict[Hashable, Iterable[Hashable]]):
        self.lists = {key: tuple(colors) for key, colors in lists.items()}
        for key, colors in self.lists.items():
            if not colors:
                raise StructuralError(f"색 리스트가 비어 있습니다: {key}")

    def __getitem__(self, key: Hashable) -> Tuple[Hashable, ...]:
        try:
            return self.lists[key]
        except KeyError as e:
            raise StructuralError(f"리스트가 없는 항목입니다: {key}") from e

    def to_dict(self) -> Dict[str, Any]:
        return {'lists': {str(k): list(v) for k, v in self.lists.items()}}


def graph_from_dict(payload: Dict[str, Any]) -> Graph:
    return Graph(_ids(payload['vertices']), [_ids(e) for e in payload['edges']])


def hypergraph_from_dict(payload: Dict[str, Any]) -> Hypergraph:
    return Hypergraph(_ids(payload['vertices']), [_ids(e) for e in payload['edges']],
                      r=payload.get('r'),
                      edge_ids=_ids(payload['edge_ids']) if payload.get('edge_ids') is not None else None)


def lists_from_dict(payload: Dict[str, Any], keys: Sequence[Hashable]) -> ListAssignment:
    """JSON의 문자열 키를 실제 정점/간선 id에 맞춰 복원"""
    by_text = {str(k): k for k in keys}
    lists = {}
    for text, colors in payload['lists'].items():
        if text not in by_text:
            raise StructuralError(f"알 수 없는 리스트 키입니다: {text}")
        lists[by_text[text]] = _ids(colors)
    return ListAssignment(lists)
