"""
리스트 색칠 → 정점 분할 그래프(또는 하이퍼그래프) 환원

정점 모드: 보조 정점 (v, c), 원래 정점마다 한 클래스, uv ∈ E 이면 (u, c)–(v, c).
적절한 L-색칠 ↔ 독립 횡단, 정점 하나의 재색칠 ↔ RG 간선.

간선 모드: 보조 간선 (e, c) = {(x, c) : x ∈ e}, 원래 간선마다 한 클래스.
적절한 간선 L-색칠 ↔ 완전 무지개 매칭.
"""

from typing import Hashable, Tuple, Union

from complex.partition import VertexPartition
from graphs.graph import Graph, Hypergraph, ListAssignment
from utils.exceptions import StructuralError

VERTEX_MODE = 'vertex'
EDGE_MODE = 'edge'


def _vertex_reduction(h: Graph, lists: ListAssignment) -> Tuple[Graph, VertexPartition]:
    classes = [[(v, c) for c in lists[v]] for v in h.vertices]
    edges = []
    for u, v in h.sorted_edges():
        shared = set(lists[v])
        edges.extend(((u, c), (v, c)) for c in lists[u] if c in shared)
    return Graph([x for cls in classes for x in cls], edges), VertexPartition(classes)


def _edge_reduction(h: Union[Graph, Hypergraph], lists: ListAssignment) -> Tuple[Hypergraph, VertexPartition]:
    hypergraph = h if isinstance(h, Hypergraph) else Hypergraph.from_graph(h)
    colors = sorted({c for edge_id in hypergraph.edge_ids for c in lists[edge_id]}, key=str)
    vertices = [(x, c) for x in hypergraph.vertices for c in colors]
    edge_ids, edges, classes = [], [], []
    for edge_id, edge in zip(hypergraph.edge_ids, hypergraph.edges):
        cls = []
        for c in lists[edge_id]:
            edge_ids.append((edge_id, c))
            edges.append([(x, c) for x in edge])
            cls.append((edge_id, c))
        classes.append(cls)
    aux = Hypergraph(vertices, edges, r=hypergraph.r, edge_ids=edge_ids)
    return aux, VertexPartition(classes)


def list_coloring_reduction(h: Union[Graph, Hypergraph], lists: ListAssignment, mode: str = VERTEX_MODE):
    """리스트 색칠 문제를 (보조 그래프, 분할)로 환원

    Args:
        h: 원래 그래프 (간선 모드에서는 하이퍼그래프도 허용)
        lists (ListAssignment): 정점 모드는 정점별, 간선 모드는 간선 id별 리스트
        mode (str): 'vertex' | 'edge'

    Raises:
        StructuralError: 지원하지 않는 모드
    """
    if mode == VERTEX_MODE:
        if not isinstance(h, Graph):
            raise StructuralError("정점 모드는 그래프만 지원합니다")
        return _vertex_reduction(h, lists)
    if mode == EDGE_MODE:
        return _edge_reduction(h, lists)
    raise StructuralError(f"지원하지 않는 리스트 색칠 모드입니다: {mode}")


def max_color_degree(h: Union[Graph, Hypergraph], lists: ListAssignment, mode: str = VERTEX_MODE) -> int:
    """Δ: (x, c)마다 c를 리스트에 가진 이웃(또는 x를 포함하는 간선) 수의 최댓값"""
    if mode == VERTEX_MODE:
        best = 0
        for v in h.vertices:
            for c in lists[v]:
                best = max(best, sum(1 for u in h.neighbors(v) if c in lists[u]))
        return best
    if mode == EDGE_MODE:
        hypergraph = h if isinstance(h, Hypergraph) else Hypergraph.from_graph(h)
        counts: dict = {}
        for edge_id, edge in zip(hypergraph.edge_ids, hypergraph.edges):
            for c in lists[edge_id]:
                for x in edge:
                    counts[(x, c)] = counts.get((x, c), 0) + 1
        return max(counts.values(), default=0)
    raise StructuralError(f"지원하지 않는 리스트 색칠 모드입니다: {mode}")


def coloring_from_configuration(configuration: Tuple[Hashable, ...]) -> dict:
    """보조 구성 ((x, c), ...) → {x: c}"""
    return {x: c for x, c in configuration}
