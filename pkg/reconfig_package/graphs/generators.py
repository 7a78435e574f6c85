"""
인스턴스 생성기

타이트 예제(K_{Δ,Δ}, r×r 격자, 이분 반례)와 시드 고정 랜덤 인스턴스,
스윕용 전수 열거 생성기를 제공합니다.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Hashable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np

from complex.partition import VertexPartition
from graphs.graph import Graph, Hypergraph
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise StructuralError(f"{name}은(는) {minimum} 이상의 정수여야 합니다: {value}")
    return value


def _kdd_edges(left: Sequence[str], right: Sequence[str]) -> List[Tuple[str, str]]:
    return [(a, b) for a in left for b in right]


def kdd_single_class(delta: int) -> Tuple[Graph, VertexPartition]:
    """K_{Δ,Δ} 하나와 모든 정점을 담은 단일 클래스"""
    _positive('delta', delta)
    left = [f"a{i}" for i in range(1, delta + 1)]
    right = [f"b{i}" for i in range(1, delta + 1)]
    graph = Graph(left + right, _kdd_edges(left, right))
    return graph, VertexPartition([left + right])


def kdd_double(delta: int) -> Tuple[Graph, VertexPartition]:
    """서로소인 K_{Δ,Δ} 두 개, 두 클래스는 각 요소의 같은 쪽을 모은 표준 이분할"""
    _positive('delta', delta)
    a = [f"a{i}" for i in range(1, delta + 1)]
    b = [f"b{i}" for i in range(1, delta + 1)]
    c = [f"c{i}" for i in range(1, delta + 1)]
    d = [f"d{i}" for i in range(1, delta + 1)]
    graph = Graph(a + b + c + d, _kdd_edges(a, b) + _kdd_edges(c, d))
    return graph, VertexPartition([a + c, b + d])


def grid(r: int) -> Tuple[Hypergraph, VertexPartition]:
    """r×r 격자 하이퍼그래프: 행 간선 e_k, 열 간선 f_k, 간선 분할은 단일 클래스"""
    _positive('r', r)
    vertices = [f"v{i}_{j}" for i in range(1, r + 1) for j in range(1, r + 1)]
    rows = [[f"v{k}_{j}" for j in range(1, r + 1)] for k in range(1, r + 1)]
    columns = [[f"v{i}_{k}" for i in range(1, r + 1)] for k in range(1, r + 1)]
    edge_ids = [f"e{k}" for k in range(1, r + 1)] + [f"f{k}" for k in range(1, r + 1)]
    hypergraph = Hypergraph(vertices, rows + columns, r=r, edge_ids=edge_ids)
    return hypergraph, VertexPartition([edge_ids])


def bipartite_counterexample(r: int) -> Tuple[Hypergraph, Tuple[str, str]]:
    """정점 x_1..x_r, y_1..y_r 위의 간선 4개짜리 r-그래프와 A = {x_1, y_1}"""
    _positive('r', r, minimum=2)
    xs = [f"x{i}" for i in range(1, r + 1)]
    ys = [f"y{i}" for i in range(1, r + 1)]
    edges = [xs, ys, xs[:-1] + [ys[-1]], ys[:-1] + [xs[-1]]]
    hypergraph = Hypergraph(xs + ys, edges, r=r, edge_ids=['e1', 'e2', 'e3', 'e4'])
    return hypergraph, (xs[0], ys[0])


def _probability(p: Any) -> float:
    value = Fraction(p) if isinstance(p, str) else p
    if not 0 <= value <= 1:
        raise StructuralError(f"확률은 0 이상 1 이하여야 합니다: {p}")
    return float(value)


def random_graph(n: int, p: Any, seed: int) -> Graph:
    """G(n, p) 랜덤 그래프 (정점 0..n-1, 시드 고정)"""
    _positive('n', n, minimum=0)
    graph = nx.gnp_random_graph(n, _probability(p), seed=seed)
    return Graph(range(n), graph.edges())


def random_partition(sizes: Sequence[int], seed: int) -> VertexPartition:
    """정점 0..Σsizes-1을 무작위 순서로 섞어 주어진 크기의 클래스로 분할"""
    for size in sizes:
        _positive('size', size)
    rng = np.random.default_rng(seed)
    order = [int(v) for v in rng.permutation(sum(sizes))]
    classes, start = [], 0
    for size in sizes:
        classes.append(sorted(order[start:start + size]))
        start += size
    return VertexPartition(classes)


def random_hypergraph(n: int, r: int, m: int, seed: int) -> Hypergraph:
    """정점 0..n-1 위의 r-균등 다중 하이퍼그래프 (간선 m개)"""
    _positive('r', r)
    _positive('m', m, minimum=0)
    if n < r:
        raise StructuralError(f"정점 수 {n}가 균등 차수 {r}보다 작습니다")
    rng = np.random.default_rng(seed)
    edges = [sorted(int(v) for v in rng.choice(n, size=r, replace=False)) for _ in range(m)]
    return Hypergraph(range(n), edges, r=r, edge_ids=[f"e{i}" for i in range(m)])


def random_bipartite_hypergraph(a: int, b: int, r: int, m: int, seed: int) -> Tuple[Hypergraph, Tuple[str, ...]]:
    """A = {a0..}, B = {b0..}; 각 간선은 A 한 점 + B의 r-1 점"""
    _positive('a', a)
    _positive('r', r, minimum=2)
    _positive('m', m, minimum=0)
    if b < r - 1:
        raise StructuralError(f"B 크기 {b}가 r-1={r - 1}보다 작습니다")
    rng = np.random.default_rng(seed)
    a_side = [f"a{i}" for i in range(a)]
    b_side = [f"b{i}" for i in range(b)]
    edges = []
    for _ in range(m):
        head = a_side[int(rng.integers(a))]
        tail = sorted(int(v) for v in rng.choice(b, size=r - 1, replace=False))
        edges.append([head] + [b_side[v] for v in tail])
    hypergraph = Hypergraph(a_side + b_side, edges, r=r, edge_ids=[f"e{i}" for i in range(m)])
    return hypergraph, tuple(a_side)


def latin_partition(n: int, seed: int) -> Tuple[Hypergraph, VertexPartition]:
    """K_{n,n}의 간선을 무작위로 n개 클래스(각 n개)로 나눈 작은 인스턴스"""
    _positive('n', n)
    left = [f"a{i}" for i in range(n)]
    right = [f"b{i}" for i in range(n)]
    pairs = _kdd_edges(left, right)
    edge_ids = [f"{u}{v}" for u, v in pairs]
    hypergraph = Hypergraph(left + right, pairs, r=2, edge_ids=edge_ids)
    rng = np.random.default_rng(seed)
    order = [edge_ids[int(i)] for i in rng.permutation(len(edge_ids))]
    return hypergraph, VertexPartition(order[k * n:(k + 1) * n] for k in range(n))


def all_graphs(max_vertices: int) -> Iterator[Graph]:
    """정점 1..max_vertices개의 모든 라벨 그래프 (정점 0..n-1)"""
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(range(n), [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_partitions(vertices: Sequence[Hashable], max_classes: int,
                   max_class_size: int) -> Iterator[VertexPartition]:
    """집합 분할 (블록은 첫 원소 순), 블록 수와 크기 상한 적용"""
    vertices = list(vertices)

    def extend(index: int, blocks: List[List[Hashable]]) -> Iterator[List[List[Hashable]]]:
        if index == len(vertices):
            yield [list(b) for b in blocks]
            return
        vertex = vertices[index]
        for block in blocks:
            if len(block) < max_class_size:
                block.append(vertex)
                yield from extend(index + 1, blocks)
                block.pop()
        if len(blocks) < max_classes:
            blocks.append([vertex])
            yield from extend(index + 1, blocks)
            blocks.pop()

    if not vertices:
        return
    for blocks in extend(0, []):
        yield VertexPartition(blocks)


class InstanceGenerator:
    """이름으로 생성기를 선택하는 팩토리"""

    @staticmethod
    def generate(kind: str, **params: Any) -> Dict[str, Any]:
        """생성기 실행 결과를 인스턴스 딕셔너리로 반환

        Raises:
            StructuralError: 지원하지 않는 종류이거나 파라미터가 잘못된 경우
        """
        try:
            if kind == 'kdd_single_class':
                graph, partition = kdd_single_class(params['delta'])
                return {'graph': graph, 'partition': partition}
            if kind == 'kdd_double':
                graph, partition = kdd_double(params['delta'])
                return {'graph': graph, 'partition': partition}
            if kind == 'grid':
                hypergraph, partition = grid(params['r'])
                return {'hypergraph': hypergraph, 'partition': partition}
            if kind == 'bipartite_counterexample':
                hypergraph, a_side = bipartite_counterexample(params['r'])
                return {'hypergraph': hypergraph, 'a_side': list(a_side)}
            if kind == 'random_graph':
                return {'graph': random_graph(params['n'], params['p'], params['seed'])}
            if kind == 'random_partition':
                return {'partition': random_partition(params['sizes'], params['seed'])}
            if kind == 'random_hypergraph':
                return {'hypergraph': random_hypergraph(params['n'], params['r'], params['m'], params['seed'])}
            if kind == 'random_bipartite_hypergraph':
                hypergraph, a_side = random_bipartite_hypergraph(
                    params['a'], params['b'], params['r'], params['m'], params['seed'])
                return {'hypergraph': hypergraph, 'a_side': list(a_side)}
            if kind == 'latin_partition':
                hypergraph, partition = latin_partition(params['n'], params['seed'])
                return {'hypergraph': hypergraph, 'partition': partition}
        except KeyError as e:
            raise StructuralError(f"생성기 {kind}에 필요한 파라미터가 없습니다: {e}") from e
        raise StructuralError(f"지원하지 않는 생성기입니다: {kind}")


def generate(kind: str, **params: Any) -> Dict[str, Any]:
    return InstanceGenerator.generate(kind, **params)
