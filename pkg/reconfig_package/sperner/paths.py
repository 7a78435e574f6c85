"""
컬러풀 단체 경로 따라가기

색 {0, …, n} 을 모두 쓰는 n-단체(컬러풀 단체)를 정점으로, 두 컬러풀 단체를 함께 포함하는
최고 차원 단체마다 간선을 둔 그래프는 최대 차수 2 입니다. 차수 1 정점은 정확히 바닥/천장의
컬러풀 단체이므로 그래프는 경로와 순환으로 분해되고, 바닥과 천장을 잇는 경로 수는 홀수입니다.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List

import networkx as nx

from sperner.prism import BASE_BOTTOM, BASE_TOP, LATERAL, PrismTriangulation, Simplex, VertexId, validate_r_sperner
from utils.exceptions import ConsistencyError, PreconditionError

logger = logging.getLogger('reconfig-center')


@dataclass
class PathReport:
    """follow_paths 결과

    Attributes:
        connecting (List[List[Simplex]]): 바닥 → 천장 경로 (바닥 쪽에서 시작)
        same_base (List[List[Simplex]]): 같은 밑면 위 두 컬러풀 단체를 잇는 경로
        cycles (List[List[Simplex]]): 내부 순환
        bottom_count (int): 바닥의 컬러풀 단체 수
        top_count (int): 천장의 컬러풀 단체 수
    """
    connecting: List[List[Simplex]] = field(default_factory=list)
    same_base: List[List[Simplex]] = field(default_factory=list)
    cycles: List[List[Simplex]] = field(default_factory=list)
    bottom_count: int = 0
    top_count: int = 0

    @property
    def parity_ok(self) -> bool:
        return len(self.connecting) % 2 == 1 and self.bottom_count % 2 == 1 and self.top_count % 2 == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'connecting_paths': [[list(s) for s in path] for path in self.connecting],
            'same_base_paths': [[list(s) for s in path] for path in self.same_base],
            'cycles': [[list(s) for s in cycle] for cycle in self.cycles],
            'bottom_colorful': self.bottom_count,
            'top_colorful': self.top_count,
            'connecting_count': len(self.connecting),
            'parity_ok': self.parity_ok,
        }


def colorful_simplices(t: PrismTriangulation, coloring: Dict[VertexId, int]) -> List[Simplex]:
    colors = set(range(t.n + 1))
    faces = set()
    for top in t.top_simplices:
        for face in combinations(top, t.n + 1):
            if {coloring[v] for v in face} == colors:
                faces.add(face)
    return sorted(faces)


def _walk(graph: nx.Graph, start: Simplex) -> List[Simplex]:
    path, previous, current = [start], None, start
    while True:
        nexts = [v for v in graph.neighbors(current) if v != previous]
        if not nexts:
            return path
        previous, current = current, nexts[0]
        path.append(current)


def follow_paths(t: PrismTriangulation, coloring: Dict[VertexId, int]) -> PathReport:
    """컬러풀 단체 그래프를 경로/순환으로 분해하고 홀짝성을 확인

    Raises:
        PreconditionError: R-Sperner 색칠이 아닌 경우
        ConsistencyError: 측면 패싯의 컬러풀 단체, 차수 3 이상, 홀짝성 위반
    """
    validation = validate_r_sperner(t, coloring)
    if not validation.valid:
        raise PreconditionError(f"R-Sperner 색칠이 아닙니다: {validation.violations[0]}")

    incidence = t.boundary_faces()
    graph = nx.Graph()
    colorful = colorful_simplices(t, coloring)
    graph.add_nodes_from(colorful)
    for top in t.top_simplices:
        inside = [face for face in combinations(top, t.n + 1) if face in graph]
        if len(inside) not in (0, 2):
            raise ConsistencyError(f"최고 차원 단체 {top}의 컬러풀 면이 {len(inside)}개입니다")
        if inside:
            graph.add_edge(*inside)

    report = PathReport()
    endpoints: Dict[Simplex, str] = {}
    for face in colorful:
        if len(incidence[face]) != 1:
            continue
        facet = t.facet_of_face(face)
        kind = facet[0] if facet is not None else None
        if kind == LATERAL:
            raise ConsistencyError(f"측면 패싯에 컬러풀 단체가 있습니다: {face}")
        endpoints[face] = kind
    report.bottom_count = sum(1 for kind in endpoints.values() if kind == BASE_BOTTOM)
    report.top_count = sum(1 for kind in endpoints.values() if kind == BASE_TOP)

    degree_one = [v for v in graph if graph.degree(v) == 1]
    if set(degree_one) != set(endpoints) or any(graph.degree(v) > 2 for v in graph):
        raise ConsistencyError("컬러풀 단체 그래프의 차수 구조가 경로/순환 분해와 맞지 않습니다")

    seen = set()
    for start in sorted(endpoints, key=lambda f: (endpoints[f] != BASE_BOTTOM, f)):
        if start in seen:
            continue
        path = _walk(graph, start)
        seen.update(path)
        if endpoints[path[0]] != endpoints[path[-1]]:
            report.connecting.append(path)
        else:
            report.same_base.append(path)
    for component in nx.connected_components(graph):
        if not component & seen:
            cycle = _walk_cycle(graph, min(component))
            report.cycles.append(cycle)
            seen.update(cycle)
    if len(seen) != graph.number_of_nodes():
        raise ConsistencyError("경로/순환 분해가 모든 컬러풀 단체를 덮지 않습니다")
    if not report.parity_ok:
        raise ConsistencyError(f"홀짝성 위반: 연결 경로 {len(report.connecting)}개, "
                               f"바닥 {report.bottom_count}개, 천장 {report.top_count}개")
    logger.info(f"경로 분해: 연결 {len(report.connecting)}, 같은 밑면 {len(report.same_base)}, "
                f"순환 {len(report.cycles)}")
    return report


def _walk_cycle(graph: nx.Graph, start: Simplex) -> List[Simplex]:
    cycle, previous, current = [start], None, start
    while True:
        nexts = sorted(v for v in graph.neighbors(current) if v != previous)
        if not nexts or nexts[0] == start:
            return cycle
        previous, current = current, nexts[0]
        if current == start:
            return cycle
        cycle.append(current)
