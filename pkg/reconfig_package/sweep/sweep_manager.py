"""
전수/랜덤 인스턴스 스윕

인스턴스 스트림을 청크로 나눠 프로세스 풀에 분배하고, 결과를 인스턴스 번호 순으로 합칩니다.
작업자에게는 가벼운 기술자(dict)만 보내고 도메인 객체는 작업자 안에서 만듭니다.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Any, Dict, Iterator, List, Optional

import pandas as pd

from complex.partition import VertexPartition
from config.capacity_config import apply_capacity_config, get_capacity_config, get_sweep_config, settings
from geometry.points import random_point_config
from graphs.complexes import independence_complex
from graphs.generators import all_graphs, all_partitions
from graphs.graph import Graph
from hallcheck.reports import COUNTEREXAMPLE
from hallcheck.TheoremBase import TheoremManager
from hallcheck.witness import extract_domination_witness
from matroid.matroid import partition_matroid, uniform_matroid
from matroid.operations import independence_complex_of
from utils.canonical import instance_hash
from utils.exceptions import CapacityError, CounterexampleFound, StructuralError

logger = logging.getLogger('reconfig-center')

GRAPHS = 'graphs'
MATROIDS = 'matroids'
TVERBERG = 'tverberg'
FAMILIES = (GRAPHS, MATROIDS, TVERBERG)

SKIPPED = 'skipped'

# RG(I(G), V) 결론을 쓰는 정리 (끊어진 인스턴스에서 강지배 증거를 추출)
TRANSVERSAL_THEOREMS = ('reconfig-hall', 'bko', 'domination-total', 'domination-independent', 'max-degree')


def graph_items(max_vertices: int, max_classes: int, max_class_size: int = 3) -> Iterator[Dict[str, Any]]:
    """정점 ≤ max_vertices 인 모든 그래프 × 모든 분할 (클래스 수 ≤ max_classes, 크기 ≤ max_class_size)"""
    for graph in all_graphs(max_vertices):
        for partition in all_partitions(graph.vertices, max_classes, max_class_size):
            yield {'vertices': list(graph.vertices), 'edges': [list(e) for e in graph.sorted_edges()],
                   'classes': [list(c) for c in partition.classes]}


def matroid_items(max_elements: int) -> Iterator[Dict[str, Any]]:
    """분할 매트로이드 M × 균등 매트로이드 N 쌍 (원소 ≤ max_elements) 과 가능한 모든 k"""
    for n in range(1, max_elements + 1):
        for partition in all_partitions(list(range(n)), n, n):
            for rank in range(1, n + 1):
                for k in range(1, rank + 1):
                    yield {'n': n, 'classes': [list(c) for c in partition.classes], 'rank': rank, 'k': k}


def tverberg_items(d: int, r: int, seeds: int, n: Optional[int] = None) -> Iterator[Dict[str, Any]]:
    """시드 0..seeds-1 의 랜덤 배치 (n 기본값: (d+1)(r−1)+2)"""
    size = (d + 1) * (r - 1) + 2 if n is None else n
    for seed in range(seeds):
        yield {'n': size, 'd': d, 'r': r, 'seed': seed}


def materialize(family: str, theorem_id: str, item: Dict[str, Any]) -> Dict[str, Any]:
    """기술자 → 도메인 인스턴스

    Raises:
        StructuralError: 지원하지 않는 스윕 종류
    """
    if family == GRAPHS:
        graph = Graph(item['vertices'], item['edges'])
        return {'graph': graph, 'partition': VertexPartition(item['classes']),
                'complex': independence_complex(graph), 'delta': max(graph.max_degree(), 1)}
    if family == MATROIDS:
        m = partition_matroid(item['classes'])
        n = uniform_matroid(list(range(item['n'])), item['rank'])
        if theorem_id.startswith('complex-matroid'):
            return {'complex': independence_complex_of(m), 'matroid': n, 'k': item['k']}
        return {'matroid': m, 'matroid2': n, 'k': item['k']}
    if family == TVERBERG:
        return {'points': random_point_config(item['n'], item['d'], item['seed']), 'r': item['r']}
    raise StructuralError(f"지원하지 않는 스윕 종류입니다: {family}")


def run_chunk(family: str, theorem_id: str, chunk: List[Dict[str, Any]],
              extra: Optional[Dict[str, Any]] = None,
              caps: Optional[Dict[str, Any]] = None) -> List[Dict[str, Any]]:
    """청크 하나를 검증 (프로세스 풀 작업자 진입점)

    반례는 스윕을 멈추지 않고 덤프와 함께 결과에 기록합니다.
    caps 는 부모 프로세스의 get_capacity_config() 로, 작업자 설정에 먼저 반영합니다.
    """
    if caps is not None:
        apply_capacity_config(caps)
    manager = TheoremManager()
    results = []
    for entry in chunk:
        instance = materialize(family, theorem_id, entry['item'])
        instance.update(extra or {})
        row: Dict[str, Any] = {'index': entry['index'], 'theorem': theorem_id, 'instance_hash': instance_hash(instance)}
        try:
            verdict = manager.verify_instance(instance, theorem_id)
            row.update(classification=verdict.classification, hypothesis=verdict.hypothesis,
                       conclusion=verdict.conclusion)
        except CounterexampleFound as e:
            row.update(classification=COUNTEREXAMPLE, hypothesis=True, conclusion=False, dump=e.dump)
        except (CapacityError, StructuralError) as e:
            row.update(classification=SKIPPED, hypothesis=None, conclusion=None, reason=str(e))
        if (family == GRAPHS and theorem_id in TRANSVERSAL_THEOREMS and row.get('conclusion') is False):
            witness = extract_domination_witness(instance['graph'], instance['partition'])
            row['witness'] = witness.to_dict()
        results.append(row)
    return results


class SweepManager:
    """
    스윕 관리자 클래스

    Attributes:
        workers (int): 프로세스 수 (1 이면 현재 프로세스에서 실행)
        chunk_size (int): 청크당 인스턴스 수
    """

    def __init__(self, workers: Optional[int] = None, chunk_size: Optional[int] = None):
        config = get_sweep_config()
        self.workers = workers or config['workers']
        self.chunk_size = chunk_size or config['chunk_size']

    def _chunks(self, items: Iterator[Dict[str, Any]]) -> Iterator[List[Dict[str, Any]]]:
        indexed = ({'index': i, 'item': item} for i, item in enumerate(items))
        while True:
            chunk = list(islice(indexed, self.chunk_size))
            if not chunk:
                return
            yield chunk

    def run(self, family: str, theorem_id: str, items: Iterator[Dict[str, Any]],
            extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        스윕 실행

        Args:
            family (str): graphs | matroids | tverberg
            theorem_id (str): 정리 ID
            items (Iterator[Dict]): 인스턴스 기술자 스트림
            extra (Optional[Dict]): 모든 인스턴스에 덧붙일 정리 파라미터

        Returns:
            Dict[str, Any]: 요약표, 반례 목록, 강지배 증거 검증 결과
        """
        if family not in FAMILIES:
            raise StructuralError(f"지원하지 않는 스윕 종류입니다: {family}")
        TheoremManager().get_theorem(theorem_id)
        chunks = self._chunks(items)
        caps = get_capacity_config()
        results: List[Dict[str, Any]] = []
        try:
            if self.workers <= 1:
                for chunk in chunks:
                    results.extend(run_chunk(family, theorem_id, chunk, extra, caps))
            else:
                with ProcessPoolExecutor(max_workers=self.workers) as executor:
                    futures = [executor.submit(run_chunk, family, theorem_id, chunk, extra, caps) for chunk in chunks]
                    for future in futures:
                        results.extend(future.result())
        except Exception as e:
            logger.error(f"스윕 실행 오류: {str(e)}")
            raise
        results.sort(key=lambda row: row['index'])
        return self.summarize(family, theorem_id, results)

    @staticmethod
    def summarize(family: str, theorem_id: str, results: List[Dict[str, Any]]) -> Dict[str, Any]:
        frame = pd.DataFrame(results, columns=['index', 'theorem', 'classification'] if not results else None)
        counts = frame.groupby(['theorem', 'classification']).size()
        summary = {f"{theorem}:{classification}": int(count) for (theorem, classification), count in counts.items()}
        counterexamples = [row['dump'] for row in results if row['classification'] == COUNTEREXAMPLE]
        witnesses = [row for row in results if 'witness' in row]
        if counterexamples:
            logger.critical(f"스윕 반례 {len(counterexamples)}개: {theorem_id}")
        logger.info(f"스윕 완료: {family}/{theorem_id}, 인스턴스 {len(results)}개, 요약 {summary}")
        return {
            'artifact_version': settings.ARTIFACT_VERSION,
            'theorem': theorem_id,
            'family': family,
            'count': len(results),
            'summary': summary,
            'counterexamples': counterexamples,
            'witness_count': len(witnesses),
            'witnesses': [{'index': row['index'], **row['witness']} for row in witnesses],
        }
