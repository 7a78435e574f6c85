"""
독립 횡단 RG가 끊어졌을 때의 강지배 증거 추출

RG(I(G), V) 가 비어 있지 않고 끊어져 있으면 비어 있지 않은 I ⊆ [n] 과 |D| ≤ 2|I| 인
D ⊆ V_I 가 존재해 D 가 G[V_I] 를 강지배합니다. 서로 다른 두 연결 요소에서 |I(S △ T)| 가
최소인 S, T 를 고른 뒤 x_k / R_k / Y_k 확장을 반복합니다. 선택이 여러 개면 정규 정점 순서로 정합니다.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Hashable, List, Optional, Tuple

from complex.partition import VertexPartition, index_subsets
from graphs.complexes import independence_complex
from graphs.graph import Graph
from graphs.params import strongly_dominates
from reconfig.builders import rg_colorful
from utils.exceptions import ConsistencyError, PreconditionError

logger = logging.getLogger('reconfig-center')

PROCEDURE = 'procedure'
BRUTE_FORCE = 'haxell-brute-force'


@dataclass
class DominationWitness:
    """증거 추출 결과

    Attributes:
        connected (bool): RG가 연결이면 True (이때 I, D 는 None)
        index_set (Optional[Tuple[int, ...]]): I (0부터 시작)
        dominating (Optional[FrozenSet]): D
        method (Optional[str]): procedure | haxell-brute-force
        steps (List[Dict]): 확장 단계 기록 (x_k, Y_k)
    """
    connected: bool
    index_set: Optional[Tuple[int, ...]] = None
    dominating: Optional[FrozenSet[Hashable]] = None
    method: Optional[str] = None
    steps: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        if self.connected:
            return {'connected': True}
        return {
            'connected': False,
            'I': [i + 1 for i in self.index_set],
            'D': sorted(self.dominating, key=str),
            'method': self.method,
            'steps': self.steps,
        }


def verify_domination_witness(g: Graph, v: VertexPartition, index_set, dominating) -> bool:
    """I 가 비어 있지 않고, D ⊆ V_I, |D| ≤ 2|I|, D 가 G[V_I] 를 강지배하는지 독립적으로 확인"""
    index_set = tuple(index_set)
    dominating = frozenset(dominating)
    if not index_set or len(dominating) > 2 * len(index_set):
        return False
    members = v.index_union(index_set)
    if not dominating <= members:
        return False
    return strongly_dominates(g.induced(members), dominating, members)


def _brute_force(g: Graph, v: VertexPartition) -> DominationWitness:
    """독립 횡단이 없을 때: |D| ≤ 2|I| 인 강지배 (I, D) 를 전수 탐색"""
    for subset in index_subsets(v.n):
        members = v.index_union(subset)
        sub = g.induced(members)
        ordered = [x for x in g.vertices if x in members]
        for size in range(1, min(2 * len(subset), len(ordered)) + 1):
            for chosen in combinations(ordered, size):
                if strongly_dominates(sub, chosen, members):
                    return DominationWitness(False, subset, frozenset(chosen), BRUTE_FORCE)
    raise ConsistencyError("독립 횡단이 없는데 강지배 증거를 찾지 못했습니다")


class _Procedure:
    """두 연결 요소 사이의 확장 절차 상태"""

    def __init__(self, g: Graph, v: VertexPartition, first: List[FrozenSet], second: List[FrozenSet]):
        self.g = g
        self.v = v
        self.order = {x: i for i, x in enumerate(g.vertices)}
        self.first = first
        self.second_set = set(second)
        self.s, self.t = self._closest_pair(first, second)

    def _key(self, vertices) -> Tuple[int, ...]:
        return tuple(sorted(self.order[x] for x in vertices))

    def _closest_pair(self, first: List[FrozenSet], second: List[FrozenSet]) -> Tuple[FrozenSet, FrozenSet]:
        best = None
        for s in first:
            for t in second:
                size = len(self.v.classes_met(s ^ t))
                key = (size, self._key(s), self._key(t))
                if best is None or key < best[0]:
                    best = (key, s, t)
        return best[1], best[2]

    def _candidates(self, fixed: Dict[int, Hashable]) -> List[FrozenSet]:
        """R: I(S ∩ T) 클래스의 횡단 중 고정값과 일치하고 (S−T)∪R ∈ C1, (T−S)∪R ∈ C2 인 것"""
        only_s, only_t = self.s - self.t, self.t - self.s
        found = []
        for transversal in self.first:
            if not only_s <= transversal:
                continue
            r = transversal - only_s
            if (only_t | r) not in self.second_set:
                continue
            if any(x not in r for x in fixed.values()):
                continue
            found.append(r)
        return found

    def run(self) -> DominationWitness:
        g, v = self.g, self.v
        base = self.v.classes_met(self.s ^ self.t)
        index_set = set(base)
        dominating = set(self.s ^ self.t)
        current = self.s & self.t
        fixed: Dict[int, Hashable] = {}
        steps = []
        for _ in range(len(g.vertices) + v.n + 1):
            members = v.index_union(index_set)
            undominated = [x for x in g.vertices if x in members and not (g.neighbors(x) & dominating)]
            if not undominated:
                return DominationWitness(False, tuple(sorted(index_set)), frozenset(dominating), PROCEDURE, steps)
            x = undominated[0]
            candidates = self._candidates(fixed)
            if current not in candidates:
                raise ConsistencyError("이전 R_{k-1} 이 후보 조건을 만족하지 않습니다")
            chosen = min(candidates, key=lambda r: (len(g.neighbors(x) & r), self._key(r)))
            y = g.neighbors(x) & chosen
            if not y:
                raise ConsistencyError(f"Y_k 가 비었습니다 (x_k = {x}); S, T 선택의 최소성이 깨졌습니다")
            current = chosen
            index_set |= v.classes_met(y)
            dominating |= {x} | y
            fixed = {v.class_of(w): w for w in current if v.class_of(w) in index_set - base}
            steps.append({'x': x, 'Y': sorted(y, key=self.order.__getitem__)})
        raise ConsistencyError("확장 절차가 종료되지 않았습니다")


def extract_domination_witness(g: Graph, v: VertexPartition) -> DominationWitness:
    """RG(I(G), V) 가 끊어졌으면 (I, D) 증거를, 연결이면 connected 를 반환

    Raises:
        PreconditionError: 분할이 V(G) 를 덮지 않는 경우
        ConsistencyError: 추출된 증거가 독립 검증을 통과하지 못한 경우
    """
    try:
        v.validate_for(g.vertices, g.vertices)
    except ValueError as e:
        raise PreconditionError(str(e)) from e
    rg = rg_colorful(independence_complex(g), v)
    if rg.component_count == 1:
        return DominationWitness(True)
    if len(rg) == 0:
        witness = _brute_force(g, v)
    else:
        components = [[frozenset(c) for c in comp] for comp in rg.components()]
        witness = _Procedure(g, v, components[0], components[1]).run()
    if not verify_domination_witness(g, v, witness.index_set, witness.dominating):
        raise ConsistencyError(f"강지배 증거 검증 실패: I={witness.index_set}, D={witness.dominating}")
    logger.info(f"강지배 증거: I={[i + 1 for i in witness.index_set]}, |D|={len(witness.dominating)}, "
                f"방법={witness.method}")
    return witness
