from itertools import combinations
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from complex.simplicial import _ids
from utils.exceptions import StructuralError


class VertexPartition:
    """정점 분할 V = {V_1, …, V_n}

    Attributes:
        classes (Tuple[Tuple, ...]): 순서가 있는 클래스 목록 (각 클래스 내부 순서 유지)
    """

    __slots__ = ('classes', '_index')

    def __init__(self, classes: Iterable[Iterable[Hashable]]):
        self.classes = tuple(tuple(cls) for cls in classes)
        self._index: Dict[Hashable, int] = {}
        for i, cls in enumerate(self.classes):
            if not cls:
                raise StructuralError(f"클래스 {i + 1}이(가) 비어 있습니다")
            for v in cls:
                if v in self._index:
                    raise StructuralError(f"정점 {v}이(가) 여러 클래스에 속합니다")
                self._index[v] = i

    @property
    def n(self) -> int:
        return len(self.classes)

    def class_of(self, vertex: Hashable) -> int:
        """정점의 클래스 인덱스 (0부터)"""
        try:
            return self._index[vertex]
        except KeyError as e:
            raise StructuralError(f"분할에 없는 정점입니다: {vertex}") from e

    def union(self) -> FrozenSet[Hashable]:
        return frozenset(self._index)

    def index_union(self, indices: Iterable[int]) -> FrozenSet[Hashable]:
        """V_I := ⋃_{i∈I} V_i"""
        result = set()
        for i in indices:
            result.update(self.classes[i])
        return frozenset(result)

    def classes_met(self, face: Iterable[Hashable]) -> FrozenSet[int]:
        """I(σ): σ가 만나는 클래스 인덱스 집합"""
        return frozenset(self._index[v] for v in face)

    def restrict(self, indices: Sequence[int]) -> 'VertexPartition':
        return VertexPartition(self.classes[i] for i in indices)

    def validate_for(self, vertices: Iterable[Hashable], ground: Optional[Iterable[Hashable]] = None) -> None:
        """분할이 V(C)를 덮고 바탕 집합 안에 있는지 확인

        Raises:
            StructuralError: V(C)의 정점이 누락되었거나 바탕 집합 밖 정점이 있는 경우
        """
        missing = frozenset(vertices) - self.union()
        if missing:
            raise StructuralError(f"분할에 누락된 정점이 있습니다: {sorted(map(str, missing))}")
        if ground is not None:
            extra = self.union() - frozenset(ground)
            if extra:
                raise StructuralError(f"바탕 집합 밖의 분할 정점입니다: {sorted(map(str, extra))}")

    def to_dict(self) -> Dict[str, Any]:
        return {'classes': [list(cls) for cls in self.classes]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return tuple(map(frozenset, self.classes)) == tuple(map(frozenset, other.classes))

    def __hash__(self) -> int:
        return hash(tuple(map(frozenset, self.classes)))

    def __repr__(self) -> str:
        return f"VertexPartition({[list(c) for c in self.classes]})"


def from_dict(payload: Dict[str, Any]) -> VertexPartition:
    return VertexPartition(_ids(cls) for cls in payload['classes'])


def covering_partition(vertices: Sequence[Hashable]) -> VertexPartition:
    return VertexPartition([tuple(vertices)])


def singleton_partition(vertices: Sequence[Hashable]) -> VertexPartition:
    return VertexPartition([(v,) for v in vertices])


def index_subsets(n: int) -> List[Tuple[int, ...]]:
    """비어 있지 않은 I ⊆ [n]을 크기 오름차순, 같은 크기에서는 사전순으로"""
    return [subset for size in range(1, n + 1) for subset in combinations(range(n), size)]
