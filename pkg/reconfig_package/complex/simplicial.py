"""
추상 단체 복합체 (극대면 저장)

복합체는 바탕 집합(ground set)과 극대면 반사슬로 표현되며, 생성 이후 불변입니다.
빈 복합체 {∅}는 극대면 {∅}로 표현되고, 면이 하나도 없는 "void" 값은 만들 수 없습니다.
"""

from itertools import combinations
from typing import Any, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from utils.exceptions import StructuralError

Vertex = Hashable
Face = FrozenSet[Vertex]


class SimplicialComplex:
    """극대면으로 표현되는 불변 단체 복합체

    Attributes:
        ground_set (Tuple): 순서가 있는 바탕 집합 (정규 정점 순서)
        maximal_faces (FrozenSet[Face]): 극대면 반사슬
    """

    __slots__ = ('ground_set', 'maximal_faces', '_order', '_face_cache', '_hash')

    def __init__(self, ground_set: Iterable[Vertex], faces: Iterable[Iterable[Vertex]]):
        """
        Args:
            ground_set: 바탕 집합 (중복 불가)
            faces: 면 목록 (극대가 아닌 면은 자동으로 제거)

        Raises:
            StructuralError: 중복 정점, 바탕 집합 밖 정점, 면이 하나도 없는 경우
        """
        ground = tuple(ground_set)
        order = {v: i for i, v in enumerate(ground)}
        if len(order) != len(ground):
            raise StructuralError("바탕 집합에 중복 정점이 있습니다")
        face_sets = {frozenset(face) for face in faces}
        if not face_sets:
            raise StructuralError("면이 하나도 없는 복합체(void)는 허용되지 않습니다. {∅}를 사용하세요")
        for face in face_sets:
            outside = [v for v in face if v not in order]
            if outside:
                raise StructuralError(f"바탕 집합 밖의 정점입니다: {outside}")
        self.ground_set = ground
        self._order = order
        self.maximal_faces = frozenset(_maximal(face_sets))
        self._face_cache: Dict[int, Tuple[Tuple[Vertex, ...], ...]] = {}
        self._hash: Optional[int] = None

    @classmethod
    def empty(cls, ground_set: Iterable[Vertex] = ()) -> 'SimplicialComplex':
        """복합체 {∅}"""
        return cls(ground_set, [frozenset()])

    @classmethod
    def simplex(cls, vertices: Iterable[Vertex]) -> 'SimplicialComplex':
        vertices = tuple(vertices)
        return cls(vertices, [vertices])

    def sort_key(self, vertex: Vertex) -> int:
        return self._order[vertex]

    def sorted_face(self, face: Iterable[Vertex]) -> Tuple[Vertex, ...]:
        return tuple(sorted(face, key=self._order.__getitem__))

    def face_key(self, face: Iterable[Vertex]) -> Tuple[int, ...]:
        return tuple(sorted(self._order[v] for v in face))

    def vertices(self) -> Tuple[Vertex, ...]:
        """V(C): 극대면 합집합 (바탕 집합 순서)"""
        used = set().union(*self.maximal_faces)
        return tuple(v for v in self.ground_set if v in used)

    @property
    def dim(self) -> int:
        return max(len(face) for face in self.maximal_faces) - 1

    def is_empty_complex(self) -> bool:
        return self.maximal_faces == frozenset({frozenset()})

    def sorted_maximal_faces(self) -> List[Tuple[Vertex, ...]]:
        faces = [self.sorted_face(face) for face in self.maximal_faces]
        return sorted(faces, key=lambda f: (len(f), [self._order[v] for v in f]))

    def contains(self, face: Iterable[Vertex]) -> bool:
        face = frozenset(face)
        return any(face <= maximal for maximal in self.maximal_faces)

    def __contains__(self, face: Iterable[Vertex]) -> bool:
        return self.contains(face)

    def faces(self, p: int) -> Tuple[Tuple[Vertex, ...], ...]:
        """p차원 면 목록 (정규 정렬, 캐시)

        p = -1 이면 빈 면 하나만 반환합니다.
        """
        if p < -1:
            return ()
        if p not in self._face_cache:
            if p == -1:
                result = ((),)
            else:
                collected = set()
                for maximal in self.maximal_faces:
                    if len(maximal) > p:
                        ordered = self.sorted_face(maximal)
                        collected.update(combinations(ordered, p + 1))
                result = tuple(sorted(collected, key=lambda f: [self._order[v] for v in f]))
            self._face_cache[p] = result
        return self._face_cache[p]

    def all_faces(self) -> Iterator[Tuple[Vertex, ...]]:
        """빈 면을 제외한 모든 면 (차원 오름차순)"""
        for p in range(self.dim + 1):
            yield from self.faces(p)

    def face_count(self, p: int) -> int:
        return len(self.faces(p))

    def is_cone(self) -> bool:
        """모든 극대면에 공통으로 속하는 정점(꼭짓점)이 있는지"""
        common = frozenset.intersection(*self.maximal_faces)
        return bool(common)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ground_set': list(self.ground_set),
            'maximal_faces': [list(face) for face in self.sorted_maximal_faces()],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.ground_set) == set(other.ground_set) and self.maximal_faces == other.maximal_faces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self.ground_set), self.maximal_faces))
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(|V|={len(self.ground_set)}, facets={len(self.maximal_faces)}, dim={self.dim})"


def _maximal(faces: Iterable[Face]) -> List[Face]:
    ordered = sorted(faces, key=len, reverse=True)
    kept: List[Face] = []
    for face in ordered:
        if not any(face <= other for other in kept):
            kept.append(face)
    return kept


def induced(c: SimplicialComplex, x: Iterable[Vertex]) -> SimplicialComplex:
    """C[X] := {σ ∈ C : σ ⊆ X}, 바탕 집합은 X (C의 순서 유지)

    Raises:
        StructuralError: X가 바탕 집합 밖 정점을 포함
    """
    x = frozenset(x)
    outside = [v for v in x if v not in c._order]
    if outside:
        raise StructuralError(f"바탕 집합 밖의 정점입니다: {outside}")
    ground = [v for v in c.ground_set if v in x]
    return SimplicialComplex(ground, [face & x for face in c.maximal_faces])


def join(c: SimplicialComplex, d: SimplicialComplex) -> SimplicialComplex:
    """C ∗ D := {σ ∪ τ}

    Raises:
        StructuralError: 바탕 집합이 겹치는 경우
    """
    overlap = set(c.ground_set) & set(d.ground_set)
    if overlap:
        raise StructuralError(f"조인의 바탕 집합이 겹칩니다: {sorted(map(str, overlap))}")
    faces = [sigma | tau for sigma in c.maximal_faces for tau in d.maximal_faces]
    return SimplicialComplex(c.ground_set + d.ground_set, faces)


def from_dict(payload: Dict[str, Any]) -> SimplicialComplex:
    return SimplicialComplex(_ids(payload['ground_set']),
                             [_ids(face) for face in payload['maximal_faces']])


def _ids(values: Sequence[Any]) -> List[Any]:
    """JSON 배열로 들어온 튜플형 id를 해시 가능한 튜플로 복원"""
    return [tuple(_ids(v)) if isinstance(v, list) else v for v in values]
