"""
파생 복합체: 컬러풀 심플렉스/복합체, 교차 복합체, 신경(nerve), 알렉산더 쌍대
"""

from itertools import product
from typing import TYPE_CHECKING, Dict, FrozenSet, Hashable, Iterable, List, Sequence, Set, Tuple

from complex.partition import VertexPartition
from complex.poset import FinitePoset, order_complex
from complex.simplicial import SimplicialComplex
from config.capacity_config import exhaustion_cap
from utils.exceptions import PreconditionError, StructuralError, check_cap

if TYPE_CHECKING:
    from matroid.matroid import Matroid

Face = Tuple[Hashable, ...]


def colorful_simplices(c: SimplicialComplex, v: VertexPartition) -> List[Face]:
    """각 클래스에서 정확히 한 정점씩 포함하는 면 (정규 정렬)"""
    v.validate_for(c.vertices(), c.ground_set)
    found: Set[Face] = set()
    for maximal in c.maximal_faces:
        by_class: List[List[Hashable]] = [[] for _ in range(v.n)]
        for vertex in maximal:
            by_class[v.class_of(vertex)].append(vertex)
        if any(not bucket for bucket in by_class):
            continue
        _product_into(by_class, c, found)
    return sorted(found, key=c.face_key)


def _product_into(buckets: List[List[Hashable]], c: SimplicialComplex, out: Set[Face]) -> None:
    for choice in product(*buckets):
        out.add(c.sorted_face(choice))


def spanning_faces(c: SimplicialComplex, v: VertexPartition, k: int) -> List[Face]:
    """적어도 k개 클래스를 만나는 비어 있지 않은 면"""
    return [face for face in c.all_faces() if len(v.classes_met(face)) >= k]


def face_order_complex(c: SimplicialComplex, faces: Sequence[Face]) -> SimplicialComplex:
    """포함 관계로 정렬한 면 족의 순서 복합체 (족은 위로 닫혀 있어야 함)"""
    elements = sorted(faces, key=lambda f: (len(f), c.face_key(f)))
    sets = {f: frozenset(f) for f in elements}
    poset = FinitePoset.from_order(elements, lambda a, b: len(a) < len(b) and sets[a] < sets[b], grade=len)
    return order_complex(poset)


def colorful_complex(c: SimplicialComplex, v: VertexPartition, k: int) -> SimplicialComplex:
    """Col(C, V; k): k개 이상의 클래스를 스팬하는 면들의 순서 복합체

    Raises:
        StructuralError: k가 1..n 범위 밖
    """
    if not 1 <= k <= v.n:
        raise StructuralError(f"k는 1..{v.n} 범위여야 합니다: {k}")
    v.validate_for(c.vertices(), c.ground_set)
    return face_order_complex(c, spanning_faces(c, v, k))


def intersection_complex(c: SimplicialComplex, m: 'Matroid', k: int) -> SimplicialComplex:
    """Int(C, M; k): 크기 k 독립집합을 포함하는 면들의 순서 복합체

    Raises:
        StructuralError: 바탕 집합 불일치 또는 k 범위 오류
    """
    if set(c.ground_set) != set(m.ground_set):
        raise StructuralError("복합체와 매트로이드의 바탕 집합이 일치하지 않습니다")
    full_rank = m.rank(m.ground_set)
    if not 1 <= k <= full_rank:
        raise StructuralError(f"k는 1..{full_rank} 범위여야 합니다: {k}")
    faces = [face for face in c.all_faces() if len(face) >= k and m.rank(face) >= k]
    return face_order_complex(c, faces)


def nerve(sets: Sequence[Tuple[Hashable, Iterable[Hashable]]]) -> SimplicialComplex:
    """라벨이 붙은 집합족의 신경: 공통 원소가 있는 라벨 부분집합들

    극대면은 각 원소 x를 포함하는 라벨 집합(star) 중 극대인 것들입니다.
    """
    labels = [label for label, _ in sets]
    stars: Dict[Hashable, Set[Hashable]] = {}
    for label, members in sets:
        for x in members:
            stars.setdefault(x, set()).add(label)
    faces = [frozenset(star) for star in stars.values()]
    return SimplicialComplex(labels, faces or [()])


def colorful_nerve(c: SimplicialComplex, v: VertexPartition) -> SimplicialComplex:
    """CN(C, V): 모든 클래스를 스팬하는 극대면들의 신경"""
    v.validate_for(c.vertices(), c.ground_set)
    spanning = [face for face in c.sorted_maximal_faces() if len(v.classes_met(face)) == v.n]
    return nerve([(face, face) for face in spanning])


def minimal_nonfaces(c: SimplicialComplex) -> List[FrozenSet[Hashable]]:
    """극소 비면: N ∉ C 이고 모든 u ∈ N 에 대해 N − u ∈ C"""
    check_cap(len(c.ground_set), exhaustion_cap(), "알렉산더 쌍대 바탕 집합")
    found: Set[FrozenSet[Hashable]] = set()
    candidates = [()] + list(c.all_faces())
    for face in candidates:
        base = frozenset(face)
        for vertex in c.ground_set:
            if vertex in base:
                continue
            grown = base | {vertex}
            if grown in found or c.contains(grown):
                continue
            if all(c.contains(grown - {u}) for u in grown):
                found.add(grown)
    return sorted(found, key=lambda f: (len(f), c.face_key(f)))


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """C⋆ := {X ⊆ V : V − X ∉ C}

    Raises:
        PreconditionError: 바탕 집합 전체가 C의 면인 경우
    """
    ground = frozenset(c.ground_set)
    if c.contains(ground):
        raise PreconditionError("바탕 집합 전체가 면이면 알렉산더 쌍대를 정의하지 않습니다")
    faces = [ground - nonface for nonface in minimal_nonfaces(c)]
    return SimplicialComplex(c.ground_set, faces)
