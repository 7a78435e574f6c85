"""
매트로이드 계수 오라클

구체적 실현(partition, uniform, linear) 위에 변환 스택(dual, truncate, contract,
restrict, direct_sum)을 쌓아 계수 함수를 평가합니다. 모든 객체는 불변입니다.
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from complex.simplicial import _ids
from exactla.matrix import RationalMatrix, rank as matrix_rank
from exactla.rational import format_vector, to_vector
from utils.exceptions import StructuralError

Element = Hashable


@dataclass(frozen=True)
class PartitionRealization:
    classes: Tuple[Tuple[Element, ...], ...]
    capacities: Tuple[int, ...]

    def rank(self, x: FrozenSet[Element]) -> int:
        return sum(min(cap, len(x.intersection(cls))) for cls, cap in zip(self.classes, self.capacities))

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'partition', 'classes': [list(c) for c in self.classes],
                'capacities': list(self.capacities)}


@dataclass(frozen=True)
class UniformRealization:
    k: int

    def rank(self, x: FrozenSet[Element]) -> int:
        return min(self.k, len(x))

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'uniform', 'k': self.k}


@dataclass(frozen=True)
class LinearRealization:
    columns: Tuple[Tuple[Any, ...], ...]
    ground: Tuple[Element, ...]

    def rank(self, x: FrozenSet[Element]) -> int:
        chosen = [self.columns[i] for i, e in enumerate(self.ground) if e in x]
        if not chosen:
            return 0
        return matrix_rank(RationalMatrix.from_columns(chosen))

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'linear', 'columns': [format_vector(c) for c in self.columns]}


class Matroid:
    """계수 오라클 값

    Attributes:
        ground_set (Tuple): 순서가 있는 바탕 집합
        realization: 기본 실현 (변환 매트로이드에서는 None)
        parent (Optional[Matroid]): 변환 대상 매트로이드
        transform (Optional[Tuple]): ('dual',) | ('truncate', k) | ('contract', X) |
            ('restrict', X) | ('direct_sum', other)
    """

    def __init__(self, ground_set: Sequence[Element], realization: Any = None,
                 parent: Optional['Matroid'] = None, transform: Optional[Tuple] = None):
        self.ground_set = tuple(ground_set)
        self._members = frozenset(self.ground_set)
        if len(self._members) != len(self.ground_set):
            raise StructuralError("매트로이드 바탕 집합에 중복이 있습니다")
        self.realization = realization
        self.parent = parent
        self.transform = transform
        self._contract_basis: FrozenSet[Element] = frozenset()
        if transform is not None and transform[0] == 'contract':
            self._contract_basis = frozenset(parent.lexicographic_basis(transform[1]))
        self._rank_cache: Dict[FrozenSet[Element], int] = {}

    # 계수 함수
    def rank(self, x: Iterable[Element]) -> int:
        """r(M[X])

        Raises:
            StructuralError: 바탕 집합 밖 원소
        """
        x = frozenset(x)
        if not x <= self._members:
            raise StructuralError(f"바탕 집합 밖 원소입니다: {sorted(map(str, x - self._members))}")
        cached = self._rank_cache.get(x)
        if cached is None:
            cached = self._evaluate(x)
            self._rank_cache[x] = cached
        return cached

    def _evaluate(self, x: FrozenSet[Element]) -> int:
        if self.parent is None:
            return self.realization.rank(x)
        op = self.transform[0]
        parent = self.parent
        if op == 'dual':
            return len(x) + parent.rank(parent._members - x) - parent.full_rank
        if op == 'truncate':
            return min(self.transform[1], parent.rank(x))
        if op == 'contract':
            return parent.rank(x | self._contract_basis) - len(self._contract_basis)
        if op == 'restrict':
            return parent.rank(x)
        if op == 'direct_sum':
            other: Matroid = self.transform[1]
            return parent.rank(x & parent._members) + other.rank(x & other._members)
        raise StructuralError(f"지원하지 않는 매트로이드 변환입니다: {op}")

    @property
    def full_rank(self) -> int:
        return self.rank(self._members)

    def is_independent(self, x: Iterable[Element]) -> bool:
        x = frozenset(x)
        return self.rank(x) == len(x)

    def closure(self, x: Iterable[Element]) -> FrozenSet[Element]:
        x = frozenset(x)
        r = self.rank(x)
        return x | {e for e in self.ground_set if e not in x and self.rank(x | {e}) == r}

    def lexicographic_basis(self, x: Iterable[Element]) -> Tuple[Element, ...]:
        """바탕 집합 순서로 탐욕 선택한 M[X]의 기저"""
        x = frozenset(x)
        basis: List[Element] = []
        for e in self.ground_set:
            if e in x and self.rank(frozenset(basis) | {e}) == len(basis) + 1:
                basis.append(e)
        return tuple(basis)

    # 변환
    def dual(self) -> 'Matroid':
        return Matroid(self.ground_set, parent=self, transform=('dual',))

    def truncate(self, k: int) -> 'Matroid':
        if k < 0:
            raise StructuralError(f"절단 계수는 0 이상이어야 합니다: {k}")
        return Matroid(self.ground_set, parent=self, transform=('truncate', k))

    def contract(self, x: Iterable[Element]) -> 'Matroid':
        x = self._subset(x)
        return Matroid([e for e in self.ground_set if e not in x], parent=self,
                       transform=('contract', x))

    def restrict(self, x: Iterable[Element]) -> 'Matroid':
        x = self._subset(x)
        return Matroid([e for e in self.ground_set if e in x], parent=self,
                       transform=('restrict', x))

    def delete(self, x: Iterable[Element]) -> 'Matroid':
        x = self._subset(x)
        return self.restrict(self._members - x)

    def direct_sum(self, other: 'Matroid') -> 'Matroid':
        if self._members & other._members:
            raise StructuralError("직합의 바탕 집합이 겹칩니다")
        return Matroid(self.ground_set + other.ground_set, parent=self,
                       transform=('direct_sum', other))

    def _subset(self, x: Iterable[Element]) -> FrozenSet[Element]:
        x = frozenset(x)
        if not x <= self._members:
            raise StructuralError(f"바탕 집합 밖 원소입니다: {sorted(map(str, x - self._members))}")
        return x

    def _chain(self) -> List['Matroid']:
        nodes = []
        node = self
        while node.parent is not None:
            nodes.append(node)
            node = node.parent
        return list(reversed(nodes))

    @property
    def transforms(self) -> List[Tuple]:
        """기본 실현에서부터 적용된 변환 목록"""
        return [node.transform for node in self._chain()]

    def base(self) -> 'Matroid':
        node = self
        while node.parent is not None:
            node = node.parent
        return node

    def to_dict(self) -> Dict[str, Any]:
        base = self.base()
        payload = base.realization.to_dict()
        payload['ground_set'] = list(base.ground_set)
        transforms = []
        for node in self._chain():
            t = node.transform
            if t[0] == 'dual':
                transforms.append({'op': 'dual'})
            elif t[0] == 'truncate':
                transforms.append({'op': 'truncate', 'k': t[1]})
            elif t[0] in ('contract', 'restrict'):
                transforms.append({'op': t[0], 'set': [e for e in node.parent.ground_set if e in t[1]]})
            else:
                transforms.append({'op': 'direct_sum', 'other': t[1].to_dict()})
        payload['transforms'] = transforms
        return payload

    def __repr__(self) -> str:
        return f"Matroid(|V|={len(self.ground_set)}, transforms={[t[0] for t in self.transforms]})"


# 구체적 매트로이드 생성
def partition_matroid(classes: Sequence[Sequence[Element]],
                      capacities: Optional[Sequence[int]] = None) -> Matroid:
    """M_V := {A : |A ∩ V_i| ≤ c_i} (기본 c_i = 1)"""
    classes = tuple(tuple(c) for c in classes)
    capacities = tuple(capacities) if capacities is not None else tuple(1 for _ in classes)
    if len(capacities) != len(classes):
        raise StructuralError("클래스와 용량 개수가 다릅니다")
    ground = [e for cls in classes for e in cls]
    return Matroid(ground, PartitionRealization(classes, capacities))


def uniform_matroid(ground: Sequence[Element], k: int) -> Matroid:
    if not 0 <= k <= len(ground):
        raise StructuralError(f"균등 매트로이드 계수 범위 오류: U_{{{k},{len(ground)}}}")
    return Matroid(ground, UniformRealization(k))


def free_matroid(ground: Sequence[Element]) -> Matroid:
    return uniform_matroid(ground, len(ground))


def linear_matroid(ground: Sequence[Element], columns: Sequence[Sequence[Any]]) -> Matroid:
    if len(ground) != len(columns):
        raise StructuralError("바탕 집합과 열 벡터 개수가 다릅니다")
    vectors = tuple(to_vector(c) for c in columns)
    if vectors and any(len(v) != len(vectors[0]) for v in vectors):
        raise StructuralError("열 벡터 차원이 일치하지 않습니다")
    return Matroid(ground, LinearRealization(vectors, tuple(ground)))


def from_dict(payload: Dict[str, Any]) -> Matroid:
    """JSON 페이로드에서 매트로이드 복원"""
    kind = payload.get('kind')
    if kind == 'partition':
        classes = [_ids(c) for c in payload['classes']]
        matroid = partition_matroid(classes, payload.get('capacities'))
    elif kind == 'uniform':
        matroid = uniform_matroid(_ids(payload['ground_set']), int(payload['k']))
    elif kind == 'linear':
        matroid = linear_matroid(_ids(payload['ground_set']), payload['columns'])
    else:
        raise StructuralError(f"지원하지 않는 매트로이드 종류입니다: {kind}")
    for t in payload.get('transforms', []):
        op = t.get('op')
        if op == 'dual':
            matroid = matroid.dual()
        elif op == 'truncate':
            matroid = matroid.truncate(int(t['k']))
        elif op == 'contract':
            matroid = matroid.contract(_ids(t['set']))
        elif op == 'restrict':
            matroid = matroid.restrict(_ids(t['set']))
        elif op == 'direct_sum':
            matroid = matroid.direct_sum(from_dict(t['other']))
        else:
            raise StructuralError(f"지원하지 않는 매트로이드 변환입니다: {op}")
    return matroid
