"""
유한 부분순서집합, 순서 복합체, 구간 세분
"""

from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

from complex.simplicial import SimplicialComplex, _ids
from utils.exceptions import StructuralError

Element = Hashable


class FinitePoset:
    """유한 부분순서집합 (관계는 생성 시 추이적으로 닫음)

    Attributes:
        elements (Tuple): 원소 (정규 순서)
    """

    def __init__(self, elements: Iterable[Element], relations: Iterable[Tuple[Element, Element]] = (),
                 _above: Optional[Dict[Element, Set[Element]]] = None,
                 _covers: Optional[Dict[Element, List[Element]]] = None):
        self.elements = tuple(elements)
        self._order = {e: i for i, e in enumerate(self.elements)}
        if len(self._order) != len(self.elements):
            raise StructuralError("포셋 원소가 중복되었습니다")
        if _above is not None:
            self._above = _above
        else:
            direct: Dict[Element, Set[Element]] = {e: set() for e in self.elements}
            for lo, hi in relations:
                if lo not in self._order or hi not in self._order:
                    raise StructuralError(f"포셋에 없는 원소의 관계입니다: ({lo}, {hi})")
                if lo == hi:
                    raise StructuralError(f"반사적 관계는 허용되지 않습니다: {lo}")
                direct[lo].add(hi)
            self._above = _transitive_closure(self.elements, direct)
            for e in self.elements:
                if e in self._above[e]:
                    raise StructuralError(f"순환 관계가 있습니다: {e}")
        self._covers = _covers if _covers is not None else self._compute_covers()

    @classmethod
    def from_order(cls, elements: Sequence[Element], less: Callable[[Element, Element], bool],
                   grade: Optional[Callable[[Element], int]] = None) -> 'FinitePoset':
        """순서 함수로부터 생성

        Args:
            elements: 원소 목록
            less: 순수 부분순서 a < b (추이적이어야 함)
            grade: 주어지면 덮개 관계를 "a < b 이고 grade(b) = grade(a) + 1"로 계산
                (중간 원소가 모두 집합에 포함되는 볼록 족에서만 사용)
        """
        above = {a: {b for b in elements if b != a and less(a, b)} for a in elements}
        covers = None
        if grade is not None:
            covers = {a: [b for b in elements if b in above[a] and grade(b) == grade(a) + 1]
                      for a in elements}
        return cls(elements, _above=above, _covers=covers)

    def less(self, a: Element, b: Element) -> bool:
        return b in self._above[a]

    def leq(self, a: Element, b: Element) -> bool:
        return a == b or self.less(a, b)

    def _compute_covers(self) -> Dict[Element, List[Element]]:
        covers = {}
        for a in self.elements:
            above = self._above[a]
            covers[a] = [b for b in self.elements
                         if b in above and not any(b in self._above[c] for c in above)]
        return covers

    def cover_pairs(self) -> List[Tuple[Element, Element]]:
        return [(a, b) for a in self.elements for b in self._covers[a]]

    def minimal_elements(self) -> List[Element]:
        below = set()
        for a in self.elements:
            below.update(self._covers[a])
        return [e for e in self.elements if e not in below]

    def maximal_chains(self) -> List[Tuple[Element, ...]]:
        chains = []

        def extend(chain: List[Element]) -> None:
            nexts = self._covers[chain[-1]]
            if not nexts:
                chains.append(tuple(chain))
                return
            for b in nexts:
                chain.append(b)
                extend(chain)
                chain.pop()

        for start in self.minimal_elements():
            extend([start])
        return chains

    def to_dict(self) -> Dict[str, Any]:
        return {'elements': list(self.elements), 'covers': [list(pair) for pair in self.cover_pairs()]}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset(|P|={len(self.elements)}, covers={len(self.cover_pairs())})"


def _transitive_closure(elements: Sequence[Element],
                        direct: Dict[Element, Set[Element]]) -> Dict[Element, Set[Element]]:
    closure: Dict[Element, Set[Element]] = {}
    for start in elements:
        seen: Set[Element] = set()
        stack = list(direct[start])
        while stack:
            e = stack.pop()
            if e in seen:
                continue
            seen.add(e)
            stack.extend(direct[e])
        closure[start] = seen
    return closure


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """사슬들의 복합체 (극대면 = 극대 사슬)"""
    chains = p.maximal_chains()
    return SimplicialComplex(p.elements, chains or [()])


def interval_subdivision(p: FinitePoset) -> FinitePoset:
    """in(P): 닫힌 구간 [a, b] 들을 포함 관계로 정렬

    [a1, b1] ⊆ [a2, b2] ⇔ a2 ≤ a1 ≤ b1 ≤ b2
    """
    intervals = [(a, b) for a in p.elements for b in p.elements if p.leq(a, b)]

    def contained(x: Tuple[Element, Element], y: Tuple[Element, Element]) -> bool:
        return x != y and p.leq(y[0], x[0]) and p.leq(x[1], y[1])

    return FinitePoset.from_order(intervals, contained)


def from_dict(payload: Dict[str, Any]) -> FinitePoset:
    elements = _ids(payload['elements'])
    covers = [tuple(_ids(pair)) for pair in payload.get('covers', [])]
    return FinitePoset(elements, covers)
