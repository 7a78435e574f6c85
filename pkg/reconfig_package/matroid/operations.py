"""
매트로이드 열거 연산: 평탄집합(flat), 루프/코루프, 기저, 독립 복합체, 교차수
"""

from itertools import combinations
from typing import FrozenSet, Hashable, List, Optional, Set, Tuple

from complex.simplicial import SimplicialComplex
from config.capacity_config import exhaustion_cap
from matroid.matroid import Matroid
from utils.exceptions import check_cap

Element = Hashable


def _guard(m: Matroid, cap: Optional[int]) -> None:
    check_cap(len(m.ground_set), cap if cap is not None else exhaustion_cap(), "매트로이드 바탕 집합")


def independent_sets(m: Matroid, size: int) -> List[Tuple[Element, ...]]:
    """크기 size인 독립집합 (바탕 집합 순서의 사전순)"""
    return [s for s in combinations(m.ground_set, size) if m.is_independent(s)]


def bases(m: Matroid, cap: Optional[int] = None) -> List[Tuple[Element, ...]]:
    _guard(m, cap)
    return independent_sets(m, m.full_rank)


def flats(m: Matroid, max_rank: int, cap: Optional[int] = None) -> List[FrozenSet[Element]]:
    """계수 max_rank 이하의 모든 평탄집합

    계수 k 평탄집합은 크기 k 독립집합의 폐포이므로 독립집합의 폐포만 모읍니다.
    정렬: (계수, 크기, 바탕 집합 순서)
    """
    _guard(m, cap)
    order = {e: i for i, e in enumerate(m.ground_set)}
    found: Set[FrozenSet[Element]] = set()
    for k in range(0, min(max_rank, m.full_rank) + 1):
        for independent in independent_sets(m, k):
            found.add(m.closure(independent))
    return sorted(found, key=lambda f: (m.rank(f), len(f), sorted(order[e] for e in f)))


def is_flat(m: Matroid, x) -> bool:
    x = frozenset(x)
    return m.closure(x) == x


def loops_and_coloops(m: Matroid) -> Tuple[Tuple[Element, ...], Tuple[Element, ...]]:
    members = frozenset(m.ground_set)
    full = m.full_rank
    loops = tuple(e for e in m.ground_set if m.rank({e}) == 0)
    coloops = tuple(e for e in m.ground_set if m.rank(members - {e}) == full - 1)
    return loops, coloops


def independence_complex_of(m: Matroid, cap: Optional[int] = None) -> SimplicialComplex:
    """독립 복합체 (극대면 = 기저)"""
    return SimplicialComplex(m.ground_set, bases(m, cap) or [()])


def common_independent_sets(m: Matroid, n: Matroid, size: int) -> List[Tuple[Element, ...]]:
    """M과 N 모두에서 독립인 크기 size 집합"""
    return [s for s in independent_sets(m, size) if n.is_independent(s)]


def intersection_number(m: Matroid, n: Matroid, cap: Optional[int] = None) -> int:
    """ν(M, N): 공통 독립집합의 최대 크기 (전수 탐색)"""
    _guard(m, cap)
    best = 0
    for size in range(1, min(m.full_rank, n.full_rank) + 1):
        if any(n.is_independent(s) for s in independent_sets(m, size)):
            best = size
        else:
            break
    return best
