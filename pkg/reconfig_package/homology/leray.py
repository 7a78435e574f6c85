import logging
from itertools import combinations
from typing import Optional

from complex.simplicial import SimplicialComplex, induced
from config.capacity_config import exhaustion_cap
from homology.betti import reduced_betti
from utils.exceptions import check_cap

logger = logging.getLogger('reconfig-center')


def is_d_leray(c: SimplicialComplex, d: int, cap: Optional[int] = None) -> bool:
    """모든 X ⊆ V, d ≤ i ≤ |X|−1 에 대해 H̃_i(C[X]) = 0 인지 전수 확인

    Raises:
        CapacityError: 바탕 집합이 상한을 넘는 경우
    """
    ground = c.ground_set
    check_cap(len(ground), cap if cap is not None else exhaustion_cap(), "d-Leray 바탕 집합")
    for size in range(len(ground) + 1):
        for subset in combinations(ground, size):
            sub = induced(c, subset)
            for i in range(max(d, -1), min(size - 1, sub.dim) + 1):
                if reduced_betti(sub, i) != 0:
                    logger.debug(f"d-Leray 위반: X={subset}, i={i}")
                    return False
    return True


def leray_number(c: SimplicialComplex, cap: Optional[int] = None) -> int:
    """C가 d-Leray인 최소 d (0 이상)"""
    d = 0
    while not is_d_leray(c, d, cap):
        d += 1
    return d
