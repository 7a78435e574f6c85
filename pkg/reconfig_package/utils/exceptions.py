"""
패키지 전체에서 사용하는 예외 계층

모든 예외는 ReconfigError를 상속받으며, CLI는 예외 종류에 따라 종료 코드를 결정합니다.
"""

from typing import Any, Dict, Optional


class ReconfigError(Exception):
    """패키지 공통 최상위 예외"""


class StructuralError(ReconfigError, ValueError):
    """입력 구조 오류 (차원 불일치, 잘못된 파라미터, 집합 범위 위반 등)"""


class PreconditionError(StructuralError):
    """연산의 사전 조건 위반"""


class CapacityError(ReconfigError, RuntimeError):
    """열거 상한 초과

    Args:
        message (str): 오류 메시지
        size (int): 요청된 크기
        cap (int): 설정된 상한
    """

    def __init__(self, message: str, size: Optional[int] = None, cap: Optional[int] = None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class LookupFailure(ReconfigError, KeyError):
    """존재하지 않는 구성, 정리 ID, 페이로드 종류 조회"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ''


class ConsistencyError(ReconfigError, RuntimeError):
    """내부 불변식 위반 (발생하면 구현 버그)"""


class CounterexampleFound(ReconfigError):
    """가설은 성립하지만 오라클 결론이 거짓인 경우

    Attributes:
        verdict: 분류 결과 (VerificationVerdict)
        dump (Dict[str, Any]): 정규화된 인스턴스 덤프
    """

    def __init__(self, verdict: Any, dump: Dict[str, Any]):
        super().__init__(f"반례 발견: {getattr(verdict, 'theorem_id', '?')}")
        self.verdict = verdict
        self.dump = dump


def check_cap(size: int, cap: int, what: str) -> None:
    """열거 크기가 상한 이내인지 확인

    Raises:
        CapacityError: size가 cap을 넘는 경우
    """
    if size > cap:
        raise CapacityError(f"{what} 크기 {size}가 상한 {cap}을 초과했습니다", size=size, cap=cap)
