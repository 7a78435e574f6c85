"""
유리수 변환/직렬화 유틸리티

JSON 페이로드에서 유리수는 "p/q" (q = 1이면 "p") 문자열로 표현됩니다.
부동소수점 입력은 정확성을 보장할 수 없으므로 거부합니다.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable, Tuple, Union

from utils.exceptions import StructuralError

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """값을 기약분수로 변환

    Args:
        value: Fraction, int 또는 "p/q" 형식 문자열

    Returns:
        Fraction: 분모가 양수인 기약분수

    Raises:
        StructuralError: float, bool 또는 해석할 수 없는 문자열
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise StructuralError(f"정확한 유리수가 아닌 값입니다: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise StructuralError(f"유리수 문자열 해석 실패: {value!r} ({str(e)})") from e
    raise StructuralError(f"지원하지 않는 유리수 타입입니다: {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def to_vector(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def format_vector(values: Iterable[Fraction]) -> list:
    return [format_rational(v) for v in values]


def common_denominator(values: Iterable[Fraction]) -> int:
    """분모들의 최소공배수 (행을 정수로 스케일링할 때 사용)"""
    result = 1
    for v in values:
        result = lcm(result, Fraction(v).denominator)
    return result
