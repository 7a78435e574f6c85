"""
정규화 JSON 직렬화와 인스턴스 해시

동일한 입력은 항상 바이트 단위로 동일한 출력을 만들어야 하므로
키 정렬, 고정 구분자, 유리수/무한대 문자열화를 한 곳에서 처리합니다.
"""

import hashlib
import json
import math
from fractions import Fraction
from typing import Any


def to_jsonable(value: Any) -> Any:
    """도메인 값을 JSON 직렬화 가능한 값으로 변환"""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float) and math.isinf(value):
        return 'inf'
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=lambda x: json.dumps(x, sort_keys=True))
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return value


def canonical_json(value: Any, indent: Any = None) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True, ensure_ascii=False,
                      indent=indent, separators=None if indent else (',', ':'))


def instance_hash(value: Any) -> str:
    return hashlib.sha256(canonical_json(value).encode('utf-8')).hexdigest()
