"""
CLI 입출력 도우미
"""

import json
import sys
from typing import Any, Dict, Optional

import click

from config.capacity_config import settings
from utils.canonical import canonical_json, instance_hash, to_jsonable


def read_json(path: str) -> Dict[str, Any]:
    """JSON 파일 (또는 '-' 이면 표준 입력) 읽기

    json.JSONDecodeError 는 그대로 전파되며 run() 이 위치 정보와 함께 보고합니다.
    """
    if path == '-':
        return json.load(sys.stdin)
    with open(path, 'r', encoding='utf-8') as file:
        return json.load(file)


def envelope(body: Dict[str, Any], theorem: Optional[str] = None, instance: Any = None) -> Dict[str, Any]:
    """보고서에 artifact_version, theorem, instance_hash 를 덧붙임"""
    report = dict(to_jsonable(body), artifact_version=settings.ARTIFACT_VERSION)
    if theorem is not None:
        report['theorem'] = theorem
    if instance is not None:
        report['instance_hash'] = instance_hash(instance)
    return report


def emit(report: Any, fmt: str = 'json') -> None:
    """정규화 JSON 을 표준 출력으로 (동일 입력 ⇒ 동일 바이트)"""
    if fmt != 'json':
        raise click.BadParameter(f"지원하지 않는 출력 형식입니다: {fmt}")
    click.echo(canonical_json(report, indent=2))
