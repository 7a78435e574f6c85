import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from geometry.points import random_point_config
from graphs.complexes import independence_complex
from graphs.generators import generate, random_graph, random_partition
from models.payloads import build_instance
from utils.exceptions import StructuralError

logger = logging.getLogger('reconfig-center')

FILE_SOURCE = 'file'
GENERATOR_SOURCE = 'generator'


class InstanceFactory:
    """
    정리 인스턴스 생성을 담당하는 팩토리 클래스
    JSON 파일 또는 시드 고정 생성기에서 도메인 인스턴스를 만들고 정리 파라미터를 주입
    """

    @staticmethod
    def create_instance(source: str, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Args:
            source (str): file | generator
            config (Dict[str, Any]):
                - input: JSON 파일 경로 (file)
                - generator, params: 생성기 이름과 파라미터 (generator)
                - extra: 인스턴스에 덧붙일 정리 파라미터 (m, d, k, delta, r, oracle, cap)

        Raises:
            StructuralError: 지원하지 않는 소스이거나 필요한 설정이 없는 경우
        """
        if source == FILE_SOURCE:
            if not config.get('input'):
                raise StructuralError("file 소스에는 input 경로가 필요합니다")
            with open(Path(config['input']), 'r', encoding='utf-8') as file:
                _, instance = build_instance(json.load(file))
        elif source == GENERATOR_SOURCE:
            instance = InstanceFactory.generate_instance(config.get('generator'), dict(config.get('params', {})))
        else:
            raise StructuralError(f"지원하지 않는 인스턴스 소스입니다: {source}")
        instance = InstanceFactory.complete(instance, config.get('extra'))
        logger.debug(f"인스턴스 생성: source={source}, 키={sorted(instance)}")
        return instance

    @staticmethod
    def from_payload(payload: Dict[str, Any], extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """이미 읽은 JSON 페이로드로부터 인스턴스 생성 (CLI 표준 입력용)"""
        _, instance = build_instance(payload)
        return InstanceFactory.complete(instance, extra)

    @staticmethod
    def complete(instance: Dict[str, Any], extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        instance.update({k: v for k, v in (extra or {}).items() if v is not None})
        # 그래프만 주어지면 독립 복합체를 C 로 사용
        if 'graph' in instance and 'complex' not in instance:
            instance['complex'] = independence_complex(instance['graph'])
        return instance

    @staticmethod
    def generate_instance(name: Any, params: Dict[str, Any]) -> Dict[str, Any]:
        """이름으로 시드 고정 생성기 실행

        Raises:
            StructuralError: 이름이 없거나 파라미터가 빠진 경우
        """
        if not name:
            raise StructuralError("generator 소스에는 생성기 이름이 필요합니다")
        if name == 'random_points':
            try:
                config = random_point_config(params['n'], params['d'], params['seed'], params.get('scale', 10))
            except KeyError as e:
                raise StructuralError(f"생성기 {name}에 필요한 파라미터가 없습니다: {e}") from e
            return {'points': config, 'd': config.d}
        if name == 'random_graph_partition':
            try:
                sizes = params['sizes']
                graph = random_graph(sum(sizes), params['p'], params['seed'])
                return {'graph': graph, 'partition': random_partition(sizes, params['seed'])}
            except KeyError as e:
                raise StructuralError(f"생성기 {name}에 필요한 파라미터가 없습니다: {e}") from e
        return generate(name, **params)
