import os
from typing import Dict, Any

import yaml
from pydantic_settings import BaseSettings


class CapacitySettings(BaseSettings):
    # 열거 상한 설정
    EXHAUSTION_CAP: int = 16
    HALL_SUBSET_CAP: int = 20
    RG_CANDIDATE_CAP: int = 2_000_000
    DIAMETER_CAP: int = 5000

    # 스윕 설정
    SWEEP_WORKERS: int = os.cpu_count() or 1
    SWEEP_CHUNK_SIZE: int = 64

    ARTIFACT_VERSION: str = "1.0.0"

    class Config:
        case_sensitive = True
        env_prefix = "RECONFIG_"


settings = CapacitySettings()


def get_capacity_config() -> Dict[str, Any]:
    """열거 상한 설정을 환경 변수에서 가져옵니다."""
    return {
        'exhaustion_cap': settings.EXHAUSTION_CAP,
        'hall_subset_cap': settings.HALL_SUBSET_CAP,
        'rg_candidate_cap': settings.RG_CANDIDATE_CAP,
        'diameter_cap': settings.DIAMETER_CAP,
    }


def apply_capacity_config(config: Dict[str, Any]) -> None:
    """get_capacity_config() 형식의 상한을 현재 프로세스 설정에 반영"""
    for key, value in config.items():
        setattr(settings, key.upper(), value)


def _yaml_sweep_section(config_path: str) -> Dict[str, Any]:
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            return (yaml.safe_load(f) or {}).get('sweep') or {}
    except (OSError, yaml.YAMLError):
        return {}


def get_sweep_config(config_path: str = 'resource/application.yml') -> Dict[str, Any]:
    """스윕 작업자 설정 (환경 변수 > application.yml > 기본값)"""
    section = _yaml_sweep_section(config_path)
    workers = settings.SWEEP_WORKERS
    if 'SWEEP_WORKERS' not in settings.model_fields_set and section.get('workers'):
        workers = int(section['workers'])
    chunk_size = settings.SWEEP_CHUNK_SIZE
    if 'SWEEP_CHUNK_SIZE' not in settings.model_fields_set and section.get('chunk_size'):
        chunk_size = int(section['chunk_size'])
    return {
        'workers': workers,
        'chunk_size': chunk_size,
    }


def exhaustion_cap() -> int:
    return settings.EXHAUSTION_CAP


def hall_subset_cap() -> int:
    return settings.HALL_SUBSET_CAP


def rg_candidate_cap() -> int:
    return settings.RG_CANDIDATE_CAP


def diameter_cap() -> int:
    return settings.DIAMETER_CAP

