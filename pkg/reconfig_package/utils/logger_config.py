import logging
from datetime import date
from pathlib import Path

import yaml

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(logger_name: str = 'reconfig-center',
                 config_path: str = 'resource/application.yml') -> logging.Logger:
    """로깅 설정

    Args:
        logger_name (str): 로거 이름
        config_path (str): 설정 파일 경로

    Returns:
        logging.Logger: 설정된 로거 인스턴스
    """
    try:
        # 설정 파일 로드
        with open(config_path, 'r', encoding='utf-8') as f:
            config = yaml.safe_load(f) or {}

        logging_config = config.get('logging', {})
        logger = logging.getLogger(logger_name)

        # 로그 레벨 설정
        log_level = logging_config.get('level', 'INFO')
        logger.setLevel(getattr(logging, log_level.upper()))

        # 이미 핸들러가 있다면 제거
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        formatter = logging.Formatter(logging_config.get('format', DEFAULT_FORMAT))

        # 콘솔 핸들러 설정 (보고서는 stdout을 사용하므로 stderr로 출력)
        console_config = logging_config.get('console', {})
        if console_config.get('enabled', True):
            console_handler = logging.StreamHandler()
            console_handler.setLevel(getattr(logging, console_config.get('level', 'WARNING').upper()))
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        # 파일 핸들러 설정
        file_config = logging_config.get('file', {})
        if file_config.get('enabled', False):
            log_dir = Path(file_config.get('path', 'log'))
            log_dir.mkdir(exist_ok=True)

            # 파일명 패턴 설정
            filename_pattern = file_config.get('filename', '{date}-reconfig.log')
            filename = filename_pattern.format(date=date.today().strftime('%Y-%m-%d'))

            file_handler = logging.FileHandler(log_dir / filename, encoding='utf-8')
            file_handler.setLevel(getattr(logging, file_config.get('level', 'DEBUG').upper()))
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        return logger

    except Exception as e:
        # 기본 로거 설정 (설정 파일 로드 실패 시)
        logger = logging.getLogger(logger_name)
        logger.setLevel(logging.INFO)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        handler = logging.StreamHandler()
        handler.setLevel(logging.WARNING)
        handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
        logger.addHandler(handler)
        logger.debug(f"로거 설정 파일 로드 실패: {str(e)}, 기본 설정 사용")

        return logger
