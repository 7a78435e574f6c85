import sys
from pathlib import Path

from dotenv import load_dotenv

# reconfig_package 내부 모듈은 패키지 루트 기준으로 서로를 import
PACKAGE_ROOT = Path(__file__).parent / 'reconfig_package'
sys.path.insert(0, str(PACKAGE_ROOT))

# .env 파일의 절대 경로 설정
env_path = Path(__file__).parent / '.env'

# .env 파일 로드 (RECONFIG_* 열거 상한, 스윕 작업자 수)
load_dotenv(dotenv_path=env_path)

from cli.commands import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
