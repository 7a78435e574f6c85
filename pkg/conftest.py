import sys
from pathlib import Path

# 테스트에서도 main.py 와 같은 방식으로 패키지 루트를 import 경로에 추가
sys.path.insert(0, str(Path(__file__).parent / 'reconfig_package'))
