import logging
from pathlib import Path
from typing import Any, Dict, Optional

from config.capacity_config import settings
from control_center.instance_factory import InstanceFactory
from hallcheck.TheoremBase import TheoremManager
from models.payloads import validate
from utils.canonical import canonical_json, instance_hash, to_jsonable
from utils.exceptions import CounterexampleFound, ReconfigError
from utils.logger_config import setup_logger


class ExperimentCenter:
    """
    실험 센터 메인 클래스
    인스턴스 생성, 정리 검증, 보고서 기록을 담당
    """

    def __init__(self, manager: Optional[TheoremManager] = None):
        """
        초기화 메서드
        Args:
            manager (Optional[TheoremManager]): 정리 관리자 (기본값: 자동 로드)
        """
        # 로거를 가장 먼저 설정
        self.logger = setup_logger()
        self.manager = manager or TheoremManager()
        self.logger.debug(f"등록된 정리 {len(self.manager.get_all_theorems())}개")

    def run(self, experiment: Dict[str, Any]) -> Dict[str, Any]:
        """
        실험 하나를 실행하고 보고서를 반환

        Args:
            experiment (Dict[str, Any]): ExperimentPayload 형식
                - theorem, source (file | generator), input, generator, params, oracle, output
                - extra (선택): 인스턴스에 덧붙일 정리 파라미터

        Returns:
            Dict[str, Any]: artifact_version, theorem, instance_hash 가 포함된 보고서

        Raises:
            CounterexampleFound: 반례가 발견된 경우 (보고서는 output 에 먼저 기록)
        """
        extra = experiment.get('extra', {})
        config = validate('experiment', {k: v for k, v in experiment.items() if k != 'extra'})
        try:
            instance = InstanceFactory.create_instance(config['source'], dict(config, extra=extra))
            report = self._evaluate(config['theorem'], instance, config.get('oracle', True))
        except CounterexampleFound as e:
            report = self._envelope(config['theorem'], e.dump['instance'],
                                    {'verdict': e.verdict.to_dict(), 'dump': e.dump})
            self._write(report, config.get('output'))
            raise
        except ReconfigError as e:
            self.logger.error(f"실험 실행 오류: {str(e)}")
            raise
        self._write(report, config.get('output'))
        return report

    def _evaluate(self, theorem_id: str, instance: Dict[str, Any], oracle: bool) -> Dict[str, Any]:
        if oracle:
            verdict = self.manager.verify_instance(instance, theorem_id)
            return self._envelope(theorem_id, instance, {'verdict': verdict.to_dict()})
        report = self.manager.evaluate_hypothesis(instance, theorem_id)
        return self._envelope(theorem_id, instance, {'hypothesis': report.to_dict()})

    @staticmethod
    def _envelope(theorem_id: str, instance: Any, body: Dict[str, Any]) -> Dict[str, Any]:
        return to_jsonable(dict(body, artifact_version=settings.ARTIFACT_VERSION, theorem=theorem_id,
                                instance_hash=instance_hash(instance)))

    def _write(self, report: Dict[str, Any], output: Optional[str]) -> None:
        if not output:
            return
        try:
            path = Path(output)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(canonical_json(report, indent=2) + '\n', encoding='utf-8')
            self.logger.info(f"보고서 저장: {path}")
        except OSError as e:
            self.logger.error(f"보고서 저장 실패: {str(e)}")
            raise
