"""
정리 검증의 기본 구조를 정의하는 모듈
모든 정리 클래스는 이 기본 클래스를 상속받아 가설 평가기와 결론 오라클을 구현합니다.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from hallcheck.reports import HypothesisReport, VerificationVerdict
from utils.canonical import instance_hash, to_jsonable
from utils.exceptions import CounterexampleFound, LookupFailure, StructuralError

logger = logging.getLogger('reconfig-center')

Instance = Dict[str, Any]


class TheoremBase(ABC):
    """
    정리 기본 클래스 (추상 클래스)

    모든 정리는 이 클래스를 상속받아 hypothesis 와 conclusion 메서드를 구현해야 합니다.

    Attributes:
        theorem_id (str): 레지스트리 ID (CLI --theorem 값)
        required_keys (Tuple[str, ...]): 인스턴스 딕셔너리의 필수 키

    Notes:
        - 인스턴스는 파싱이 끝난 도메인 객체를 담은 딕셔너리입니다
        - 가설이 참인데 결론이 거짓이면 TheoremManager 가 반례로 처리합니다
    """

    theorem_id: str = ''
    required_keys: Tuple[str, ...] = ()

    def require(self, instance: Instance) -> None:
        """
        필수 키 확인

        Raises:
            StructuralError: 인스턴스에 필수 키가 없는 경우
        """
        missing = [key for key in self.required_keys if key not in instance]
        if missing:
            raise StructuralError(f"{self.theorem_id} 인스턴스에 필요한 키가 없습니다: {missing}")

    @abstractmethod
    def hypothesis(self, instance: Instance) -> HypothesisReport:
        """
        정리의 가설을 평가하는 추상 메서드

        Args:
            instance (Dict[str, Any]): 정리 인스턴스

        Returns:
            HypothesisReport: 가설 성립 여부와 부분집합별 평가표
        """
        pass

    @abstractmethod
    def conclusion(self, instance: Instance) -> Tuple[bool, Dict[str, Any]]:
        """
        브루트포스 오라클로 결론을 판정하는 추상 메서드

        Returns:
            Tuple[bool, Dict[str, Any]]: (결론 성립 여부, 오라클 세부 정보)
        """
        pass


class TheoremManager:
    """
    정리 관리자 클래스

    hallcheck 패키지의 모든 정리를 자동으로 등록하고 인스턴스 검증을 수행합니다.

    Attributes:
        theorems (Dict[str, TheoremBase]): ID → 정리 객체
    """

    def __init__(self):
        self.theorems: Dict[str, TheoremBase] = self._load_all_theorems()

    def _load_all_theorems(self) -> Dict[str, TheoremBase]:
        """
        모든 정리 클래스를 자동으로 로드

        Returns:
            Dict[str, TheoremBase]: ID 순으로 정렬된 정리 객체

        Raises:
            StructuralError: 같은 ID 를 가진 정리가 둘 이상인 경우

        Notes:
            - hallcheck 패키지 내의 모든 모듈을 검색
            - TheoremBase를 상속받은 실제 구현 클래스만 로드 (추상 클래스 제외)
        """
        import importlib
        import inspect
        import pkgutil
        import hallcheck

        theorems: Dict[str, TheoremBase] = {}
        for _, name, _ in pkgutil.iter_modules(hallcheck.__path__):
            module = importlib.import_module(f'hallcheck.{name}')
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if (issubclass(obj, TheoremBase) and
                        obj != TheoremBase and
                        not inspect.isabstract(obj) and
                        obj.theorem_id):
                    if obj.theorem_id in theorems and type(theorems[obj.theorem_id]) is not obj:
                        raise StructuralError(f"정리 ID가 중복되었습니다: {obj.theorem_id}")
                    theorems[obj.theorem_id] = obj()
        return dict(sorted(theorems.items()))

    def add_theorem(self, theorem: TheoremBase) -> None:
        """런타임에 정리를 추가 (같은 ID 는 덮어씀)"""
        self.theorems[theorem.theorem_id] = theorem

    def get_all_theorems(self) -> List[str]:
        return list(self.theorems)

    def get_theorem(self, theorem_id: str) -> TheoremBase:
        """
        Raises:
            LookupFailure: 등록되지 않은 정리 ID
        """
        try:
            return self.theorems[theorem_id]
        except KeyError as e:
            raise LookupFailure(f"지원하지 않는 정리입니다: {theorem_id}") from e

    def evaluate_hypothesis(self, instance: Instance, theorem_id: str) -> HypothesisReport:
        """오라클 없이 가설만 평가"""
        theorem = self.get_theorem(theorem_id)
        theorem.require(instance)
        return theorem.hypothesis(instance)

    def verify_instance(self, instance: Instance, theorem_id: str,
                        dump_source: Optional[Any] = None) -> VerificationVerdict:
        """
        가설 평가와 결론 오라클을 함께 실행하고 분류

        Args:
            instance (Dict[str, Any]): 정리 인스턴스
            theorem_id (str): 정리 ID
            dump_source (Optional[Any]): 반례 덤프에 기록할 원본 페이로드 (기본값: instance)

        Returns:
            VerificationVerdict: confirmed | vacuous | tight-negative

        Raises:
            LookupFailure: 등록되지 않은 정리 ID
            CounterexampleFound: 가설은 참인데 오라클 결론이 거짓인 경우
        """
        theorem = self.get_theorem(theorem_id)
        theorem.require(instance)
        report = theorem.hypothesis(instance)
        conclusion, oracle = theorem.conclusion(instance)
        verdict = VerificationVerdict.build(report, conclusion, oracle)
        logger.info(f"{theorem_id}: 가설={verdict.hypothesis}, 결론={verdict.conclusion}, "
                    f"분류={verdict.classification}")
        if verdict.is_counterexample:
            source = instance if dump_source is None else dump_source
            dump = {'theorem': theorem_id, 'instance': to_jsonable(source),
                    'instance_hash': instance_hash(source), 'verdict': verdict.to_dict()}
            logger.critical(f"반례 발견: {theorem_id} 인스턴스 {dump['instance_hash']}\n{dump}")
            raise CounterexampleFound(verdict, dump)
        return verdict
