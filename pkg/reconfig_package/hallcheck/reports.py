"""
가설 평가 보고서와 검증 판정
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from utils.canonical import to_jsonable
from utils.exceptions import ConsistencyError

CONFIRMED = 'confirmed'
VACUOUS = 'vacuous'
TIGHT_NEGATIVE = 'tight-negative'
COUNTEREXAMPLE = 'COUNTEREXAMPLE'


@dataclass
class HypothesisReport:
    """정리 가설 평가 결과

    Attributes:
        theorem_id (str): 정리 ID
        holds (bool): 가설 성립 여부
        failing_witness (Optional[Dict]): 첫 번째 실패 (부분집합, 계산값, 요구 하한)
        table (List[Dict]): 부분집합(또는 평탄집합)별 평가 행
    """
    theorem_id: str
    holds: bool
    failing_witness: Optional[Dict[str, Any]] = None
    table: List[Dict[str, Any]] = field(default_factory=list)

    def __post_init__(self):
        if self.holds != (self.failing_witness is None):
            raise ConsistencyError("holds는 failing_witness가 없을 때만 참이어야 합니다")

    @classmethod
    def from_rows(cls, theorem_id: str, rows: List[Dict[str, Any]]) -> 'HypothesisReport':
        """행마다 'ok' 키를 보고 첫 실패 행을 증거로 삼습니다"""
        failure = next((row for row in rows if not row['ok']), None)
        return cls(theorem_id, failure is None, failure, rows)

    @classmethod
    def single(cls, theorem_id: str, ok: bool, **values: Any) -> 'HypothesisReport':
        row = dict(values, ok=ok)
        return cls.from_rows(theorem_id, [row])

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable({
            'theorem': self.theorem_id,
            'holds': self.holds,
            'failing_witness': self.failing_witness,
            'table': self.table,
        })


@dataclass
class VerificationVerdict:
    """가설과 오라클 결론의 조합

    Attributes:
        theorem_id (str): 정리 ID
        hypothesis (bool): 가설 성립 여부
        conclusion (bool): 오라클이 판정한 결론
        classification (str): confirmed | vacuous | tight-negative | COUNTEREXAMPLE
        report (Optional[HypothesisReport]): 가설 보고서
        oracle (Dict): 오라클 세부 정보
    """
    theorem_id: str
    hypothesis: bool
    conclusion: bool
    classification: str
    report: Optional[HypothesisReport] = None
    oracle: Dict[str, Any] = field(default_factory=dict)

    @staticmethod
    def classify(hypothesis: bool, conclusion: bool) -> str:
        if hypothesis and conclusion:
            return CONFIRMED
        if hypothesis:
            return COUNTEREXAMPLE
        if conclusion:
            return VACUOUS
        return TIGHT_NEGATIVE

    @classmethod
    def build(cls, report: HypothesisReport, conclusion: bool,
              oracle: Optional[Dict[str, Any]] = None) -> 'VerificationVerdict':
        return cls(report.theorem_id, report.holds, conclusion,
                   cls.classify(report.holds, conclusion), report, oracle or {})

    @property
    def is_counterexample(self) -> bool:
        return self.classification == COUNTEREXAMPLE

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable({
            'theorem': self.theorem_id,
            'hypothesis': self.hypothesis,
            'conclusion': self.conclusion,
            'classification': self.classification,
            'report': self.report.to_dict() if self.report is not None else None,
            'oracle': self.oracle,
        })
