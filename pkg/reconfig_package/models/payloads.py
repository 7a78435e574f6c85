"""
JSON 페이로드 모델과 도메인 객체 변환

유리수는 "p/q" 문자열 또는 정수로 받습니다.
"""

from typing import Any, Callable, Dict, List, Optional, Tuple, Type, Union

from pydantic import BaseModel, Field

from complex.partition import from_dict as partition_from_payload
from complex.poset import from_dict as poset_from_payload
from complex.simplicial import _ids
from complex.simplicial import from_dict as complex_from_payload
from geometry.points import family_from_dict, family_to_dict, partition_from_dict, point_config_from_dict
from graphs.graph import Hypergraph, graph_from_dict, hypergraph_from_dict, lists_from_dict
from matroid.matroid import from_dict as matroid_from_payload
from sperner.prism import triangulation_from_dict
from utils.canonical import to_jsonable
from utils.exceptions import LookupFailure, StructuralError

Rational = Union[int, str]


class ComplexPayload(BaseModel):
    ground_set: List[Any]
    maximal_faces: List[List[Any]]


class PartitionPayload(BaseModel):
    classes: List[List[Any]]


class PosetPayload(BaseModel):
    elements: List[Any]
    covers: List[List[Any]] = Field(default_factory=list)


class GraphPayload(BaseModel):
    vertices: List[Any]
    edges: List[List[Any]]


class HypergraphPayload(BaseModel):
    vertices: List[Any]
    edges: List[List[Any]]
    r: Optional[int] = None
    edge_ids: Optional[List[Any]] = None


class ListsPayload(BaseModel):
    lists: Dict[str, List[Any]]


class MatroidTransformPayload(BaseModel):
    op: str
    k: Optional[int] = None
    set: Optional[List[Any]] = None
    other: Optional['MatroidPayload'] = None


class MatroidPayload(BaseModel):
    kind: str
    classes: Optional[List[List[Any]]] = None
    capacities: Optional[List[int]] = None
    ground_set: Optional[List[Any]] = None
    k: Optional[int] = None
    columns: Optional[List[List[Rational]]] = None
    transforms: List[MatroidTransformPayload] = Field(default_factory=list)


class PointsPayload(BaseModel):
    d: int
    points: Dict[str, List[Rational]]


class AssignmentPayload(BaseModel):
    assignment: Dict[str, int]
    r: Optional[int] = None


class HalfSpacePayload(BaseModel):
    a: List[Rational]
    b: Rational


class HalfspaceFamilyPayload(BaseModel):
    d: int
    families: List[List[List[HalfSpacePayload]]]


class PrismVertexPayload(BaseModel):
    bary: List[Rational]
    height: Rational


class TriangulationPayload(BaseModel):
    n: int
    vertices: Dict[str, PrismVertexPayload]
    top_simplices: List[List[str]]


class ColoringPayload(BaseModel):
    coloring: Dict[str, int]


class InstancePayload(BaseModel):
    theorem: Optional[str] = None
    complex: Optional[ComplexPayload] = None
    partition: Optional[PartitionPayload] = None
    matroid: Optional[MatroidPayload] = None
    matroid2: Optional[MatroidPayload] = None
    graph: Optional[GraphPayload] = None
    hypergraph: Optional[HypergraphPayload] = None
    a_side: Optional[List[Any]] = None
    lists: Optional[Dict[str, List[Any]]] = None
    points: Optional[Dict[str, List[Rational]]] = None
    r: Optional[int] = None
    a_sets: Optional[List[List[List[Rational]]]] = None
    x: Optional[List[Rational]] = None
    families: Optional[List[List[List[HalfSpacePayload]]]] = None
    m: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    delta: Optional[int] = None
    oracle: Optional[str] = None
    cap: Optional[int] = None


class ReportPayload(BaseModel):
    theorem: str
    holds: bool
    failing_witness: Optional[Dict[str, Any]] = None
    table: List[Dict[str, Any]] = Field(default_factory=list)


class VerdictPayload(BaseModel):
    theorem: str
    hypothesis: bool
    conclusion: bool
    classification: str
    report: Optional[ReportPayload] = None
    oracle: Dict[str, Any] = Field(default_factory=dict)


class ExperimentPayload(BaseModel):
    theorem: str
    source: str = 'file'
    input: Optional[str] = None
    generator: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    oracle: bool = True
    output: Optional[str] = None


MatroidTransformPayload.model_rebuild()

MODELS: Dict[str, Type[BaseModel]] = {
    'complex': ComplexPayload,
    'partition': PartitionPayload,
    'poset': PosetPayload,
    'graph': GraphPayload,
    'hypergraph': HypergraphPayload,
    'lists': ListsPayload,
    'matroid': MatroidPayload,
    'points': PointsPayload,
    'assignment': AssignmentPayload,
    'halfspace_family': HalfspaceFamilyPayload,
    'triangulation': TriangulationPayload,
    'coloring': ColoringPayload,
    'instance': InstancePayload,
    'report': ReportPayload,
    'verdict': VerdictPayload,
    'experiment': ExperimentPayload,
}


def _model(kind: str) -> Type[BaseModel]:
    try:
        return MODELS[kind]
    except KeyError as e:
        raise LookupFailure(f"지원하지 않는 페이로드 종류입니다: {kind}") from e


def schema(kind: str) -> Dict[str, Any]:
    """페이로드 종류의 JSON 스키마

    Raises:
        LookupFailure: 지원하지 않는 종류
    """
    return _model(kind).model_json_schema()


def validate(kind: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    """모델 검증 후 None 필드를 뺀 딕셔너리 (pydantic ValidationError 는 그대로 전파)"""
    return _model(kind).model_validate(payload).model_dump(exclude_none=True)


PARSERS: Dict[str, Callable[[Dict[str, Any]], Any]] = {
    'complex': complex_from_payload,
    'partition': partition_from_payload,
    'poset': poset_from_payload,
    'graph': graph_from_dict,
    'hypergraph': hypergraph_from_dict,
    'matroid': matroid_from_payload,
    'points': point_config_from_dict,
    'halfspace_family': family_from_dict,
    'triangulation': triangulation_from_dict,
}


def parse(kind: str, payload: Dict[str, Any]) -> Any:
    """검증한 페이로드를 도메인 객체로 변환

    Raises:
        LookupFailure: 도메인 변환이 없는 종류
        pydantic.ValidationError: 모델 검증 실패
    """
    if kind not in PARSERS:
        raise LookupFailure(f"도메인 객체로 변환할 수 없는 페이로드 종류입니다: {kind}")
    return PARSERS[kind](validate(kind, payload))


def parse_coloring(payload: Dict[str, Any]) -> Dict[str, int]:
    return dict(validate('coloring', payload)['coloring'])


def parse_assignment(config, payload: Dict[str, Any]):
    return partition_from_dict(config, validate('assignment', payload))


def _list_keys(instance: Dict[str, Any]) -> List[Any]:
    keys: List[Any] = []
    if 'graph' in instance:
        keys += list(instance['graph'].vertices)
        keys += list(Hypergraph.from_graph(instance['graph']).edge_ids)
    if 'hypergraph' in instance:
        keys += list(instance['hypergraph'].edge_ids)
    return keys


def build_instance(payload: Dict[str, Any]) -> Tuple[Optional[str], Dict[str, Any]]:
    """인스턴스 페이로드를 (정리 ID, 도메인 인스턴스) 로 변환

    Raises:
        StructuralError: 변환 중 구조 오류 (families 에 d 가 없는 경우 등)
        pydantic.ValidationError: 모델 검증 실패
    """
    data = validate('instance', payload)
    instance: Dict[str, Any] = {}
    for key in ('complex', 'partition', 'matroid', 'matroid2', 'graph', 'hypergraph'):
        if key in data:
            kind = 'matroid' if key == 'matroid2' else key
            instance[key] = PARSERS[kind](data[key])
    if 'points' in data:
        d = data.get('d', len(next(iter(data['points'].values()), [])))
        instance['points'] = point_config_from_dict({'d': d, 'points': data['points']})
    if 'families' in data:
        if 'd' not in data:
            raise StructuralError("families 인스턴스에는 차원 d 가 필요합니다")
        instance['families'] = family_from_dict({'d': data['d'], 'families': data['families']})[1]
    if 'a_side' in data:
        instance['a_side'] = _ids(data['a_side'])
    if 'lists' in data:
        instance['lists'] = lists_from_dict({'lists': data['lists']}, _list_keys(instance))
    for key in ('r', 'a_sets', 'x', 'm', 'd', 'k', 'delta', 'oracle', 'cap'):
        if key in data:
            instance[key] = data[key]
    return data.get('theorem'), instance


def instance_to_payload(instance: Dict[str, Any], theorem: Optional[str] = None) -> Dict[str, Any]:
    """도메인 인스턴스를 build_instance 가 다시 읽을 수 있는 페이로드로 변환"""
    payload: Dict[str, Any] = {} if theorem is None else {'theorem': theorem}
    for key, value in instance.items():
        if key == 'points':
            payload['points'] = value.to_dict()['points']
            payload.setdefault('d', value.d)
        elif key == 'families':
            payload['families'] = family_to_dict(instance['d'], value)['families']
        elif key == 'lists':
            payload['lists'] = value.to_dict()['lists']
        else:
            payload[key] = to_jsonable(value)
    return payload
