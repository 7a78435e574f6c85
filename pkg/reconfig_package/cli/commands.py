"""
reconfig 명령줄 인터페이스

모든 하위 명령은 정규화 JSON 보고서를 표준 출력으로 내보냅니다.
종료 코드: 0 성공, 1 입력 오류, 2 반례 발견, 3 열거 상한 초과
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence

import click
from pydantic import ValidationError

from cli.io import emit, envelope, read_json
from complex.derived import alexander_dual, colorful_complex, colorful_nerve, intersection_complex
from complex.poset import interval_subdivision, order_complex
from config.capacity_config import settings
from control_center.ExperimentCenter import ExperimentCenter
from control_center.instance_factory import InstanceFactory
from geometry.caratheodory import rg_colorful_caratheodory, rg_colorful_helly
from geometry.order_complexes import colcat_complex, colhel_complex, tver_complex
from geometry.radon_path import radon_path
from geometry.tverberg import enumerate_tverberg_partitions, is_tverberg, rg_tverberg, sarkaria_tensors
from graphs.complexes import independence_complex, matching_complex
from graphs.graph import Hypergraph
from graphs.list_coloring import EDGE_MODE, VERTEX_MODE
from hallcheck.checkers import check_colorful_caratheodory, check_colorful_helly
from hallcheck.witness import extract_domination_witness
from homology.betti import betti_profile
from models.payloads import MODELS, instance_to_payload, parse, parse_assignment, parse_coloring, schema
from reconfig.builders import (loose_walk_graph, rg_bipartite_matching, rg_colorful, rg_complex_matroid,
                               rg_list_coloring, rg_matroid_intersection)
from reconfig.reconfig_graph import ReconfigGraph, analyze, rg_to_payload
from sperner.paths import follow_paths
from sperner.prism import corner_coloring, random_r_sperner_coloring, staircase_triangulation, validate_r_sperner
from sweep.sweep_manager import (FAMILIES, GRAPHS, MATROIDS, SweepManager, graph_items, matroid_items,
                                 tverberg_items)
from utils.exceptions import (CapacityError, ConsistencyError, CounterexampleFound, LookupFailure,
                              StructuralError)
from utils.logger_config import setup_logger

logger = logging.getLogger('reconfig-center')

EXIT_INPUT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_CAPACITY = 3

RG_KINDS = ('colorful', 'complex-matroid', 'matroid-intersection', 'bipartite-matching',
            'list-coloring-vertex', 'list-coloring-edge', 'loose-walk', 'tverberg', 'caratheodory', 'helly')
ETA_KINDS = ('complex', 'independence', 'matching', 'colorful', 'intersection', 'nerve', 'alexander',
             'tver', 'colcat', 'colhel', 'order', 'subdivision')
TVERBERG_MODES = ('partitions', 'rg', 'sarkaria', 'check')


class ReconfigGroup(click.Group):
    """하위 명령 예외를 종료 코드로 바꾸는 click 그룹"""

    def parse_args(self, ctx: click.Context, args: List[str]) -> List[str]:
        try:
            return super().parse_args(ctx, args)
        except click.UsageError as e:
            e.exit_code = EXIT_INPUT_ERROR
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_INPUT_ERROR
            raise
        except CounterexampleFound as e:
            report = envelope({'verdict': e.verdict.to_dict(), 'dump': e.dump}, theorem=e.dump.get('theorem'))
            report['instance_hash'] = e.dump.get('instance_hash')
            emit(report)
            click.echo(f"반례 발견: {e.dump.get('theorem')}", err=True)
            ctx.exit(EXIT_COUNTEREXAMPLE)
        except CapacityError as e:
            logger.warning(f"열거 상한 초과: {str(e)}")
            click.echo(f"열거 상한 초과: {str(e)}", err=True)
            ctx.exit(EXIT_CAPACITY)
        except json.JSONDecodeError as e:
            click.echo(f"JSON 파싱 오류 (줄 {e.lineno}, 열 {e.colno}): {e.msg}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)
        except ValidationError as e:
            click.echo(f"입력 검증 오류: {str(e)}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)
        except (StructuralError, LookupFailure, ConsistencyError, OSError) as e:
            logger.error(f"명령 실행 오류: {str(e)}")
            click.echo(f"오류: {str(e)}", err=True)
            ctx.exit(EXIT_INPUT_ERROR)


def _require(instance: Dict[str, Any], *keys: str) -> None:
    missing = [key for key in keys if key not in instance]
    if missing:
        raise StructuralError(f"입력에 필요한 항목이 없습니다: {missing}")


def _load(path: str) -> Dict[str, Any]:
    return InstanceFactory.from_payload(read_json(path))


def _config(instance: Dict[str, Any]):
    _require(instance, 'points')
    return instance['points']


def _complex_input(path: str):
    payload = read_json(path)
    if 'maximal_faces' in payload:
        return parse('complex', payload)
    instance = InstanceFactory.from_payload(payload)
    _require(instance, 'complex')
    return instance['complex']


def _hypergraph(instance: Dict[str, Any]) -> Hypergraph:
    if 'hypergraph' in instance:
        return instance['hypergraph']
    _require(instance, 'graph')
    return Hypergraph.from_graph(instance['graph'])


def _d(instance: Dict[str, Any]) -> int:
    _require(instance, 'd')
    return instance['d']


def _output(ctx: click.Context, body: Dict[str, Any], theorem: Optional[str] = None, instance: Any = None) -> None:
    emit(envelope(body, theorem=theorem, instance=instance), ctx.obj['format'])


@click.group(cls=ReconfigGroup)
@click.option('--cap', type=int, default=None, help='이번 실행의 전수 열거 상한 (EXHAUSTION_CAP)')
@click.option('--rg-cap', type=int, default=None, help='이번 실행의 RG 후보 구성 상한 (RG_CANDIDATE_CAP)')
@click.option('--format', 'fmt', type=click.Choice(['json']), default='json', show_default=True)
@click.pass_context
def cli(ctx: click.Context, cap: Optional[int], rg_cap: Optional[int], fmt: str):
    """재구성 그래프, 호몰로지 연결도, 위상 Hall 정리 검증 도구"""
    setup_logger()
    if cap is not None:
        settings.EXHAUSTION_CAP = cap
        logger.info(f"전수 열거 상한 변경: {cap}")
    if rg_cap is not None:
        settings.RG_CANDIDATE_CAP = rg_cap
        logger.info(f"RG 후보 구성 상한 변경: {rg_cap}")
    ctx.obj = {'format': fmt}


@cli.command()
@click.option('--input', 'input_path', required=True, help="복합체 JSON 또는 complex/graph 를 담은 인스턴스 ('-' 는 표준 입력)")
@click.pass_context
def homology(ctx: click.Context, input_path: str):
    """축약 Betti 수와 η_H"""
    c = _complex_input(input_path)
    _output(ctx, betti_profile(c).to_dict(), instance=c)


def _derived_complex(kind: str, payload: Dict[str, Any], k: Optional[int]):
    if kind in ('order', 'subdivision'):
        poset = parse('poset', payload)
        return order_complex(poset if kind == 'order' else interval_subdivision(poset))
    instance = InstanceFactory.from_payload(payload)
    if kind == 'complex':
        _require(instance, 'complex')
        return instance['complex']
    if kind == 'independence':
        _require(instance, 'graph')
        return independence_complex(instance['graph'])
    if kind == 'matching':
        return matching_complex(_hypergraph(instance))
    if kind in ('colorful', 'nerve'):
        _require(instance, 'complex', 'partition')
        c, v = instance['complex'], instance['partition']
        if kind == 'nerve':
            return colorful_nerve(c, v)
        return colorful_complex(c, v, k if k is not None else v.n)
    if kind == 'intersection':
        _require(instance, 'complex', 'matroid')
        return intersection_complex(instance['complex'], instance['matroid'],
                                    k if k is not None else instance['matroid'].full_rank)
    if kind == 'alexander':
        _require(instance, 'complex')
        return alexander_dual(instance['complex'])
    if kind == 'tver':
        return tver_complex(_config(instance), instance.get('r', 2))
    if kind == 'colcat':
        _require(instance, 'a_sets', 'x')
        return colcat_complex(instance['a_sets'], instance['x'])
    _require(instance, 'families')
    return colhel_complex(instance['families'], _d(instance))


@cli.command()
@click.option('--input', 'input_path', required=True)
@click.option('--kind', type=click.Choice(ETA_KINDS), default='complex', show_default=True)
@click.option('--k', type=int, default=None, help='Col(C,V;k), Int(C,M;k) 의 k')
@click.pass_context
def eta(ctx: click.Context, input_path: str, kind: str, k: Optional[int]):
    """유도 복합체의 η_H"""
    c = _derived_complex(kind, read_json(input_path), k)
    profile = betti_profile(c)
    _output(ctx, dict(profile.to_dict(), kind=kind, vertices=len(c.ground_set)), instance=c)


def _build_rg(kind: str, instance: Dict[str, Any], k: Optional[int]) -> ReconfigGraph:
    if kind in ('colorful', 'loose-walk'):
        _require(instance, 'complex', 'partition')
        if kind == 'loose-walk':
            return loose_walk_graph(instance['complex'], instance['partition'])
        return rg_colorful(instance['complex'], instance['partition'], k)
    if kind == 'complex-matroid':
        _require(instance, 'complex', 'matroid')
        m = instance['matroid']
        return rg_complex_matroid(instance['complex'], m, k or m.full_rank)
    if kind == 'matroid-intersection':
        _require(instance, 'matroid', 'matroid2')
        return rg_matroid_intersection(instance['matroid'], instance['matroid2'], k or 1)
    if kind == 'bipartite-matching':
        _require(instance, 'a_side')
        return rg_bipartite_matching(_hypergraph(instance), instance['a_side'], k)
    if kind in ('list-coloring-vertex', 'list-coloring-edge'):
        _require(instance, 'lists')
        if kind == 'list-coloring-vertex':
            _require(instance, 'graph')
            return rg_list_coloring(instance['graph'], instance['lists'], VERTEX_MODE)
        return rg_list_coloring(_hypergraph(instance), instance['lists'], EDGE_MODE)
    if kind == 'tverberg':
        return rg_tverberg(_config(instance), instance.get('r', 2))
    if kind == 'caratheodory':
        _require(instance, 'a_sets', 'x')
        return rg_colorful_caratheodory(instance['a_sets'], instance['x'])
    _require(instance, 'families')
    return rg_colorful_helly(instance['families'], _d(instance))


@cli.command()
@click.option('--input', 'input_path', required=True)
@click.option('--kind', type=click.Choice(RG_KINDS), default='colorful', show_default=True)
@click.option('--k', type=int, default=None, help='구성 크기 (기본값: 종류별 최대)')
@click.option('--diameter', is_flag=True, default=False, help='연결이면 지름도 계산')
@click.pass_context
def rg(ctx: click.Context, input_path: str, kind: str, k: Optional[int], diameter: bool):
    """재구성 그래프 생성과 연결 요소 분석"""
    instance = _load(input_path)
    graph = _build_rg(kind, instance, k)
    body = rg_to_payload(graph)
    if diameter:
        body['diameter'] = analyze(graph, with_diameter=True).diameter
    _output(ctx, dict(body, kind=kind), instance=instance)


@cli.command()
@click.option('--theorem', required=True, help='정리 ID (예: reconfig-hall)')
@click.option('--input', 'input_path', default=None, help='인스턴스 JSON 파일')
@click.option('--generator', default=None, help='생성기 이름 (input 대신)')
@click.option('--params', default='{}', help='생성기 파라미터 JSON')
@click.option('--seed', type=int, default=None, help='생성기 시드')
@click.option('--oracle/--no-oracle', default=True, show_default=True, help='오라클로 결론까지 확인')
@click.option('--m', type=int, default=None)
@click.option('--d', type=int, default=None)
@click.option('--k', type=int, default=None)
@click.option('--delta', type=int, default=None)
@click.option('--r', type=int, default=None)
@click.option('--output', default=None, help='보고서 저장 경로')
@click.pass_context
def check(ctx: click.Context, theorem: str, input_path: Optional[str], generator: Optional[str], params: str,
          seed: Optional[int], oracle: bool, m: Optional[int], d: Optional[int], k: Optional[int],
          delta: Optional[int], r: Optional[int], output: Optional[str]):
    """정리 가설 평가와 오라클 검증"""
    if (input_path is None) == (generator is None):
        raise click.UsageError("--input 과 --generator 중 정확히 하나를 지정해야 합니다")
    generator_params = json.loads(params)
    if seed is not None:
        generator_params['seed'] = seed
    experiment = {
        'theorem': theorem,
        'source': 'file' if input_path is not None else 'generator',
        'input': input_path,
        'generator': generator,
        'params': generator_params,
        'oracle': oracle,
        'output': output,
        'extra': {'m': m, 'd': d, 'k': k, 'delta': delta, 'r': r},
    }
    emit(ExperimentCenter().run(experiment), ctx.obj['format'])


@cli.command()
@click.option('--input', 'input_path', required=True, help='graph 와 partition 을 담은 인스턴스')
@click.pass_context
def witness(ctx: click.Context, input_path: str):
    """RG(I(G), V) 가 끊어진 경우 강지배 증거 (I, D) 추출"""
    instance = _load(input_path)
    _require(instance, 'graph', 'partition')
    result = extract_domination_witness(instance['graph'], instance['partition'])
    _output(ctx, result.to_dict(), instance=instance)


@cli.command()
@click.option('--input', 'input_path', required=True, help='points (와 선택적 r) 를 담은 인스턴스')
@click.option('--r', type=int, default=None)
@click.option('--mode', type=click.Choice(TVERBERG_MODES), default='rg', show_default=True)
@click.option('--assignment', 'assignment_path', default=None, help='check 모드의 배정 JSON')
@click.pass_context
def tverberg(ctx: click.Context, input_path: str, r: Optional[int], mode: str, assignment_path: Optional[str]):
    """순서 Tverberg 분할 열거, 판정, RG_Tv, Sarkaria 텐서"""
    instance = _load(input_path)
    config = _config(instance)
    parts = r if r is not None else instance.get('r', 2)
    if mode == 'partitions':
        partitions = enumerate_tverberg_partitions(config, parts)
        body = {'count': len(partitions), 'partitions': [p.to_dict(config) for p in partitions]}
    elif mode == 'rg':
        body = rg_to_payload(rg_tverberg(config, parts))
    elif mode == 'sarkaria':
        body = {'tensors': sarkaria_tensors(config, parts)}
    else:
        if assignment_path is None:
            raise click.UsageError("check 모드에는 --assignment 가 필요합니다")
        partition = parse_assignment(config, read_json(assignment_path))
        result = is_tverberg(config, partition)
        body = {'partition': partition.to_dict(config), 'is_tverberg': result.is_tverberg, 'point': result.point}
    _output(ctx, dict(body, mode=mode, r=parts), instance=instance)


@cli.command('radon-path')
@click.option('--input', 'input_path', required=True, help='points 를 담은 인스턴스 (|X| ≥ d + 3)')
@click.option('--p', 'p_path', required=True, help='시작 Radon 분할 배정 JSON')
@click.option('--q', 'q_path', required=True, help='끝 Radon 분할 배정 JSON')
@click.pass_context
def radon_path_command(ctx: click.Context, input_path: str, p_path: str, q_path: str):
    """두 순서 Radon 분할 사이의 RG_Tv(X, 2) 보행"""
    instance = _load(input_path)
    config = _config(instance)
    p = parse_assignment(config, read_json(p_path))
    q = parse_assignment(config, read_json(q_path))
    path = radon_path(config, p, q)
    _output(ctx, dict(path.to_dict(config), length=len(path.partitions) - 1), instance=instance)


@cli.command()
@click.option('--input', 'input_path', required=True, help='a_sets 와 x 를 담은 인스턴스')
@click.option('--m', type=int, default=1, show_default=True)
@click.pass_context
def caratheodory(ctx: click.Context, input_path: str, m: int):
    """컬러풀 Carathéodory 가설과 RG_CC"""
    instance = _load(input_path)
    _require(instance, 'a_sets', 'x')
    report = check_colorful_caratheodory(instance['a_sets'], instance['x'], m)
    graph = rg_colorful_caratheodory(instance['a_sets'], instance['x'])
    _output(ctx, {'hypothesis': report.to_dict(), 'rg': rg_to_payload(graph)},
            theorem=report.theorem_id, instance=instance)


@cli.command()
@click.option('--input', 'input_path', required=True, help='families 와 d 를 담은 인스턴스')
@click.option('--m', type=int, default=1, show_default=True)
@click.pass_context
def helly(ctx: click.Context, input_path: str, m: int):
    """컬러풀 Helly 가설과 RG_CH"""
    instance = _load(input_path)
    _require(instance, 'families')
    d = _d(instance)
    report = check_colorful_helly(instance['families'], d, m)
    graph = rg_colorful_helly(instance['families'], d)
    _output(ctx, {'hypothesis': report.to_dict(), 'rg': rg_to_payload(graph)},
            theorem=report.theorem_id, instance=instance)


@cli.command()
@click.option('--n', type=int, default=1, show_default=True, help='밑면 단체의 차원')
@click.option('--subdivisions', type=int, default=1, show_default=True, help='높이 방향 층 수')
@click.option('--base-subdivisions', type=int, default=1, show_default=True, help='밑면 Freudenthal 분할 수')
@click.option('--seed', type=int, default=None, help='랜덤 R-Sperner 색칠 시드 (없으면 꼭짓점 색칠)')
@click.option('--triangulation', 'triangulation_path', default=None, help='삼각분할 JSON (생성 대신)')
@click.option('--coloring', 'coloring_path', default=None, help='색칠 JSON')
@click.option('--with-triangulation', is_flag=True, default=False, help='보고서에 삼각분할 포함')
@click.pass_context
def sperner(ctx: click.Context, n: int, subdivisions: int, base_subdivisions: int, seed: Optional[int],
            triangulation_path: Optional[str], coloring_path: Optional[str], with_triangulation: bool):
    """프리즘 R-Sperner 경로 추적"""
    if triangulation_path is not None:
        t = parse('triangulation', read_json(triangulation_path))
    else:
        t = staircase_triangulation(n, subdivisions, base_subdivisions)
    if coloring_path is not None:
        coloring = parse_coloring(read_json(coloring_path))
    elif seed is not None:
        coloring = random_r_sperner_coloring(t, seed)
    else:
        coloring = corner_coloring(t)
    validation = validate_r_sperner(t, coloring)
    body: Dict[str, Any] = {'validation': validation.to_dict()}
    if validation.valid:
        body['paths'] = follow_paths(t, coloring).to_dict()
    if with_triangulation:
        body['triangulation'] = t.to_dict()
    _output(ctx, body, instance={'triangulation': t, 'coloring': coloring})


def _parse_sizes(value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError as e:
        raise click.BadParameter(f"쉼표로 구분한 정수여야 합니다: {value}") from e


@cli.command()
@click.option('--kind', required=True, help='생성기 이름 (grid, kdd_single_class, random_points, ...)')
@click.option('--r', type=int, default=None)
@click.option('--n', type=int, default=None)
@click.option('--d', type=int, default=None)
@click.option('--delta', type=int, default=None)
@click.option('--p', default=None, help="간선 확률 (예: '1/2')")
@click.option('--a', type=int, default=None)
@click.option('--b', type=int, default=None)
@click.option('--edges', type=int, default=None, help='랜덤 하이퍼그래프의 간선 수')
@click.option('--sizes', default=None, help="클래스 크기 (예: '2,2,3')")
@click.option('--seed', type=int, default=None)
@click.pass_context
def gen(ctx: click.Context, kind: str, r: Optional[int], n: Optional[int], d: Optional[int], delta: Optional[int],
        p: Optional[str], a: Optional[int], b: Optional[int], edges: Optional[int], sizes: Optional[str],
        seed: Optional[int]):
    """시드 고정 인스턴스 생성 (check --input 으로 다시 읽을 수 있는 JSON)"""
    params = {'r': r, 'n': n, 'd': d, 'delta': delta, 'p': p, 'a': a, 'b': b, 'm': edges,
              'sizes': _parse_sizes(sizes), 'seed': seed}
    instance = InstanceFactory.generate_instance(kind, {k: v for k, v in params.items() if v is not None})
    emit(envelope(instance_to_payload(instance), instance=instance), ctx.obj['format'])


@cli.command()
@click.option('--family', type=click.Choice(FAMILIES), default=GRAPHS, show_default=True)
@click.option('--theorem', required=True)
@click.option('--max-vertices', type=int, default=4, show_default=True)
@click.option('--classes', type=int, default=2, show_default=True, help='최대 클래스 수')
@click.option('--class-size', type=int, default=3, show_default=True, help='클래스 최대 크기')
@click.option('--max-elements', type=int, default=4, show_default=True)
@click.option('--d', type=int, default=1, show_default=True)
@click.option('--r', type=int, default=2, show_default=True)
@click.option('--seeds', type=int, default=10, show_default=True)
@click.option('--n', type=int, default=None, help='tverberg 점 개수 (기본값: 임계 크기)')
@click.option('--m', type=int, default=None)
@click.option('--workers', type=int, default=None, help='프로세스 수 (기본값: SWEEP_WORKERS)')
@click.option('--chunk-size', type=int, default=None)
@click.pass_context
def sweep(ctx: click.Context, family: str, theorem: str, max_vertices: int, classes: int, class_size: int,
          max_elements: int, d: int, r: int, seeds: int, n: Optional[int], m: Optional[int],
          workers: Optional[int], chunk_size: Optional[int]):
    """전수/랜덤 스윕과 판정 요약표"""
    if family == GRAPHS:
        items = graph_items(max_vertices, classes, class_size)
    elif family == MATROIDS:
        items = matroid_items(max_elements)
    else:
        items = tverberg_items(d, r, seeds, n)
    extra = {'m': m} if m is not None else {}
    report = SweepManager(workers, chunk_size).run(family, theorem, items, extra)
    emit(report, ctx.obj['format'])


@cli.command('schema')
@click.argument('kind', type=click.Choice(sorted(MODELS)))
@click.pass_context
def schema_command(ctx: click.Context, kind: str):
    """페이로드 종류의 JSON 스키마"""
    emit(schema(kind), ctx.obj['format'])


def run(argv: Optional[Sequence[str]] = None) -> int:
    """명령줄 진입점

    Returns:
        int: 종료 코드 (0 성공, 1 입력 오류, 2 반례, 3 열거 상한 초과)
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name='reconfig',
                          standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return EXIT_INPUT_ERROR
    return result if isinstance(result, int) else 0
