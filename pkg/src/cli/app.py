"""
Command Line Application - 命令行应用

以 JSON 文档为接口的命令行前端。所有读取复形的命令默认读标准输入（-），
结果写到标准输出；日志写到标准错误。

退出码：0 成功；1 领域错误（标准错误输出错误文档）；2 用法或 IO 错误。
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from ..core import (
    attach_cone_over_join, barycentric_subdivide, betti_Q, blowup_stratum, blowup_trivial,
    collapse_coned_join, collapses_to, collapsible_search, equivariant_collapse, free_pairs,
    greedy_collapse, homology_Z, is_isomorphic, is_Q_acyclic, match_cells, mmp_collapse,
    mmp_program, replay, stellar_subdivide, summary, verify
)
from ..core.complex_ops import fresh_label
from ..data import catalog, dual_complex, strata_of
from ..data.serializer import (
    action_from_dict, attachment_from_dict, complex_from_dict, complex_to_dict, dumps,
    homology_to_dict, loads, mmp_from_dict, record_from_dict, record_to_dict, report_to_dict,
    resolve_cell, sequence_from_dict, sequence_to_dict, strata_from_dict, strata_to_dict,
    verdict_to_dict
)
from ..exceptions import DualComplexError
from ..models import CellRef, CollapseSequence, Complex

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# 输入输出
# ----------------------------------------------------------------------

def read_document(path: str) -> Dict[str, Any]:
    """读取 JSON 文档；- 表示标准输入"""
    if path == '-':
        text = sys.stdin.read()
    else:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    return loads(text)


def read_complex(path: str) -> Complex:
    return complex_from_dict(read_document(path))


def write_document(document: Dict[str, Any], path: Optional[str] = None) -> None:
    """写出规范文档；未指定路径时写标准输出"""
    text = dumps(document)
    if path is None or path == '-':
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)


def parse_cell_ref(token: str) -> CellRef:
    """命令行胞腔引用："12" 表示标识，"A1,A2" 表示顶点集"""
    if token.isdigit():
        return token
    return [label for label in token.split(',') if label]


def envelope(cx: Complex, **extra: Any) -> Dict[str, Any]:
    document = {'complex': complex_to_dict(cx)}
    document.update(extra)
    return document


# ----------------------------------------------------------------------
# 子命令
# ----------------------------------------------------------------------

def cmd_build(args: argparse.Namespace) -> int:
    """分层描述 -> 对偶复形"""
    cx = dual_complex(strata_from_dict(read_document(args.strata)))
    write_document(complex_to_dict(cx))
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    write_document(complex_to_dict(catalog(args.name)))
    return 0


def cmd_subdivide(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    if args.barycentric:
        result = barycentric_subdivide(cx)
    else:
        cell_id = resolve_cell(cx, parse_cell_ref(args.stellar))
        center = args.center or fresh_label(cx, f"p{cell_id}")
        result = stellar_subdivide(cx, cell_id, center)
    write_document(complex_to_dict(result))
    return 0


def cmd_blowup(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    if args.stratum is not None:
        cell_id = resolve_cell(cx, parse_cell_ref(args.stratum))
        center = args.center or fresh_label(cx, f"p{cell_id}")
        write_document(complex_to_dict(blowup_stratum(cx, cell_id, center)))
        return 0
    if args.trivial:
        write_document(complex_to_dict(blowup_trivial(cx)))
        return 0

    params = attachment_from_dict(cx, read_document(args.cone))
    result, record = attach_cone_over_join(cx, **params)
    if args.record_out:
        write_document(record_to_dict(record), args.record_out)
    write_document(envelope(result, record=record_to_dict(record)))
    return 0


def cmd_collapse(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    verdict = None
    extra: Dict[str, Any] = {}

    if args.mmp:
        instruction, steps = mmp_from_dict(cx, read_document(args.mmp))
        if instruction is not None:
            result, sequence = mmp_collapse(cx, instruction)
        else:
            result, step_results = mmp_program(cx, steps)
            sequence = CollapseSequence()
            extra['steps'] = [r.model_dump(mode='json', exclude={'sequence'}) for r in step_results]
            for r in step_results:
                if r.sequence is not None:
                    sequence = sequence.extend(r.sequence)
    elif args.search or args.to:
        if args.to:
            target = match_cells(cx, read_complex(args.to))
            verdict = collapses_to(cx, target, args.budget)
        else:
            verdict = collapsible_search(cx, args.budget)
        sequence = verdict.sequence or CollapseSequence()
        result = replay(cx, sequence)
    elif args.replay:
        sequence = sequence_from_dict(read_document(args.replay))
        result = replay(cx, sequence)
    elif args.coned_join:
        result, sequence = collapse_coned_join(cx, record_from_dict(read_document(args.coned_join)))
    elif args.equivariant:
        action, instructions = action_from_dict(cx, read_document(args.equivariant))
        result, sequence = equivariant_collapse(cx, action, instructions)
    else:
        result, sequence = greedy_collapse(cx)

    if args.sequence_out:
        write_document(sequence_to_dict(sequence), args.sequence_out)
    document = envelope(result, sequence=sequence_to_dict(sequence), **extra)
    if verdict is not None:
        document['verdict'] = verdict_to_dict(verdict)
    write_document(document)
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    if args.over == 'q':
        document = report_to_dict(
            over='q', reduced=args.reduced, betti=betti_Q(cx, args.reduced), q_acyclic=is_Q_acyclic(cx)
        )
    else:
        document = homology_to_dict(homology_Z(cx, args.reduced), 'z')
    write_document(document)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    violations = verify(cx)
    write_document(report_to_dict(valid=not violations, violations=violations, summary=summary(cx)))
    return 0 if not violations else 1


def cmd_iso(args: argparse.Namespace) -> int:
    """同构时退出码 0，不同构时 1"""
    a, b = read_complex(args.a), read_complex(args.b)
    vertex_map = is_isomorphic(a, b)
    if vertex_map is None:
        write_document(report_to_dict(isomorphic=False))
        return 1
    write_document(report_to_dict(isomorphic=True, vertex_map=vertex_map))
    return 0


def cmd_strata(args: argparse.Namespace) -> int:
    write_document(strata_to_dict(strata_of(read_complex(args.input))))
    return 0


def cmd_info(args: argparse.Namespace) -> int:
    cx = read_complex(args.input)
    document = report_to_dict(**summary(cx), free_pairs=len(free_pairs(cx)))
    write_document(document)
    return 0


# ----------------------------------------------------------------------
# 解析器
# ----------------------------------------------------------------------

def create_parser() -> argparse.ArgumentParser:
    """创建命令行解析器"""
    parser = argparse.ArgumentParser(prog='dualcx', description='对偶复形的构造、细分、塌缩与同调')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('build', help='由分层描述构造对偶复形')
    p.add_argument('strata', nargs='?', default='-')
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser('catalog', help='输出目录中的复形')
    p.add_argument('name')
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser('subdivide', help='星形细分或重心细分')
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument('--stellar', metavar='CELL', help='胞腔标识或逗号分隔的顶点集')
    mode.add_argument('--barycentric', action='store_true')
    p.add_argument('--center', help='细分中心的顶点标签')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_subdivide)

    p = sub.add_parser('blowup', help='按爆破规则修改对偶复形')
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument('--stratum', metavar='CELL')
    mode.add_argument('--trivial', action='store_true')
    mode.add_argument('--cone', metavar='ATTACHMENT')
    p.add_argument('--center', help='规则 1 的新顶点标签')
    p.add_argument('--record-out', metavar='PATH')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_blowup)

    p = sub.add_parser('collapse', help='塌缩')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--greedy', action='store_true')
    mode.add_argument('--mmp', metavar='INSTRUCTION')
    mode.add_argument('--search', action='store_true')
    mode.add_argument('--to', metavar='TARGET')
    mode.add_argument('--replay', metavar='SEQUENCE')
    mode.add_argument('--coned-join', metavar='RECORD')
    mode.add_argument('--equivariant', metavar='ACTION')
    p.add_argument('--budget', type=int, default=None)
    p.add_argument('--sequence-out', metavar='PATH')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_collapse)

    p = sub.add_parser('homology', help='同调')
    p.add_argument('--reduced', action='store_true')
    p.add_argument('--over', choices=['z', 'q'], default='z')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser('verify', help='校验复形')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('iso', help='同构判定')
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser('strata', help='复形的分层描述')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser('info', help='复形概要')
    p.add_argument('input', nargs='?', default='-')
    p.set_defaults(handler=cmd_info)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """执行命令并返回退出码"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        return args.handler(args)
    except DualComplexError as e:
        logger.debug(f"{e.name}: {e.message}")
        sys.stderr.write(dumps(e.to_dict()))
        return 1
    except (OSError, ValueError) as e:
        # JSONDecodeError 与 UnicodeDecodeError 都是 ValueError
        sys.stderr.write(f"dualcx: {e}\n")
        return 2
