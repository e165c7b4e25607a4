"""
Serializer - 文档序列化模块

复形、分层描述、塌缩序列、指令、群作用与粘贴记录的 JSON 读写。
输出为规范形式：UTF-8、键排序、两空格缩进、以换行结尾。
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from config import get_config
from ..core.complex_ops import add_vertex, from_maximal_simplices
from ..exceptions import Ambiguous, InvalidDocument, UnknownCell, UnsupportedVersion
from ..models import (
    ActionDocument, AttachmentDocument, AttachmentRecord, CellId, CellRef, CollapseSequence,
    Complex, ComplexBuilder, ComplexDocument, FreePair, GroupAction, HomologyResult,
    InstructionDocument, MmpDocument, MmpInstruction, MmpStep, MmpStepKind,
    SequenceDocument, StrataDescriptor, Verdict
)

logger = logging.getLogger(__name__)

ModelT = TypeVar('ModelT', bound=BaseModel)


def dumps(document: Dict[str, Any]) -> str:
    """规范打印"""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Dict[str, Any]:
    """解析 JSON 文本（解析失败由调用方按 IO 错误处理）"""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise InvalidDocument("文档必须是 JSON 对象", {'type': type(data).__name__})
    return data


def unwrap(data: Dict[str, Any], key: str = 'complex') -> Dict[str, Any]:
    """接受裸文档或 {"complex": ...} 信封"""
    inner = data.get(key)
    return inner if isinstance(inner, dict) else data


def _validate(model: Type[ModelT], data: Dict[str, Any]) -> ModelT:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InvalidDocument(f"{model.__name__} 格式错误", {'errors': e.errors(include_url=False)}) from e


def _check_version(version: Optional[int]) -> None:
    if version is None:
        raise InvalidDocument("缺少 format_version", {})
    if version != get_config().FORMAT_VERSION:
        raise UnsupportedVersion(f"不支持的格式版本 {version}", {'format_version': version})


def _canonical_int(token: str) -> bool:
    return token.isdigit() and str(int(token)) == token


# ----------------------------------------------------------------------
# 复形
# ----------------------------------------------------------------------

def complex_to_dict(cx: Complex) -> Dict[str, Any]:
    """复形文档（全部胞腔，含 0 维胞腔）"""
    return {
        'format_version': get_config().FORMAT_VERSION,
        'vertices': cx.vertices,
        'cells': [
            {
                'id': str(cid),
                'vertices': list(cx.cells[cid].vertices),
                'facets': [str(f) for f in cx.cells[cid].facets],
            }
            for cid in cx.ids()
        ],
        'next_id': cx.next_id,
    }


def complex_from_dict(data: Dict[str, Any]) -> Complex:
    """解析复形文档

    标识全是规范整数时保留原标识，否则按文档顺序重新编号；
    面引用先按文档标识解析，再按顶点标签解析（对应省略的 0 维胞腔）。
    """
    doc = _validate(ComplexDocument, unwrap(data))
    _check_version(doc.format_version)

    if doc.maximal_simplices is not None:
        if doc.cells:
            raise InvalidDocument("cells 与 maximal_simplices 不能同时给出", {})
        try:
            cx = from_maximal_simplices(doc.maximal_simplices)
        except ValueError as e:
            raise InvalidDocument(str(e), {}) from e
        for label in sorted(set(doc.vertices) - set(cx.vertex_cells)):
            cx = add_vertex(cx, label)
        return cx

    if all(_canonical_int(entry.id) for entry in doc.cells):
        ids = {entry.id: int(entry.id) for entry in doc.cells}
    else:
        ids = {entry.id: i for i, entry in enumerate(doc.cells)}
    if len(ids) != len(doc.cells):
        raise InvalidDocument("胞腔标识重复", {})
    next_free = max(ids.values(), default=-1) + 1

    builder = ComplexBuilder()
    entries = sorted(doc.cells, key=lambda e: (len(e.vertices), ids[e.id]))
    vertex_ids: Dict[str, CellId] = {}
    for entry in entries:
        if not entry.vertices:
            raise InvalidDocument(f"胞腔 {entry.id} 没有顶点", {'cell': entry.id})
        if len(entry.vertices) == 1:
            if entry.facets:
                raise InvalidDocument(f"0 维胞腔 {entry.id} 不能有面", {'cell': entry.id})
            vertex_ids[entry.vertices[0]] = builder.add_vertex(entry.vertices[0], ids[entry.id])
    for label in sorted(set(doc.vertices) - set(vertex_ids)):
        vertex_ids[label] = builder.add_vertex(label, next_free)
        next_free += 1

    def resolve(ref: str) -> CellId:
        if ref in ids:
            return ids[ref]
        if ref in vertex_ids:
            return vertex_ids[ref]
        raise UnknownCell(f"面引用 {ref} 无法解析", {'ref': ref})

    for entry in entries:
        if len(entry.vertices) > 1:
            builder.add_cell(entry.vertices, [resolve(ref) for ref in entry.facets], ids[entry.id])

    cx = builder.freeze()
    if doc.next_id is not None:
        if doc.next_id < cx.next_id:
            raise InvalidDocument(f"next_id {doc.next_id} 小于已用标识", {'next_id': doc.next_id})
        cx = Complex(vertex_cells=cx.vertex_cells, cells=cx.cells, next_id=doc.next_id)
    logger.debug(f"解析复形: {len(cx)} 个胞腔")
    return cx


def resolve_cell(cx: Complex, ref: CellRef) -> CellId:
    """胞腔引用：标识字符串或顶点标签列表"""
    if isinstance(ref, str):
        if not _canonical_int(ref) or int(ref) not in cx.cells:
            raise UnknownCell(f"胞腔 {ref} 不存在", {'cell': ref})
        return int(ref)
    candidates = cx.find(ref)
    if not candidates:
        raise UnknownCell(f"没有顶点集为 {sorted(ref)} 的胞腔", {'vertices': sorted(ref)})
    if len(candidates) > 1:
        raise Ambiguous(
            f"顶点集 {sorted(ref)} 对应多个胞腔，请用标识引用",
            {'vertices': sorted(ref), 'candidates': candidates}
        )
    return candidates[0]


# ----------------------------------------------------------------------
# 分层描述
# ----------------------------------------------------------------------

def strata_to_dict(descriptor: StrataDescriptor) -> Dict[str, Any]:
    data = descriptor.model_dump(mode='json')
    data['format_version'] = get_config().FORMAT_VERSION
    return data


def strata_from_dict(data: Dict[str, Any]) -> StrataDescriptor:
    descriptor = _validate(StrataDescriptor, data)
    _check_version(descriptor.format_version)
    return descriptor


# ----------------------------------------------------------------------
# 塌缩序列与指令
# ----------------------------------------------------------------------

def sequence_to_dict(sequence: CollapseSequence) -> Dict[str, Any]:
    return {
        'format_version': get_config().FORMAT_VERSION,
        'pairs': [{'coface': str(p.coface), 'face': str(p.face)} for p in sequence.pairs],
        'orbits': list(sequence.orbits),
    }


def sequence_from_dict(data: Dict[str, Any]) -> CollapseSequence:
    doc = _validate(SequenceDocument, unwrap(data, 'sequence'))
    _check_version(doc.format_version)
    pairs = []
    for entry in doc.pairs:
        if not (_canonical_int(entry.coface) and _canonical_int(entry.face)):
            raise InvalidDocument("序列中的胞腔必须是标识", {'pair': entry.model_dump()})
        pairs.append(FreePair(coface=int(entry.coface), face=int(entry.face)))
    return CollapseSequence(pairs=pairs, orbits=doc.orbits)


def _instruction(cx: Complex, doc: InstructionDocument) -> MmpInstruction:
    return MmpInstruction(v0=doc.v0, contracted=[resolve_cell(cx, ref) for ref in doc.contracted])


def mmp_from_dict(cx: Complex, data: Dict[str, Any]) -> Tuple[Optional[MmpInstruction], List[MmpStep]]:
    """单条指令返回 (指令, [])；程序返回 (None, 步骤列表)"""
    doc = _validate(MmpDocument, data)
    _check_version(doc.format_version)
    if doc.steps is None:
        if doc.v0 is None:
            raise InvalidDocument("指令缺少 v0", {})
        return _instruction(cx, InstructionDocument(v0=doc.v0, contracted=doc.contracted)), []

    steps = []
    for entry in doc.steps:
        try:
            kind = MmpStepKind(entry.kind)
        except ValueError as e:
            raise InvalidDocument(f"未知的步骤类型 {entry.kind}", {'kind': entry.kind}) from e
        if kind == MmpStepKind.COLLAPSE:
            if entry.instruction is None:
                raise InvalidDocument("collapse 步骤缺少 instruction", {})
            steps.append(MmpStep(kind=kind, instruction=_instruction(cx, entry.instruction)))
        else:
            if entry.cell is None:
                raise InvalidDocument("remove 步骤缺少 cell", {})
            steps.append(MmpStep(kind=kind, cell=resolve_cell(cx, entry.cell)))
    return None, steps


def action_from_dict(cx: Complex, data: Dict[str, Any]) -> Tuple[GroupAction, Optional[List[MmpInstruction]]]:
    """群作用文档；附带指令时返回指令列表"""
    doc = _validate(ActionDocument, data)
    _check_version(doc.format_version)
    cell_maps = [
        {resolve_cell(cx, k): resolve_cell(cx, v) for k, v in entry.items()}
        for entry in doc.cell_maps
    ]
    action = GroupAction(generators=doc.generators, cell_maps=cell_maps)
    if doc.instructions is None:
        return action, None
    return action, [_instruction(cx, entry) for entry in doc.instructions]


def attachment_from_dict(cx: Complex, data: Dict[str, Any]) -> Dict[str, Any]:
    """锥-联结粘贴参数，可直接传给 attach_cone_over_join"""
    doc = _validate(AttachmentDocument, data)
    _check_version(doc.format_version)
    link = Complex()
    if doc.link is not None:
        # 内嵌的 L 可以省略版本号
        link_data = doc.link.model_dump()
        if link_data['format_version'] is None:
            link_data['format_version'] = get_config().FORMAT_VERSION
        link = complex_from_dict(link_data)
    image_cells = {}
    for key, ref in doc.image_cells.items():
        image_cells[resolve_cell(link, key)] = resolve_cell(cx, ref)
    return {
        'cell_id': resolve_cell(cx, doc.cell),
        'link': link,
        'tau': doc.tau,
        'apex': doc.apex,
        'image_cells': image_cells,
    }


# ----------------------------------------------------------------------
# 结果文档
# ----------------------------------------------------------------------

def record_to_dict(record: AttachmentRecord) -> Dict[str, Any]:
    data = record.model_dump(mode='json')
    data['format_version'] = get_config().FORMAT_VERSION
    return data


def record_from_dict(data: Dict[str, Any]) -> AttachmentRecord:
    inner = unwrap(data, 'record')
    _check_version(inner.get('format_version'))
    return _validate(AttachmentRecord, inner)


def homology_to_dict(result: HomologyResult, over: str) -> Dict[str, Any]:
    data = result.model_dump(mode='json')
    data['over'] = over
    data['format_version'] = get_config().FORMAT_VERSION
    return data


def report_to_dict(**fields: Any) -> Dict[str, Any]:
    """命令行报告文档（校验、同构、概要、有理同调），带版本号"""
    data = {'format_version': get_config().FORMAT_VERSION}
    data.update(fields)
    return data


def verdict_to_dict(verdict: Verdict) -> Dict[str, Any]:
    return {
        'kind': verdict.kind.value,
        'nodes': verdict.nodes,
        'sequence': sequence_to_dict(verdict.sequence) if verdict.sequence is not None else None,
    }


__all__ = [
    'dumps', 'loads', 'unwrap', 'complex_to_dict', 'complex_from_dict', 'resolve_cell',
    'strata_to_dict', 'strata_from_dict', 'sequence_to_dict', 'sequence_from_dict',
    'mmp_from_dict', 'action_from_dict', 'attachment_from_dict', 'record_to_dict',
    'record_from_dict', 'homology_to_dict', 'verdict_to_dict',
]
