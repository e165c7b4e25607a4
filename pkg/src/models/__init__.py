"""
Models module - 数据模型模块

定义对偶复形工具的数据模型和结构。

主要包含：
- Cell / Complex: 胞腔与单纯偏序集
- StrataDescriptor: 分层描述（对偶复形的输入编码）
- FreePair / CollapseSequence / MmpInstruction / GroupAction / Verdict: 塌缩相关模型
- BoundaryMatrix / HomologyResult: 同调模型
- AttachmentRecord / LinkResult / BlowupStep: 细分与爆破记录
"""

from .cell import Cell, CellId, VertexLabel
from .complex import Complex, ComplexBuilder
from .strata import DivisorId, Stratum, ParentLink, StrataDescriptor
from .collapse_models import (
    FreePair,
    CollapseSequence,
    MmpInstruction,
    MmpStep,
    MmpStepKind,
    MmpStepResult,
    GroupAction,
    Verdict,
    VerdictKind
)
from .homology_models import BoundaryMatrix, HomologyResult
from .documents import (
    CellRef,
    CellEntry,
    ComplexDocument,
    PairEntry,
    SequenceDocument,
    InstructionDocument,
    MmpStepDocument,
    MmpDocument,
    ActionDocument,
    AttachmentDocument
)
from .attachment import (
    GluedCell,
    AttachmentRecord,
    LinkResult,
    BlowupKind,
    BlowupStep,
    BlowupReport
)

__all__ = [
    # Complex models
    'Cell',
    'CellId',
    'VertexLabel',
    'Complex',
    'ComplexBuilder',

    # Strata models
    'DivisorId',
    'Stratum',
    'ParentLink',
    'StrataDescriptor',

    # Collapse models
    'FreePair',
    'CollapseSequence',
    'MmpInstruction',
    'MmpStep',
    'MmpStepKind',
    'MmpStepResult',
    'GroupAction',
    'Verdict',
    'VerdictKind',

    # Homology models
    'BoundaryMatrix',
    'HomologyResult',

    # Subdivision records
    'GluedCell',
    'AttachmentRecord',
    'LinkResult',
    'BlowupKind',
    'BlowupStep',
    'BlowupReport',

    # Documents
    'CellRef',
    'CellEntry',
    'ComplexDocument',
    'PairEntry',
    'SequenceDocument',
    'InstructionDocument',
    'MmpStepDocument',
    'MmpDocument',
    'ActionDocument',
    'AttachmentDocument',
]
