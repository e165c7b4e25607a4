"""
Document Models - 交换文档模型

命令行读写的 JSON 文档结构。胞腔引用可以写成标识字符串，
也可以写成顶点标签列表（在复形中按顶点集查找）。
"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

# 胞腔引用："12" 或 ["A1", "A2"]
CellRef = Union[str, List[str]]


class CellEntry(BaseModel):
    """复形文档中的一个胞腔"""

    id: str = Field(..., description="胞腔标识")
    vertices: List[str] = Field(..., description="顶点标签")
    facets: List[str] = Field(default_factory=list, description="与排序后顶点对齐的面标识")


class ComplexDocument(BaseModel):
    """复形文档；maximal_simplices 只用于输入"""

    format_version: Optional[int] = None
    vertices: List[str] = Field(default_factory=list)
    cells: List[CellEntry] = Field(default_factory=list)
    next_id: Optional[int] = Field(None, description="下一个可用标识（保留已删除胞腔的标识不被复用）")
    maximal_simplices: Optional[List[List[str]]] = None


class PairEntry(BaseModel):
    coface: str
    face: str


class SequenceDocument(BaseModel):
    """塌缩序列文档"""

    format_version: Optional[int] = None
    pairs: List[PairEntry] = Field(default_factory=list)
    orbits: List[int] = Field(default_factory=list)


class InstructionDocument(BaseModel):
    """MMP 指令文档"""

    v0: str
    contracted: List[CellRef] = Field(default_factory=list)


class MmpStepDocument(BaseModel):
    """MMP 程序的一步：collapse 带指令，remove 带胞腔"""

    kind: str
    instruction: Optional[InstructionDocument] = None
    cell: Optional[CellRef] = None


class MmpDocument(BaseModel):
    """单条指令或整段程序"""

    format_version: Optional[int] = None
    v0: Optional[str] = None
    contracted: List[CellRef] = Field(default_factory=list)
    steps: Optional[List[MmpStepDocument]] = None


class ActionDocument(BaseModel):
    """群作用文档；instructions 非空时使用指令模式"""

    format_version: Optional[int] = None
    generators: List[Dict[str, str]] = Field(default_factory=list)
    cell_maps: List[Dict[str, str]] = Field(default_factory=list)
    instructions: Optional[List[InstructionDocument]] = None


class AttachmentDocument(BaseModel):
    """锥-联结粘贴输入"""

    format_version: Optional[int] = None
    cell: CellRef
    link: Optional[ComplexDocument] = None
    tau: Dict[str, str] = Field(default_factory=dict)
    apex: Optional[str] = None
    image_cells: Dict[str, CellRef] = Field(default_factory=dict)
