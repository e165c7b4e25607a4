"""
Collapse Models - 塌缩相关模型

定义自由对、塌缩序列（可重放的证书）、MMP 指令、群作用与搜索结论。
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from .cell import CellId, VertexLabel


class FreePair(BaseModel):
    """自由对 (v, w)：w 是 v 的面，且 w 只有 v 一个余面"""

    coface: CellId = Field(..., description="胞腔 v")
    face: CellId = Field(..., description="自由面 w")

    def cells(self) -> tuple:
        return (self.coface, self.face)


class CollapseSequence(BaseModel):
    """初等塌缩序列

    orbits 记录等变塌缩中每一步同时塌缩的轨道大小；普通序列为空。
    """

    pairs: List[FreePair] = Field(default_factory=list, description="按执行顺序的自由对")
    orbits: List[int] = Field(default_factory=list, description="轨道步长度")

    def __len__(self) -> int:
        return len(self.pairs)

    def extend(self, other: 'CollapseSequence') -> 'CollapseSequence':
        """顺序拼接两个序列"""
        return CollapseSequence(pairs=self.pairs + other.pairs, orbits=self.orbits + other.orbits)


class MmpInstruction(BaseModel):
    """MMP 步骤的组合影子：特殊顶点 v0 与被收缩的链接胞腔"""

    v0: VertexLabel = Field(..., description="除子 D_0 对应的顶点")
    contracted: List[CellId] = Field(default_factory=list, description="link(v0) 中被收缩的胞腔")

    def key(self) -> tuple:
        return (self.v0, frozenset(self.contracted))


class MmpStepKind(str, Enum):
    """MMP 程序步骤类型"""
    COLLAPSE = "collapse"   # 存在正相交的除子：星/链接配对塌缩
    REMOVE = "remove"       # 所有除子都为负：删除单个胞腔


class MmpStep(BaseModel):
    """MMP 程序中的一步"""

    kind: MmpStepKind = Field(..., description="步骤类型")
    instruction: Optional[MmpInstruction] = Field(None, description="塌缩指令")
    cell: Optional[CellId] = Field(None, description="被删除的极大胞腔")


class MmpStepResult(BaseModel):
    """MMP 程序单步结果"""

    kind: MmpStepKind
    sequence: Optional[CollapseSequence] = None
    removed: Optional[CellId] = None
    euler_before: int
    euler_after: int


class GroupAction(BaseModel):
    """由顶点双射生成的有限自同构群

    cell_maps 与 generators 对齐，为非单纯复形中顶点集不能确定的胞腔指定像。
    """

    generators: List[Dict[VertexLabel, VertexLabel]] = Field(default_factory=list, description="生成元")
    cell_maps: List[Dict[CellId, CellId]] = Field(default_factory=list, description="显式胞腔像")

    def cell_map_for(self, index: int) -> Dict[CellId, CellId]:
        if index < len(self.cell_maps):
            return self.cell_maps[index]
        return {}


class VerdictKind(str, Enum):
    """可塌缩性搜索结论"""
    COLLAPSIBLE = "Collapsible"
    NOT_COLLAPSIBLE = "NotCollapsible"
    INCONCLUSIVE = "Inconclusive"
    NO_FREE_PAIR = "NoFreePair"


class Verdict(BaseModel):
    """搜索结论；成功时附带塌缩序列"""

    kind: VerdictKind
    sequence: Optional[CollapseSequence] = None
    nodes: int = Field(default=0, description="搜索展开的节点数")

    @property
    def collapsible(self) -> bool:
        return self.kind == VerdictKind.COLLAPSIBLE
