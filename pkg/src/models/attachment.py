"""
Attachment Models - 粘贴记录模型

记录锥-联结粘贴（爆破规则 3）的结果，供塌缩回原复形使用；
以及爆破脚本的步骤与报告。
"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .cell import CellId, VertexLabel
from .complex import Complex


class GluedCell(BaseModel):
    """锥胞腔 e0*x，其中 x = σ * ℓ 是联结中的胞腔（σ ⊆ c, ℓ ∈ L，均可为空）"""

    face: List[VertexLabel] = Field(default_factory=list, description="σ：c 的顶点子集")
    link_cell: Optional[CellId] = Field(None, description="ℓ：L 中的胞腔（None 表示空）")
    cell: CellId = Field(..., description="新胞腔标识")


class AttachmentRecord(BaseModel):
    """锥-联结粘贴记录"""

    apex: VertexLabel = Field(..., description="新顶点 e0")
    apex_cell: CellId = Field(..., description="e0 的 0 维胞腔")
    center: CellId = Field(..., description="被爆破的胞腔 c")
    designated: VertexLabel = Field(..., description="塌缩回去时使用的 c 的顶点 a")
    glued: List[GluedCell] = Field(default_factory=list, description="全部锥胞腔")


class LinkResult(BaseModel):
    """单纯偏序集意义下的链接

    origin 把链接中的胞腔映射回星中的胞腔（含 v 的那个胞腔）。
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    complex: Complex
    vertex: VertexLabel
    ambient_simplicial: bool = Field(..., description="外围复形是否为单纯复形")
    origin: Dict[CellId, CellId] = Field(default_factory=dict)


class BlowupKind(str, Enum):
    """爆破规则"""
    STRATUM = "stratum"   # 规则 1：中心是层，星形细分
    TRIVIAL = "trivial"   # 规则 2：中心不是层，对偶复形不变
    CONE = "cone"         # 规则 3：中心在 E 中但不是层，粘贴锥-联结


class BlowupStep(BaseModel):
    """爆破脚本的一步"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: BlowupKind
    cell: Optional[CellId] = None
    center: Optional[VertexLabel] = None
    link: Optional[Complex] = None
    tau: Dict[VertexLabel, VertexLabel] = Field(default_factory=dict)
    image_cells: Dict[CellId, CellId] = Field(default_factory=dict)


class BlowupReport(BaseModel):
    """爆破脚本报告"""

    stellar_steps: int = 0
    trivial_steps: int = 0
    cone_steps: int = 0
    vertices_before: int = 0
    vertices_after: int = 0
    records: List[AttachmentRecord] = Field(default_factory=list)
