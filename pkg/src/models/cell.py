"""
Cell Model - 胞腔模型

定义正则胞腔复形中的单形胞腔。
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

# 顶点标签：不透明字符串，按字典序排序
VertexLabel = str
# 胞腔标识：在单个复形内稳定，删除后不复用
CellId = int


class Cell(BaseModel):
    """单形胞腔

    vertices 为按标签排序的 d+1 个不同顶点；
    facets[i] 为去掉第 i 个顶点得到的面（0 维胞腔没有面）。
    """

    model_config = ConfigDict(frozen=True)

    id: CellId = Field(..., description="胞腔唯一标识符")
    vertices: Tuple[VertexLabel, ...] = Field(..., description="排序后的顶点元组")
    facets: Tuple[CellId, ...] = Field(default=(), description="按位置对齐的面")

    @model_validator(mode='after')
    def _check_shape(self) -> 'Cell':
        if not self.vertices:
            raise ValueError("胞腔至少需要一个顶点")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError(f"顶点元组必须严格递增: {self.vertices}")
        expected = len(self.vertices) if len(self.vertices) > 1 else 0
        if len(self.facets) != expected:
            raise ValueError(f"胞腔 {self.id} 需要 {expected} 个面, 实际 {len(self.facets)}")
        return self

    @property
    def dim(self) -> int:
        """胞腔维数"""
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def position(self, label: VertexLabel) -> int:
        """顶点在元组中的位置"""
        return self.vertices.index(label)

    def facet_omitting(self, label: VertexLabel) -> CellId:
        """去掉给定顶点的面"""
        return self.facets[self.position(label)]
