"""
Strata Descriptor Model - 分层描述模型

描述简单正规相交除子的组合内容：除子指标集、各交集的连通分支（层）
以及层之间的父映射。
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

# 除子标识：不透明字符串
DivisorId = str


class Stratum(BaseModel):
    """层：某个交集 ⋂_{i∈J} Z_i 的一个连通分支"""

    id: str = Field(..., description="层标识符")
    J: List[DivisorId] = Field(..., description="非空除子子集")
    tag: str = Field(default="", description="区分同一交集的不同分支")

    @field_validator('J')
    @classmethod
    def _sorted_unique(cls, value: List[DivisorId]) -> List[DivisorId]:
        if not value:
            raise ValueError("J 不能为空")
        if len(set(value)) != len(value):
            raise ValueError(f"J 中有重复除子: {value}")
        return sorted(value)

    @property
    def codim(self) -> int:
        """对应胞腔的维数 |J| - 1"""
        return len(self.J) - 1


class ParentLink(BaseModel):
    """父映射条目：(stratum, drop) -> parent，parent 的指标集为 J∖{drop}"""

    stratum: str = Field(..., description="层标识符")
    drop: DivisorId = Field(..., description="去掉的除子")
    parent: str = Field(..., description="父层标识符")


class StrataDescriptor(BaseModel):
    """分层描述

    父映射可以省略：当 J∖{j} 只有唯一一个层时，父层是隐含的。
    """

    format_version: Optional[int] = Field(default=None, description="文档格式版本")
    divisors: List[DivisorId] = Field(default_factory=list, description="除子列表")
    strata: List[Stratum] = Field(default_factory=list, description="层列表")
    parents: List[ParentLink] = Field(default_factory=list, description="父映射")

    def stratum_index(self) -> Dict[str, Stratum]:
        """层标识到层"""
        return {s.id: s for s in self.strata}

    def parent_table(self) -> Dict[Tuple[str, DivisorId], str]:
        """显式父映射表"""
        return {(p.stratum, p.drop): p.parent for p in self.parents}

    def strata_by_index_set(self) -> Dict[Tuple[DivisorId, ...], List[Stratum]]:
        """按指标集分组的层"""
        table: Dict[Tuple[DivisorId, ...], List[Stratum]] = {}
        for s in self.strata:
            table.setdefault(tuple(s.J), []).append(s)
        return table
