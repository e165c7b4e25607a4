"""
Homology Models - 同调模型

边界矩阵与同调结果。
"""

from typing import List

import numpy as np
from pydantic import BaseModel, Field

from .cell import CellId


class BoundaryMatrix(BaseModel):
    """k 次边界矩阵：行为 (k-1) 维胞腔，列为 k 维胞腔"""

    degree: int = Field(..., description="次数 k")
    rows: List[CellId] = Field(default_factory=list, description="行对应的胞腔")
    cols: List[CellId] = Field(default_factory=list, description="列对应的胞腔")
    entries: List[List[int]] = Field(default_factory=list, description="整数矩阵（行优先）")

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.cols))

    def to_numpy(self) -> np.ndarray:
        """转为 object dtype 的 numpy 数组（保持任意精度整数）"""
        m, n = self.shape
        array = np.zeros((m, n), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array


class HomologyResult(BaseModel):
    """各次数的 Betti 数与挠系数"""

    betti: List[int] = Field(default_factory=list, description="Betti 数，下标为次数")
    torsion: List[List[int]] = Field(default_factory=list, description="大于 1 的不变因子")
    reduced: bool = Field(default=False, description="是否约化同调")

    def euler_characteristic(self) -> int:
        """由 Betti 数计算欧拉示性数（约化时差 1）"""
        chi = sum((-1) ** k * b for k, b in enumerate(self.betti))
        return chi + 1 if self.reduced else chi

    def is_trivial(self) -> bool:
        """所有 Betti 数与挠都为零"""
        return not any(self.betti) and not any(self.torsion)
