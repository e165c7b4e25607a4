"""
Homology - 同调计算模块

单纯偏序集的整系数与有理系数同调：
- 边界矩阵（符号 (-1)^i，i 为去掉的顶点在排序元组中的位置）
- 整数 Smith 标准形（任意精度整数，行列约化并取绝对值最小的主元）
- 有理 Betti 数（sympy DomainMatrix 在 QQ 上求秩）
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from config import get_config
from ..exceptions import DegreeOutOfRange, IncoherentBoundary
from ..models import BoundaryMatrix, Complex, HomologyResult

logger = logging.getLogger(__name__)


def boundary_matrix(cx: Complex, k: int) -> BoundaryMatrix:
    """k 次边界矩阵，行列都按胞腔标识排序"""
    if k < 0 or k > cx.dim:
        raise DegreeOutOfRange(f"次数 {k} 不在 [0, {cx.dim}] 内", {'degree': k, 'dim': cx.dim})
    cols = cx.ids(k)
    rows = cx.ids(k - 1) if k > 0 else []
    row_index = {cid: i for i, cid in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, cid in enumerate(cols):
        for i, facet in enumerate(cx.cells[cid].facets):
            entries[row_index[facet]][j] += (-1) ** i
    return BoundaryMatrix(degree=k, rows=rows, cols=cols, entries=entries)


def check_chain_condition(lower: BoundaryMatrix, upper: BoundaryMatrix) -> None:
    """断言 ∂_{k-1} ∘ ∂_k = 0"""
    if not lower.rows or not upper.cols:
        return
    product = lower.to_numpy().dot(upper.to_numpy())
    if np.any(product != 0):
        raise IncoherentBoundary(
            f"∂_{lower.degree}∂_{upper.degree} 不为零",
            {'degree': upper.degree}
        )


def smith_normal_form(entries: Sequence[Sequence[int]]) -> List[int]:
    """整数矩阵的不变因子（Smith 标准形对角线上的非零元，取正）"""
    a = [list(row) for row in entries]
    m = len(a)
    n = len(a[0]) if m else 0
    factors: List[int] = []

    for t in range(min(m, n)):
        pivot = _smallest_entry(a, t, m, n)
        if pivot is None:
            break
        _move_to(a, t, pivot)
        while True:
            reduced = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    reduced = reduced and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    reduced = reduced and a[t][j] == 0
            if not reduced:
                # 余数比主元小，换上来继续
                candidates = [(i, t) for i in range(t + 1, m) if a[i][t]] + \
                             [(t, j) for j in range(t + 1, n) if a[t][j]]
                _move_to(a, t, min(candidates, key=lambda p: abs(a[p[0]][p[1]])))
                continue
            if abs(a[t][t]) == 1:
                break
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None
            )
            if offender is None:
                break
            # 主元不整除剩余元素：把该行加到主元行后再消元
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        factors.append(abs(a[t][t]))
    return factors


def _smallest_entry(a: List[List[int]], t: int, m: int, n: int) -> Optional[tuple]:
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
                if abs(a[i][j]) == 1:
                    return best
    return best


def _move_to(a: List[List[int]], t: int, position: tuple) -> None:
    i, j = position
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def rational_rank(matrix: BoundaryMatrix) -> int:
    """有理数域上的秩"""
    m, n = matrix.shape
    if m == 0 or n == 0:
        return 0
    dm = DomainMatrix([[QQ(x) for x in row] for row in matrix.entries], (m, n), QQ)
    return dm.rank()


def _augmentation(cx: Complex) -> BoundaryMatrix:
    """约化同调的 ∂_0：全 1 行"""
    cols = cx.ids(0)
    return BoundaryMatrix(degree=0, rows=[-1], cols=cols, entries=[[1] * len(cols)])


def _boundaries(cx: Complex, reduced: bool) -> Dict[int, BoundaryMatrix]:
    matrices = {k: boundary_matrix(cx, k) for k in range(cx.dim + 1)}
    if reduced and cx.dim >= 0:
        matrices[0] = _augmentation(cx)
    if get_config().VERIFY_CHAIN_CONDITION:
        for k in range(2, cx.dim + 1):
            check_chain_condition(matrices[k - 1], matrices[k])
    return matrices


def homology_Z(cx: Complex, reduced: bool = False) -> HomologyResult:
    """整系数同调：各次数的 Betti 数与不变因子"""
    matrices = _boundaries(cx, reduced)
    ranks: Dict[int, int] = {}
    torsion: Dict[int, List[int]] = {}
    for k, matrix in matrices.items():
        factors = smith_normal_form(matrix.entries)
        ranks[k] = len(factors)
        if k >= 1:
            torsion[k - 1] = sorted(f for f in factors if f > 1)

    counts = cx.f_vector()
    betti = [counts[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(cx.dim + 1)]
    result = HomologyResult(
        betti=betti,
        torsion=[torsion.get(k, []) for k in range(cx.dim + 1)],
        reduced=reduced,
    )
    logger.debug(f"H_*(Z) betti={result.betti} torsion={result.torsion} reduced={reduced}")
    return result


def betti_Q(cx: Complex, reduced: bool = False) -> List[int]:
    """有理 Betti 数"""
    matrices = _boundaries(cx, reduced)
    ranks = {k: rational_rank(matrix) for k, matrix in matrices.items()}
    counts = cx.f_vector()
    return [counts[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(cx.dim + 1)]


def is_Q_acyclic(cx: Complex) -> bool:
    """约化有理 Betti 数是否全为零（空复形不是）"""
    if cx.is_empty():
        return False
    return not any(betti_Q(cx, reduced=True))


def euler_from_betti(result: HomologyResult) -> int:
    """χ = Σ (-1)^k b_k"""
    return result.euler_characteristic()


def homology_equal(a: Complex, b: Complex) -> bool:
    """整系数同调（Betti 数与不变因子）是否一致"""
    left, right = homology_Z(a), homology_Z(b)
    return _trim(left) == _trim(right)


def _trim(result: HomologyResult) -> tuple:
    # 去掉高次的零项，使不同维数的复形可比较
    pairs = list(zip(result.betti, result.torsion))
    while pairs and pairs[-1] == (0, []):
        pairs.pop()
    return tuple((b, tuple(t)) for b, t in pairs)
