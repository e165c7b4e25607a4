"""
Catalog - 命名复形目录

单形与单形边界、两条边的圆、二次锥的三组对偶复形（图 1-3），
以及从黄金文件加载的 dunce hat 与 6 顶点射影平面。
"""

import json
import logging
import re
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, List

from config import get_config
from ..core.complex_ops import from_maximal_simplices
from ..exceptions import UnknownName
from ..models import Complex, ComplexBuilder, StrataDescriptor, Stratum
from .builders import dual_complex
from .serializer import complex_from_dict

logger = logging.getLogger(__name__)

_PARAMETRIC = re.compile(r'^(simplex|boundary)\((\d+)\)$')

# 黄金文件：data/catalog/<name>.json
GOLDEN_NAMES = ('dunce_hat', 'rp2')


def simplex(n: int) -> Complex:
    """n 维单形，顶点 v0..vn"""
    return from_maximal_simplices([[f"v{i}" for i in range(n + 1)]])


def boundary(n: int) -> Complex:
    """n 维单形的边界（n-1 维球面）"""
    if n < 1:
        raise UnknownName(f"boundary({n}) 无定义", {'name': f"boundary({n})"})
    labels = [f"v{i}" for i in range(n + 1)]
    return from_maximal_simplices(list(combinations(labels, n)))


def two_edge_circle() -> Complex:
    """两个顶点、两条平行边：正则但不是单纯复形"""
    builder = ComplexBuilder()
    v1 = builder.add_vertex("v1")
    v2 = builder.add_vertex("v2")
    builder.add_cell(["v1", "v2"], [v2, v1])
    builder.add_cell(["v1", "v2"], [v2, v1])
    return builder.freeze()


def _descriptor(divisors: List[str], index_sets: List[List[str]]) -> StrataDescriptor:
    """每个指标集只有一个分支的分层描述"""
    strata = [Stratum(id=f"Z{i}", J=[d]) for i, d in enumerate(divisors)]
    strata += [Stratum(id="Z" + "".join(sorted(J)), J=J) for J in index_sets]
    return StrataDescriptor(format_version=1, divisors=divisors, strata=strata)


def fig1_descriptor() -> StrataDescriptor:
    """两条相交的除子 A1, A2"""
    return _descriptor(["A1", "A2"], [["A1", "A2"]])


def fig2_descriptor() -> StrataDescriptor:
    """A1, A2, B1 两两相交并有一个三重点"""
    return _descriptor(
        ["A1", "A2", "B1"],
        [["A1", "A2"], ["A1", "B1"], ["A2", "B1"], ["A1", "A2", "B1"]]
    )


def fig3_descriptor() -> StrataDescriptor:
    """正方形 B1-A2-B2-A1 加对角线 A1A2"""
    return _descriptor(
        ["A1", "A2", "B1", "B2"],
        [
            ["B1", "A2"], ["A2", "B2"], ["B2", "A1"], ["A1", "B1"], ["A1", "A2"],
            ["B1", "A1", "A2"], ["A1", "A2", "B2"],
        ]
    )


def fig3_right_descriptor() -> StrataDescriptor:
    """同一个正方形，对角线换成 B1B2"""
    return _descriptor(
        ["A1", "A2", "B1", "B2"],
        [
            ["B1", "A2"], ["A2", "B2"], ["B2", "A1"], ["A1", "B1"], ["B1", "B2"],
            ["B1", "B2", "A2"], ["B1", "B2", "A1"],
        ]
    )


def fig1_right() -> Complex:
    """删除边之后：两个孤立顶点"""
    return from_maximal_simplices([["A1"], ["A2"]])


def fig2_right() -> Complex:
    """MMP 步骤之后：两条边 A1B1, A2B1"""
    return from_maximal_simplices([["A1", "B1"], ["A2", "B1"]])


def load_golden(name: str) -> Complex:
    """从黄金文件加载"""
    path = Path(get_config().CATALOG_PATH) / f"{name}.json"
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    logger.debug(f"加载黄金文件: {path}")
    return complex_from_dict(data)


_NAMED: Dict[str, Callable[[], Complex]] = {
    'two_edge_circle': two_edge_circle,
    'fig1_left': lambda: dual_complex(fig1_descriptor()),
    'fig1_right': fig1_right,
    'fig2_left': lambda: dual_complex(fig2_descriptor()),
    'fig2_right': fig2_right,
    'fig3_left': lambda: dual_complex(fig3_descriptor()),
    'fig3_right': lambda: dual_complex(fig3_right_descriptor()),
}


def catalog_names() -> List[str]:
    """目录中的名称（参数化名称以 n=3 为例）"""
    return sorted(list(_NAMED) + list(GOLDEN_NAMES) + ['boundary(3)', 'simplex(3)'])


def catalog(name: str) -> Complex:
    """按名称取复形"""
    match = _PARAMETRIC.match(name)
    if match:
        n = int(match.group(2))
        return simplex(n) if match.group(1) == 'simplex' else boundary(n)
    if name in _NAMED:
        return _NAMED[name]()
    if name in GOLDEN_NAMES:
        return load_golden(name)
    # bings_house 没有收录
    raise UnknownName(f"目录中没有 {name}", {'name': name, 'available': catalog_names()})
