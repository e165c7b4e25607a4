"""
Data module - 数据构造与交换模块

负责对偶复形的构造、命名目录以及 JSON 文档的读写。

主要模块：
- builders: 由分层描述构造对偶复形（dual_complex / strata_of）
- catalog: 命名复形目录与黄金文件
- serializer: 规范 JSON 文档
"""

from .builders import DualComplexBuilder, dual_complex, dual_complex_map, strata_of
from .catalog import catalog, catalog_names, simplex, boundary, two_edge_circle
from .serializer import (
    dumps, loads, complex_to_dict, complex_from_dict, strata_to_dict, strata_from_dict,
    sequence_to_dict, sequence_from_dict
)

__all__ = [
    'DualComplexBuilder',
    'dual_complex',
    'dual_complex_map',
    'strata_of',
    'catalog',
    'catalog_names',
    'simplex',
    'boundary',
    'two_edge_circle',
    'dumps',
    'loads',
    'complex_to_dict',
    'complex_from_dict',
    'strata_to_dict',
    'strata_from_dict',
    'sequence_to_dict',
    'sequence_from_dict',
]
