"""
Core module - 核心算法模块

包含对偶复形工具的核心操作。

主要模块：
- complex_ops: 复形构造、星/链接、联结/锥、同构判定
- subdivision: 星形细分、重心细分与爆破规则
- collapse: 自由对、初等塌缩、MMP 塌缩与可塌缩性搜索
- equivariant: 群作用下的轨道塌缩
- homology: 边界矩阵、Smith 标准形与同调
"""

from .complex_ops import (
    empty, add_vertex, attach_cell, from_maximal_simplices, fresh_label,
    star, closed_star, link, is_simplicial, euler_characteristic, dimension,
    connected_components, cofaces, faces, find_cell, f_vector, subcomplex,
    is_subcomplex, verify, summary, join, point, cone, delete_open_cell,
    extend_vertex_map, is_isomorphic
)
from .homology import (
    boundary_matrix, smith_normal_form, homology_Z, betti_Q, is_Q_acyclic,
    euler_from_betti, homology_equal
)
from .collapse import (
    CollapseState, free_pairs, elementary_collapse, replay, greedy_collapse,
    mmp_pairs, mmp_collapse, mmp_program, match_cells, collapsible_search, collapses_to
)
from .subdivision import (
    stellar_subdivide, barycentric_subdivide, blowup_stratum, blowup_trivial,
    attach_cone_over_join, collapse_coned_join, coned_join_pairs, cone_expansion,
    blowup_script, check_rule4, barycentric_script, barycentric_by_blowups
)
from .equivariant import group_closure, is_invariant, equivariant_collapse

__all__ = [
    # complex_core
    'empty', 'add_vertex', 'attach_cell', 'from_maximal_simplices', 'fresh_label',
    'star', 'closed_star', 'link', 'is_simplicial', 'euler_characteristic', 'dimension',
    'connected_components', 'cofaces', 'faces', 'find_cell', 'f_vector', 'subcomplex',
    'is_subcomplex', 'verify', 'summary', 'join', 'point', 'cone', 'delete_open_cell',
    'extend_vertex_map', 'is_isomorphic',

    # homology
    'boundary_matrix', 'smith_normal_form', 'homology_Z', 'betti_Q', 'is_Q_acyclic',
    'euler_from_betti', 'homology_equal',

    # collapse
    'CollapseState', 'free_pairs', 'elementary_collapse', 'replay', 'greedy_collapse',
    'mmp_pairs', 'mmp_collapse', 'mmp_program', 'match_cells', 'collapsible_search',
    'collapses_to',

    # subdivision
    'stellar_subdivide', 'barycentric_subdivide', 'blowup_stratum', 'blowup_trivial',
    'attach_cone_over_join', 'collapse_coned_join', 'coned_join_pairs', 'cone_expansion',
    'blowup_script', 'check_rule4', 'barycentric_script', 'barycentric_by_blowups',

    # equivariant
    'group_closure', 'is_invariant', 'equivariant_collapse',
]
