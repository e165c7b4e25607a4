"""
Complex Operations - 复形核心操作模块

单纯偏序集上的构造、关联查询、联结/锥、删除与同构判定。
所有函数都返回新的复形，输入保持不变。
"""

import logging
from itertools import combinations
from typing import Any, Collection, Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from ..exceptions import HasCofaces, LabelClash, UnknownCell
from ..models import Cell, CellId, Complex, ComplexBuilder, LinkResult, VertexLabel

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# 构造
# ----------------------------------------------------------------------

def empty() -> Complex:
    """空复形"""
    return Complex()


def add_vertex(cx: Complex, label: VertexLabel) -> Complex:
    """添加一个新顶点"""
    builder = ComplexBuilder(cx)
    builder.add_vertex(label)
    return builder.freeze()


def attach_cell(cx: Complex, vertices: Iterable[VertexLabel],
                facets: Iterable[CellId]) -> Tuple[Complex, CellId]:
    """沿给定的面粘贴一个胞腔，返回新复形与新胞腔标识"""
    builder = ComplexBuilder(cx)
    cell_id = builder.add_cell(list(vertices), list(facets))
    return builder.freeze(), cell_id


def from_maximal_simplices(simplices: Iterable[Iterable[VertexLabel]]) -> Complex:
    """由极大单形生成单纯复形（包含全部非空子集）"""
    faces: Set[Tuple[VertexLabel, ...]] = set()
    for simplex in simplices:
        vertices = tuple(sorted(set(simplex)))
        if not vertices:
            raise ValueError("极大单形不能为空")
        for k in range(1, len(vertices) + 1):
            faces.update(combinations(vertices, k))

    builder = ComplexBuilder()
    index: Dict[Tuple[VertexLabel, ...], CellId] = {}
    for face in sorted(faces, key=lambda f: (len(f), f)):
        if len(face) == 1:
            index[face] = builder.add_vertex(face[0])
        else:
            facets = [index[face[:i] + face[i + 1:]] for i in range(len(face))]
            index[face] = builder.add_cell(face, facets)
    return builder.freeze()


def fresh_label(cx: Complex, base: VertexLabel, taken: Collection[VertexLabel] = ()) -> VertexLabel:
    """生成复形中尚未使用的顶点标签"""
    label, k = base, 1
    while label in cx.vertex_cells or label in taken:
        label = f"{base}_{k}"
        k += 1
    return label


# ----------------------------------------------------------------------
# 星、闭星、链接
# ----------------------------------------------------------------------

def star(cx: Complex, cell_id: CellId) -> Set[CellId]:
    """以 c 为面的全部胞腔（含 c 本身）"""
    cx.cell(cell_id)
    seen = {cell_id}
    stack = [cell_id]
    while stack:
        for coface in cx.cofaces(stack.pop()):
            if coface not in seen:
                seen.add(coface)
                stack.append(coface)
    return seen


def closed_star(cx: Complex, cell_id: CellId) -> Complex:
    """星的闭包，作为子复形（标识不变）"""
    return cx.subcomplex(cx.closure(star(cx, cell_id)))


def link(cx: Complex, vertex_cell: CellId) -> LinkResult:
    """顶点的链接

    当 τ ↦ τ∖v 在星上是单射时，链接就是 cst(v) 中不含 v 的胞腔构成的子复形，
    标识沿用原复形；否则（非单纯情形）按单纯偏序集的上区间构造新复形，
    重复的顶点标签加上 @<星胞腔标识> 后缀。
    """
    v = cx.cell(vertex_cell)
    if v.dim != 0:
        raise UnknownCell(f"胞腔 {vertex_cell} 不是顶点", {'cell': vertex_cell})
    label = v.vertices[0]
    upper = sorted(star(cx, vertex_cell) - {vertex_cell}, key=lambda cid: (cx.cells[cid].dim, cid))
    opposite = {tau: cx.cells[tau].facet_omitting(label) for tau in upper}
    simplicial = is_simplicial(cx)

    if len(set(opposite.values())) == len(opposite):
        result = cx.subcomplex(opposite.values())
        origin = {w: tau for tau, w in opposite.items()}
        return LinkResult(complex=result, vertex=label, ambient_simplicial=simplicial, origin=origin)

    logger.debug(f"顶点 {label} 的链接不是 cst(v) 的子复形，按上区间构造")
    label_count: Dict[VertexLabel, int] = {}
    for tau in upper:
        if cx.cells[tau].dim == 1:
            other = opposite_label(cx.cells[tau], label)
            label_count[other] = label_count.get(other, 0) + 1

    builder = ComplexBuilder()
    new_id: Dict[CellId, CellId] = {}
    relabel: Dict[Tuple[CellId, VertexLabel], VertexLabel] = {}
    for tau in upper:
        cell = cx.cells[tau]
        if cell.dim == 1:
            other = opposite_label(cell, label)
            name = other if label_count[other] == 1 else f"{other}@{tau}"
            new_id[tau] = builder.add_vertex(name)
            relabel[(tau, other)] = name
            continue
        names = []
        facets = []
        for u in cell.vertices:
            if u == label:
                continue
            sub = cell.facet_omitting(u)
            facets.append(new_id[sub])
            # 顶点 u 对应的上区间 0 维胞腔：沿面下降到边 {v, u}
            edge = cx.face_with_vertices(tau, (label, u))
            names.append(relabel[(edge, u)])
        new_id[tau] = builder.add_cell(names, facets)
    origin = {nid: tau for tau, nid in new_id.items()}
    return LinkResult(complex=builder.freeze(), vertex=label, ambient_simplicial=simplicial, origin=origin)


def opposite_label(edge: Cell, label: VertexLabel) -> VertexLabel:
    """边的另一个端点"""
    return edge.vertices[1] if edge.vertices[0] == label else edge.vertices[0]


# ----------------------------------------------------------------------
# 不变量
# ----------------------------------------------------------------------

def is_simplicial(cx: Complex) -> bool:
    """每个胞腔是否由其顶点集唯一确定"""
    seen = set()
    for c in cx.cells.values():
        if c.vertex_set in seen:
            return False
        seen.add(c.vertex_set)
    return True


def euler_characteristic(cx: Complex) -> int:
    """欧拉示性数"""
    return cx.euler_characteristic()


def dimension(cx: Complex) -> int:
    """复形维数（空复形为 -1）"""
    return cx.dim


def one_skeleton_graph(cx: Complex) -> nx.Graph:
    """1 维骨架的 networkx 图（顶点为标签）"""
    graph = nx.Graph()
    graph.add_nodes_from(cx.vertices)
    for c in cx.cells.values():
        if c.dim == 1:
            graph.add_edge(*c.vertices)
    return graph


def connected_components(cx: Complex) -> List[List[VertexLabel]]:
    """顶点的连通分支划分（每个分支排序，分支按最小标签排序）"""
    components = [sorted(part) for part in nx.connected_components(one_skeleton_graph(cx))]
    return sorted(components)


def cofaces(cx: Complex, cell_id: CellId) -> List[CellId]:
    """直接余面"""
    return cx.cofaces(cell_id)


def faces(cx: Complex, cell_id: CellId) -> Set[CellId]:
    """胞腔的全部面（含自身）"""
    return cx.closure([cell_id])


def find_cell(cx: Complex, vertices: Iterable[VertexLabel]) -> List[CellId]:
    """顶点集等于给定集合的胞腔（非单纯复形中可能有多个）"""
    return cx.find(vertices)


def f_vector(cx: Complex) -> List[int]:
    return cx.f_vector()


def subcomplex(cx: Complex, cell_ids: Iterable[CellId]) -> Complex:
    """按对取面封闭的标识集合取子复形"""
    return cx.subcomplex(cell_ids)


def is_subcomplex(cx: Complex, cell_ids: Iterable[CellId]) -> bool:
    return cx.is_subcomplex(cell_ids)


def verify(cx: Complex) -> List[str]:
    """全局校验器"""
    return cx.verify()


def summary(cx: Complex) -> Dict[str, Any]:
    """复形概要"""
    return {
        'dim': cx.dim,
        'f_vector': cx.f_vector(),
        'euler_characteristic': cx.euler_characteristic(),
        'components': len(connected_components(cx)),
        'simplicial': is_simplicial(cx),
        'vertices': cx.vertices,
    }


# ----------------------------------------------------------------------
# 联结、锥、删除
# ----------------------------------------------------------------------

def join(a: Complex, b: Complex) -> Complex:
    """联结 A * B：A 的胞腔、B 的胞腔以及每对 (a, b) 的 a*b"""
    clash = sorted(set(a.vertex_cells) & set(b.vertex_cells))
    if clash:
        raise LabelClash(f"联结的两个复形有公共顶点: {clash}", {'labels': clash})

    builder = ComplexBuilder()
    left: Dict[CellId, CellId] = {}
    right: Dict[CellId, CellId] = {}
    for source, table in ((a, left), (b, right)):
        for cid in source.ids():
            cell = source.cells[cid]
            if cell.dim == 0:
                table[cid] = builder.add_vertex(cell.vertices[0])
            else:
                table[cid] = builder.add_cell(cell.vertices, [table[f] for f in cell.facets])

    joint: Dict[Tuple[CellId, CellId], CellId] = {}

    def lookup(x: Optional[CellId], y: Optional[CellId]) -> CellId:
        if x is None:
            return right[y]
        if y is None:
            return left[x]
        return joint[(x, y)]

    pairs = sorted(
        ((x, y) for x in a.ids() for y in b.ids()),
        key=lambda p: (a.cells[p[0]].dim + b.cells[p[1]].dim, p[0], p[1])
    )
    for x, y in pairs:
        cx_cell, cy_cell = a.cells[x], b.cells[y]
        vertices = sorted(cx_cell.vertices + cy_cell.vertices)
        facets = []
        for u in vertices:
            if u in cx_cell.vertex_set:
                facets.append(lookup(cx_cell.facet_omitting(u) if cx_cell.dim else None, y))
            else:
                facets.append(lookup(x, cy_cell.facet_omitting(u) if cy_cell.dim else None))
        joint[(x, y)] = builder.add_cell(vertices, facets)
    return builder.freeze()


def point(label: VertexLabel) -> Complex:
    """单点复形"""
    return add_vertex(empty(), label)


def cone(a: Complex, apex: VertexLabel) -> Complex:
    """锥 = 与单点的联结"""
    if apex in a.vertex_cells:
        raise LabelClash(f"锥顶 {apex} 不是新标签", {'labels': [apex]})
    return join(a, point(apex))


def delete_open_cell(cx: Complex, cell_id: CellId) -> Complex:
    """删除一个极大胞腔（保留其面），χ 改变 (-1)^dim"""
    cell = cx.cell(cell_id)
    cofaces = cx.cofaces(cell_id)
    if cofaces:
        raise HasCofaces(f"胞腔 {cell_id} 还有余面 {cofaces}", {'cell': cell_id, 'cofaces': cofaces})
    builder = ComplexBuilder(cx)
    builder.remove(cell_id)
    logger.debug(f"删除开胞腔 {cell_id} (dim={cell.dim})")
    return builder.freeze()


# ----------------------------------------------------------------------
# 同构
# ----------------------------------------------------------------------

def hasse_diagram(cx: Complex, keys: Optional[Dict[CellId, Any]] = None) -> nx.DiGraph:
    """面偏序的 Hasse 图：边从胞腔指向它的面"""
    keys = keys or {}
    graph = nx.DiGraph()
    for cid, cell in cx.cells.items():
        graph.add_node(cid, dim=cell.dim, key=keys.get(cid))
    for cid, cell in cx.cells.items():
        for f in cell.facets:
            graph.add_edge(cid, f)
    return graph


def _node_match(left: Dict[str, Any], right: Dict[str, Any]) -> bool:
    return left['dim'] == right['dim'] and left['key'] == right['key']


def extend_vertex_map(source: Complex, target: Complex, vertex_map: Dict[VertexLabel, VertexLabel],
                      fixed_cells: Optional[Dict[CellId, CellId]] = None) -> Optional[Dict[CellId, CellId]]:
    """把顶点双射延拓为与面映射交换的胞腔双射；不存在时返回 None

    fixed_cells 指定部分胞腔的像（非单纯复形中平行胞腔需要显式指定）。
    """
    if source.f_vector() != target.f_vector():
        return None
    if sorted(vertex_map) != source.vertices or sorted(vertex_map.values()) != target.vertices:
        return None
    fixed_cells = fixed_cells or {}
    source_keys: Dict[CellId, Any] = {}
    target_keys: Dict[CellId, Any] = {}
    for label, cid in source.vertex_cells.items():
        source_keys[cid] = ('v', vertex_map[label])
    for label, cid in target.vertex_cells.items():
        target_keys[cid] = ('v', label)
    for cid, image in fixed_cells.items():
        if cid not in source.cells or image not in target.cells:
            return None
        source_keys[cid] = ('c', image)
        target_keys[image] = ('c', image)
    matcher = DiGraphMatcher(
        hasse_diagram(source, source_keys), hasse_diagram(target, target_keys), node_match=_node_match
    )
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def is_isomorphic(a: Complex, b: Complex) -> Optional[Dict[VertexLabel, VertexLabel]]:
    """同构判定，返回诱导同构的顶点双射或 None

    VF2 回溯搜索（networkx），仅面向桌面规模的测试用复形。
    """
    if a.f_vector() != b.f_vector():
        return None
    if a.vertices == b.vertices:
        identity = {label: label for label in a.vertices}
        if extend_vertex_map(a, b, identity) is not None:
            return identity
    matcher = DiGraphMatcher(hasse_diagram(a), hasse_diagram(b), node_match=_node_match)
    if not matcher.is_isomorphic():
        return None
    return {
        a.cells[cid].vertices[0]: b.cells[image].vertices[0]
        for cid, image in matcher.mapping.items()
        if a.cells[cid].dim == 0
    }
