"""
Complex Model - 复形模型

定义所有胞腔都是单形的正则胞腔复形（单纯偏序集）及其增量构造器。
"""

from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set

from pydantic import BaseModel, Field, PrivateAttr

from ..exceptions import (
    DuplicateLabel, FacetMismatch, IncoherentBoundary, InvalidDocument,
    NonRegular, NotASubcomplex, UnknownCell
)
from .cell import Cell, CellId, VertexLabel


class Complex(BaseModel):
    """单纯偏序集

    构造完成后视为不可变值；所有操作都返回新的复形。
    不同胞腔可以有相同的顶点集（不要求是单纯复形）。
    """

    vertex_cells: Dict[VertexLabel, CellId] = Field(default_factory=dict, description="顶点标签到 0 维胞腔")
    cells: Dict[CellId, Cell] = Field(default_factory=dict, description="胞腔字典")
    next_id: int = Field(default=0, description="下一个可用的胞腔标识")

    _cofaces: Optional[Dict[CellId, List[CellId]]] = PrivateAttr(default=None)
    _by_vertex_set: Optional[Dict[FrozenSet[str], List[CellId]]] = PrivateAttr(default=None)

    # ------------------------------------------------------------------
    # 基本查询
    # ------------------------------------------------------------------

    @property
    def vertices(self) -> List[VertexLabel]:
        """排序后的顶点标签"""
        return sorted(self.vertex_cells)

    @property
    def dim(self) -> int:
        """复形维数（空复形为 -1）"""
        return max((c.dim for c in self.cells.values()), default=-1)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell_id: object) -> bool:
        return cell_id in self.cells

    def is_empty(self) -> bool:
        return not self.cells

    def cell(self, cell_id: CellId) -> Cell:
        """获取胞腔"""
        try:
            return self.cells[cell_id]
        except KeyError:
            raise UnknownCell(f"胞腔 {cell_id} 不存在", {'cell': cell_id}) from None

    def vertex_cell(self, label: VertexLabel) -> CellId:
        """顶点标签对应的 0 维胞腔"""
        try:
            return self.vertex_cells[label]
        except KeyError:
            raise UnknownCell(f"顶点 {label} 不存在", {'vertex': label}) from None

    def ids(self, dim: Optional[int] = None) -> List[CellId]:
        """按 (维数, 标识) 排序的胞腔标识"""
        if dim is None:
            return sorted(self.cells, key=lambda cid: (self.cells[cid].dim, cid))
        return sorted(cid for cid, c in self.cells.items() if c.dim == dim)

    def cofaces(self, cell_id: CellId) -> List[CellId]:
        """以给定胞腔为面的高一维胞腔"""
        self.cell(cell_id)
        if self._cofaces is None:
            table: Dict[CellId, List[CellId]] = defaultdict(list)
            for cid in sorted(self.cells):
                for f in self.cells[cid].facets:
                    table[f].append(cid)
            self._cofaces = dict(table)
        return list(self._cofaces.get(cell_id, ()))

    def find(self, vertices: Iterable[VertexLabel]) -> List[CellId]:
        """顶点集等于给定集合的所有胞腔"""
        if self._by_vertex_set is None:
            table: Dict[FrozenSet[str], List[CellId]] = defaultdict(list)
            for cid in sorted(self.cells):
                table[self.cells[cid].vertex_set].append(cid)
            self._by_vertex_set = dict(table)
        return list(self._by_vertex_set.get(frozenset(vertices), ()))

    def f_vector(self) -> List[int]:
        """各维胞腔数"""
        counts = [0] * (self.dim + 1)
        for c in self.cells.values():
            counts[c.dim] += 1
        return counts

    def euler_characteristic(self) -> int:
        """欧拉示性数 χ = Σ (-1)^d #(d 维胞腔)"""
        return sum((-1) ** c.dim for c in self.cells.values())

    def closure(self, cell_ids: Iterable[CellId]) -> Set[CellId]:
        """给定胞腔及其全部面"""
        seen: Set[CellId] = set()
        stack = list(cell_ids)
        while stack:
            cid = stack.pop()
            if cid in seen:
                continue
            seen.add(cid)
            stack.extend(self.cell(cid).facets)
        return seen

    def face_with_vertices(self, cell_id: CellId, vertices: Iterable[VertexLabel]) -> CellId:
        """胞腔的面区间中顶点集为给定子集的那个面"""
        target = frozenset(vertices)
        current = self.cell(cell_id)
        if not target or not target <= current.vertex_set:
            raise UnknownCell(
                f"胞腔 {cell_id} 没有顶点集为 {sorted(target)} 的面",
                {'cell': cell_id, 'vertices': sorted(target)}
            )
        for label in current.vertices:
            if label not in target:
                current = self.cells[current.facet_omitting(label)]
        return current.id

    def signature(self) -> FrozenSet[CellId]:
        """规范形式：存活胞腔标识集合（标识稳定，可用于记忆化）"""
        return frozenset(self.cells)

    def is_subcomplex(self, cell_ids: Iterable[CellId]) -> bool:
        """给定标识集合是否对取面封闭"""
        ids = set(cell_ids)
        return all(
            cid in self.cells and all(f in ids for f in self.cells[cid].facets)
            for cid in ids
        )

    def subcomplex(self, cell_ids: Iterable[CellId]) -> 'Complex':
        """保留给定（对取面封闭的）胞腔，标识不变"""
        ids = set(cell_ids)
        if not self.is_subcomplex(ids):
            missing = sorted(cid for cid in ids if cid not in self.cells or
                             any(f not in ids for f in self.cells[cid].facets))
            raise NotASubcomplex("胞腔集合对取面不封闭", {'cells': missing})
        return Complex(
            vertex_cells={label: cid for label, cid in self.vertex_cells.items() if cid in ids},
            cells={cid: self.cells[cid] for cid in ids},
            next_id=self.next_id,
        )

    # ------------------------------------------------------------------
    # 校验
    # ------------------------------------------------------------------

    def verify(self) -> List[str]:
        """全局校验，返回全部违例描述（空列表表示合法）"""
        problems: List[str] = []
        zero_cells = {c.vertices[0]: cid for cid, c in self.cells.items() if c.dim == 0}
        if zero_cells != self.vertex_cells:
            problems.append("0 维胞腔与顶点集不是双射")
        for cid in sorted(self.cells):
            c = self.cells[cid]
            if c.id != cid:
                problems.append(f"胞腔 {cid} 的标识不一致")
            if cid >= self.next_id:
                problems.append(f"胞腔 {cid} 不小于 next_id")
            if c.dim == 0:
                continue
            if len(set(c.facets)) != len(c.facets):
                problems.append(f"胞腔 {cid} 的面重复（非正则）")
            for i, f in enumerate(c.facets):
                if f not in self.cells:
                    problems.append(f"胞腔 {cid} 的第 {i} 个面 {f} 不存在")
                    continue
                expected = c.vertices[:i] + c.vertices[i + 1:]
                if self.cells[f].vertices != expected:
                    problems.append(f"胞腔 {cid} 的第 {i} 个面顶点不一致")
            if problems:
                continue
            if not _facets_commute(self.cells, c.facets):
                problems.append(f"胞腔 {cid} 的面映射不交换")
        return problems

    def validate(self) -> 'Complex':
        """校验失败时抛出 IncoherentBoundary"""
        problems = self.verify()
        if problems:
            raise IncoherentBoundary(problems[0], {'violations': problems})
        return self


def _facets_commute(cells: Dict[CellId, Cell], facets: Sequence[CellId]) -> bool:
    """检查 facet_i 去掉位置 j-1 与 facet_j 去掉位置 i 得到同一胞腔 (i < j)"""
    if len(facets) < 3:
        return True
    for j in range(len(facets)):
        for i in range(j):
            if cells[facets[i]].facets[j - 1] != cells[facets[j]].facets[i]:
                return False
    return True


class ComplexBuilder:
    """可变构造器

    操作内部使用：复制一个复形、逐个增删胞腔，最后 freeze() 得到新复形。
    """

    def __init__(self, base: Optional[Complex] = None):
        self.vertex_cells: Dict[VertexLabel, CellId] = dict(base.vertex_cells) if base else {}
        self.cells: Dict[CellId, Cell] = dict(base.cells) if base else {}
        self.next_id: int = base.next_id if base else 0

    def add_vertex(self, label: VertexLabel, cell_id: Optional[CellId] = None) -> CellId:
        """添加顶点（0 维胞腔）"""
        if label in self.vertex_cells:
            raise DuplicateLabel(f"顶点 {label} 已存在", {'vertex': label})
        cid = self._claim(cell_id)
        self.cells[cid] = Cell(id=cid, vertices=(label,))
        self.vertex_cells[label] = cid
        return cid

    def add_cell(self, vertices: Sequence[VertexLabel], facets: Sequence[CellId],
                 cell_id: Optional[CellId] = None) -> CellId:
        """粘贴一个正维数胞腔；顶点可以无序，面按顶点位置对齐"""
        if len(vertices) != len(facets):
            raise FacetMismatch(
                f"顶点数 {len(vertices)} 与面数 {len(facets)} 不一致",
                {'vertices': list(vertices), 'facets': list(facets)}
            )
        if len(vertices) < 2:
            raise FacetMismatch("0 维胞腔请使用 add_vertex", {'vertices': list(vertices)})
        if len(set(vertices)) != len(vertices):
            raise FacetMismatch("顶点重复", {'vertices': list(vertices)})
        paired = sorted(zip(vertices, facets))
        ordered = tuple(v for v, _ in paired)
        ordered_facets = tuple(f for _, f in paired)
        for i, f in enumerate(ordered_facets):
            if f not in self.cells:
                raise UnknownCell(f"面 {f} 不存在", {'cell': f})
            expected = ordered[:i] + ordered[i + 1:]
            if self.cells[f].vertices != expected:
                raise FacetMismatch(
                    f"第 {i} 个面的顶点 {list(self.cells[f].vertices)} 应为 {list(expected)}",
                    {'position': i, 'facet': f}
                )
        if len(set(ordered_facets)) != len(ordered_facets):
            raise NonRegular("面重复，粘贴映射不是嵌入", {'facets': list(ordered_facets)})
        if not _facets_commute(self.cells, ordered_facets):
            raise IncoherentBoundary("面映射不交换", {'facets': list(ordered_facets)})
        cid = self._claim(cell_id)
        self.cells[cid] = Cell(id=cid, vertices=ordered, facets=ordered_facets)
        return cid

    def remove(self, cell_id: CellId) -> Cell:
        """删除胞腔（不检查余面，调用方负责）"""
        cell = self.cells.pop(cell_id)
        if cell.dim == 0:
            del self.vertex_cells[cell.vertices[0]]
        return cell

    def freeze(self) -> Complex:
        return Complex(vertex_cells=dict(self.vertex_cells), cells=dict(self.cells), next_id=self.next_id)

    def _claim(self, cell_id: Optional[CellId]) -> CellId:
        if cell_id is None:
            cell_id = self.next_id
        elif cell_id in self.cells:
            raise InvalidDocument(f"胞腔标识 {cell_id} 已被占用", {'cell': cell_id})
        self.next_id = max(self.next_id, cell_id + 1)
        return cell_id
