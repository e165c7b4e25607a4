"""
Subdivision - 细分与爆破模块

星形细分、重心细分，以及对偶复形在爆破下的三条规则：
- 规则 1：中心是层，星形细分
- 规则 2：中心不是层，复形不变
- 规则 3：粘贴联结上的锥，并给出塌缩回原复形的证书
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..exceptions import (
    DimZeroCenter, LabelClash, NonInjectiveOnCell, UnresolvedImageCell
)
from ..models import (
    AttachmentRecord, BlowupKind, BlowupReport, BlowupStep, Cell, CellId,
    CollapseSequence, Complex, ComplexBuilder, FreePair, GluedCell, VertexLabel
)
from .collapse import replay
from .complex_ops import empty, fresh_label, star
from .homology import homology_equal

logger = logging.getLogger(__name__)

# 锥胞腔的索引：(σ ⊆ c 的顶点, L 中的胞腔或 None)
JoinKey = Tuple[Tuple[VertexLabel, ...], Optional[CellId]]


# ----------------------------------------------------------------------
# 星形细分与重心细分
# ----------------------------------------------------------------------

def stellar_subdivide(cx: Complex, cell_id: CellId, center: VertexLabel) -> Complex:
    """在胞腔 c 的内点 p 处做星形细分

    删除 star(c)，对 star(c) 中每个胞腔 τ 的、不含 c 的面 w 添加 ⟨p, w⟩。
    ⟨p, w⟩ 位于锚胞腔 α = τ 中顶点集为 V(w) ∪ V(c) 的面内，以 (w, α) 为键；
    平行胞腔共用 w 时各自得到自己的 ⟨p, w⟩。
    新胞腔标识：先 p，再按 (dim w, w, α) 排序。
    """
    cell = cx.cell(cell_id)
    if cell.dim == 0:
        raise DimZeroCenter(f"不能在顶点 {cell_id} 处做星形细分", {'cell': cell_id})
    if center in cx.vertex_cells:
        raise LabelClash(f"细分中心 {center} 不是新标签", {'labels': [center]})

    removed = star(cx, cell_id)
    keys = set()
    for tau in removed:
        for wid in cx.closure([tau]) - removed:
            keys.add((wid, _anchor(cx, tau, wid, cell)))
    ordered = sorted(keys, key=lambda key: (cx.cells[key[0]].dim, key[0], key[1]))

    builder = ComplexBuilder(cx)
    for cid in sorted(removed, key=lambda cid: -cx.cells[cid].dim):
        builder.remove(cid)
    apex = builder.add_vertex(center)
    spans: Dict[Tuple[CellId, CellId], CellId] = {}
    for wid, anchor in ordered:
        w = cx.cells[wid]
        vertices = list(w.vertices) + [center]
        if w.dim:
            facets = [spans[(f, _anchor(cx, anchor, f, cell))] for f in w.facets]
        else:
            facets = [apex]
        spans[(wid, anchor)] = builder.add_cell(vertices, facets + [wid])

    logger.debug(f"星形细分胞腔 {cell_id}: 删除 {len(removed)} 个, 新增 {len(spans) + 1} 个")
    return builder.freeze()


def _anchor(cx: Complex, tau: CellId, wid: CellId, cell: Cell) -> CellId:
    # τ 中同时包含 w 与 c 的最小面
    return cx.face_with_vertices(tau, cx.cells[wid].vertex_set | cell.vertex_set)


def barycenter_label(cx: Complex, cell_id: CellId, taken=()) -> VertexLabel:
    """重心顶点的标签 <a|b|c>；顶点集不唯一时追加 #胞腔标识"""
    cell = cx.cells[cell_id]
    base = "<" + "|".join(cell.vertices) + ">"
    if len(cx.find(cell.vertices)) > 1:
        base = f"{base}#{cell_id}"
    return fresh_label(cx, base, taken)


def barycentric_order(cx: Complex) -> List[CellId]:
    """重心细分的星形细分顺序：维数降序，再按胞腔标识升序"""
    return sorted(
        (cid for cid, c in cx.cells.items() if c.dim >= 1),
        key=lambda cid: (-cx.cells[cid].dim, cid)
    )


def barycentric_subdivide(cx: Complex) -> Complex:
    """重心细分：依次在每个正维数胞腔处做星形细分，结果是单纯复形"""
    labels = _barycenter_labels(cx)
    current = cx
    for cid in barycentric_order(cx):
        current = stellar_subdivide(current, cid, labels[cid])
    logger.info(f"重心细分: {len(cx)} -> {len(current)} 个胞腔")
    return current


def _barycenter_labels(cx: Complex) -> Dict[CellId, VertexLabel]:
    labels: Dict[CellId, VertexLabel] = {}
    for cid in barycentric_order(cx):
        labels[cid] = barycenter_label(cx, cid, labels.values())
    return labels


# ----------------------------------------------------------------------
# 爆破规则
# ----------------------------------------------------------------------

def blowup_stratum(cx: Complex, cell_id: CellId, center: VertexLabel) -> Complex:
    """规则 1：爆破一个层 = 在对应胞腔处星形细分"""
    return stellar_subdivide(cx, cell_id, center)


def blowup_trivial(cx: Complex) -> Complex:
    """规则 2：中心不是层时对偶复形不变"""
    return cx


class ConeAttacher:
    """规则 3：把联结 c * L 上的锥粘贴到复形上

    tau 把 L 的顶点映到复形的顶点；对 L 的每个胞腔 ℓ，
    X_ℓ 是 star(c) 中顶点集为 V(c) ∪ tau(ℓ) 的那个胞腔（不唯一时由 image_cells 指定）。
    """

    def __init__(self, cx: Complex, cell_id: CellId, link: Complex,
                 tau: Dict[VertexLabel, VertexLabel], image_cells: Optional[Dict[CellId, CellId]] = None):
        self.cx = cx
        self.center = cx.cell(cell_id)
        self.link = link
        self.tau = dict(tau)
        self.image_cells = dict(image_cells or {})
        self.logger = logging.getLogger(__name__)

    def resolve(self) -> Dict[CellId, CellId]:
        """为 L 的每个胞腔确定 X_ℓ，并检查它们与面映射相容"""
        cx, c = self.cx, self.center
        star_cells = star(cx, c.id)
        images: Dict[CellId, CellId] = {}
        for lid in self.link.ids():
            ell = self.link.cells[lid]
            missing = [u for u in ell.vertices if u not in self.tau]
            if missing:
                raise UnresolvedImageCell(f"tau 未定义顶点 {missing}", {'link_cell': lid, 'vertices': missing})
            image = [self.tau[u] for u in ell.vertices]
            if len(set(image) | c.vertex_set) != len(image) + len(c.vertices):
                raise NonInjectiveOnCell(
                    f"tau 在胞腔 {lid} 上不是单射或与 c 的顶点重合",
                    {'link_cell': lid, 'image': image}
                )
            wanted = c.vertex_set | set(image)
            candidates = [x for x in cx.find(wanted) if x in star_cells]
            if lid in self.image_cells:
                chosen = self.image_cells[lid]
                if chosen not in candidates:
                    raise UnresolvedImageCell(
                        f"指定的像胞腔 {chosen} 不是 c 的顶点集为 {sorted(wanted)} 的余面",
                        {'link_cell': lid, 'cell': chosen}
                    )
            elif len(candidates) == 1:
                chosen = candidates[0]
            else:
                raise UnresolvedImageCell(
                    f"L 的胞腔 {lid} 的像有 {len(candidates)} 个候选",
                    {'link_cell': lid, 'candidates': candidates, 'vertices': sorted(wanted)}
                )
            for u in (ell.vertices if ell.dim else ()):
                sub = ell.facet_omitting(u)
                expected = cx.face_with_vertices(chosen, wanted - {self.tau[u]})
                if images[sub] != expected:
                    raise UnresolvedImageCell(
                        f"L 的胞腔 {lid} 与其面 {sub} 的像不相容",
                        {'link_cell': lid, 'facet': sub}
                    )
            images[lid] = chosen
        return images

    def image(self, images: Dict[CellId, CellId], key: JoinKey) -> CellId:
        """联结胞腔 σ * ℓ 在复形中的像"""
        sigma, lid = key
        if lid is None:
            return self.cx.face_with_vertices(self.center.id, sigma)
        wanted = set(sigma) | {self.tau[u] for u in self.link.cells[lid].vertices}
        return self.cx.face_with_vertices(images[lid], wanted)

    def join_keys(self) -> List[JoinKey]:
        """联结 c * L 的全部非空胞腔，按维数递增"""
        c = self.center
        subsets = [s for k in range(len(c.vertices) + 1) for s in combinations(c.vertices, k)]
        order = {lid: i for i, lid in enumerate(self.link.ids())}
        keys: List[JoinKey] = [(s, None) for s in subsets if s]
        keys += [(s, lid) for s in subsets for lid in self.link.ids()]

        def size(key: JoinKey) -> int:
            sigma, lid = key
            return len(sigma) + (len(self.link.cells[lid].vertices) if lid is not None else 0)

        return sorted(keys, key=lambda k: (size(k), k[0], -1 if k[1] is None else order[k[1]]))

    def facet_key(self, key: JoinKey, label: VertexLabel) -> JoinKey:
        """去掉像中的一个顶点后得到的联结胞腔"""
        sigma, lid = key
        if label in sigma:
            return tuple(v for v in sigma if v != label), lid
        ell = self.link.cells[lid]
        source = next(u for u in ell.vertices if self.tau[u] == label)
        return sigma, (ell.facet_omitting(source) if ell.dim else None)

    def attach(self, apex: VertexLabel) -> Tuple[Complex, AttachmentRecord]:
        images = self.resolve()
        builder = ComplexBuilder(self.cx)
        apex_cell = builder.add_vertex(apex)
        cone: Dict[JoinKey, CellId] = {((), None): apex_cell}
        glued: List[GluedCell] = []
        for key in self.join_keys():
            base = self.cx.cells[self.image(images, key)]
            vertices = list(base.vertices) + [apex]
            facets = [cone[self.facet_key(key, u)] for u in base.vertices] + [base.id]
            cone[key] = builder.add_cell(vertices, facets)
            glued.append(GluedCell(face=list(key[0]), link_cell=key[1], cell=cone[key]))
        record = AttachmentRecord(
            apex=apex,
            apex_cell=apex_cell,
            center=self.center.id,
            designated=self.center.vertices[0],
            glued=glued,
        )
        self.logger.info(f"粘贴锥-联结: 中心 {self.center.id}, 新增 {len(glued) + 1} 个胞腔")
        return builder.freeze(), record


def attach_cone_over_join(cx: Complex, cell_id: CellId, link: Complex,
                          tau: Dict[VertexLabel, VertexLabel], apex: Optional[VertexLabel] = None,
                          image_cells: Optional[Dict[CellId, CellId]] = None) -> Tuple[Complex, AttachmentRecord]:
    """规则 3：粘贴 e0 * (c * L)，返回新复形与粘贴记录"""
    clash = sorted(set(cx.vertex_cells) & set(link.vertex_cells))
    if clash:
        raise LabelClash(f"L 与复形有公共顶点: {clash}", {'labels': clash})
    if apex is None:
        apex = fresh_label(cx, "e0", link.vertex_cells)
    elif apex in cx.vertex_cells or apex in link.vertex_cells:
        raise LabelClash(f"锥顶 {apex} 不是新标签", {'labels': [apex]})
    return ConeAttacher(cx, cell_id, link, tau, image_cells).attach(apex)


def coned_join_pairs(cx: Complex, record: AttachmentRecord) -> CollapseSequence:
    """塌缩回原复形的配对：(e0*(σ∪a), e0*σ)，σ 不含 a，按维数降序，最后是 (e0*a, e0)"""
    a = record.designated
    by_key = {(tuple(g.face), g.link_cell): g.cell for g in record.glued}
    by_key[((), None)] = record.apex_cell
    pairs = []
    for (sigma, lid), face in by_key.items():
        if a in sigma:
            continue
        coface = by_key[(tuple(sorted(sigma + (a,))), lid)]
        pairs.append(FreePair(coface=coface, face=face))
    pairs.sort(key=lambda p: (-cx.cell(p.coface).dim, p.coface))
    return CollapseSequence(pairs=pairs)


def collapse_coned_join(cx: Complex, record: AttachmentRecord) -> Tuple[Complex, CollapseSequence]:
    """执行锥-联结的塌缩，回到粘贴前的复形"""
    sequence = coned_join_pairs(cx, record)
    return replay(cx, sequence), sequence


def cone_expansion(cx: Complex, cell_id: CellId,
                   apex: Optional[VertexLabel] = None) -> Tuple[Complex, CollapseSequence]:
    """初等扩张：沿 cl(c) 粘贴锥 p * cl(c)，并给出塌缩回去的序列"""
    expanded, record = attach_cone_over_join(cx, cell_id, empty(), {}, apex)
    return expanded, coned_join_pairs(expanded, record)


# ----------------------------------------------------------------------
# 爆破脚本
# ----------------------------------------------------------------------

def blowup_script(cx: Complex, steps: List[BlowupStep]) -> Tuple[Complex, BlowupReport]:
    """依次执行爆破步骤"""
    report = BlowupReport(vertices_before=len(cx.vertex_cells))
    current = cx
    for step in steps:
        if step.kind == BlowupKind.STRATUM:
            center = step.center or fresh_label(current, f"p{step.cell}")
            current = blowup_stratum(current, step.cell, center)
            report.stellar_steps += 1
        elif step.kind == BlowupKind.TRIVIAL:
            current = blowup_trivial(current)
            report.trivial_steps += 1
        else:
            current, record = attach_cone_over_join(
                current, step.cell, step.link or empty(), step.tau, step.center, step.image_cells
            )
            report.cone_steps += 1
            report.records.append(record)
        logger.debug(f"爆破步骤 {step.kind.value}: {len(current)} 个胞腔")
    report.vertices_after = len(current.vertex_cells)
    return current, report


def check_rule4(before: Complex, after: Complex, report: BlowupReport) -> bool:
    """只含规则 1/2 的脚本：同调不变，且顶点数恰好增加规则 1 的步数"""
    if not homology_equal(before, after):
        return False
    if report.cone_steps:
        return True
    return len(after.vertex_cells) == len(before.vertex_cells) + report.stellar_steps


def barycentric_script(cx: Complex) -> List[BlowupStep]:
    """重心细分对应的爆破脚本"""
    labels = _barycenter_labels(cx)
    return [
        BlowupStep(kind=BlowupKind.STRATUM, cell=cid, center=labels[cid])
        for cid in barycentric_order(cx)
    ]


def barycentric_by_blowups(cx: Complex) -> Complex:
    """以爆破脚本的形式执行重心细分"""
    result, report = blowup_script(cx, barycentric_script(cx))
    logger.info(f"重心细分（爆破形式）: {report.stellar_steps} 次规则 1")
    return result
