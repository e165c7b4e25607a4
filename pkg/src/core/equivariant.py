"""
Equivariant Collapse - 等变塌缩模块

有限自同构群作用下的塌缩：每一步同时塌缩一整条自由对轨道，
轨道中各自由对的胞腔必须两两不交。
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from config import get_config
from ..exceptions import (
    GroupTooLarge, NotAnAutomorphism, NotFreeAtStep, NotInvariantInstruction, OverlappingOrbit
)
from ..models import CellId, CollapseSequence, Complex, FreePair, GroupAction, MmpInstruction
from .collapse import CollapseState, mmp_pairs
from .complex_ops import extend_vertex_map

logger = logging.getLogger(__name__)

CellMap = Dict[CellId, CellId]


def _freeze(element: CellMap) -> Tuple[Tuple[CellId, CellId], ...]:
    return tuple(sorted(element.items()))


def group_closure(cx: Complex, action: GroupAction, order_cap: Optional[int] = None) -> List[CellMap]:
    """生成元延拓为胞腔自同构后求闭包（含单位元）"""
    cap = order_cap if order_cap is not None else get_config().get_search_config()['group_order_cap']
    generators: List[CellMap] = []
    for i, vertex_map in enumerate(action.generators):
        # 未列出的顶点视为不动
        full = {label: label for label in cx.vertices}
        full.update(vertex_map)
        cell_map = extend_vertex_map(cx, cx, full, action.cell_map_for(i))
        if cell_map is None:
            raise NotAnAutomorphism(f"第 {i} 个生成元不能延拓为自同构", {'generator': i})
        generators.append(cell_map)

    identity = {cid: cid for cid in cx.cells}
    elements = {_freeze(identity): identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for element in frontier:
            for gen in generators:
                product = {cid: gen[image] for cid, image in element.items()}
                key = _freeze(product)
                if key in elements:
                    continue
                elements[key] = product
                next_frontier.append(product)
                if len(elements) > cap:
                    raise GroupTooLarge(f"群的阶超过上限 {cap}", {'cap': cap})
        frontier = next_frontier
    logger.debug(f"群闭包的阶: {len(elements)}")
    return [elements[key] for key in sorted(elements)]


def is_invariant(group: List[CellMap], cell_ids: Iterable[CellId]) -> bool:
    """胞腔集合是否在群作用下整体不变"""
    cells = set(cell_ids)
    return all({g[cid] for cid in cells} == cells for g in group)


def pair_orbit(group: List[CellMap], pair: FreePair) -> List[FreePair]:
    """自由对的轨道（去重，按余面标识排序）"""
    seen: Set[Tuple[CellId, CellId]] = set()
    orbit = []
    for g in group:
        image = (g[pair.coface], g[pair.face])
        if image not in seen:
            seen.add(image)
            orbit.append(FreePair(coface=image[0], face=image[1]))
    return sorted(orbit, key=lambda p: (p.coface, p.face))


def check_disjoint(pairs: List[FreePair]) -> None:
    """轨道中各自由对的胞腔两两不交"""
    used: Set[CellId] = set()
    for pair in pairs:
        cells = {pair.coface, pair.face}
        if cells & used:
            raise OverlappingOrbit(
                f"轨道中的自由对 ({pair.coface}, {pair.face}) 与其他自由对共用胞腔",
                {'pairs': [[p.coface, p.face] for p in pairs]}
            )
        used |= cells


class EquivariantCollapser:
    """按轨道执行塌缩"""

    def __init__(self, cx: Complex, action: GroupAction, order_cap: Optional[int] = None):
        self.cx = cx
        self.group = group_closure(cx, action, order_cap)
        self.state = CollapseState(cx)
        self.sequence = CollapseSequence()
        self.logger = logging.getLogger(__name__)

    def _execute(self, orbit: List[FreePair]) -> None:
        check_disjoint(orbit)
        for pair in orbit:
            if not self.state.is_free(pair):
                step = len(self.sequence)
                raise NotFreeAtStep(
                    step,
                    f"轨道步中的 ({pair.coface}, {pair.face}) 不是自由对",
                    {'coface': pair.coface, 'face': pair.face}
                )
            self.state.remove(pair)
            self.sequence.pairs.append(pair)
        self.sequence.orbits.append(len(orbit))
        self.logger.debug(f"轨道塌缩: {len(orbit)} 对")

    def greedy(self) -> Tuple[Complex, CollapseSequence]:
        """反复取排序最前的自由对并塌缩其整条轨道"""
        while True:
            candidates = self.state.free_pairs()
            if not candidates:
                break
            self._execute(pair_orbit(self.group, candidates[0]))
        return self._finish()

    def instructed(self, instructions: List[MmpInstruction]) -> Tuple[Complex, CollapseSequence]:
        """一组互为轨道的 MMP 指令：M 集合两两不交，按维数降序逐轨道执行"""
        pairs: List[FreePair] = []
        used: Set[CellId] = set()
        for instruction in instructions:
            own = mmp_pairs(self.cx, instruction)
            cells = {cid for pair in own for cid in pair.cells()}
            if cells & used:
                raise OverlappingOrbit(
                    f"指令 v0={instruction.v0} 的 M 集合与其他指令相交",
                    {'v0': instruction.v0, 'cells': sorted(cells & used)}
                )
            used |= cells
            pairs.extend(own)
        self._check_invariant(instructions)

        remaining = {pair.cells(): pair for pair in pairs}
        for pair in sorted(pairs, key=lambda p: (-self.cx.cells[p.coface].dim, p.coface)):
            if pair.cells() not in remaining:
                continue
            orbit = [p for p in pair_orbit(self.group, pair) if p.cells() in remaining]
            for p in orbit:
                del remaining[p.cells()]
            self._execute(orbit)
        return self._finish()

    def _check_invariant(self, instructions: List[MmpInstruction]) -> None:
        keys: Set[Tuple[str, FrozenSet[CellId]]] = {instr.key() for instr in instructions}
        for g in self.group:
            for instr in instructions:
                v0_cell = self.cx.vertex_cell(instr.v0)
                image_v0 = self.cx.cells[g[v0_cell]].vertices[0]
                image = (image_v0, frozenset(g[w] for w in instr.contracted))
                if image not in keys:
                    raise NotInvariantInstruction(
                        f"指令 v0={instr.v0} 的像 v0={image_v0} 不在指令集合中",
                        {'v0': instr.v0, 'image_v0': image_v0}
                    )

    def _finish(self) -> Tuple[Complex, CollapseSequence]:
        result = self.state.to_complex()
        self.logger.info(
            f"等变塌缩: {len(self.sequence.orbits)} 个轨道步, {len(self.sequence)} 对"
        )
        return result, self.sequence


def equivariant_collapse(cx: Complex, action: GroupAction,
                         instructions: Optional[List[MmpInstruction]] = None,
                         order_cap: Optional[int] = None) -> Tuple[Complex, CollapseSequence]:
    """等变塌缩；instructions 为 None 时使用贪心模式"""
    collapser = EquivariantCollapser(cx, action, order_cap)
    if instructions is None:
        return collapser.greedy()
    return collapser.instructed(instructions)
