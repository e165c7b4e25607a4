"""
Collapse - 塌缩模块

自由对、初等塌缩、序列重放、贪心塌缩、MMP 步骤塌缩（星/链接配对）
以及带预算的可塌缩性搜索。

所有塌缩都在同一个存活胞腔集合上进行，胞腔标识保持不变，
因此任何返回的 CollapseSequence 都能在原复形上重放。
"""

import logging
from typing import Any, Callable, Collection, FrozenSet, Iterable, List, Optional, Set, Tuple

from config import get_config
from ..exceptions import (
    Ambiguous, NotASubcomplex, NotFree, NotFreeAtStep, NotInLink,
    NotUpwardClosed
)
from ..models import (
    CellId, CollapseSequence, Complex, FreePair, MmpInstruction, MmpStep,
    MmpStepKind, MmpStepResult, Verdict, VerdictKind
)
from .complex_ops import delete_open_cell

logger = logging.getLogger(__name__)


class CollapseState:
    """塌缩状态：原复形加上存活胞腔集合"""

    def __init__(self, cx: Complex, alive: Optional[Iterable[CellId]] = None):
        self.cx = cx
        self.alive: Set[CellId] = set(cx.cells) if alive is None else set(alive)

    def alive_cofaces(self, cell_id: CellId) -> List[CellId]:
        return [u for u in self.cx.cofaces(cell_id) if u in self.alive]

    def is_free(self, pair: FreePair) -> bool:
        """w 是 v 的面，且 w 在存活胞腔中只有 v 一个余面"""
        if pair.coface not in self.alive or pair.face not in self.alive:
            return False
        if pair.face not in self.cx.cells[pair.coface].facets:
            return False
        return self.alive_cofaces(pair.face) == [pair.coface]

    def free_pairs(self, protected: Collection[CellId] = ()) -> List[FreePair]:
        """全部自由对，按 (维数降序, 余面标识, 面标识) 排序；不触碰 protected 中的胞腔"""
        pairs = []
        for face in self.alive:
            if face in protected:
                continue
            cofaces = self.alive_cofaces(face)
            if len(cofaces) == 1 and cofaces[0] not in protected:
                pairs.append(FreePair(coface=cofaces[0], face=face))
        pairs.sort(key=lambda p: (-self.cx.cells[p.coface].dim, p.coface, p.face))
        return pairs

    def remove(self, pair: FreePair) -> None:
        self.alive.discard(pair.coface)
        self.alive.discard(pair.face)

    def signature(self) -> FrozenSet[CellId]:
        return frozenset(self.alive)

    def euler_characteristic(self) -> int:
        return sum((-1) ** self.cx.cells[cid].dim for cid in self.alive)

    def to_complex(self) -> Complex:
        return self.cx.subcomplex(self.alive)


# ----------------------------------------------------------------------
# 初等塌缩
# ----------------------------------------------------------------------

def free_pairs(cx: Complex) -> List[FreePair]:
    """复形中的全部自由对（确定性顺序）"""
    return CollapseState(cx).free_pairs()


def elementary_collapse(cx: Complex, pair: FreePair) -> Complex:
    """删除一个自由对的两个胞腔"""
    state = CollapseState(cx)
    if not state.is_free(pair):
        raise NotFree(
            f"({pair.coface}, {pair.face}) 不是自由对",
            {'coface': pair.coface, 'face': pair.face}
        )
    state.remove(pair)
    return state.to_complex()


def _replay_state(state: CollapseState, sequence: CollapseSequence) -> CollapseState:
    for step, pair in enumerate(sequence.pairs):
        if not state.is_free(pair):
            raise NotFreeAtStep(
                step,
                f"第 {step} 步 ({pair.coface}, {pair.face}) 不是自由对",
                {'coface': pair.coface, 'face': pair.face}
            )
        logger.debug(f"塌缩 ({pair.coface}, {pair.face})")
        state.remove(pair)
    return state


def replay(cx: Complex, sequence: CollapseSequence) -> Complex:
    """按顺序执行塌缩序列"""
    return _replay_state(CollapseState(cx), sequence).to_complex()


def greedy_collapse(cx: Complex) -> Tuple[Complex, CollapseSequence]:
    """反复执行排序最前的自由对，直到没有自由对"""
    state = CollapseState(cx)
    pairs: List[FreePair] = []
    while True:
        candidates = state.free_pairs()
        if not candidates:
            break
        state.remove(candidates[0])
        pairs.append(candidates[0])
    logger.info(f"贪心塌缩: {len(pairs)} 步, 剩余 {len(state.alive)} 个胞腔")
    return state.to_complex(), CollapseSequence(pairs=pairs)


# ----------------------------------------------------------------------
# MMP 步骤
# ----------------------------------------------------------------------

def star_partner(cx: Complex, v0: str, cell_id: CellId) -> CellId:
    """链接胞腔 w 在星中的配对胞腔 ⟨v0, w⟩"""
    cell = cx.cell(cell_id)
    if v0 in cell.vertex_set:
        raise NotInLink(f"胞腔 {cell_id} 含有顶点 {v0}", {'cell': cell_id, 'v0': v0})
    partners = [u for u in cx.cofaces(cell_id) if v0 in cx.cells[u].vertex_set]
    if not partners:
        raise NotInLink(f"胞腔 {cell_id} 不在 link({v0}) 中", {'cell': cell_id, 'v0': v0})
    if len(partners) > 1:
        raise Ambiguous(
            f"胞腔 {cell_id} 与 {v0} 张成多个胞腔 {partners}",
            {'cell': cell_id, 'v0': v0, 'candidates': partners}
        )
    return partners[0]


def _in_link(cx: Complex, v0: str, cell_id: CellId) -> bool:
    cell = cx.cells[cell_id]
    return v0 not in cell.vertex_set and any(v0 in cx.cells[u].vertex_set for u in cx.cofaces(cell_id))


def mmp_pairs(cx: Complex, instruction: MmpInstruction,
              tie_key: Optional[Callable[[FreePair], Any]] = None) -> List[FreePair]:
    """校验 MMP 指令并给出配对顺序：⟨v0,w⟩ 维数降序，同维按 tie_key（默认胞腔标识）"""
    cx.vertex_cell(instruction.v0)
    contracted = set(instruction.contracted)
    for w in sorted(contracted):
        cx.cell(w)
    pairs = [FreePair(coface=star_partner(cx, instruction.v0, w), face=w) for w in sorted(contracted)]

    for w in sorted(contracted):
        for u in cx.cofaces(w):
            if u not in contracted and _in_link(cx, instruction.v0, u):
                raise NotUpwardClosed(
                    f"被收缩胞腔 {w} 的余面 {u} 在链接中但未被收缩",
                    {'cell': w, 'coface': u}
                )

    key = tie_key or (lambda p: p.coface)
    pairs.sort(key=lambda p: (-cx.cells[p.coface].dim, key(p)))
    return pairs


def mmp_collapse(cx: Complex, instruction: MmpInstruction,
                 tie_key: Optional[Callable[[FreePair], Any]] = None) -> Tuple[Complex, CollapseSequence]:
    """执行一个 MMP 步骤：把 M = contracted ∪ {⟨v0,w⟩} 成对塌缩掉"""
    sequence = CollapseSequence(pairs=mmp_pairs(cx, instruction, tie_key))
    result = replay(cx, sequence)
    logger.info(
        f"MMP 塌缩 v0={instruction.v0}: {len(sequence)} 对, "
        f"{len(cx)} -> {len(result)} 个胞腔"
    )
    return result, sequence


def mmp_program(cx: Complex, steps: List[MmpStep]) -> Tuple[Complex, List[MmpStepResult]]:
    """依次执行 MMP 程序：塌缩步骤或删除单个极大胞腔的步骤"""
    results: List[MmpStepResult] = []
    current = cx
    for step in steps:
        before = current.euler_characteristic()
        if step.kind == MmpStepKind.COLLAPSE:
            current, sequence = mmp_collapse(current, step.instruction)
            results.append(MmpStepResult(
                kind=step.kind, sequence=sequence,
                euler_before=before, euler_after=current.euler_characteristic()
            ))
        else:
            current = delete_open_cell(current, step.cell)
            results.append(MmpStepResult(
                kind=step.kind, removed=step.cell,
                euler_before=before, euler_after=current.euler_characteristic()
            ))
    return current, results


# ----------------------------------------------------------------------
# 搜索
# ----------------------------------------------------------------------

def match_cells(cx: Complex, other: Complex) -> Set[CellId]:
    """按顶点集把 other 的胞腔对应到 cx 中的胞腔"""
    matched: Set[CellId] = set()
    for cell in other.cells.values():
        candidates = cx.find(cell.vertices)
        if not candidates:
            raise NotASubcomplex(f"顶点集 {list(cell.vertices)} 不在复形中", {'vertices': list(cell.vertices)})
        if len(candidates) > 1:
            raise Ambiguous(
                f"顶点集 {list(cell.vertices)} 对应多个胞腔 {candidates}",
                {'vertices': list(cell.vertices), 'candidates': candidates}
            )
        matched.add(candidates[0])
    return matched


def _search(cx: Complex, target: FrozenSet[CellId], goal: Callable[[FrozenSet[CellId]], bool],
            target_euler: int, budget: Optional[int]) -> Verdict:
    """带记忆化的深度优先回溯搜索"""
    budget = budget if budget is not None else get_config().get_search_config()['budget']
    start = CollapseState(cx)
    initial = start.signature()
    if goal(initial):
        return Verdict(kind=VerdictKind.COLLAPSIBLE, sequence=CollapseSequence(), nodes=0)
    if not start.free_pairs(target):
        return Verdict(kind=VerdictKind.NO_FREE_PAIR, nodes=0)
    if start.euler_characteristic() != target_euler:
        # 塌缩保持欧拉示性数
        return Verdict(kind=VerdictKind.NOT_COLLAPSIBLE, nodes=0)

    seen = {initial}
    stack: List[Tuple[FrozenSet[CellId], List[FreePair]]] = [(initial, [])]
    nodes = 0
    while stack:
        if nodes >= budget:
            logger.info(f"搜索达到预算 {budget}")
            return Verdict(kind=VerdictKind.INCONCLUSIVE, nodes=nodes)
        alive, path = stack.pop()
        nodes += 1
        candidates = CollapseState(cx, alive).free_pairs(target)
        for pair in reversed(candidates):
            successor = alive - {pair.coface, pair.face}
            if goal(successor):
                logger.info(f"搜索成功: {len(path) + 1} 步, 展开 {nodes} 个节点")
                return Verdict(
                    kind=VerdictKind.COLLAPSIBLE,
                    sequence=CollapseSequence(pairs=path + [pair]),
                    nodes=nodes
                )
            if successor not in seen:
                seen.add(successor)
                stack.append((successor, path + [pair]))
    return Verdict(kind=VerdictKind.NOT_COLLAPSIBLE, nodes=nodes)


def collapsible_search(cx: Complex, budget: Optional[int] = None) -> Verdict:
    """判定复形能否塌缩到一个点"""

    def is_point(alive: FrozenSet[CellId]) -> bool:
        return len(alive) == 1 and cx.cells[next(iter(alive))].dim == 0

    return _search(cx, frozenset(), is_point, 1, budget)


def collapses_to(cx: Complex, target: Iterable[CellId], budget: Optional[int] = None) -> Verdict:
    """判定复形能否塌缩到给定子复形（搜索过程中不删除目标胞腔）"""
    target = frozenset(target)
    if not cx.is_subcomplex(target):
        raise NotASubcomplex("目标不是子复形", {'cells': sorted(target)})
    target_euler = sum((-1) ** cx.cells[cid].dim for cid in target)
    return _search(cx, target, lambda alive: alive == target, target_euler, budget)
