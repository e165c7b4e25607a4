"""
Test helpers - 测试辅助模块

随机复形生成器（固定种子）与公共小工具。
"""

import io
import random
import sys
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, List, Tuple
from unittest import mock

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import get_config
from src.core import from_maximal_simplices, link, star
from src.models import Complex, ComplexBuilder

EXAMPLES = Path(get_config().EXAMPLES_PATH)

# 随机语料规模
CORPUS_SIZE = 200
CONE_CASES = 60
MAX_CELLS = 40


def random_complex(rng: random.Random, max_cells: int = MAX_CELLS, parallel: bool = True) -> Complex:
    """维数不超过 3、胞腔数不超过 max_cells 的随机单纯偏序集

    parallel 为真时以一定概率复制若干正维数胞腔（同样的面），得到非单纯复形。
    """
    while True:
        n = rng.randint(3, 6)
        labels = [f"v{i}" for i in range(n)]
        simplices = [rng.sample(labels, rng.randint(1, min(4, n))) for _ in range(rng.randint(1, 4))]
        cx = from_maximal_simplices(simplices)
        if len(cx) <= max_cells - 2:
            break

    if parallel and rng.random() < 0.3:
        positive = [cid for cid in cx.ids() if cx.cells[cid].dim >= 1]
        if positive:
            builder = ComplexBuilder(cx)
            for cid in rng.sample(positive, min(len(positive), rng.randint(1, 2))):
                cell = cx.cells[cid]
                builder.add_cell(cell.vertices, cell.facets)
            cx = builder.freeze()
    return cx


def corpus(seed: int, size: int = CORPUS_SIZE, parallel: bool = True) -> Iterator[Complex]:
    rng = random.Random(seed)
    for _ in range(size):
        yield random_complex(rng, parallel=parallel)


def cone_instance(rng: random.Random, parallel: bool = True) -> Tuple[Complex, int, Complex, dict, dict]:
    """随机锥-联结粘贴实例：复形、胞腔 c、L、tau 与像胞腔

    L 由 star(c) 中若干胞腔去掉 c 的顶点得到（顶点加前缀 z_），tau 去掉前缀。
    复形可以含平行胞腔；像胞腔显式给出，且只保留面映射彼此相容的那些胞腔。
    """
    cx = random_complex(rng, max_cells=30, parallel=parallel)
    cell_id = rng.choice(cx.ids())
    center = cx.cells[cell_id].vertex_set
    above = sorted(star(cx, cell_id) - {cell_id})
    rng.shuffle(above)

    images: Dict[FrozenSet[str], int] = {}
    chosen: List[List[str]] = []
    for x in above[:rng.randint(0, 3)]:
        rest = sorted(cx.cells[x].vertex_set - center)
        proposed = {
            frozenset(sub): cx.face_with_vertices(x, center | set(sub))
            for k in range(1, len(rest) + 1) for sub in combinations(rest, k)
        }
        if any(images.get(key, value) != value for key, value in proposed.items()):
            continue
        images.update(proposed)
        chosen.append(rest)

    link_cx = from_maximal_simplices([[f"z_{u}" for u in simplex] for simplex in chosen])
    tau = {label: label[2:] for label in link_cx.vertices}
    image_cells = {
        lid: images[frozenset(tau[u] for u in link_cx.cells[lid].vertices)]
        for lid in link_cx.ids()
    }
    return cx, cell_id, link_cx, tau, image_cells


def link_cells(cx: Complex, vertex: str) -> List[int]:
    """顶点链接中的全部胞腔（链接是子复形时的标识）"""
    return list(link(cx, cx.vertex_cell(vertex)).complex.cells)


def trim(values: List[int]) -> List[int]:
    """去掉末尾的零"""
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return values


def invoke(argv: List[str], stdin: str = "") -> Tuple[int, str, str]:
    """运行命令行，返回 (退出码, 标准输出, 标准错误)"""
    from src.cli import run

    out, err = io.StringIO(), io.StringIO()
    with mock.patch('sys.stdin', io.StringIO(stdin)), redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def relabeled(cx: Complex, mapping: Dict[str, str]) -> Complex:
    """按顶点双射改名（胞腔标识不变）"""
    builder = ComplexBuilder()
    for cid in sorted(cx.cells, key=lambda c: (cx.cells[c].dim, c)):
        cell = cx.cells[cid]
        if cell.dim == 0:
            builder.add_vertex(mapping[cell.vertices[0]], cell_id=cid)
        else:
            builder.add_cell([mapping[u] for u in cell.vertices], cell.facets, cell_id=cid)
    builder.next_id = cx.next_id
    return builder.freeze()
