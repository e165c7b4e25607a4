"""
Builders - 对偶复形构造模块

由分层描述（除子、层、父映射）构造对偶复形，以及反方向的编码。
"""

import logging
from typing import Dict, List, Tuple

from ..exceptions import (
    DanglingDivisor, InvalidDescriptor, MissingParent, NonCommutingParents
)
from ..models import (
    CellId, Complex, ComplexBuilder, DivisorId, ParentLink, StrataDescriptor, Stratum
)


class DualComplexBuilder:
    """对偶复形构造器

    每个除子一个顶点，每个层一个 |J|-1 维胞腔；
    层 s 在除子 j 位置上的面是 parent(s, j) 对应的胞腔。
    """

    def __init__(self, descriptor: StrataDescriptor):
        self.descriptor = descriptor
        self.logger = logging.getLogger(__name__)
        self.index = descriptor.stratum_index()
        self.explicit = descriptor.parent_table()
        self.by_index_set = descriptor.strata_by_index_set()

    def check(self) -> None:
        """按定义逐条检查描述，报告第一个违例"""
        d = self.descriptor
        if len(set(d.divisors)) != len(d.divisors):
            raise InvalidDescriptor("除子列表有重复", {'divisors': d.divisors})
        if len(self.index) != len(d.strata):
            raise InvalidDescriptor("层标识有重复", {'strata': [s.id for s in d.strata]})
        keys = [(tuple(s.J), s.tag) for s in d.strata]
        if len(set(keys)) != len(keys):
            raise InvalidDescriptor("(J, tag) 有重复", {'strata': [s.id for s in d.strata]})

        declared = set(d.divisors)
        used = {j for s in d.strata for j in s.J}
        for s in d.strata:
            unknown = [j for j in s.J if j not in declared]
            if unknown:
                raise DanglingDivisor(f"层 {s.id} 使用了未声明的除子 {unknown}", {'stratum': s.id})
        for j in d.divisors:
            if j not in used:
                raise DanglingDivisor(f"除子 {j} 不出现在任何层中", {'divisor': j})
            if len(self.by_index_set.get((j,), [])) > 1:
                raise InvalidDescriptor(f"除子 {j} 有多个单点层", {'divisor': j})

        for link in d.parents:
            if link.stratum not in self.index or link.parent not in self.index:
                raise MissingParent("父映射引用了不存在的层", {'stratum': link.stratum})
            child = self.index[link.stratum]
            if link.drop not in child.J or self.index[link.parent].J != [j for j in child.J if j != link.drop]:
                raise MissingParent(
                    f"层 {link.stratum} 去掉 {link.drop} 后的父层 {link.parent} 指标集不符",
                    {'stratum': link.stratum, 'drop': link.drop}
                )

        for s in self._ordered():
            for j in (s.J if len(s.J) > 1 else ()):
                self.parent(s, j)
            self._check_commuting(s)

    def parent(self, stratum: Stratum, drop: DivisorId) -> Stratum:
        """parent(s, j)：显式给出，或 J∖{j} 只有唯一一个层"""
        if (stratum.id, drop) in self.explicit:
            return self.index[self.explicit[(stratum.id, drop)]]
        rest = tuple(j for j in stratum.J if j != drop)
        candidates = self.by_index_set.get(rest, [])
        if len(candidates) != 1:
            raise MissingParent(
                f"层 {stratum.id} 去掉 {drop} 后有 {len(candidates)} 个候选父层",
                {'stratum': stratum.id, 'drop': drop, 'candidates': [c.id for c in candidates]}
            )
        return candidates[0]

    def _check_commuting(self, stratum: Stratum) -> None:
        if len(stratum.J) < 3:
            return
        for a in stratum.J:
            for b in stratum.J:
                if a >= b:
                    continue
                left = self.parent(self.parent(stratum, a), b)
                right = self.parent(self.parent(stratum, b), a)
                if left.id != right.id:
                    raise NonCommutingParents(
                        f"层 {stratum.id} 的父映射在 {a}, {b} 上不交换",
                        {'stratum': stratum.id, 'divisors': [a, b]}
                    )

    def _ordered(self) -> List[Stratum]:
        return sorted(self.descriptor.strata, key=lambda s: (len(s.J), s.J, s.tag))

    def build(self) -> Tuple[Complex, Dict[str, CellId]]:
        """构造对偶复形，并返回层标识到胞腔标识的映射"""
        self.check()
        builder = ComplexBuilder()
        cells: Dict[str, CellId] = {}
        for s in self._ordered():
            if len(s.J) == 1:
                cells[s.id] = builder.add_vertex(s.J[0])
            else:
                cells[s.id] = builder.add_cell(s.J, [cells[self.parent(s, j).id] for j in s.J])
        cx = builder.freeze()
        self.logger.info(f"对偶复形: {len(self.descriptor.divisors)} 个除子, {len(cx)} 个胞腔")
        return cx, cells


def dual_complex_map(descriptor: StrataDescriptor) -> Tuple[Complex, Dict[str, CellId]]:
    """构造对偶复形并返回层到胞腔的映射"""
    return DualComplexBuilder(descriptor).build()


def dual_complex(descriptor: StrataDescriptor) -> Complex:
    """对偶复形 D(Z)"""
    return dual_complex_map(descriptor)[0]


def strata_of(cx: Complex) -> StrataDescriptor:
    """把复形编码为分层描述（每个胞腔一个层，层标识为 s<胞腔标识>）"""
    strata: List[Stratum] = []
    parents: List[ParentLink] = []
    for cid in cx.ids():
        cell = cx.cells[cid]
        twins = cx.find(cell.vertices)
        tag = "" if len(twins) == 1 else str(twins.index(cid))
        strata.append(Stratum(id=f"s{cid}", J=list(cell.vertices), tag=tag))
        if cell.dim == 0:
            continue
        for j, facet in zip(cell.vertices, cell.facets):
            # 父层唯一时省略
            if len(cx.find(cx.cells[facet].vertices)) > 1:
                parents.append(ParentLink(stratum=f"s{cid}", drop=j, parent=f"s{facet}"))
    return StrataDescriptor(format_version=1, divisors=cx.vertices, strata=strata, parents=parents)
