#!/usr/bin/env python3
"""
Complex Core Tests - 复形核心测试

测试单纯偏序集的构造、校验、星/链接、联结/锥、删除与同构判定。
"""

import sys
import unittest
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core import (
    add_vertex, attach_cell, closed_star, cone, connected_components, delete_open_cell, empty,
    extend_vertex_map, f_vector, faces, find_cell, from_maximal_simplices, is_isomorphic,
    is_simplicial, join, link, point, star, subcomplex, summary, verify
)
from src.data import boundary, simplex, two_edge_circle
from src.exceptions import (
    DuplicateLabel, FacetMismatch, HasCofaces, IncoherentBoundary, LabelClash,
    NotASubcomplex, UnknownCell
)
from src.models import ComplexBuilder


class TestConstruction(unittest.TestCase):
    """构造与校验测试类"""

    def test_triangle_from_maximal_simplices(self):
        """测试由极大单形构造三角形"""
        cx = from_maximal_simplices([["c", "a", "b"]])
        self.assertEqual(cx.vertices, ["a", "b", "c"])
        self.assertEqual(f_vector(cx), [3, 3, 1])
        self.assertEqual(cx.euler_characteristic(), 1)
        self.assertEqual(verify(cx), [])
        self.assertTrue(is_simplicial(cx))

    def test_empty_complex(self):
        cx = empty()
        self.assertTrue(cx.is_empty())
        self.assertEqual(cx.dim, -1)
        self.assertEqual(f_vector(cx), [])

    def test_duplicate_label(self):
        """测试重复顶点标签"""
        with self.assertRaises(DuplicateLabel):
            add_vertex(point("a"), "a")

    def test_attach_cell_returns_new_id(self):
        cx = add_vertex(point("a"), "b")
        result, cell_id = attach_cell(cx, ["b", "a"], [cx.vertex_cell("a"), cx.vertex_cell("b")])
        self.assertEqual(result.cells[cell_id].vertices, ("a", "b"))
        self.assertEqual(result.cells[cell_id].facets, (cx.vertex_cell("b"), cx.vertex_cell("a")))
        # 原复形不变
        self.assertEqual(len(cx), 2)

    def test_attach_cell_facet_mismatch(self):
        """面的顶点与位置不符"""
        cx = add_vertex(point("a"), "b")
        with self.assertRaises(FacetMismatch):
            attach_cell(cx, ["a", "b"], [cx.vertex_cell("a"), cx.vertex_cell("b")])
        with self.assertRaises(FacetMismatch):
            attach_cell(cx, ["a", "b"], [cx.vertex_cell("a")])

    def test_attach_cell_unknown_facet(self):
        cx = add_vertex(point("a"), "b")
        with self.assertRaises(UnknownCell):
            attach_cell(cx, ["a", "b"], [cx.vertex_cell("b"), 42])

    def test_incoherent_boundary(self):
        """四面体的两个三角面用了 ab 的不同平行边"""
        builder = ComplexBuilder()
        v = {label: builder.add_vertex(label) for label in "abcd"}
        ab1 = builder.add_cell(["a", "b"], [v["b"], v["a"]])
        ab2 = builder.add_cell(["a", "b"], [v["b"], v["a"]])
        ac = builder.add_cell(["a", "c"], [v["c"], v["a"]])
        ad = builder.add_cell(["a", "d"], [v["d"], v["a"]])
        bc = builder.add_cell(["b", "c"], [v["c"], v["b"]])
        bd = builder.add_cell(["b", "d"], [v["d"], v["b"]])
        cd = builder.add_cell(["c", "d"], [v["d"], v["c"]])
        abc = builder.add_cell(["a", "b", "c"], [bc, ac, ab1])
        abd = builder.add_cell(["a", "b", "d"], [bd, ad, ab2])
        acd = builder.add_cell(["a", "c", "d"], [cd, ad, ac])
        bcd = builder.add_cell(["b", "c", "d"], [cd, bd, bc])
        with self.assertRaises(IncoherentBoundary):
            builder.add_cell(["a", "b", "c", "d"], [bcd, acd, abd, abc])

    def test_two_edge_circle_is_regular_but_not_simplicial(self):
        cx = two_edge_circle()
        self.assertEqual(verify(cx), [])
        self.assertFalse(is_simplicial(cx))
        self.assertEqual(cx.euler_characteristic(), 0)
        self.assertEqual(len(find_cell(cx, ["v1", "v2"])), 2)

    def test_validate_reports_broken_complex(self):
        cx = from_maximal_simplices([["a", "b"]])
        broken = cx.model_copy(update={'vertex_cells': {"a": cx.vertex_cell("a")}})
        self.assertTrue(verify(broken))
        with self.assertRaises(IncoherentBoundary):
            broken.validate()


class TestIncidence(unittest.TestCase):
    """星、链接与子复形测试类"""

    def test_star_and_closed_star(self):
        cx = simplex(2)
        edge = find_cell(cx, ["v0", "v1"])[0]
        triangle = find_cell(cx, ["v0", "v1", "v2"])[0]
        self.assertEqual(star(cx, edge), {edge, triangle})
        self.assertEqual(len(closed_star(cx, edge)), 7)

    def test_link_of_cone_apex(self):
        """锥顶的链接是底"""
        cx = cone(boundary(2), "x")
        result = link(cx, cx.vertex_cell("x"))
        self.assertEqual(result.complex.vertices, ["v0", "v1", "v2"])
        self.assertEqual(f_vector(result.complex), [3, 3])
        self.assertTrue(result.ambient_simplicial)
        for cid, origin in result.origin.items():
            self.assertIn("x", cx.cells[origin].vertex_set)
            self.assertEqual(len(cx.cells[origin].vertices), len(cx.cells[cid].vertices) + 1)

    def test_link_in_two_edge_circle(self):
        """非单纯情形：链接是两个不同的点"""
        cx = two_edge_circle()
        result = link(cx, cx.vertex_cell("v1"))
        self.assertEqual(f_vector(result.complex), [2])
        self.assertFalse(result.ambient_simplicial)
        edges = find_cell(cx, ["v1", "v2"])
        self.assertEqual(result.complex.vertices, sorted(f"v2@{e}" for e in edges))

    def test_link_requires_vertex(self):
        cx = simplex(1)
        with self.assertRaises(UnknownCell):
            link(cx, find_cell(cx, ["v0", "v1"])[0])

    def test_faces_and_subcomplex(self):
        cx = simplex(2)
        triangle = find_cell(cx, ["v0", "v1", "v2"])[0]
        self.assertEqual(len(faces(cx, triangle)), 7)
        edge = find_cell(cx, ["v0", "v1"])[0]
        with self.assertRaises(NotASubcomplex):
            subcomplex(cx, [edge])
        sub = subcomplex(cx, faces(cx, edge))
        self.assertEqual(f_vector(sub), [2, 1])
        self.assertEqual(sub.next_id, cx.next_id)

    def test_connected_components(self):
        cx = from_maximal_simplices([["a", "b"], ["c"], ["d", "e", "f"]])
        self.assertEqual(connected_components(cx), [["a", "b"], ["c"], ["d", "e", "f"]])
        self.assertEqual(summary(cx)['components'], 3)

    def test_summary(self):
        info = summary(boundary(3))
        self.assertEqual(info['dim'], 2)
        self.assertEqual(info['f_vector'], [4, 6, 4])
        self.assertEqual(info['euler_characteristic'], 2)
        self.assertTrue(info['simplicial'])


class TestJoinAndDelete(unittest.TestCase):
    """联结、锥与删除测试类"""

    def test_join_of_points_is_edge(self):
        cx = join(point("a"), point("b"))
        self.assertEqual(f_vector(cx), [2, 1])
        self.assertIsNotNone(is_isomorphic(cx, simplex(1)))

    def test_cone_over_simplex(self):
        cx = cone(simplex(1), "x")
        self.assertEqual(verify(cx), [])
        self.assertIsNotNone(is_isomorphic(cx, simplex(2)))

    def test_join_of_non_simplicial(self):
        cx = cone(two_edge_circle(), "x")
        self.assertEqual(verify(cx), [])
        self.assertEqual(f_vector(cx), [3, 4, 2])
        self.assertEqual(cx.euler_characteristic(), 1)

    def test_join_label_clash(self):
        with self.assertRaises(LabelClash):
            join(simplex(1), point("v0"))

    def test_delete_open_cell(self):
        """删除极大胞腔：χ 改变 (-1)^dim"""
        cx = simplex(2)
        triangle = find_cell(cx, ["v0", "v1", "v2"])[0]
        result = delete_open_cell(cx, triangle)
        self.assertEqual(result.euler_characteristic(), 0)
        self.assertNotIn(triangle, result)
        # 标识不复用
        self.assertEqual(result.next_id, cx.next_id)

    def test_delete_cell_with_cofaces(self):
        cx = simplex(2)
        with self.assertRaises(HasCofaces):
            delete_open_cell(cx, find_cell(cx, ["v0", "v1"])[0])


class TestIsomorphism(unittest.TestCase):
    """同构判定测试类"""

    def test_relabelled_triangle(self):
        a = from_maximal_simplices([["a", "b", "c"]])
        b = from_maximal_simplices([["x", "y", "z"]])
        mapping = is_isomorphic(a, b)
        self.assertIsNotNone(mapping)
        self.assertEqual(sorted(mapping), ["a", "b", "c"])
        self.assertEqual(sorted(mapping.values()), ["x", "y", "z"])

    def test_identity_preferred(self):
        cx = boundary(3)
        self.assertEqual(is_isomorphic(cx, boundary(3)), {label: label for label in cx.vertices})

    def test_not_isomorphic(self):
        self.assertIsNone(is_isomorphic(boundary(2), simplex(2)))
        self.assertIsNone(is_isomorphic(two_edge_circle(), boundary(2)))

    def test_extend_vertex_map_with_fixed_cells(self):
        """平行边的对换需要显式指定胞腔像"""
        cx = two_edge_circle()
        e1, e2 = find_cell(cx, ["v1", "v2"])
        identity = {"v1": "v1", "v2": "v2"}
        swapped = extend_vertex_map(cx, cx, identity, {e1: e2, e2: e1})
        self.assertIsNotNone(swapped)
        self.assertEqual(swapped[e1], e2)

    def test_extend_vertex_map_rejects_non_automorphism(self):
        cx = from_maximal_simplices([["a", "b"], ["b", "c"]])
        self.assertIsNone(extend_vertex_map(cx, cx, {"a": "b", "b": "a", "c": "c"}))


if __name__ == '__main__':
    unittest.main()
