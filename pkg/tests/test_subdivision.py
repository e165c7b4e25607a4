#!/usr/bin/env python3
"""
Subdivision Tests - 细分与爆破测试

测试星形细分、重心细分、锥-联结粘贴及其塌缩证书、爆破脚本。
"""

import sys
import unittest
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core import (
    attach_cone_over_join, barycentric_by_blowups, barycentric_script, barycentric_subdivide, betti_Q,
    blowup_script, blowup_stratum, blowup_trivial, check_rule4, collapse_coned_join,
    cone_expansion, empty, find_cell, from_maximal_simplices, homology_equal, is_isomorphic,
    is_simplicial, point, replay, stellar_subdivide, verify
)
from src.data import boundary, catalog, simplex, two_edge_circle
from src.exceptions import (
    DimZeroCenter, LabelClash, NonInjectiveOnCell, UnknownCell, UnresolvedImageCell
)
from src.models import BlowupKind, BlowupStep, ComplexBuilder


def parallel_triangles():
    """两个顶点集同为 abc 的三角形粘在同样的三条边上（2 维球面）"""
    base = from_maximal_simplices([["a", "b", "c"]])
    triangle = base.cells[find_cell(base, ["a", "b", "c"])[0]]
    builder = ComplexBuilder(base)
    builder.add_cell(triangle.vertices, triangle.facets)
    return builder.freeze()


class TestStellarSubdivision(unittest.TestCase):
    """星形细分测试类"""

    def test_subdivide_edge(self):
        cx = simplex(1)
        edge = find_cell(cx, ["v0", "v1"])[0]
        result = stellar_subdivide(cx, edge, "p")
        self.assertEqual(result.vertices, ["p", "v0", "v1"])
        self.assertEqual(result.f_vector(), [3, 2])
        self.assertNotIn(edge, result)
        # 标识不复用
        self.assertGreater(result.next_id, cx.next_id)

    def test_subdivide_triangle_edge(self):
        """细分三角形的一条边：三角形一分为二"""
        cx = simplex(2)
        edge = find_cell(cx, ["v0", "v1"])[0]
        result = stellar_subdivide(cx, edge, "p")
        self.assertEqual(result.f_vector(), [4, 5, 2])
        self.assertEqual(verify(result), [])
        self.assertTrue(homology_equal(cx, result))

    def test_subdivide_non_simplicial(self):
        cx = two_edge_circle()
        e1, _ = find_cell(cx, ["v1", "v2"])
        result = stellar_subdivide(cx, e1, "p")
        self.assertEqual(result.f_vector(), [3, 3])
        self.assertTrue(homology_equal(cx, result))

    def test_subdivide_parallel_triangles(self):
        """两个三角形沿同样三条边粘成球面：两侧内部各自细分"""
        pillow = parallel_triangles()
        self.assertEqual(pillow.euler_characteristic(), 2)

        edge = find_cell(pillow, ["a", "b"])[0]
        result = stellar_subdivide(pillow, edge, "p")
        self.assertEqual(verify(result), [])
        self.assertEqual(result.f_vector(), [4, 6, 4])
        self.assertEqual(len(find_cell(result, ["c", "p"])), 2)
        self.assertEqual(len(find_cell(result, ["a", "c", "p"])), 2)
        self.assertEqual(betti_Q(result), [1, 0, 1])
        self.assertTrue(homology_equal(pillow, result))

    def test_blowup_stratum_on_parallel_triangles(self):
        pillow = parallel_triangles()
        result = blowup_stratum(pillow, find_cell(pillow, ["b", "c"])[0], "q")
        self.assertEqual(result.euler_characteristic(), 2)
        self.assertTrue(homology_equal(pillow, result))

    def test_dim_zero_center(self):
        cx = simplex(1)
        with self.assertRaises(DimZeroCenter):
            stellar_subdivide(cx, cx.vertex_cell("v0"), "p")

    def test_label_clash(self):
        cx = simplex(1)
        with self.assertRaises(LabelClash):
            stellar_subdivide(cx, find_cell(cx, ["v0", "v1"])[0], "v0")

    def test_unknown_cell(self):
        with self.assertRaises(UnknownCell):
            stellar_subdivide(simplex(1), 99, "p")


class TestBarycentricSubdivision(unittest.TestCase):
    """重心细分测试类"""

    def test_triangle(self):
        result = barycentric_subdivide(simplex(2))
        self.assertEqual(result.f_vector(), [7, 12, 6])
        self.assertTrue(is_simplicial(result))
        self.assertIn("<v0|v1|v2>", result.vertices)
        self.assertIn("<v0|v1>", result.vertices)

    def test_two_edge_circle_becomes_simplicial(self):
        cx = two_edge_circle()
        e1, e2 = find_cell(cx, ["v1", "v2"])
        result = barycentric_subdivide(cx)
        self.assertTrue(is_simplicial(result))
        self.assertEqual(result.f_vector(), [4, 4])
        self.assertIn(f"<v1|v2>#{e1}", result.vertices)
        self.assertIn(f"<v1|v2>#{e2}", result.vertices)

    def test_parallel_triangles(self):
        result = barycentric_subdivide(parallel_triangles())
        self.assertTrue(is_simplicial(result))
        self.assertEqual(result.f_vector(), [8, 18, 12])

    def test_preserves_homology(self):
        for cx in (boundary(3), catalog('rp2'), two_edge_circle(), parallel_triangles()):
            self.assertTrue(homology_equal(cx, barycentric_subdivide(cx)))

    def test_blowup_form_is_identical(self):
        cx = catalog('fig3_left')
        self.assertEqual(barycentric_by_blowups(cx).cells, barycentric_subdivide(cx).cells)

    def test_script_order(self):
        cx = simplex(2)
        steps = barycentric_script(cx)
        dims = [cx.cells[step.cell].dim for step in steps]
        self.assertEqual(dims, [2, 1, 1, 1])


class TestConeAttachment(unittest.TestCase):
    """锥-联结粘贴测试类"""

    def setUp(self):
        self.cx = from_maximal_simplices([["a", "v", "w"]])
        self.edge = find_cell(self.cx, ["a", "v"])[0]

    def test_attach_and_collapse_back(self):
        """三角形上沿 av 粘贴 e0 * (av * z)，得到四面体"""
        result, record = attach_cone_over_join(self.cx, self.edge, point("z"), {"z": "w"}, "e0")
        self.assertEqual(verify(result), [])
        self.assertEqual(len(record.glued), 7)
        self.assertEqual(record.designated, "a")
        self.assertIsNotNone(is_isomorphic(result, simplex(3)))

        collapsed, sequence = collapse_coned_join(result, record)
        self.assertEqual(len(sequence), 4)
        self.assertEqual(collapsed.cells, self.cx.cells)
        self.assertEqual(replay(result, sequence).cells, self.cx.cells)

    def test_default_apex(self):
        result, record = attach_cone_over_join(self.cx, self.edge, empty(), {})
        self.assertEqual(record.apex, "e0")
        self.assertIn("e0", result.vertices)

    def test_unresolved_image(self):
        cx = from_maximal_simplices([["a", "v", "w"], ["x"]])
        edge = find_cell(cx, ["a", "v"])[0]
        with self.assertRaises(UnresolvedImageCell):
            attach_cone_over_join(cx, edge, point("z"), {"z": "x"})
        with self.assertRaises(UnresolvedImageCell):
            attach_cone_over_join(cx, edge, point("z"), {})

    def test_non_injective(self):
        with self.assertRaises(NonInjectiveOnCell):
            attach_cone_over_join(self.cx, self.edge, point("z"), {"z": "a"})
        segment = from_maximal_simplices([["y", "z"]])
        with self.assertRaises(NonInjectiveOnCell):
            attach_cone_over_join(self.cx, self.edge, segment, {"y": "w", "z": "w"})

    def test_label_clash(self):
        with self.assertRaises(LabelClash):
            attach_cone_over_join(self.cx, self.edge, point("w"), {"w": "w"})
        with self.assertRaises(LabelClash):
            attach_cone_over_join(self.cx, self.edge, empty(), {}, apex="a")

    def test_parallel_images_need_choice(self):
        """两个三角形共享顶点集时必须显式指定像胞腔"""
        base = from_maximal_simplices([["a", "v", "w"]])
        triangle = find_cell(base, ["a", "v", "w"])[0]
        cell = base.cells[triangle]
        builder = ComplexBuilder(base)
        twin = builder.add_cell(cell.vertices, cell.facets)
        cx = builder.freeze()
        edge = find_cell(cx, ["a", "v"])[0]
        with self.assertRaises(UnresolvedImageCell):
            attach_cone_over_join(cx, edge, point("z"), {"z": "w"})
        z = point("z").vertex_cell("z")
        result, record = attach_cone_over_join(cx, edge, point("z"), {"z": "w"}, image_cells={z: twin})
        collapsed, _ = collapse_coned_join(result, record)
        self.assertEqual(collapsed.cells, cx.cells)

    def test_cone_expansion(self):
        cx = catalog('fig3_left')
        diagonal = find_cell(cx, ["A1", "A2"])[0]
        expanded, sequence = cone_expansion(cx, diagonal, "p")
        self.assertEqual(expanded.euler_characteristic(), cx.euler_characteristic())
        self.assertEqual(len(expanded), len(cx) + 4)
        self.assertEqual(replay(expanded, sequence).cells, cx.cells)


class TestBlowupScript(unittest.TestCase):
    """爆破脚本测试类"""

    def test_rule_one_and_two(self):
        cx = catalog('fig3_left')
        diagonal = find_cell(cx, ["A1", "A2"])[0]
        steps = [
            BlowupStep(kind=BlowupKind.STRATUM, cell=diagonal),
            BlowupStep(kind=BlowupKind.TRIVIAL),
        ]
        result, report = blowup_script(cx, steps)
        self.assertEqual(report.stellar_steps, 1)
        self.assertEqual(report.trivial_steps, 1)
        self.assertEqual(report.vertices_after, report.vertices_before + 1)
        self.assertIn(f"p{diagonal}", result.vertices)
        self.assertTrue(check_rule4(cx, result, report))

    def test_rule_three_records(self):
        cx = from_maximal_simplices([["a", "v", "w"]])
        edge = find_cell(cx, ["a", "v"])[0]
        steps = [BlowupStep(kind=BlowupKind.CONE, cell=edge, link=point("z"), tau={"z": "w"})]
        result, report = blowup_script(cx, steps)
        self.assertEqual(report.cone_steps, 1)
        self.assertEqual(len(report.records), 1)
        self.assertTrue(check_rule4(cx, result, report))

    def test_rule_four_detects_vertex_mismatch(self):
        cx = simplex(2)
        edge = find_cell(cx, ["v0", "v1"])[0]
        result, report = blowup_script(cx, [BlowupStep(kind=BlowupKind.STRATUM, cell=edge)])
        report.stellar_steps = 2
        self.assertFalse(check_rule4(cx, result, report))

    def test_trivial_and_stratum_helpers(self):
        cx = simplex(2)
        self.assertIs(blowup_trivial(cx), cx)
        edge = find_cell(cx, ["v0", "v1"])[0]
        self.assertEqual(blowup_stratum(cx, edge, "p").cells, stellar_subdivide(cx, edge, "p").cells)


if __name__ == '__main__':
    unittest.main()
