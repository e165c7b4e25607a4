#!/usr/bin/env python3
"""
Config Tests - 配置测试

测试环境配置的选择，以及搜索预算与群阶上限的环境变量覆盖。
"""

import os
import sys
import unittest
from pathlib import Path
from unittest import mock

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import get_config
from config.config import Config, ProductionConfig, TestingConfig
from src.core import collapsible_search, from_maximal_simplices, group_closure
from src.data import simplex
from src.exceptions import GroupTooLarge
from src.models import GroupAction, VerdictKind


def without_overrides() -> dict:
    """去掉覆盖变量后的环境"""
    return {k: v for k, v in os.environ.items() if k not in ('DUALCX_BUDGET', 'DUALCX_GROUP_ORDER_CAP')}


class TestConfigSelection(unittest.TestCase):
    """配置选择测试类"""

    def test_named_configs(self):
        self.assertIs(get_config('testing'), TestingConfig)
        self.assertIs(get_config('production'), ProductionConfig)
        self.assertIs(get_config('nope'), ProductionConfig)

    def test_environment_selects_config(self):
        with mock.patch.dict(os.environ, {'DUALCX_ENV': 'testing'}):
            self.assertIs(get_config(), TestingConfig)

    def test_paths_exist(self):
        self.assertTrue(os.path.isdir(Config.CATALOG_PATH))
        self.assertTrue(os.path.isdir(Config.EXAMPLES_PATH))


class TestSearchOverrides(unittest.TestCase):
    """搜索预算与群阶上限覆盖测试类"""

    def test_class_defaults(self):
        with mock.patch.dict(os.environ, without_overrides(), clear=True):
            self.assertEqual(Config.get_search_config(), {'budget': 1_000_000, 'group_order_cap': 10_000})
            self.assertEqual(TestingConfig.get_search_config()['budget'], 200_000)

    def test_budget_override_is_read_at_call_time(self):
        with mock.patch.dict(os.environ, {'DUALCX_BUDGET': '7'}):
            self.assertEqual(get_config('testing').get_search_config()['budget'], 7)

    def test_search_uses_budget_override(self):
        tetra = simplex(3)
        with mock.patch.dict(os.environ, without_overrides(), clear=True):
            self.assertEqual(collapsible_search(tetra).kind, VerdictKind.COLLAPSIBLE)
        with mock.patch.dict(os.environ, {'DUALCX_BUDGET': '1'}):
            verdict = collapsible_search(tetra)
            self.assertEqual(verdict.kind, VerdictKind.INCONCLUSIVE)
            self.assertEqual(verdict.nodes, 1)
            # 显式参数优先于环境变量
            self.assertEqual(collapsible_search(tetra, budget=10_000).kind, VerdictKind.COLLAPSIBLE)

    def test_group_order_cap_override(self):
        cx = from_maximal_simplices([["v0", "a1", "b1"], ["v0", "a2", "b2"]])
        swap = GroupAction(generators=[{"a1": "a2", "a2": "a1", "b1": "b2", "b2": "b1"}])
        with mock.patch.dict(os.environ, {'DUALCX_GROUP_ORDER_CAP': '1'}):
            with self.assertRaises(GroupTooLarge):
                group_closure(cx, swap)
        with mock.patch.dict(os.environ, without_overrides(), clear=True):
            self.assertEqual(len(group_closure(cx, swap)), 2)


if __name__ == '__main__':
    unittest.main()
