"""
Configuration module - 配置管理模块

管理对偶复形工具的各种配置参数。
环境变量优先，其次读取 config/.env（python-dotenv），最后使用默认值。
"""

import os
from pathlib import Path
from typing import Dict, Any

from dotenv import load_dotenv

# 可选的 .env 文件，不存在时静默跳过
load_dotenv(Path(__file__).resolve().parent / '.env')


class Config:
    """应用配置类"""

    # 文档格式配置
    FORMAT_VERSION = 1

    # 搜索配置
    SEARCH_BUDGET = 1_000_000  # 可塌缩性搜索的节点上限
    GROUP_ORDER_CAP = 10_000  # 群闭包的阶数上限

    # 同调配置
    VERIFY_CHAIN_CONDITION = os.getenv('DUALCX_VERIFY_CHAIN', 'True').lower() == 'true'

    # 数据路径配置
    DATA_ROOT = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')
    CATALOG_PATH = os.path.join(DATA_ROOT, 'catalog')
    EXAMPLES_PATH = os.path.join(DATA_ROOT, 'examples')

    # 日志配置（命令行输出走 stdout，日志走 stderr）
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')

    @classmethod
    def get_search_config(cls) -> Dict[str, Any]:
        """获取搜索相关配置

        DUALCX_BUDGET 与 DUALCX_GROUP_ORDER_CAP 在调用时读取，覆盖类上的默认值。
        """
        return {
            'budget': int(os.getenv('DUALCX_BUDGET', cls.SEARCH_BUDGET)),
            'group_order_cap': int(os.getenv('DUALCX_GROUP_ORDER_CAP', cls.GROUP_ORDER_CAP)),
        }


class DevelopmentConfig(Config):
    """开发环境配置"""
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """生产环境配置"""
    LOG_LEVEL = 'WARNING'


class TestingConfig(Config):
    """测试环境配置"""
    LOG_LEVEL = 'DEBUG'
    # 测试中的搜索保持在桌面规模
    SEARCH_BUDGET = 200_000


# 配置映射
config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(config_name: str = None) -> Config:
    """根据环境名称获取配置"""
    if config_name is None:
        config_name = os.getenv('DUALCX_ENV', 'default')

    return config_map.get(config_name, ProductionConfig)
