#!/usr/bin/env python3
"""
Main entry point for the dual complex toolkit

对偶复形工具命令行入口
"""

import logging
import sys
from pathlib import Path

# 添加项目根目录到Python路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from config import get_config
from src.cli import run


def setup_logging(level: str = None):
    """设置日志配置（标准输出留给 JSON 文档，日志写到标准错误）"""
    logging.basicConfig(
        level=getattr(logging, (level or get_config().LOG_LEVEL).upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)]
    )


def main():
    """主函数"""
    setup_logging()
    sys.exit(run())


if __name__ == '__main__':
    main()
