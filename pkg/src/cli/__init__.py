"""
CLI module - 命令行接口模块

以 JSON 文档为输入输出的命令行前端。

主要命令：
- build / catalog / strata: 构造与编码对偶复形
- subdivide / blowup: 细分与爆破规则
- collapse: 贪心、MMP、搜索、重放与等变塌缩
- homology / verify / iso / info: 不变量与校验
"""

from .app import create_parser, run

__all__ = [
    'create_parser',
    'run',
]
