"""
pytest 根配置：把项目根目录加入导入路径，使 config 与 src 可以直接导入。
"""

import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
os.environ.setdefault('DUALCX_ENV', 'testing')
