"""
dualcx - 对偶复形组合工具

构造分层除子数据的对偶复形，并用星形细分、爆破粘贴、初等塌缩、
MMP 引导塌缩与等变塌缩等组合操作处理它们；整数/有理同调作为独立的正确性检验。
"""

__version__ = "0.1.0"
__author__ = "dualcx Team"
