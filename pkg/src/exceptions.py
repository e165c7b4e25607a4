"""
Exceptions - 领域异常模块

所有领域错误都继承 DualComplexError，并携带机器可读的错误名 name，
命令行前端据此输出错误文档并返回退出码 1。
"""

from typing import Any, Dict, Optional


class DualComplexError(Exception):
    """领域错误基类"""

    name = "DualComplexError"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """转换为错误文档"""
        return {
            'success': False,
            'error': self.name,
            'message': self.message,
            'details': self.details,
        }


# 复形核心
class DuplicateLabel(DualComplexError):
    name = "DuplicateLabel"


class FacetMismatch(DualComplexError):
    name = "FacetMismatch"


class NonRegular(DualComplexError):
    name = "NonRegular"


class IncoherentBoundary(DualComplexError):
    name = "IncoherentBoundary"


class UnknownCell(DualComplexError):
    name = "UnknownCell"


class HasCofaces(DualComplexError):
    name = "HasCofaces"


class LabelClash(DualComplexError):
    name = "LabelClash"


class NotASubcomplex(DualComplexError):
    name = "NotASubcomplex"


# 构造器
class MissingParent(DualComplexError):
    name = "MissingParent"


class NonCommutingParents(DualComplexError):
    name = "NonCommutingParents"


class DanglingDivisor(DualComplexError):
    name = "DanglingDivisor"


class InvalidDescriptor(DualComplexError):
    name = "InvalidDescriptor"


class UnknownName(DualComplexError):
    name = "UnknownName"


# 细分与爆破
class DimZeroCenter(DualComplexError):
    name = "DimZeroCenter"


class NonInjectiveOnCell(DualComplexError):
    name = "NonInjectiveOnCell"


class UnresolvedImageCell(DualComplexError):
    name = "UnresolvedImageCell"


# 塌缩
class NotFree(DualComplexError):
    name = "NotFree"


class NotInLink(DualComplexError):
    name = "NotInLink"


class Ambiguous(DualComplexError):
    name = "Ambiguous"


class NotUpwardClosed(DualComplexError):
    name = "NotUpwardClosed"


class OverlappingOrbit(DualComplexError):
    name = "OverlappingOrbit"


class NotInvariantInstruction(DualComplexError):
    name = "NotInvariantInstruction"


class NotAnAutomorphism(DualComplexError):
    name = "NotAnAutomorphism"


class GroupTooLarge(DualComplexError):
    name = "GroupTooLarge"


# 同调
class DegreeOutOfRange(DualComplexError):
    name = "DegreeOutOfRange"


# 文档
class InvalidDocument(DualComplexError):
    name = "InvalidDocument"


class UnsupportedVersion(DualComplexError):
    name = "UnsupportedVersion"


class NotFreeAtStep(DualComplexError):
    """序列第 step 步（从 0 开始）的配对在到达时不是自由对"""

    name = "NotFreeAtStep"

    def __init__(self, step: int, message: str, details: Optional[Dict[str, Any]] = None):
        details = dict(details or {})
        details['step'] = step
        super().__init__(message, details)
        self.step = step
