"""
領域錯誤定義模組

每個錯誤都帶有機器可讀的 code，命令列介面會把它轉成
{"error": {"code": ..., "message": ...}} 文件。
"""


class TTGError(Exception):
    """所有領域錯誤的基底類別"""

    code = 'Error'
    exit_code = 1

    def __init__(self, message=''):
        super().__init__(message)
        self.message = message

    def to_document(self):
        return {"error": {"code": self.code, "message": self.message}}


class NotAGroup(TTGError):
    code = 'NotAGroup'


class TooLarge(TTGError):
    code = 'TooLarge'


class InvalidClass(TTGError):
    code = 'InvalidClass'


class UnsupportedPair(TTGError):
    code = 'UnsupportedPair'


class NotSubconjugate(TTGError):
    code = 'NotSubconjugate'


class UnsupportedInstance(TTGError):
    code = 'UnsupportedInstance'


class SpaceMismatch(TTGError):
    code = 'SpaceMismatch'


class MalformedDescriptor(TTGError):
    code = 'MalformedDescriptor'


class NotFinite(TTGError):
    code = 'NotFinite'


class MalformedExpr(TTGError):
    code = 'MalformedExpr'


class NotRealizable(TTGError):
    code = 'NotRealizable'


class GroupMismatch(TTGError):
    code = 'GroupMismatch'


class NotUnrelated(TTGError):
    code = 'NotUnrelated'


class ClassNotInGroup(TTGError):
    code = 'ClassNotInGroup'


class SplitUnavailable(TTGError):
    code = 'SplitUnavailable'


class MixedParity(TTGError):
    code = 'MixedParity'


class InvalidWideSphere(TTGError):
    code = 'InvalidWideSphere'


class UsageError(TTGError):
    """命令列用法錯誤（結束碼 2）"""

    code = 'UsageError'
    exit_code = 2
