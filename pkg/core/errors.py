"""
领域错误分类 — 不同错误类型，不同处理方式

CLI 退出码:
  - GameFileError → 2（输入文件/参数解析失败）
  - 其余 GameError → 1（领域错误）
"""


class GameError(Exception):
    """所有领域错误的基类"""
    pass


class PreconditionError(GameError):
    """操作前置条件不满足（非单调、非单符号、非 subset-free 等）"""
    pass


class InvalidGameError(PreconditionError):
    """构造不变量被破坏：N = 0、payoff 长度不足、重复策略、超出资源位宽"""
    pass


class InvalidProfileError(GameError):
    """策略组合非法：长度 ≠ N、策略下标越界、玩家下标越界"""
    pass


class InvalidTieError(GameError):
    """显式 tie-break 选择不在 best-response 集合内，或到达顺序不是排列"""
    pass


class NotRepresentableError(GameError):
    """game form 存在 bad configuration，无法构造 R-tree"""
    pass


class TheoremViolationError(GameError):
    """已证明的性质在运行时失败 — 正常输入下绝不应出现"""
    pass


class RepresentationBugError(TheoremViolationError):
    """build_r_tree 构造后自检失败"""
    pass


class GameFileError(GameError):
    """游戏文件解析失败，附带行号/列号（1-based）"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
        self.reason = message
