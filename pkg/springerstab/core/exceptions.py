from typing import Any, Optional


class SpringerStabError(ValueError):
    """领域错误基类; code 即CLI退出码"""

    code: int = 2

    def __init__(self, detail: str, data: Optional[Any] = None):
        super().__init__(detail)
        self.detail = detail
        self.data = data


class InvalidPartitionError(SpringerStabError):
    """分拆输入非法 (负数、格式错误、非递减等)"""


class UndefinedOperationError(SpringerStabError):
    """运算无定义, 例如删除不存在的行上的格子"""


class SizeMismatchError(SpringerStabError):
    """要求 |λ| = |μ| 时大小不一致"""


class PreconditionError(SpringerStabError):
    """前置条件不满足"""


class CacheFormatError(SpringerStabError):
    """缓存文件格式错误或记录违反不变量"""


class UsageError(SpringerStabError):
    """命令行参数错误"""
