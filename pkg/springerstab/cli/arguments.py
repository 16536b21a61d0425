import argparse
from springerstab.core.exceptions import UsageError
from springerstab.schemas.invocation import OutputFormat
from springerstab.schemas.partition import Partition


class CliArgumentParser(argparse.ArgumentParser):
    """参数错误抛 UsageError 而不是直接退出, 便于统一输出错误"""

    def error(self, message: str):
        raise UsageError(message)


def partition_arg(text: str) -> Partition:
    return Partition.parse(text)


partition_arg.__name__ = "partition"


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"必须为非负整数: {text}")
    return value


nonnegative_int.__name__ = "nonnegative integer"


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"必须为正整数: {text}")
    return value


positive_int.__name__ = "positive integer"


def global_options() -> argparse.ArgumentParser:
    """全局参数; 用 SUPPRESS 使其既可放在子命令前也可放在子命令后"""
    parent = CliArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=argparse.SUPPRESS,
        help="输出格式 (默认: text)"
    )
    parent.add_argument(
        "--cache",
        metavar="PATH",
        default=argparse.SUPPRESS,
        help="Poincaré缓存文件, 启动时载入, 结束时写回"
    )
    parent.add_argument(
        "--workers",
        type=positive_int,
        default=argparse.SUPPRESS,
        help="检查时的并行线程数 (默认: 1)"
    )
    return parent
