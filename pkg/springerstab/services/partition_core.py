"""
分拆的基本运算: 优势序、包含关系、删格、阈值分拆 A_{k,r} 以及计数统计量

所有函数都是不可变值上的纯函数。
"""

from math import factorial, prod
from typing import Iterable, Iterator, List, Optional, Tuple
from springerstab.schemas.partition import Partition
from springerstab.core.exceptions import (
    InvalidPartitionError,
    PreconditionError,
    SizeMismatchError,
    UndefinedOperationError,
)

EMPTY = Partition()


def normalize(raw: Iterable[int]) -> Partition:
    """
    去掉零并降序排列, 得到合法分拆

    Args:
        raw: 非负整数序列 (允许含零, 允许乱序)

    Returns:
        规范化后的分拆
    """
    values = list(raw)
    if any(v < 0 for v in values):
        raise InvalidPartitionError(f"分拆中出现负数: {tuple(values)}")
    return Partition(parts=tuple(sorted((v for v in values if v), reverse=True)))


def _prefix_sums(parts: Tuple[int, ...], length: int) -> List[int]:
    sums, total = [], 0
    for i in range(length):
        total += parts[i] if i < len(parts) else 0
        sums.append(total)
    return sums


def dominates(lam: Partition, mu: Partition) -> bool:
    """λ ≥ μ (优势序): λ 的每个前缀和不小于 μ 的对应前缀和"""
    if lam.size != mu.size:
        raise SizeMismatchError(f"优势序要求大小相同: |{lam}|={lam.size}, |{mu}|={mu.size}")
    length = max(lam.length, mu.length)
    return all(a >= b for a, b in zip(_prefix_sums(lam.parts, length), _prefix_sums(mu.parts, length)))


def contains(lam: Partition, mu: Partition) -> bool:
    """λ ⊃ μ: Young图包含关系, 即逐行 λ_i ≥ μ_i"""
    if mu.length > lam.length:
        return False
    return all(lam.parts[i] >= mu.parts[i] for i in range(mu.length))


def transpose(lam: Partition) -> Partition:
    """共轭分拆 λ'"""
    if not lam.parts:
        return EMPTY
    return Partition(parts=tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def remove_box(lam: Partition, i: int) -> Partition:
    """
    删除第 i 行末尾的一个格子并重新排序, 即 λ^{(i)}

    Args:
        lam: 分拆
        i: 行号 (从1开始)

    Returns:
        大小为 |λ|-1 的分拆
    """
    if not 1 <= i <= lam.length:
        raise UndefinedOperationError(f"λ^({i}) 无定义: {lam} 的第{i}行为空")
    parts = list(lam.parts)
    parts[i - 1] -= 1
    return normalize(parts)


def n_stat(lam: Partition) -> int:
    """n(λ) = Σ (i-1) λ_i, 即Springer纤维的复维数"""
    return sum(i * p for i, p in enumerate(lam.parts))


def hook_lengths(lam: Partition) -> List[int]:
    conjugate = transpose(lam)
    return [
        lam.parts[i] - j + conjugate.parts[j] - i - 1
        for i in range(lam.length)
        for j in range(lam.parts[i])
    ]


def syt_count(lam: Partition) -> int:
    """标准Young表个数 f^λ (钩长公式)"""
    return factorial(lam.size) // prod(hook_lengths(lam))


def multinomial(lam: Partition) -> int:
    """|λ|! / Π λ_i!"""
    return factorial(lam.size) // prod(factorial(p) for p in lam.parts)


def _threshold_rows(k: int, r: int) -> List[int]:
    # 未规范化的 (α_1, ..., α_r)
    if k < 0:
        raise PreconditionError(f"k 必须非负: k={k}")
    if r < 1:
        raise PreconditionError(f"r 必须为正整数: r={r}")
    if r == 1:
        return [1]
    head = (k + r - 2) // (r - 1)
    return [head] + [(k + r - s) // (r - 1) for s in range(2, r + 1)]


def threshold(k: int, r: int) -> Partition:
    """
    阈值分拆 A_{k,r}

    r ≥ 2 时 α_1 = α_2 = ⌊(k+r-2)/(r-1)⌋, α_s = ⌊(k+r-s)/(r-1)⌋ (s ≥ 2);
    r = 1 时约定 A_{k,1} = (1)。
    """
    return normalize(_threshold_rows(k, r))


def lambda_max(n: int, k: int, r: int) -> Partition:
    """在 A_{k,r} 的第一行补上 n-|A_{k,r}| 个格子, 得到满足条件的优势序最大元"""
    rows = _threshold_rows(k, r)
    base = sum(rows)
    if n < base:
        raise PreconditionError(f"n={n} 小于 |A_{{{k},{r}}}|={base}")
    rows[0] += n - base
    return normalize(rows)


def partitions_iter(n: int, max_parts: Optional[int] = None) -> Iterator[Partition]:
    """
    按降字典序枚举 n 的全部分拆

    Args:
        n: 分拆的大小
        max_parts: 部分个数上限 (None 表示不限)
    """
    if n < 0:
        return
    limit = n if max_parts is None else max_parts

    def build(remaining: int, largest: int, slots: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            yield from build(remaining - first, first, slots - 1, prefix + (first,))

    for parts in build(n, n, limit, ()):
        yield Partition(parts=parts)


def qualifying_partitions(n: int, k: int, r: int) -> Iterator[Partition]:
    """|λ| = n, 至多 r 个部分且 λ ⊃ A_{k,r} 的分拆 (稳定区间)"""
    target = threshold(k, r)
    for lam in partitions_iter(n, r):
        if contains(lam, target):
            yield lam
