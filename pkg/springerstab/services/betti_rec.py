"""
Springer纤维的Betti数 (删格递推) 与稳定多项式 f_{k,r} 的构造
"""

import threading
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional
from springerstab.core.exceptions import CacheFormatError
from springerstab.core.logger import logger
from springerstab.schemas.graded import PoincarePoly
from springerstab.schemas.partition import Partition
from springerstab.services import exact_poly
from springerstab.schemas.rational_poly import RationalPoly
from springerstab.services.partition_core import (
    lambda_max,
    n_stat,
    remove_box,
    threshold,
)

CACHE_HEADER = "springerstab-cache v1"


class PoincareCache:
    """
    Poincaré多项式的记忆表 (分拆 -> PoincarePoly)

    读操作无锁; 写操作在条目粒度上原子。并发时同一键可能被重复计算,
    但结果相同, 先写入者为准。
    """

    def __init__(self):
        self._entries: Dict[Partition, PoincarePoly] = {}
        self._lock = threading.Lock()

    def get(self, lam: Partition) -> Optional[PoincarePoly]:
        return self._entries.get(lam)

    def put(self, lam: Partition, poly: PoincarePoly) -> PoincarePoly:
        with self._lock:
            return self._entries.setdefault(lam, poly)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, lam: Partition) -> bool:
        return lam in self._entries

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def load(self, path: Path) -> int:
        """
        从缓存文件载入记录, 逐条校验 PoincarePoly 不变量

        Returns:
            载入的记录数
        """
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines or lines[0].strip() != CACHE_HEADER:
            raise CacheFormatError(f"缓存文件缺少版本头 {CACHE_HEADER!r}: {path}")
        loaded = 0
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            lam, poly = _parse_record(line, lineno)
            self.put(lam, poly)
            loaded += 1
        logger.info(f"从 {path} 载入了 {loaded} 条Poincaré缓存记录")
        return loaded

    def save(self, path: Path) -> int:
        """按 (|λ|, λ降字典序) 写出全部记录"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with self._lock:
            items = sorted(self._entries.items(), key=lambda item: (item[0].size, [-p for p in item[0].parts]))
        lines = [CACHE_HEADER]
        lines.extend(f"{lam}\t{','.join(str(c) for c in poly.coefficients)}" for lam, poly in items)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info(f"写出 {len(items)} 条Poincaré缓存记录到 {path}")
        return len(items)


def _parse_record(line: str, lineno: int):
    fields = line.split("\t")
    if len(fields) != 2:
        raise CacheFormatError(f"第{lineno}行应为两个字段: {line!r}")
    try:
        lam = Partition.parse(fields[0])
        coefficients = tuple(int(token) for token in fields[1].split(","))
        poly = PoincarePoly(coefficients=coefficients)
    except ValueError as e:
        raise CacheFormatError(f"第{lineno}行格式错误: {e}") from None
    if len(poly.coefficients) != len(coefficients):
        raise CacheFormatError(f"第{lineno}行末尾有多余的零系数")
    if poly.degree != n_stat(lam):
        raise CacheFormatError(f"第{lineno}行最高次 {poly.degree} 不等于 n({lam})={n_stat(lam)}")
    return lam, poly


# 默认记忆表
default_cache = PoincareCache()


def poincare(lam: Partition, cache: Optional[PoincareCache] = None) -> PoincarePoly:
    """
    Poincaré多项式 Σ_k h^{2k}(λ) t^k

    递推: P_λ(t) = Σ_{i=1}^{m} t^{i-1} P_{λ^{(i)}}(t), m 为 λ 的非零行数;
    空分拆的多项式为 1。
    """
    cache = default_cache if cache is None else cache
    cached = cache.get(lam)
    if cached is not None:
        return cached
    if lam.length == 0:
        return cache.put(lam, PoincarePoly(coefficients=(1,)))
    total: List[int] = [0] * (n_stat(lam) + 1)
    for i in range(1, lam.length + 1):
        for k, c in enumerate(poincare(remove_box(lam, i), cache).coefficients):
            total[k + i - 1] += c
    return cache.put(lam, PoincarePoly(coefficients=tuple(total)))


def betti(lam: Partition, k: int, cache: Optional[PoincareCache] = None) -> int:
    """h^{2k}(λ); k 超过 n(λ) 时为零"""
    return poincare(lam, cache).coefficient(k)


def total_betti(lam: Partition, cache: Optional[PoincareCache] = None) -> int:
    return sum(poincare(lam, cache).coefficients)


@lru_cache(maxsize=None)
def f_poly(k: int, r: int) -> RationalPoly:
    """
    稳定多项式 f_{k,r}(x)

    f_{k,r}(x) = h^{2k}(A_{k,r}) + Σ_{i=|A_{k,r}|}^{x-1} Σ_{j=k-r+1}^{k-1} f_{j,r}(i),
    其中 f_{0,r} = 1, k < 0 时 f_{k,r} = 0; r = 1 时 f_{k,1} = δ_{k,0}。
    """
    target = threshold(k, r)
    if k == 0:
        return exact_poly.ONE
    if r == 1:
        return exact_poly.ZERO
    summand = exact_poly.ZERO
    for j in range(max(0, k - r + 1), k):
        summand = summand + f_poly(j, r)
    base = RationalPoly.constant(betti(target, k))
    return base + exact_poly.discrete_sum(summand, target.size)


def f_limit(k: int) -> RationalPoly:
    """f_k(x) = lim_{r→∞} f_{k,r}(x) = f_{k,k+1}(x)"""
    return f_poly(k, k + 1)


def interpolated_f_poly(k: int, r: int) -> RationalPoly:
    """
    在 n = |A_{k,r}|, ..., |A_{k,r}|+k 处采样 h^{2k}(λ_max) 做Lagrange插值

    与 f_poly 相互独立, 用于核对求和上下限。
    """
    start = threshold(k, r).size
    points = [(n, Fraction(betti(lambda_max(n, k, r), k))) for n in range(start, start + k + 1)]
    return exact_poly.lagrange_interpolate(points)
