"""
独立的对照计算: 半标准Young表、charge统计量、Kostka-Foulkes多项式

H^{2k}(λ) 中 χ^μ 的重数取 t^{n(λ)} K_{μλ}(1/t) 的 t^k 系数。
这条路径不依赖 betti_rec 的删格递推。
"""

from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple
from springerstab.core.exceptions import InvalidPartitionError, PreconditionError, SizeMismatchError
from springerstab.schemas.decomposition import GradedDecomposition, Multiplicity
from springerstab.schemas.graded import PoincarePoly, TPolynomial
from springerstab.schemas.partition import Partition
from springerstab.schemas.tableau import Tableau
from springerstab.services.partition_core import n_stat, partitions_iter, syt_count


def _require_same_size(mu: Partition, lam: Partition) -> None:
    if mu.size != lam.size:
        raise SizeMismatchError(f"要求 |μ| = |λ|: |{mu}|={mu.size}, |{lam}|={lam.size}")


def ssyt_enumerate(shape: Partition, content: Partition) -> List[Tableau]:
    """
    形状为 shape、内容为 content 的全部半标准Young表

    逐行逐格回溯填数, 用行弱递增与列严格递增剪枝; 每格从小到大试填,
    因此结果按行优先的字典序排列。
    """
    _require_same_size(shape, content)
    remaining = {value: count for value, count in enumerate(content.parts, start=1)}
    rows: List[List[int]] = [[0] * length for length in shape.parts]
    cells = [(i, j) for i, length in enumerate(shape.parts) for j in range(length)]
    results: List[Tableau] = []

    def backtrack(position: int) -> None:
        if position == len(cells):
            results.append(Tableau(shape=shape, rows=tuple(tuple(row) for row in rows)))
            return
        i, j = cells[position]
        low = rows[i][j - 1] if j > 0 else 1
        if i > 0:
            low = max(low, rows[i - 1][j] + 1)
        for value in range(low, content.length + 1):
            if remaining[value] == 0:
                continue
            remaining[value] -= 1
            rows[i][j] = value
            backtrack(position + 1)
            rows[i][j] = 0
            remaining[value] += 1

    backtrack(0)
    return results


def _word_content(word: Sequence[int]) -> List[int]:
    counts: Dict[int, int] = {}
    for letter in word:
        if letter <= 0:
            raise InvalidPartitionError(f"词中的字母必须为正整数: {tuple(word)}")
        counts[letter] = counts.get(letter, 0) + 1
    largest = max(counts, default=0)
    content = [counts.get(letter, 0) for letter in range(1, largest + 1)]
    if any(content[i] < content[i + 1] for i in range(len(content) - 1)) or 0 in content:
        raise InvalidPartitionError(f"词的内容不是分拆: {tuple(word)}")
    return content


def charge(word: Sequence[int]) -> int:
    """
    Lascoux-Schützenberger charge

    反复抽取标准子词: 从右向左循环扫描, 先取第一个1, 再继续向左(必要时绕回右端)
    取2, 依此类推。子词内 index(1) = 0, 若 s+1 在 s 的右侧 (即扫描时绕回)
    则 index(s+1) = index(s) + 1, 否则不变; charge 为所有 index 之和。
    """
    _word_content(word)
    letters = list(word)
    used = [False] * len(letters)
    left = len(letters)
    total = 0
    while left:
        largest = max(letters[p] for p in range(len(letters)) if not used[p])
        position = len(letters)
        index = 0
        for letter in range(1, largest + 1):
            wrapped = False
            p = position - 1
            while True:
                if p < 0:
                    p = len(letters) - 1
                    wrapped = True
                if not used[p] and letters[p] == letter:
                    break
                p -= 1
            if letter > 1 and wrapped:
                index += 1
            total += index
            used[p] = True
            position = p
            left -= 1
    return total


def reading_word(tableau: Tableau) -> Tuple[int, ...]:
    return tableau.reading_word()


@lru_cache(maxsize=None)
def kostka_poly(mu: Partition, lam: Partition) -> TPolynomial:
    """K_{μλ}(t) = Σ_T t^{charge(T)}, T 取遍形状 μ、内容 λ 的半标准表"""
    _require_same_size(mu, lam)
    counts: List[int] = []
    for tableau in ssyt_enumerate(mu, lam):
        c = charge(tableau.reading_word())
        if c >= len(counts):
            counts.extend([0] * (c + 1 - len(counts)))
        counts[c] += 1
    return TPolynomial(coefficients=tuple(counts))


def kostka_number(mu: Partition, lam: Partition) -> int:
    """经典Kostka数 K_{μλ}(1)"""
    return len(ssyt_enumerate(mu, lam))


def cocharge_poly(mu: Partition, lam: Partition) -> TPolynomial:
    """t^{n(λ)} K_{μλ}(1/t)"""
    top = n_stat(lam)
    k_poly = kostka_poly(mu, lam)
    if k_poly.degree is None:
        return k_poly
    return TPolynomial(coefficients=tuple(k_poly.coefficient(top - k) for k in range(top + 1)))


def graded_mult(mu: Partition, lam: Partition, k: int) -> int:
    """χ^μ 在 H^{2k}(λ) 中的重数"""
    _require_same_size(mu, lam)
    if k < 0:
        return 0
    return kostka_poly(mu, lam).coefficient(n_stat(lam) - k)


def decompose(lam: Partition, k: int) -> GradedDecomposition:
    """H^{2k}(λ) 的完整分解, 只保留非零重数, μ 按降字典序"""
    entries = []
    for mu in partitions_iter(lam.size):
        mult = graded_mult(mu, lam, k)
        if mult:
            entries.append(Multiplicity(mu=mu, mult=mult))
    return GradedDecomposition(partition=lam, degree=k, multiplicities=tuple(entries))


def decomposition_dimension(decomposition: GradedDecomposition) -> int:
    """Σ_μ m_μ · f^μ"""
    return sum(entry.mult * syt_count(entry.mu) for entry in decomposition.multiplicities)


def poincare_kf(lam: Partition) -> PoincarePoly:
    """h^{2k}(λ) = Σ_μ f^μ · graded_mult(μ, λ, k)"""
    top = n_stat(lam)
    coefficients = [0] * (top + 1)
    for mu in partitions_iter(lam.size):
        dimension = syt_count(mu)
        for k, c in enumerate(cocharge_poly(mu, lam).coefficients):
            coefficients[k] += dimension * c
    return PoincarePoly(coefficients=tuple(coefficients))


def flag_poincare(n: int) -> PoincarePoly:
    """旗簇的Poincaré多项式 Π_{i=1}^{n} (1 + t + ... + t^{i-1}), 即 q-阶乘"""
    if n < 1:
        raise PreconditionError(f"n 必须为正整数: n={n}")
    coefficients = [1]
    for i in range(2, n + 1):
        product = [0] * (len(coefficients) + i - 1)
        for a, c in enumerate(coefficients):
            for b in range(i):
                product[a + b] += c
        coefficients = product
    return PoincarePoly(coefficients=tuple(coefficients))


def inversion_count(word: Sequence[int]) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def mahonian(n: int) -> List[int]:
    """暴力枚举 n 元置换的逆序数分布"""
    counts = [0] * (n * (n - 1) // 2 + 1)
    for perm in permutations(range(n)):
        counts[inversion_count(perm)] += 1
    return counts

