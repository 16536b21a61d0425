"""
稳定性结论的可执行检查, 每项检查产出一份 StabilityReport

失败不是异常而是报告中的反例; 反例取确定性最小值, 与并行时的完成顺序无关。
"""

import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple
from springerstab.core.config import settings
from springerstab.core.exceptions import PreconditionError
from springerstab.core.logger import logger
from springerstab.schemas.partition import Partition
from springerstab.schemas.report import StabilityReport
from springerstab.services import betti_rec, kostka_oracle
from springerstab.services.betti_rec import PoincareCache
from springerstab.schemas.rational_poly import RationalPoly
from springerstab.services.golden_table import GoldenTableService
from springerstab.services.partition_core import (
    contains,
    dominates,
    lambda_max,
    n_stat,
    partitions_iter,
    qualifying_partitions,
    remove_box,
    threshold,
)

# (排序键, 反例内容)
Failure = Tuple[Tuple[Any, ...], Dict[str, Any]]


def _number(value: Fraction) -> Any:
    return value.numerator if value.denominator == 1 else str(value)


class StabilityChecker:
    """稳定性检查服务类"""

    def __init__(
        self,
        cache: Optional[PoincareCache] = None,
        workers: Optional[int] = None,
        f_poly_provider: Callable[[int, int], RationalPoly] = betti_rec.f_poly,
        golden_table: Optional[GoldenTableService] = None,
    ):
        self.cache = cache if cache is not None else betti_rec.default_cache
        self.workers = workers or settings.MAX_WORKERS
        self.f_poly = f_poly_provider
        self._golden_table = golden_table

    @property
    def golden_table(self) -> GoldenTableService:
        if self._golden_table is None:
            self._golden_table = GoldenTableService()
        return self._golden_table

    def _betti(self, lam: Partition, k: int) -> int:
        return betti_rec.betti(lam, k, self.cache)

    def _fan_out(self, task: Callable[[Any], Tuple[List[Failure], int]], items: Iterable[Any]) -> Tuple[List[Failure], int]:
        """对每个分组执行 task, 汇总反例与被检对象数"""
        items = list(items)
        if self.workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(task, items))
        else:
            results = [task(item) for item in items]
        failures = [failure for found, _ in results for failure in found]
        return failures, sum(count for _, count in results)

    def _report(self, check: str, params: Dict[str, Any], failures: List[Failure], examined: int, started: float) -> StabilityReport:
        counterexample = min(failures, key=lambda failure: failure[0])[1] if failures else None
        report = StabilityReport(
            check=check,
            params=params,
            verdict="fail" if failures else "pass",
            vacuous=examined == 0,
            counterexample=counterexample,
            elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
        )
        if report.passed:
            logger.info(f"✅ {check} {params} 通过 (检查对象 {examined} 个{', 空集' if report.vacuous else ''})")
        else:
            logger.warning(f"❌ {check} {params} 失败, 反例: {counterexample}")
        return report

    def check_dim_stability(self, k: int, r: int, n_max: int) -> StabilityReport:
        """维数稳定: 稳定区间内 h^{2k}(λ) = f_{k,r}(|λ|), 且取值为整数"""
        if r < 1:
            raise PreconditionError(f"r 必须为正整数: r={r}")
        params = {"k": k, "r": r, "n_max": n_max}
        started = time.perf_counter()
        logger.info(f"🔍 维数稳定性检查 {params}")
        poly = self.f_poly(k, r)

        def at_size(n: int) -> Tuple[List[Failure], int]:
            failures: List[Failure] = []
            expected = poly(n)
            count = 0
            for lam in qualifying_partitions(n, k, r):
                count += 1
                actual = self._betti(lam, k)
                if expected.denominator != 1 or actual != expected:
                    failures.append(((n, lam.parts), {
                        "n": n,
                        "partition": str(lam),
                        "degree": k,
                        "expected": _number(expected),
                        "actual": actual,
                    }))
            return failures, count

        failures, examined = self._fan_out(at_size, range(threshold(k, r).size, n_max + 1))
        return self._report("dim", params, failures, examined, started)

    def check_rep_stability(self, k: int, r: int, n: int) -> StabilityReport:
        """表示稳定: 稳定区间内所有 H^{2k}(λ) 与 H^{2k}(λ_max) 的分解一致"""
        base = threshold(k, r)
        if n < base.size:
            raise PreconditionError(f"n={n} 小于 |A_{{{k},{r}}}|={base.size}")
        params = {"k": k, "r": r, "n": n}
        started = time.perf_counter()
        logger.info(f"🔍 表示稳定性检查 {params}")
        reference = lambda_max(n, k, r)
        expected = kostka_oracle.decompose(reference, k)
        dimension = self.f_poly(k, r)(n)
        failures: List[Failure] = []
        if kostka_oracle.decomposition_dimension(expected) != dimension:
            failures.append(((n, reference.parts), {
                "n": n,
                "partition": str(reference),
                "degree": k,
                "expected": _number(dimension),
                "actual": kostka_oracle.decomposition_dimension(expected),
            }))

        def at_partition(lam: Partition) -> Tuple[List[Failure], int]:
            found: List[Failure] = []
            if not dominates(reference, lam):
                found.append(((n, lam.parts), {
                    "n": n,
                    "partition": str(lam),
                    "reference": str(reference),
                    "degree": k,
                    "reason": "lambda_max does not dominate",
                }))
            actual = kostka_oracle.decompose(lam, k)
            if not actual.same_representation(expected):
                found.append(((n, lam.parts), {
                    "n": n,
                    "partition": str(lam),
                    "reference": str(reference),
                    "degree": k,
                    "expected": [entry.model_dump() for entry in expected.multiplicities],
                    "actual": [entry.model_dump() for entry in actual.multiplicities],
                }))
            return found, 1

        found, examined = self._fan_out(at_partition, qualifying_partitions(n, k, r))
        return self._report("rep", params, failures + found, examined, started)

    def check_monotonicity(self, n: int) -> StabilityReport:
        """λ ≥ λ' 时逐个 μ、逐个次数 k 有 graded_mult(μ,λ,k) ≤ graded_mult(μ,λ',k), 并推出Betti数不等式"""
        if n < 1:
            raise PreconditionError(f"n 必须为正整数: n={n}")
        params = {"n": n}
        started = time.perf_counter()
        logger.info(f"🔍 单调性检查 {params}")
        shapes = list(partitions_iter(n))

        def from_upper(lam: Partition) -> Tuple[List[Failure], int]:
            found: List[Failure] = []
            pairs = 0
            for lower in shapes:
                if not dominates(lam, lower):
                    continue
                pairs += 1
                for k in range(n_stat(lower) + 1):
                    for mu in shapes:
                        upper_mult = kostka_oracle.graded_mult(mu, lam, k)
                        lower_mult = kostka_oracle.graded_mult(mu, lower, k)
                        if upper_mult > lower_mult:
                            found.append(((lam.parts, lower.parts, k, mu.parts), {
                                "lambda": str(lam),
                                "lambda_prime": str(lower),
                                "mu": str(mu),
                                "degree": k,
                                "expected": f"<= {lower_mult}",
                                "actual": upper_mult,
                            }))
                    upper_betti, lower_betti = self._betti(lam, k), self._betti(lower, k)
                    if upper_betti > lower_betti:
                        found.append(((lam.parts, lower.parts, k, ()), {
                            "lambda": str(lam),
                            "lambda_prime": str(lower),
                            "mu": None,
                            "degree": k,
                            "expected": f"<= {lower_betti}",
                            "actual": upper_betti,
                        }))
            return found, pairs

        failures, examined = self._fan_out(from_upper, shapes)
        return self._report("mono", params, failures, examined, started)

    def check_flag_corollary(self, n: int, k_max: int) -> StabilityReport:
        """至少 k+1 行的 λ: h^{2k}(λ) = [t^k] q-阶乘 = f_k(n), 且 H^{2k}(λ) 与 H^{2k}(1^n) 分解相同"""
        if n < 1:
            raise PreconditionError(f"n 必须为正整数: n={n}")
        params = {"n": n, "k_max": k_max}
        started = time.perf_counter()
        logger.info(f"🔍 旗簇推论检查 {params}")
        flag = kostka_oracle.flag_poincare(n)
        column = Partition(parts=(1,) * n)
        shapes = list(partitions_iter(n))

        def at_degree(k: int) -> Tuple[List[Failure], int]:
            found: List[Failure] = []
            qualifying = [lam for lam in shapes if lam.length >= k + 1]
            if not qualifying:
                return found, 0
            expected = flag.coefficient(k)
            limit_value = betti_rec.f_limit(k)(n)
            if limit_value != expected:
                found.append(((k, ()), {
                    "n": n,
                    "partition": None,
                    "degree": k,
                    "expected": expected,
                    "actual": _number(limit_value),
                    "reason": "f_k(n) differs from the flag variety Betti number",
                }))
            reference = kostka_oracle.decompose(column, k)
            for lam in qualifying:
                actual = self._betti(lam, k)
                if actual != expected:
                    found.append(((k, lam.parts), {
                        "n": n,
                        "partition": str(lam),
                        "degree": k,
                        "expected": expected,
                        "actual": actual,
                    }))
                    continue
                decomposition = kostka_oracle.decompose(lam, k)
                if not decomposition.same_representation(reference):
                    found.append(((k, lam.parts), {
                        "n": n,
                        "partition": str(lam),
                        "degree": k,
                        "expected": [entry.model_dump() for entry in reference.multiplicities],
                        "actual": [entry.model_dump() for entry in decomposition.multiplicities],
                    }))
            return found, len(qualifying)

        failures, examined = self._fan_out(at_degree, range(k_max + 1))
        return self._report("flag", params, failures, examined, started)

    def verify_paper_table(self) -> StabilityReport:
        """f_poly 与黄金表逐项精确相等"""
        params = {"entries": len(self.golden_table.entries)}
        started = time.perf_counter()
        logger.info(f"🔍 黄金表核对 {params}")

        def at_entry(entry) -> Tuple[List[Failure], int]:
            actual = self.f_poly(entry.k, entry.r)
            expected = entry.polynomial
            if actual == expected:
                return [], 1
            return [((entry.r, entry.k), {
                "r": entry.r,
                "k": entry.k,
                "expected": expected.to_display(),
                "actual": actual.to_display(),
                "cite": entry.cite,
            })], 1

        failures, examined = self._fan_out(at_entry, self.golden_table.entries)
        return self._report("table", params, failures, examined, started)

    def check_threshold_descent(self, k: int, r: int, n_max: int) -> StabilityReport:
        """λ ⊋ A_{k,r} (至多 r 行) 时, 对每个非空行 i 且 k-i+1 ≥ 0 有 λ^{(i)} ⊃ A_{k-i+1,r}"""
        if r < 1:
            raise PreconditionError(f"r 必须为正整数: r={r}")
        params = {"k": k, "r": r, "n_max": n_max}
        started = time.perf_counter()
        logger.info(f"🔍 阈值下降检查 {params}")
        base = threshold(k, r)
        if k < 1 or r < 2:
            return self._report("descent", params, [], 0, started)

        def at_size(n: int) -> Tuple[List[Failure], int]:
            found: List[Failure] = []
            count = 0
            for lam in qualifying_partitions(n, k, r):
                count += 1
                for i in range(1, min(lam.length, k + 1) + 1):
                    smaller = remove_box(lam, i)
                    target = threshold(k - i + 1, r)
                    if not contains(smaller, target):
                        found.append(((n, lam.parts, i), {
                            "n": n,
                            "partition": str(lam),
                            "row": i,
                            "expected": f"contains {target}",
                            "actual": str(smaller),
                        }))
            return found, count

        failures, examined = self._fan_out(at_size, range(base.size + 1, n_max + 1))
        return self._report("descent", params, failures, examined, started)
