"""
桌面规模的完整扫描: 与 check 子命令的默认范围一致
"""

import pytest
from springerstab.services.betti_rec import PoincareCache
from springerstab.services.partition_core import threshold
from springerstab.services.stability_checks import StabilityChecker

pytestmark = pytest.mark.acceptance


@pytest.fixture(scope="module")
def sweep_checker(golden) -> StabilityChecker:
    return StabilityChecker(cache=PoincareCache(), golden_table=golden)


def test_golden_table(sweep_checker):
    assert sweep_checker.verify_paper_table().passed


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("r", range(1, 5))
def test_dimension_stability(sweep_checker, k, r):
    report = sweep_checker.check_dim_stability(k, r, 14)
    assert report.passed, report.counterexample


@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("r", range(1, 5))
def test_representation_stability(sweep_checker, k, r):
    for n in range(max(threshold(k, r).size, 1), 11):
        report = sweep_checker.check_rep_stability(k, r, n)
        assert report.passed, report.counterexample


@pytest.mark.parametrize("n", range(1, 8))
def test_monotonicity(sweep_checker, n):
    report = sweep_checker.check_monotonicity(n)
    assert report.passed, report.counterexample


@pytest.mark.parametrize("n", range(1, 9))
def test_flag_corollary(sweep_checker, n):
    report = sweep_checker.check_flag_corollary(n, 4)
    assert report.passed, report.counterexample


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("r", range(2, 5))
def test_threshold_descent(sweep_checker, k, r):
    report = sweep_checker.check_threshold_descent(k, r, 12)
    assert report.passed, report.counterexample
