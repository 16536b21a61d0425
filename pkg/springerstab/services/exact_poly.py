"""
精确有理多项式上的运算: 平移、差分、二项式基、离散求和与插值
"""

from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple
from springerstab.schemas.rational_poly import ONE, ZERO, Rational, RationalPoly

__all__ = [
    "ONE",
    "ZERO",
    "Rational",
    "RationalPoly",
    "add",
    "scale",
    "eval_int",
    "shift",
    "forward_difference",
    "falling_binomial",
    "binomial_basis",
    "from_binomial_basis",
    "discrete_sum",
    "lagrange_interpolate",
]


def add(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    return p + q


def scale(p: RationalPoly, c: Rational) -> RationalPoly:
    return RationalPoly(coefficients=[a * Fraction(c) for a in p.coefficients])


def eval_int(p: RationalPoly, n: int) -> Fraction:
    """精确求值 p(n); 需要整数结果的调用方自行检查分母"""
    return p(n)


def shift(p: RationalPoly, h: Rational) -> RationalPoly:
    """p(x+h)"""
    result = ZERO
    linear = RationalPoly.of(h, 1)
    for c in reversed(p.coefficients):
        result = result * linear + c
    return result


def forward_difference(p: RationalPoly) -> RationalPoly:
    """p(x+1) - p(x)"""
    return shift(p, 1) - p


def falling_binomial(a: int, j: int) -> RationalPoly:
    """C(x-a, j) 作为 x 的多项式"""
    result = ONE
    for t in range(j):
        result = result * RationalPoly.of(-a - t, 1)
    return scale(result, Fraction(1, factorial(j)))


def binomial_basis(p: RationalPoly, a: int) -> List[Fraction]:
    """
    p(x) = Σ b_j C(x-a, j) 中的系数 b_j

    b_j 即 p 在 a 处的 j 阶前向差分。
    """
    if p.is_zero():
        return []
    values = [p(a + i) for i in range(p.degree + 1)]
    basis = []
    while values:
        basis.append(values[0])
        values = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    return basis


def from_binomial_basis(basis: Sequence[Rational], a: int) -> RationalPoly:
    result = ZERO
    for j, b in enumerate(basis):
        if b:
            result = result + scale(falling_binomial(a, j), b)
    return result


def discrete_sum(p: RationalPoly, a: int) -> RationalPoly:
    """
    返回 P 使得对所有整数 x ≥ a 有 P(x) = Σ_{i=a}^{x-1} p(i)

    在二项式基 C(x-a, j) 下求和只是下标平移:
    Σ_{i=a}^{x-1} C(i-a, j) = C(x-a, j+1)。
    """
    basis = binomial_basis(p, a)
    return from_binomial_basis([Fraction(0)] + basis, a)


def lagrange_interpolate(points: Sequence[Tuple[Rational, Rational]]) -> RationalPoly:
    """过给定点 (x_i, y_i) 的唯一最低次插值多项式"""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("插值节点必须互不相同")
    result = ZERO
    for i, (xi, yi) in enumerate(points):
        basis = ONE
        denominator = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * RationalPoly.of(-xj, 1)
            denominator *= Fraction(xi) - xj
        result = result + scale(basis, Fraction(yi) / denominator)
    return result
