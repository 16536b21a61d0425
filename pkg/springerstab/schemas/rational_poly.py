"""
精确有理系数一元多项式

系数一律用 Fraction 存储 (最简分数, 分母为正), 不出现浮点数。
"""

import re
from fractions import Fraction
from math import lcm
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union
from pydantic import BaseModel, Field, field_validator

Rational = Union[int, Fraction]

_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


def _trim(coefficients: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


class RationalPoly(BaseModel):
    """有理系数多项式, coefficients[i] 为 x^i 的系数"""
    coefficients: Tuple[Fraction, ...] = Field(default=(), description="升幂系数, 末尾零已去除")

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @field_validator("coefficients", mode="before")
    @classmethod
    def _to_fractions(cls, value: Any) -> Tuple[Fraction, ...]:
        return _trim([Fraction(c) for c in value])

    # 构造
    @classmethod
    def of(cls, *coefficients: Rational) -> "RationalPoly":
        return cls(coefficients=coefficients)

    @classmethod
    def constant(cls, c: Rational) -> "RationalPoly":
        return cls(coefficients=(c,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls(coefficients=(0, 1))

    @classmethod
    def from_numerator(cls, numerator_desc: Sequence[int], denominator: int = 1) -> "RationalPoly":
        """由降幂整数分子与公分母构造, 即 (x^2-x-2)/2 记作 [1,-1,-2], 2"""
        return cls(coefficients=[Fraction(c, denominator) for c in reversed(numerator_desc)])

    @classmethod
    def from_json(cls, pairs: Iterable[Sequence[int]]) -> "RationalPoly":
        return cls(coefficients=[Fraction(num, den) for num, den in pairs])

    @classmethod
    def parse(cls, text: str) -> "RationalPoly":
        """
        解析公分母显示形式, 例如 "(x^2-x-2)/2"、"x-1"、"1"

        Raises:
            ValueError: 无法解析
        """
        source = text.replace(" ", "")
        denominator = 1
        match = re.fullmatch(r"\((.*)\)/(\d+)", source)
        if match:
            source, denominator = match.group(1), int(match.group(2))
        if not source:
            raise ValueError(f"无法解析多项式: {text!r}")
        coefficients: List[Fraction] = []
        position = 0
        while position < len(source):
            term = _TERM.match(source, position)
            if term is None or term.end() == position or not (term.group(2) or term.group(3)):
                raise ValueError(f"无法解析多项式: {text!r}")
            if position > 0 and not term.group(1):
                raise ValueError(f"缺少运算符: {text!r}")
            sign = -1 if term.group(1) == "-" else 1
            value = int(term.group(2)) if term.group(2) else 1
            power = 0
            if term.group(3):
                power = int(term.group(4)) if term.group(4) else 1
            while len(coefficients) <= power:
                coefficients.append(Fraction(0))
            coefficients[power] += Fraction(sign * value, denominator)
            position = term.end()
        return cls(coefficients=coefficients)

    # 基本属性
    @property
    def degree(self) -> Optional[int]:
        """次数; 零多项式返回 None"""
        return len(self.coefficients) - 1 if self.coefficients else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    # 运算
    def __add__(self, other: Any) -> "RationalPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPoly(coefficients=[self.coefficient(i) + other.coefficient(i) for i in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(coefficients=[-c for c in self.coefficients])

    def __sub__(self, other: Any) -> "RationalPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "RationalPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: Any) -> "RationalPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPoly(coefficients=product)

    __rmul__ = __mul__

    def __call__(self, value: Rational) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    # 输出
    def common_denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coefficients)) if self.coefficients else 1

    def integer_numerator(self) -> List[int]:
        """乘以公分母后的升幂整数系数"""
        denominator = self.common_denominator()
        return [int(c * denominator) for c in self.coefficients]

    def _numerator_text(self, separator: str = "") -> str:
        terms = []
        numerator = self.integer_numerator()
        for power in range(len(numerator) - 1, -1, -1):
            c = numerator[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}{separator}{monomial}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign}{body}")
        return "".join(terms) if terms else "0"

    def to_display(self) -> str:
        """公分母显示形式, 例如 "(x^2-x-2)/2" """
        numerator = self._numerator_text()
        denominator = self.common_denominator()
        if denominator == 1:
            return numerator
        return f"({numerator})/{denominator}"

    def to_latex(self) -> str:
        """LaTeX 形式, 例如 "\\frac{1}{2} \\left(x^2-x-2\\right)" """
        numerator = self._numerator_text(separator=" ")
        denominator = self.common_denominator()
        if denominator == 1:
            return numerator
        return f"\\frac{{1}}{{{denominator}}} \\left({numerator}\\right)"

    def to_json(self) -> List[List[int]]:
        """[分子, 分母] 对, 按升幂排列"""
        return [[c.numerator, c.denominator] for c in self.coefficients]

    def __str__(self) -> str:
        return self.to_display()

    def __repr__(self) -> str:
        return f"RationalPoly({self.to_display()})"


ZERO = RationalPoly()
ONE = RationalPoly.constant(1)


def _coerce(value: Any) -> RationalPoly:
    if isinstance(value, RationalPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPoly.constant(value)
    return NotImplemented

