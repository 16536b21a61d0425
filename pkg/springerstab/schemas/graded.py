from pydantic import BaseModel, Field, field_validator
from typing import Optional, Tuple


class TPolynomial(BaseModel):
    """变量 t 的非负整数系数多项式, 下标即 t 的幂, 末尾零已去除"""
    coefficients: Tuple[int, ...] = Field(default=(), description="按 t 的升幂排列的系数")

    class Config:
        frozen = True

    @field_validator("coefficients")
    @classmethod
    def _check_coefficients(cls, coefficients: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 0 for c in coefficients):
            raise ValueError(f"系数必须非负: {coefficients}")
        end = len(coefficients)
        while end and coefficients[end - 1] == 0:
            end -= 1
        return tuple(coefficients[:end])

    @property
    def degree(self) -> Optional[int]:
        """次数; 零多项式返回 None"""
        return len(self.coefficients) - 1 if self.coefficients else None

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def evaluate(self, t: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def to_display(self, var: str = "t") -> str:
        """升幂显示, 例如 "t+t^2" """
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
                continue
            monomial = var if power == 1 else f"{var}^{power}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
        return "+".join(terms) if terms else "0"


class PoincarePoly(TPolynomial):
    """Springer纤维的Poincaré多项式: c_k = h^{2k}(λ), 奇数次上同调恒为零"""

    @field_validator("coefficients")
    @classmethod
    def _check_constant_term(cls, coefficients: Tuple[int, ...]) -> Tuple[int, ...]:
        if not coefficients or coefficients[0] != 1:
            raise ValueError(f"h^0 必须为1: {coefficients}")
        return coefficients
