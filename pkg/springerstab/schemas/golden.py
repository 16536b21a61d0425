from pydantic import BaseModel, Field
from typing import List
from springerstab.schemas.rational_poly import RationalPoly


class GoldenEntry(BaseModel):
    """黄金表中的一项 f_{k,r}(x)"""
    r: int = Field(..., ge=1, description="行: 部分个数上限 r")
    k: int = Field(..., ge=0, description="列: 次数 k")
    denominator: int = Field(..., ge=1, description="公分母")
    numerator: List[int] = Field(..., min_length=1, description="降幂整数分子")
    cite: str = Field(..., description="在转录来源表中的位置")

    @property
    def polynomial(self) -> RationalPoly:
        return RationalPoly.from_numerator(self.numerator, self.denominator)

    class Config:
        json_schema_extra = {
            "example": {
                "r": 3,
                "k": 2,
                "denominator": 2,
                "numerator": [1, -1, -2],
                "cite": "first block, row r=3, column k=2"
            }
        }
