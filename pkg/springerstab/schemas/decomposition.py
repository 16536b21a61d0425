from pydantic import BaseModel, Field
from typing import Dict, Tuple
from springerstab.schemas.partition import Partition


class Multiplicity(BaseModel):
    """不可约表示 χ^μ 的重数"""
    mu: Partition = Field(..., description="不可约表示的指标")
    mult: int = Field(..., ge=1, description="重数")

    class Config:
        frozen = True


class GradedDecomposition(BaseModel):
    """H^{2k}(λ) 作为对称群模的分解 (只列出非零重数)"""
    partition: Partition = Field(..., description="Springer纤维对应的分拆 λ")
    degree: int = Field(..., ge=0, description="k, 对应上同调次数 2k")
    multiplicities: Tuple[Multiplicity, ...] = Field(default=(), description="按 μ 降字典序排列")

    class Config:
        frozen = True

    def as_dict(self) -> Dict[Partition, int]:
        return {entry.mu: entry.mult for entry in self.multiplicities}

    def same_representation(self, other: "GradedDecomposition") -> bool:
        """特征标相同即表示同构"""
        return self.as_dict() == other.as_dict()
