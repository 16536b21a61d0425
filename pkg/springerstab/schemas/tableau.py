from pydantic import BaseModel, Field, model_validator
from typing import Dict, Tuple
from springerstab.schemas.partition import Partition


class Tableau(BaseModel):
    """半标准Young表 (英式记法): 行弱递增, 列严格递增"""
    shape: Partition = Field(..., description="形状")
    rows: Tuple[Tuple[int, ...], ...] = Field(..., description="各行填数")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_semistandard(self) -> "Tableau":
        if tuple(len(row) for row in self.rows) != self.shape.parts:
            raise ValueError(f"行长与形状不符: {self.rows} / {self.shape}")
        for i, row in enumerate(self.rows):
            if any(v <= 0 for v in row):
                raise ValueError("表中元素必须为正整数")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"第{i + 1}行不是弱递增: {row}")
            if i > 0:
                above = self.rows[i - 1]
                if any(above[j] >= row[j] for j in range(len(row))):
                    raise ValueError(f"第{i + 1}行违反列严格递增")
        return self

    @property
    def content(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        return counts

    def reading_word(self) -> Tuple[int, ...]:
        """阅读词: 自底行起, 每行从左到右"""
        return tuple(v for row in reversed(self.rows) for v in row)
