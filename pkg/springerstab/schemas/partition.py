from pydantic import BaseModel, Field, field_validator, model_serializer, model_validator
from typing import Any, Tuple


def parse_parts(text: str) -> Tuple[int, ...]:
    """
    解析分拆的文本形式 "4,2,1"; 空串表示空分拆

    Args:
        text: 逗号分隔的正整数

    Returns:
        各行长度组成的元组 (此处不检查单调性, 由模型校验)
    """
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(token) for token in text.split(","))
    except ValueError:
        raise ValueError(f"分拆格式错误: {text!r}") from None


class Partition(BaseModel):
    """整数分拆: 弱递减的正整数序列, 空序列是0的唯一分拆"""
    parts: Tuple[int, ...] = Field(default=(), description="各行长度(弱递减正整数)")

    class Config:
        frozen = True

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Any:
        # 允许直接从文本或序列校验
        if isinstance(value, str):
            return {"parts": parse_parts(value)}
        if isinstance(value, (list, tuple)):
            return {"parts": tuple(value)}
        return value

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"分拆的各部分必须为正整数: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"分拆必须弱递减: {parts}")
        return parts

    @model_serializer
    def _serialize(self) -> str:
        return str(self)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls.model_validate(text)

    @property
    def size(self) -> int:
        """|λ|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """非零部分的个数"""
        return len(self.parts)

    def part(self, i: int) -> int:
        """第 i 行的长度 (下标从1开始, 超出范围补零)"""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self})"
