from pydantic import BaseModel, Field, model_validator
from typing import Any, Dict, Literal, Optional


class StabilityReport(BaseModel):
    """单项检查的结论, 可直接序列化为JSON"""
    check: str = Field(..., description="检查名称")
    params: Dict[str, Any] = Field(default_factory=dict, description="参数")
    verdict: Literal["pass", "fail"] = Field(..., description="结论")
    vacuous: bool = Field(default=False, description="待检集合为空时为真")
    counterexample: Optional[Dict[str, Any]] = Field(default=None, description="最小反例")
    elapsed_ms: float = Field(default=0.0, ge=0, description="耗时(毫秒)")

    @model_validator(mode="after")
    def _verdict_matches_payload(self) -> "StabilityReport":
        if (self.verdict == "pass") != (self.counterexample is None):
            raise ValueError("verdict=pass 当且仅当 counterexample 为空")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"
