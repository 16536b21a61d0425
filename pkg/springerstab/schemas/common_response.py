from pydantic import BaseModel, Field
from typing import Optional
from datetime import datetime


class ErrorResponse(BaseModel):
    """错误响应 (--format json 下的失败输出)"""
    code: int = Field(default=2, description="退出码")
    message: str = Field(default="操作失败", description="错误消息")
    detail: Optional[str] = Field(default=None, description="详细信息")
    invocation_id: str = Field(default="", description="调用ID")
    timestamp: datetime = Field(default_factory=datetime.now, description="时间戳")
    success: bool = Field(default=False, description="失败标识")
