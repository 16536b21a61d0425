from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional
from pathlib import Path
from enum import Enum


class OutputFormat(str, Enum):
    """输出格式枚举"""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Invocation(BaseModel):
    """一次已解析的命令行调用"""
    subcommand: str = Field(..., description="子命令")
    options: Dict[str, Any] = Field(default_factory=dict, description="子命令参数")
    output_format: OutputFormat = Field(OutputFormat.TEXT, description="输出格式")
    cache_path: Optional[Path] = Field(None, description="Poincaré缓存文件")
    workers: int = Field(1, ge=1, description="检查时的并行数")


class CommandResult(BaseModel):
    """子命令的结果, 由 ResponseUtil 按输出格式渲染"""
    data: Any = Field(None, description="JSON 负载")
    text: str = Field("", description="文本形式")
    csv_header: List[str] = Field(default_factory=list, description="CSV 表头")
    csv_rows: List[List[Any]] = Field(default_factory=list, description="CSV 数据行")
    exit_code: int = Field(0, ge=0, le=2, description="退出码")
