import csv
import io
import json
import sys
from typing import Any, Optional, TextIO
from springerstab.schemas.common_response import ErrorResponse
from springerstab.schemas.invocation import CommandResult, OutputFormat


class ResponseUtil:
    """输出工具类: 把命令结果渲染为 json / csv / text"""

    @staticmethod
    def render(result: CommandResult, output_format: OutputFormat) -> str:
        """
        渲染命令结果

        Args:
            result: 命令结果
            output_format: 输出格式

        Returns:
            str: 写到 stdout 的文本 (末尾不含换行)
        """
        if output_format == OutputFormat.JSON:
            return ResponseUtil.to_json(result.data)
        if output_format == OutputFormat.CSV:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(result.csv_header)
            writer.writerows(result.csv_rows)
            return buffer.getvalue().rstrip("\n")
        return result.text

    @staticmethod
    def to_json(data: Any) -> str:
        return json.dumps(data, ensure_ascii=False, indent=2)

    @staticmethod
    def emit(result: CommandResult, output_format: OutputFormat, stream: Optional[TextIO] = None) -> None:
        stream = stream or sys.stdout
        stream.write(ResponseUtil.render(result, output_format) + "\n")

    @staticmethod
    def error(message: str = "操作失败", code: int = 2, detail: Optional[str] = None, invocation_id: str = "") -> ErrorResponse:
        """
        返回错误响应

        Args:
            message: 错误消息
            code: 退出码
            detail: 详细信息
            invocation_id: 调用ID

        Returns:
            ErrorResponse: 错误响应对象
        """
        return ErrorResponse(code=code, message=message, detail=detail, invocation_id=invocation_id)

    @staticmethod
    def emit_error(response: ErrorResponse, output_format: OutputFormat) -> None:
        """json 格式下错误写到 stdout (保证输出仍是合法JSON), 其余写到 stderr"""
        if output_format == OutputFormat.JSON:
            sys.stdout.write(response.model_dump_json(indent=2) + "\n")
        else:
            sys.stderr.write(f"错误: {response.message}" + (f" ({response.detail})" if response.detail else "") + "\n")
