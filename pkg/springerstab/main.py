import io
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path
from typing import Optional, Sequence
from pydantic import ValidationError
from springerstab.cli.router import build_parser
from springerstab.core.config import settings
from springerstab.core.exceptions import SpringerStabError
from springerstab.core.logger import logger, set_invocation_id
from springerstab.schemas.invocation import CommandResult, Invocation, OutputFormat
from springerstab.services import betti_rec
from springerstab.utils.response import ResponseUtil

_GLOBAL_KEYS = {"handler", "subcommand", "format", "cache", "workers"}


def _sniff_format(argv: Sequence[str]) -> OutputFormat:
    """参数解析失败时也要知道输出格式"""
    for i, token in enumerate(argv):
        value = None
        if token == "--format" and i + 1 < len(argv):
            value = argv[i + 1]
        elif token.startswith("--format="):
            value = token.split("=", 1)[1]
        if value in {fmt.value for fmt in OutputFormat}:
            return OutputFormat(value)
    return OutputFormat.TEXT


def _to_invocation(args) -> Invocation:
    options = {key: (str(value) if hasattr(value, "parts") else value) for key, value in vars(args).items() if key not in _GLOBAL_KEYS}
    cache = getattr(args, "cache", None)
    return Invocation(
        subcommand=args.subcommand,
        options=options,
        output_format=OutputFormat(getattr(args, "format", OutputFormat.TEXT.value)),
        cache_path=Path(cache) if cache else None,
        workers=getattr(args, "workers", settings.MAX_WORKERS),
    )


def _parse(argv: Sequence[str], output_format: OutputFormat):
    """json 格式下把 --help 的文本收进缓冲区, 由调用方包成JSON"""
    parser = build_parser()
    if output_format != OutputFormat.JSON:
        return parser.parse_args(argv), ""
    buffer = io.StringIO()
    try:
        with redirect_stdout(buffer):
            return parser.parse_args(argv), ""
    except SystemExit as e:
        if e.code in (0, None):
            return None, buffer.getvalue()
        raise


def _save_cache(path: Path, invocation_id: str) -> None:
    # 写缓存失败不影响已经得到的结果
    try:
        betti_rec.default_cache.save(path)
    except (OSError, SpringerStabError) as e:
        logger.warning(f"⚠️ [{invocation_id}] 缓存写回失败 {path}: {type(e).__name__}: {e}")


def _fail(message: str, detail: Optional[str], invocation_id: str, output_format: OutputFormat) -> int:
    response = ResponseUtil.error(message=message, code=2, detail=detail, invocation_id=invocation_id)
    ResponseUtil.emit_error(response, output_format)
    return response.code


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    执行一次命令行调用

    Args:
        argv: 参数列表 (默认取 sys.argv[1:])

    Returns:
        退出码: 0 通过, 1 检查失败, 2 用法或输入错误
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    start_time = time.time()
    invocation_id = set_invocation_id()
    output_format = _sniff_format(argv)

    try:
        args, help_text = _parse(argv, output_format)
        if args is None:
            sys.stdout.write(ResponseUtil.to_json({"help": help_text}) + "\n")
            return 0
        invocation = _to_invocation(args)
        output_format = invocation.output_format
        logger.info(f"📥 [{invocation_id}] 收到命令: {invocation.subcommand} {invocation.options}")

        if invocation.cache_path is not None and invocation.cache_path.exists():
            betti_rec.default_cache.load(invocation.cache_path)

        result: CommandResult = args.handler(args, invocation)
        ResponseUtil.emit(result, output_format)

        if invocation.cache_path is not None:
            _save_cache(invocation.cache_path, invocation_id)

        process_time = time.time() - start_time
        if result.exit_code == 0:
            logger.success(f"✅ [{invocation_id}] 命令完成: {invocation.subcommand} | 耗时: {process_time:.3f}s")
        else:
            logger.warning(f"⚠️ [{invocation_id}] 检查未通过: {invocation.subcommand} | 耗时: {process_time:.3f}s")
        return result.exit_code

    except SystemExit as e:
        # --help 等由 argparse 正常退出
        return 0 if e.code in (0, None) else 2
    except SpringerStabError as e:
        logger.warning(f"⚠️ [{invocation_id}] {type(e).__name__}: {e.detail}")
        return _fail(e.detail, type(e).__name__, invocation_id, output_format)
    except ValidationError as e:
        logger.warning(f"⚠️ [{invocation_id}] 输入校验失败: {e}")
        return _fail("输入校验失败", str(e), invocation_id, output_format)
    except Exception as e:
        logger.exception(f"💥 [{invocation_id}] 未处理异常: {type(e).__name__}")
        return _fail("内部错误", f"{type(e).__name__}: {e}", invocation_id, output_format)
