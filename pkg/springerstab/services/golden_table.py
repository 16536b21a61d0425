import json
from pathlib import Path
from typing import List, Optional
from pydantic import ValidationError
from springerstab.core.config import settings
from springerstab.core.exceptions import PreconditionError
from springerstab.core.logger import logger
from springerstab.schemas.golden import GoldenEntry


class GoldenTableService:
    """黄金表服务类: 载入并查询 f_{k,r} 的转录值"""

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else settings.GOLDEN_TABLE_PATH
        self.entries = self._load_entries()

    def _load_entries(self) -> List[GoldenEntry]:
        """加载黄金表数据"""
        if not self.path.exists():
            raise PreconditionError(f"黄金表文件不存在: {self.path}")
        try:
            with open(self.path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            entries = [GoldenEntry.model_validate(item) for item in data["entries"]]
        except (json.JSONDecodeError, KeyError, ValidationError) as e:
            raise PreconditionError(f"黄金表文件格式错误 {self.path}: {e}") from None
        logger.debug(f"加载了 {len(entries)} 项黄金值")
        return entries

    def get_entries(self, r: Optional[int] = None, k: Optional[int] = None) -> List[GoldenEntry]:
        """按行 r / 列 k 筛选"""
        items = self.entries
        if r is not None:
            items = [entry for entry in items if entry.r == r]
        if k is not None:
            items = [entry for entry in items if entry.k == k]
        return items

    def get_entry(self, r: int, k: int) -> Optional[GoldenEntry]:
        for entry in self.entries:
            if entry.r == r and entry.k == k:
                return entry
        return None
