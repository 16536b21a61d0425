from pydantic_settings import BaseSettings
from pathlib import Path

# 包内数据目录
PACKAGE_DATA_PATH = Path(__file__).resolve().parent.parent / "data"


class Settings(BaseSettings):
    # 应用配置
    APP_NAME: str = "springerstab"
    APP_VERSION: str = "1.0.0"
    PROJECT_NAME: str = "Springer Fiber Stability Toolkit"

    # 日志配置
    LOG_LEVEL: str = "INFO"
    LOG_TO_FILE: bool = False
    LOG_PATH: str = "logs"
    LOG_ROTATION: str = "00:00"
    LOG_RETENTION: str = "30 days"

    # 数据路径配置
    DATA_PATH: Path = PACKAGE_DATA_PATH
    GOLDEN_TABLE_PATH: Path = PACKAGE_DATA_PATH / "golden_tables.json"

    # 计算配置 (并行默认关闭, 由 --workers 覆盖)
    MAX_WORKERS: int = 1

    class Config:
        env_prefix = "SPRINGERSTAB_"
        case_sensitive = True


# 创建配置实例
settings = Settings()
