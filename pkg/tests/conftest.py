import json
import pytest
from springerstab.main import run
from springerstab.schemas.partition import Partition
from springerstab.services.betti_rec import PoincareCache
from springerstab.services.golden_table import GoldenTableService
from springerstab.services.stability_checks import StabilityChecker


def P(*parts: int) -> Partition:
    return Partition.of(*parts)


@pytest.fixture
def fresh_cache() -> PoincareCache:
    return PoincareCache()


@pytest.fixture(scope="session")
def golden() -> GoldenTableService:
    return GoldenTableService()


@pytest.fixture
def checker(fresh_cache, golden) -> StabilityChecker:
    return StabilityChecker(cache=fresh_cache, golden_table=golden)


@pytest.fixture
def cli(capsys):
    """运行一次CLI, 返回 (退出码, stdout, stderr)"""

    def invoke(*argv: str):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


@pytest.fixture
def cli_json(cli):
    def invoke(*argv: str):
        code, out, _ = cli(*argv, "--format", "json")
        return code, json.loads(out)

    return invoke
