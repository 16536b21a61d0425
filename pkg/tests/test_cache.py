import pytest
from springerstab.core.exceptions import CacheFormatError
from springerstab.services import betti_rec
from springerstab.services.betti_rec import CACHE_HEADER, PoincareCache
from tests.conftest import P


def write(path, *records):
    path.write_text("\n".join((CACHE_HEADER,) + records) + "\n", encoding="utf-8")
    return path


def test_save_then_load(fresh_cache, tmp_path):
    betti_rec.poincare(P(3, 2, 1), fresh_cache)
    path = tmp_path / "poincare.cache"
    saved = fresh_cache.save(path)
    assert path.read_text(encoding="utf-8").splitlines()[0] == CACHE_HEADER

    restored = PoincareCache()
    assert restored.load(path) == saved == len(fresh_cache)
    assert restored.get(P(3, 2, 1)) == fresh_cache.get(P(3, 2, 1))
    assert restored.get(P(2, 2)).coefficients == (1, 3, 2)


def test_records_are_ordered_by_size(fresh_cache, tmp_path):
    betti_rec.poincare(P(2, 1), fresh_cache)
    path = tmp_path / "poincare.cache"
    fresh_cache.save(path)
    assert path.read_text(encoding="utf-8").splitlines()[1:] == ["\t1", "1\t1", "2\t1", "1,1\t1,1", "2,1\t1,2"]


def test_loaded_entries_are_used(tmp_path):
    cache = PoincareCache()
    cache.load(write(tmp_path / "c", "2,2\t1,3,2"))
    assert betti_rec.betti(P(2, 2), 2, cache) == 2
    assert P(2, 1) not in cache


@pytest.mark.parametrize("record", [
    "2,1\t1,2,1",
    "2,1\t1,2,0",
    "2,1\t2,2",
    "2,1\t1,-2",
    "1,2\t1,2",
    "2,1",
    "2,1\t1,x",
])
def test_rejects_bad_records(tmp_path, record):
    with pytest.raises(CacheFormatError):
        PoincareCache().load(write(tmp_path / "c", record))


def test_requires_header(tmp_path):
    path = tmp_path / "c"
    path.write_text("2,1\t1,2\n", encoding="utf-8")
    with pytest.raises(CacheFormatError):
        PoincareCache().load(path)
