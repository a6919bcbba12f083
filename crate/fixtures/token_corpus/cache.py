import hashlib
import json
from pathlib import Path
from typing import Iterable, Set, Tuple

Cache = dict


def get_cache_file(mode: str, root: Path) -> Path:
    return root / ".cache" / f"cache.{mode}.json"


def read_cache(mode: str, root: Path) -> Cache:
    cache_file = get_cache_file(mode, root)
    if not cache_file.exists():
        return {}
    with cache_file.open() as fobj:
        try:
            return json.load(fobj)
        except (json.JSONDecodeError, ValueError):
            return {}


def get_cache_info(path: Path) -> Tuple[float, int]:
    stat = path.stat()
    return stat.st_mtime, stat.st_size


def filter_cached(cache: Cache, sources: Iterable[Path]) -> Tuple[Set[Path], Set[Path]]:
    """Split an iterable of paths in `sources` into two sets.

    The first contains paths of files that modified on disk or are not in the
    cache. The other contains paths to non-modified files.
    """
    todo, done = set(), set()
    for src in sources:
        res_src = src.resolve()
        if cache.get(str(res_src)) != get_cache_info(res_src):
            todo.add(src)
        else:
            done.add(src)
    return todo, done


def write_cache(cache: Cache, sources: Iterable[Path], mode: str, root: Path) -> None:
    cache_file = get_cache_file(mode, root)
    try:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        new_cache = {**cache, **{str(src.resolve()): get_cache_info(src) for src in sources}}
        with cache_file.open("w") as f:
            json.dump(new_cache, f, indent=2)
    except OSError:
        pass


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]
