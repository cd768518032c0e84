"""Line-oriented class-set cache.

    nielsen-cache v1 <group-kind> <b> <count>
    <entry> <entry> ... <entry>
    ...
"""

from __future__ import annotations

import logging
from pathlib import Path

from common.constants import STRING
from common.errors import CacheFormatError

from .classes import ClassSet, enumerate_classes
from .groups import GroupTable

__all__: tuple[str, ...] = (
    "write_cache",
    "read_cache",
    "load_or_enumerate",
)

log = logging.getLogger(__name__)


def write_cache(cs: ClassSet, path: str | Path) -> None:
    lines = [f"{STRING.CACHE_MAGIC} {STRING.CACHE_VERSION} {cs.group.kind} {cs.b} {len(cs)}"]
    lines.extend(" ".join(map(str, t)) for t in cs.representatives)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    log.info("wrote %d %s classes to %s", len(cs), cs.group.kind, path)


def read_cache(path: str | Path, group: GroupTable, b: int) -> ClassSet:
    """Load a cache written for exactly (group, b); every tuple is re-checked."""
    try:
        header, *body = Path(path).read_text(encoding="utf-8").splitlines()
    except ValueError:
        raise CacheFormatError(f"{path}: empty cache file") from None

    fields = header.split()
    expected = [str(STRING.CACHE_MAGIC), str(STRING.CACHE_VERSION), group.kind, str(b)]
    if len(fields) != 5 or fields[:4] != expected:
        raise CacheFormatError(f"{path}: header {header!r} does not start with {' '.join(expected)!r}")
    try:
        count = int(fields[4])
        tuples = [tuple(int(x) for x in line.split()) for line in body if line.strip()]
    except ValueError as exc:
        raise CacheFormatError(f"{path}: {exc}") from None
    if len(tuples) != count:
        raise CacheFormatError(f"{path}: header announces {count} classes, file has {len(tuples)}")

    for number, t in enumerate(tuples, start=2):
        if len(t) != b or any(not 0 <= a < group.order for a in t):
            raise CacheFormatError(f"{path}:{number}: not a {b}-tuple of {group.kind} elements")
        if not group.is_admissible(t) or group.canonical(t) != t:
            raise CacheFormatError(f"{path}:{number}: not a canonical admissible tuple")
    if tuples != sorted(set(tuples)):
        raise CacheFormatError(f"{path}: classes are not sorted and distinct")

    cs = ClassSet(group, b, tuples, method="cache")
    log.info("read %d %s classes from %s", len(cs), group.kind, path)
    return cs


def load_or_enumerate(path: str | Path | None, group: GroupTable, b: int, **kwargs) -> ClassSet:
    """Read the cache when it exists, otherwise enumerate and write it (when a path is given)."""
    if path is not None and Path(path).exists():
        return read_cache(path, group, b)
    cs = enumerate_classes(group, b, **kwargs)
    if path is not None:
        write_cache(cs, path)
    return cs
