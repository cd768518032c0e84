"""Nielsen classes: admissible tuples up to simultaneous conjugation.

For X_N the unit scalars on the N^2 kernel identify tuples as well (see `GroupTable.automorphisms`).

Representatives are the canonical (least) tuples, kept sorted, so a class index
does not depend on how the classes were found.
"""

from __future__ import annotations

import logging
import os
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum
from typing import Iterable, Iterator, Sequence

from tqdm import tqdm

from common.constants import STRING
from common.errors import BudgetExceeded, HypothesisViolation, InternalError

from .groups import GroupTable
from .tuples import NielsenTuple, check_b, seed_tuple

__all__: tuple[str, ...] = (
    "EnumerationMethod",
    "ClassSet",
    "enumerate_classes",
    "project_to_s3",
    "thread_cap",
)

log = logging.getLogger(__name__)

Entries = tuple[int, ...]


class EnumerationMethod(StrEnum):
    ORBIT_BFS = "orbit-bfs"
    EXHAUSTIVE = "exhaustive"


def thread_cap(requested: int | None = None) -> int:
    """Worker count: the request, capped by HMLAB_THREADS when that is set."""
    count = requested or os.cpu_count() or 1
    if env := os.environ.get(STRING.THREADS_ENV):
        try:
            count = min(count, max(1, int(env)))
        except ValueError:
            log.warning("ignoring %s=%r, not an integer", STRING.THREADS_ENV, env)
    return max(1, count)


class ClassSet:
    """The Nielsen classes of (group, b), indexed 0..len-1 in lexicographic order of representatives."""

    def __init__(self, group: GroupTable, b: int, representatives: Iterable[Entries], method: str = ""):
        self.group: GroupTable = group
        self.b: int = b
        self.representatives: tuple[Entries, ...] = tuple(sorted(set(representatives)))
        self.index: dict[Entries, int] = {t: i for i, t in enumerate(self.representatives)}
        self.method: str = method

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self) -> Iterator[Entries]:
        return iter(self.representatives)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassSet):
            return NotImplemented
        return (self.group.kind, self.b, self.representatives) == (
            other.group.kind,
            other.b,
            other.representatives,
        )

    def __hash__(self) -> int:
        return hash((self.group.kind, self.b, self.representatives))

    def tuple_at(self, index: int) -> NielsenTuple:
        return NielsenTuple(self.group, self.representatives[index])

    def lookup(self, entries: Entries) -> int:
        """Class index of any tuple of the set (it is canonicalized first)."""
        return self.index[self.group.canonical(entries)]

    def fiber(self, projection: Sequence[int], omega_class: int) -> list[int]:
        """Indices of the classes lying over `omega_class`, ascending."""
        return [i for i, image in enumerate(projection) if image == omega_class]

    def __repr__(self) -> str:
        return f"<ClassSet {self.group.kind} b={self.b} classes={len(self)}>"


def _orbit_bfs(group: GroupTable, b: int, progress: bool, deadline: float | None) -> set[Entries]:
    seed = group.canonical(seed_tuple(group, b).entries)
    found = {seed}
    queue = deque([seed])
    with tqdm(desc=f"{group.kind} b={b} classes", disable=not progress, leave=False) as bar:
        while queue:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time budget exhausted during the class search", {"classes_so_far": len(found)})
            t = queue.popleft()
            for i in range(1, b):
                for forward in (True, False):
                    moved = group.canonical(group.move(t, i, forward))
                    if moved not in found:
                        found.add(moved)
                        queue.append(moved)
                        bar.update(1)
    return found


def _scan_shard(group: GroupTable, b: int, second: int, deadline: float | None = None) -> list[Entries] | None:
    """Canonical generating tuples with the given second entry, first entry a class minimum.

    None when the deadline has already passed.
    """
    if deadline is not None and time.monotonic() > deadline:
        return None
    mult, inv, admissible = group.mult, group.inv, group.admissible
    firsts = sorted({group.class_min[a] for a in admissible})
    found = []

    def extend(prefix: Entries, product: int) -> None:
        if len(prefix) == b - 1:
            last = inv[product]
            if last not in group.admissible_set:
                return
            t = prefix + (last,)
            if group.canonical(t) == t and group.generates(t):
                found.append(t)
            return
        for a in admissible:
            extend(prefix + (a,), mult[product][a])

    for first in firsts:
        extend((first, second), mult[first][second])
    return found


def _exhaustive(group: GroupTable, b: int, threads: int, progress: bool, deadline: float | None) -> set[Entries]:
    # every conjugation orbit meets the tuples whose first entry is its class minimum
    shards = list(group.admissible)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        found: set[Entries] = set()
        scanned = tqdm(
            pool.map(lambda second: _scan_shard(group, b, second, deadline), shards),
            total=len(shards),
            desc=f"{group.kind} b={b} scan",
            disable=not progress,
            leave=False,
        )
        for done, shard in enumerate(scanned):
            if shard is None or (deadline is not None and time.monotonic() > deadline):
                raise BudgetExceeded(
                    "time budget exhausted during the exhaustive scan",
                    {"shards_done": done, "shards": len(shards), "classes_so_far": len(found)},
                )
            found.update(shard)
    return found


def enumerate_classes(
    group: GroupTable,
    b: int,
    method: EnumerationMethod | str = EnumerationMethod.ORBIT_BFS,
    *,
    threads: int | None = None,
    progress: bool = False,
    deadline: float | None = None,
) -> ClassSet:
    """All Nielsen classes of (group, b), found from the seed by Hurwitz moves or by a full scan."""
    check_b(b)
    method = EnumerationMethod(method)
    started = time.monotonic()
    if method is EnumerationMethod.ORBIT_BFS:
        found = _orbit_bfs(group, b, progress, deadline)
    else:
        found = _exhaustive(group, b, thread_cap(threads), progress, deadline)
    if not found:
        raise HypothesisViolation(f"no admissible tuples for {group.kind}, b={b}")
    classes = ClassSet(group, b, found, method)
    log.info("%s b=%d: %d classes by %s in %.2fs", group.kind, b, len(classes), method, time.monotonic() - started)
    return classes


def project_to_s3(cs: ClassSet, omega: ClassSet) -> list[int]:
    """Class map cs -> omega induced by the fixed quotient to S3, as a list indexed by cs classes."""
    if omega.b != cs.b:
        raise HypothesisViolation(f"projection needs the same b, got {cs.b} and {omega.b}")
    s3 = omega.group
    to_s3 = cs.group.to_s3
    projection = []
    for t in cs.representatives:
        image = s3.canonical(tuple(to_s3[a] for a in t))
        try:
            projection.append(omega.index[image])
        except KeyError:
            raise InternalError(f"projection of ({cs.group.label(t)}) is not a class of {omega!r}") from None
    return projection
