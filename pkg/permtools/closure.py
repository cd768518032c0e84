from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

from common.errors import DegreeMismatch, NotTransitive

from .bsgs import PermGroup, bsgs_build
from .permutation import Permutation, commutator, compose, conjugate, identity

__all__: tuple[str, ...] = (
    "orbit",
    "orbits",
    "enumerate_elements",
    "normal_closure",
    "derived_subgroup",
    "is_primitive",
)

log = logging.getLogger(__name__)


def orbit(start: int, gens: Sequence[Permutation], degree: int | None = None) -> list[int]:
    """Points reachable from `start`, in breadth-first order (generators tried in the given order)."""
    if degree is not None and not 0 <= start < degree:
        raise DegreeMismatch(f"point {start} outside a degree {degree} domain")
    images = [g.images for g in gens]
    seen = {start}
    found = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in images:
            y = g[x]
            if y not in seen:
                seen.add(y)
                found.append(y)
                queue.append(y)
    return found


def orbits(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    """Partition of {0..degree-1} into orbits, ordered by smallest point."""
    seen: set[int] = set()
    result = []
    for point in range(degree):
        if point in seen:
            continue
        found = orbit(point, gens, degree)
        seen.update(found)
        result.append(found)
    return result


def enumerate_elements(gens: Sequence[Permutation], degree: int, limit: int = 1_000_000) -> set[Permutation]:
    """Every element of <gens> by brute-force closure. Only sensible for small groups."""
    start = identity(degree)
    elements = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in elements:
                elements.add(y)
                if len(elements) > limit:
                    raise ValueError(f"group has more than {limit} elements")
                queue.append(y)
    return elements


def normal_closure(
    group: PermGroup,
    seeds: Iterable[Permutation],
    *,
    deadline: float | None = None,
) -> PermGroup:
    """Smallest subgroup containing `seeds` that is normalized by `group.generators`."""
    gens = [s for s in seeds if not s.is_identity()]
    for s in gens:
        if s.degree != group.degree:
            raise DegreeMismatch(f"seed of degree {s.degree} for a degree {group.degree} group")
    closure = bsgs_build(gens, group.degree, deadline=deadline)
    queue = deque(gens)
    while queue:
        h = queue.popleft()
        for x in group.generators:
            c = conjugate(h, x)
            if closure.contains(c):
                continue
            gens.append(c)
            queue.append(c)
            closure = bsgs_build(gens, group.degree, deadline=deadline)
    log.debug("normal closure of order %d inside a group of order %d", closure.order, group.order)
    return closure


def derived_subgroup(group: PermGroup, *, deadline: float | None = None) -> PermGroup:
    """[G, G]: normal closure of the commutators of all generator pairs."""
    seeds = [commutator(p, q) for p, q in combinations(group.generators, 2)]
    return normal_closure(group, seeds, deadline=deadline)


def _finest_blocks(gens: Sequence[tuple[int, ...]], degree: int, partner: int) -> list[int]:
    """Finest system of blocks with 0 and `partner` in the same block, as a union-find parent array."""
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = deque([(0, partner)])
    parent[partner] = 0
    while pending:
        a, b = pending.popleft()
        for g in gens:
            x, y = find(g[a]), find(g[b])
            if x != y:
                if y < x:
                    x, y = y, x
                parent[y] = x
                pending.append((x, y))
    return [find(x) for x in range(degree)]


def is_primitive(group: PermGroup) -> tuple[bool, list[list[int]] | None]:
    """Primitivity test by minimal block systems through point 0.

    Returns (True, None) when primitive, otherwise (False, blocks) where `blocks`
    is a nontrivial block system with the smallest block size found.
    """
    degree = group.degree
    if not group.is_transitive():
        raise NotTransitive(f"primitivity needs a transitive group, degree {degree} group is not")
    gens = [g.images for g in group.generators]
    best: list[int] | None = None
    best_size = degree
    for partner in range(1, degree):
        roots = _finest_blocks(gens, degree, partner)
        size = roots.count(roots[0])
        if size < best_size:
            best, best_size = roots, size
            if size == 2:
                break
    if best is None:
        return True, None
    blocks: dict[int, list[int]] = {}
    for point, root in enumerate(best):
        blocks.setdefault(root, []).append(point)
    return False, sorted(blocks.values())
