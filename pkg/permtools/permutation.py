"""Permutations of {0..deg-1} as immutable image tuples.

Products are always "apply the left argument first":
compose(p, q)(x) == q(p(x)). Every other package relies on this.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator, Sequence

from common.errors import DegreeMismatch

__all__: tuple[str, ...] = (
    "Permutation",
    "identity",
    "compose",
    "compose_all",
    "inverse",
    "power",
    "conjugate",
    "commutator",
    "from_cycles",
)


class Permutation:
    """A bijection of {0..deg-1}; `images[i]` is the image of point i."""

    __slots__: tuple[str, ...] = ("images",)

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images: tuple[int, ...] = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, exponent: int) -> Permutation:
        return power(self, exponent)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, ordered by that point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                seen.add(point)
                cycle.append(point)
                point = self.images[point]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[tuple[int, int], ...]:
        """Sorted (cycle length, multiplicity) pairs, fixed points included as length 1."""
        lengths = Counter(len(c) for c in self.cycles())
        moved = sum(length * count for length, count in lengths.items())
        if fixed := self.degree - moved:
            lengths[1] = fixed
        return tuple(sorted(lengths.items()))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def restricted(self, points: Sequence[int]) -> Permutation:
        """Action on `points` (which must be invariant), reindexed by position in `points`."""
        position = {p: i for i, p in enumerate(points)}
        return Permutation(position[self.images[p]] for p in points)


def identity(degree: int) -> Permutation:
    return Permutation(range(degree), check=False)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    if len(p.images) != len(q.images):
        raise DegreeMismatch(f"cannot compose permutations of degree {len(p.images)} and {len(q.images)}")
    return Permutation(map(q.images.__getitem__, p.images), check=False)


def compose_all(perms: Iterable[Permutation], degree: int) -> Permutation:
    result = identity(degree)
    for perm in perms:
        result = compose(result, perm)
    return result


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(inv, check=False)


def power(p: Permutation, exponent: int) -> Permutation:
    if exponent < 0:
        return power(inverse(p), -exponent)
    result = identity(p.degree)
    base = p
    while exponent:
        if exponent & 1:
            result = compose(result, base)
        base = compose(base, base)
        exponent >>= 1
    return result


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """by⁻¹ · p · by, i.e. apply by⁻¹, then p, then by."""
    return compose(compose(inverse(by), p), by)


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """[p, q] = p⁻¹ q⁻¹ p q."""
    return compose(compose(compose(inverse(p), inverse(q)), p), q)


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint (or not) cycles, multiplied left to right."""
    result = identity(degree)
    for cycle in cycles:
        images = list(range(degree))
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        if cycle:
            images[cycle[-1]] = cycle[0]
        result = compose(result, Permutation(images))
    return result
