"""Base and strong generating sets by Schreier-Sims.

The deterministic variant tests every Schreier generator of every level
(remembering which ones it already tested, so a level is never rescanned).
The randomized variant first feeds product-replacement random elements
through the sifting procedure and then runs the same complete test,
so both variants return exact orders and exact membership.

Internally permutations are plain tuples and products apply the left factor first.
"""

from __future__ import annotations

import logging
import random
import time
from typing import Iterable, Literal, Sequence

from tqdm import tqdm

from common.constants import LIMITS
from common.errors import BudgetExceeded, DegreeMismatch

from .factored import FactoredInteger
from .permutation import Permutation

__all__: tuple[str, ...] = (
    "PermGroup",
    "bsgs_build",
)

log = logging.getLogger(__name__)

Perm = tuple[int, ...]
Method = Literal["deterministic", "randomized"]


def _mul(p: Perm, q: Perm) -> Perm:
    return tuple(map(q.__getitem__, p))


def _inv(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _first_moved(p: Perm) -> int:
    return next(i for i, x in enumerate(p) if i != x)


class _Level:
    """One step of the stabilizer chain: base point, its generators, orbit and transversal."""

    __slots__ = ("point", "gens", "reps", "inv_reps", "orbit", "checked")

    def __init__(self, point: int, identity: Perm):
        self.point: int = point
        self.gens: list[Perm] = []
        self.reps: dict[int, Perm] = {point: identity}
        self.inv_reps: dict[int, Perm] = {point: identity}
        self.orbit: list[int] = [point]
        self.checked: set[tuple[int, int]] = set()

    def add_gen(self, gen: Perm) -> None:
        self.gens.append(gen)
        # every point sees every generator again; old representatives never change
        position = 0
        while position < len(self.orbit):
            x = self.orbit[position]
            rep = self.reps[x]
            for g in self.gens:
                y = g[x]
                if y not in self.reps:
                    self.reps[y] = _mul(rep, g)
                    self.orbit.append(y)
            position += 1

    def inverse_rep(self, point: int) -> Perm | None:
        inv = self.inv_reps.get(point)
        if inv is None:
            rep = self.reps.get(point)
            if rep is None:
                return None
            inv = self.inv_reps[point] = _inv(rep)
        return inv


class _SchreierSims:
    def __init__(self, degree: int, deadline: float | None = None, progress: bool = False):
        self.degree = degree
        self.identity: Perm = tuple(range(degree))
        self.levels: list[_Level] = []
        self.deadline = deadline
        self.progress = progress
        self.sifts = 0

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.orbit)
        return result

    def strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        for index in range(start, len(self.levels)):
            level = self.levels[index]
            point = g[level.point]
            if point == level.point:
                continue
            inv = level.inverse_rep(point)
            if inv is None:
                return g, index
            g = _mul(g, inv)
        return g, len(self.levels)

    def add_residue(self, residue: Perm, tested: int, depth: int) -> None:
        """Add `residue` to the generators of levels tested+1 .. depth, opening a level if needed."""
        if depth == len(self.levels):
            self.levels.append(_Level(_first_moved(residue), self.identity))
        for index in range(tested + 1, depth + 1):
            self.levels[index].add_gen(residue)

    def sift_in(self, g: Perm) -> bool:
        """Sift g from the top; when it does not sift through, keep its residue. True on change."""
        residue, depth = self.strip(g, 0)
        if residue == self.identity:
            return False
        self.add_residue(residue, -1, depth)
        return True

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(
                "time budget exhausted while building the stabilizer chain",
                partial={
                    "base_length": len(self.levels),
                    "order_lower_bound": str(self.order()),
                    "sifts": self.sifts,
                },
            )

    def test_level(self, index: int) -> int | None:
        level = self.levels[index]
        for x in level.orbit:
            ux = level.reps[x]
            for k, s in enumerate(level.gens):
                if (x, k) in level.checked:
                    continue
                level.checked.add((x, k))
                y = s[x]
                step = _mul(ux, s)
                if step == level.reps[y]:
                    continue
                schreier = _mul(step, level.inverse_rep(y))
                self.sifts += 1
                if self.sifts % 2048 == 0:
                    self._check_deadline()
                    log.debug("%d sifts, base length %d, order so far %d", self.sifts, len(self.levels), self.order())
                residue, depth = self.strip(schreier, index + 1)
                if residue != self.identity:
                    self.add_residue(residue, index, depth)
                    return depth
        return None

    def complete(self) -> None:
        index = len(self.levels) - 1
        with tqdm(desc="schreier-sims", unit="level", disable=not self.progress, leave=False) as bar:
            while index >= 0:
                found = self.test_level(index)
                index = index - 1 if found is None else found
                bar.update(1)

    def randomize(self, gens: Sequence[Perm], seed: int, known_order: int | None) -> None:
        """Sift product-replacement random elements until they stop adding anything."""
        rng = random.Random(seed)
        slots = [self.identity] * 5 + list(gens)
        accumulator = self.identity

        def stir() -> Perm:
            nonlocal accumulator
            i, j = rng.randrange(len(slots)), rng.randrange(len(slots))
            if i == j:
                j = (j + 1) % len(slots)
            other = slots[j] if rng.randrange(2) else _inv(slots[j])
            slots[i] = _mul(slots[i], other)
            accumulator = _mul(accumulator, slots[i])
            return accumulator

        for _ in range(max(30, 4 * len(gens))):
            stir()

        quiet_rounds = 0
        with tqdm(desc="random sifts", disable=not self.progress, leave=False) as bar:
            while quiet_rounds < LIMITS.RANDOM_EXIT_ROUNDS:
                if known_order is not None and self.order() >= known_order:
                    break
                self.sifts += 1
                if self.sifts % 256 == 0:
                    self._check_deadline()
                quiet_rounds = 0 if self.sift_in(stir()) else quiet_rounds + 1
                bar.update(1)


class PermGroup:
    """A permutation group held as base + strong generating set.

    `order` is exact: the product of the basic orbit lengths.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], levels: list[_Level], method: str):
        self.degree: int = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self._levels: list[_Level] = levels
        self.method: str = method
        self.base: tuple[int, ...] = tuple(level.point for level in levels)
        seen: dict[Perm, None] = {}
        for level in levels:
            for gen in level.gens:
                seen.setdefault(gen, None)
        self.strong_generators: tuple[Permutation, ...] = tuple(Permutation(g, check=False) for g in seen)
        order = 1
        for level in levels:
            order *= len(level.orbit)
        self.order: int = order

    @property
    def factored_order(self) -> FactoredInteger:
        return FactoredInteger.product(FactoredInteger.from_int(len(level.orbit)) for level in self._levels)

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(level.orbit) for level in self._levels]

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        """Per base point: orbit point -> coset representative sending the base point there."""
        return [{x: Permutation(rep, check=False) for x, rep in level.reps.items()} for level in self._levels]

    def level_generators(self, index: int) -> tuple[Permutation, ...]:
        return tuple(Permutation(g, check=False) for g in self._levels[index].gens)

    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        """Residue of g after stripping through the chain, and the level where it stopped."""
        if g.degree != self.degree:
            raise DegreeMismatch(f"degree {g.degree} element sifted through a degree {self.degree} group")
        images: Perm = g.images
        for index, level in enumerate(self._levels):
            point = images[level.point]
            if point == level.point:
                continue
            inv = level.inverse_rep(point)
            if inv is None:
                return Permutation(images, check=False), index
            images = _mul(images, inv)
        return Permutation(images, check=False), len(self._levels)

    def contains(self, g: Permutation) -> bool:
        residue, depth = self.sift(g)
        return depth == len(self._levels) and residue.is_identity()

    __contains__ = contains

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_transitive(self) -> bool:
        from .closure import orbit

        return self.degree == 0 or len(orbit(0, self.generators, self.degree)) == self.degree

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order} base_length={len(self.base)} {self.method}>"


def bsgs_build(
    gens: Iterable[Permutation],
    degree: int,
    *,
    method: Method = "deterministic",
    seed: int = 0,
    known_order: int | None = None,
    deadline: float | None = None,
    progress: bool = False,
) -> PermGroup:
    """Build a PermGroup for the group generated by `gens`.

    `method="randomized"` only changes how the chain is seeded;
    the complete Schreier generator test runs either way.
    `known_order` lets the randomized phase stop early, it is never trusted as the answer.
    """
    gens = list(gens)
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator of degree {g.degree} given for a degree {degree} group")

    builder = _SchreierSims(degree, deadline=deadline, progress=progress)
    raw = [g.images for g in gens if not g.is_identity()]
    if raw:
        first = _Level(min(_first_moved(g) for g in raw), builder.identity)
        builder.levels.append(first)
        for g in raw:
            first.add_gen(g)
        if method == "randomized":
            builder.randomize(raw, seed, known_order)
        builder.complete()

    label = "deterministic" if method == "deterministic" else "randomized+verified"
    group = PermGroup(degree, gens, builder.levels, label)
    log.debug("built %r after %d sifts", group, builder.sifts)
    return group
