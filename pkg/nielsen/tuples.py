from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum

from common.errors import HypothesisViolation, InadmissibleTuple

from .groups import S3_12, S3_23, GroupTable

__all__: tuple[str, ...] = (
    "Direction",
    "NielsenTuple",
    "hurwitz_move",
    "canonicalize",
    "seed_tuple",
    "check_b",
)

log = logging.getLogger(__name__)


class Direction(StrEnum):
    FORWARD = "forward"
    INVERSE = "inverse"


def check_b(b: int) -> None:
    if b < 4:
        raise HypothesisViolation(f"b >= 4 branch points are needed, got b={b}")
    if b % 2:
        raise HypothesisViolation(
            f"b must be even because the product of the b loops in Z/2 = S3/3 must be trivial, got b={b}"
        )


@dataclass(frozen=True, slots=True)
class NielsenTuple:
    group: GroupTable
    entries: tuple[int, ...]

    @property
    def b(self) -> int:
        return len(self.entries)

    def is_admissible(self) -> bool:
        return self.group.is_admissible(self.entries)

    def check(self) -> NielsenTuple:
        """Raise InadmissibleTuple naming the first failed condition."""
        group = self.group
        if bad := [a for a in self.entries if a not in group.admissible_set]:
            raise InadmissibleTuple(f"entries {group.label(bad)} are outside the branch-cycle class of {group.kind}")
        if group.product(self.entries) != 0:
            raise InadmissibleTuple(f"product of ({group.label(self.entries)}) is not the identity")
        if not group.generates(self.entries):
            raise InadmissibleTuple(f"({group.label(self.entries)}) does not generate {group.kind}")
        return self

    def conjugate(self, by: int) -> NielsenTuple:
        return NielsenTuple(self.group, self.group.conjugate_tuple(self.entries, by))

    def to_s3(self, s3: GroupTable) -> NielsenTuple:
        """Entrywise image under the fixed quotient map to S3."""
        return NielsenTuple(s3, tuple(self.group.to_s3[a] for a in self.entries))

    def __str__(self) -> str:
        return f"({self.group.label(self.entries)})"


def hurwitz_move(t: NielsenTuple, i: int, direction: Direction | str = Direction.FORWARD) -> NielsenTuple:
    """beta_i: (.., s_i, s_{i+1}, ..) -> (.., s_{i+1}, s_{i+1}^-1 s_i s_{i+1}, ..), i is 1-based."""
    if not 1 <= i < t.b:
        raise HypothesisViolation(f"move index {i} outside 1..{t.b - 1}")
    return NielsenTuple(t.group, t.group.move(t.entries, i, Direction(direction) is Direction.FORWARD))


def canonicalize(t: NielsenTuple) -> NielsenTuple:
    """Lexicographically least tuple in the class of an admissible tuple."""
    t.check()
    return NielsenTuple(t.group, t.group.canonical(t.entries))


def seed_tuple(group: GroupTable, b: int) -> NielsenTuple:
    """(x, x, y, .., y, z, z) with x over (12), y and z over (23).

    x and y start at the fixed section; z (then y) run through the lifts of (23)
    in index order until the tuple generates. For S3 this is ((12),(12),(23),..,(23)).
    """
    check_b(b)
    x = group.section[S3_12]
    section_y = group.section[S3_23]
    candidates_y = [section_y] + [y for y in group.lifts(S3_23) if y != section_y]
    for y in candidates_y:
        for z in group.lifts(S3_23):
            entries = (x, x) + (y,) * (b - 4) + (z, z)
            if group.is_admissible(entries):
                log.debug("seed for %s, b=%d: %s", group.kind, b, group.label(entries))
                return NielsenTuple(group, entries)
    raise InadmissibleTuple(f"no admissible seed of shape (x, x, y, .., y, z, z) for {group.kind}, b={b}")
