from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from common.errors import HypothesisViolation, InternalError
from nielsen.classes import ClassSet
from permtools.permutation import Permutation, compose, identity, inverse

__all__: tuple[str, ...] = (
    "BraidWord",
    "braid_perms",
    "sphere_word",
    "full_twist",
    "braid_relations_hold",
    "genus_to_b",
    "b_to_genus",
    "branch_count",
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in beta_1 .. beta_{b-1}; letter k is beta_k, -k its inverse."""

    letters: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """`"1 -2 3"` -> beta_1 beta_2^-1 beta_3"""
        try:
            letters = tuple(int(x) for x in text.replace(",", " ").split())
        except ValueError:
            raise HypothesisViolation(f"cannot read a braid word from {text!r}") from None
        if 0 in letters:
            raise HypothesisViolation("braid letters are nonzero generator indices")
        return cls(letters)

    @classmethod
    def of(cls, letters: Iterable[int]) -> BraidWord:
        return cls(tuple(letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __pow__(self, exponent: int) -> BraidWord:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return BraidWord(self.letters * exponent)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def evaluate(self, perms: Sequence[Permutation], degree: int | None = None) -> Permutation:
        """Product of the letters' permutations, left letter applied first."""
        if degree is None:
            if not perms:
                raise HypothesisViolation("evaluating a braid word needs generator permutations or a degree")
            degree = perms[0].degree
        inverses: dict[int, Permutation] = {}
        result = identity(degree)
        for letter in self.letters:
            k = abs(letter)
            if not 1 <= k <= len(perms):
                raise HypothesisViolation(f"letter {letter} outside 1..{len(perms)}")
            if letter > 0:
                result = compose(result, perms[k - 1])
            else:
                if k not in inverses:
                    inverses[k] = inverse(perms[k - 1])
                result = compose(result, inverses[k])
        return result

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "1"


def sphere_word(b: int) -> BraidWord:
    """beta_1 .. beta_{b-1} beta_{b-1} .. beta_1, trivial in the spherical braid group."""
    return BraidWord(tuple(range(1, b)) + tuple(range(b - 1, 0, -1)))


def full_twist(b: int) -> BraidWord:
    """(beta_1 .. beta_{b-1})^b.

    beta_1 .. beta_{b-1} rotates a tuple of product 1 by one place, so this word fixes every tuple.
    """
    return BraidWord(tuple(range(1, b))) ** b


def braid_perms(cs: ClassSet) -> list[Permutation]:
    """Permutation of class indices induced by each Hurwitz move beta_1 .. beta_{b-1}."""
    if not len(cs):
        raise HypothesisViolation("braid permutations need a nonempty class set")
    group = cs.group
    perms = []
    for i in range(1, cs.b):
        try:
            images = [cs.index[group.canonical(group.move(t, i))] for t in cs.representatives]
        except KeyError:
            raise InternalError(f"beta_{i} leaves {cs!r}: the class set is not braid-closed") from None
        perms.append(Permutation(images))
    log.debug("braid permutations on %d classes of %s b=%d", len(cs), group.kind, cs.b)
    return perms


def braid_relations_hold(perms: Sequence[Permutation]) -> bool:
    """beta_i beta_{i+1} beta_i == beta_{i+1} beta_i beta_{i+1} and distant generators commute."""
    for i, p in enumerate(perms):
        for j in range(i + 1, len(perms)):
            q = perms[j]
            if j == i + 1:
                if compose(compose(p, q), p) != compose(compose(q, p), q):
                    return False
            elif compose(p, q) != compose(q, p):
                return False
    return True


def genus_to_b(g: int) -> int:
    """Branch points of the degree-4 covers of genus g: b = 2g + 6."""
    if g < 0:
        raise HypothesisViolation(f"genus must be >= 0, got {g}")
    return 2 * g + 6


def b_to_genus(b: int) -> int:
    if b < 6 or b % 2:
        raise HypothesisViolation(f"b = 2g + 6 needs an even b >= 6, got b={b}")
    return (b - 6) // 2


def branch_count(d: int, g: int) -> int:
    """Riemann-Hurwitz for simply branched degree-d covers of the line: b = 2g + 2d - 2."""
    return 2 * g + 2 * d - 2
