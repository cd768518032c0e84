from __future__ import annotations

import math
from typing import Iterable, Mapping

from sympy import factorint, isprime

from common.formats import format_factored

__all__: tuple[str, ...] = ("FactoredInteger",)


class FactoredInteger:
    """A positive integer held as its prime factorisation.

    Group orders like 60^40 · 25920 stay exact and readable;
    equality with plain ints compares by full expansion.
    """

    __slots__: tuple[str, ...] = ("factors",)

    def __init__(self, factors: Mapping[int, int] | None = None):
        cleaned: dict[int, int] = {}
        for prime, exponent in (factors or {}).items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent} for {prime}")
            if exponent == 0:
                continue
            if not isprime(prime):
                raise ValueError(f"{prime} is not prime")
            cleaned[int(prime)] = int(exponent)
        self.factors: dict[int, int] = cleaned

    @classmethod
    def from_int(cls, value: int) -> FactoredInteger:
        if value < 1:
            raise ValueError(f"only positive integers can be factored, got {value}")
        return cls(factorint(value))

    @classmethod
    def product(cls, values: Iterable[FactoredInteger | int]) -> FactoredInteger:
        result = cls()
        for value in values:
            result = result * value
        return result

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.factors.items())

    def __int__(self) -> int:
        return math.prod(p**e for p, e in self.factors.items())

    def __index__(self) -> int:
        return int(self)

    def __mul__(self, other: FactoredInteger | int) -> FactoredInteger:
        other = _coerce(other)
        merged = dict(self.factors)
        for prime, exponent in other.factors.items():
            merged[prime] = merged.get(prime, 0) + exponent
        return FactoredInteger(merged)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> FactoredInteger:
        if exponent < 0:
            raise ValueError("negative powers are not integers")
        return FactoredInteger({p: e * exponent for p, e in self.factors.items()})

    def __truediv__(self, other: FactoredInteger | int) -> FactoredInteger:
        """Exact quotient; raises ValueError when `other` does not divide."""
        other = _coerce(other)
        result = dict(self.factors)
        for prime, exponent in other.factors.items():
            left = result.get(prime, 0) - exponent
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            result[prime] = left
        return FactoredInteger(result)

    def divides(self, other: FactoredInteger | int) -> bool:
        other = _coerce(other)
        return all(other.factors.get(p, 0) >= e for p, e in self.factors.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredInteger):
            return self.factors == other.factors
        if isinstance(other, int):
            return int(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(int(self))

    def __repr__(self) -> str:
        return f"FactoredInteger({format_factored(self)})"

    def __str__(self) -> str:
        return format_factored(self)


def _coerce(value: FactoredInteger | int) -> FactoredInteger:
    if isinstance(value, FactoredInteger):
        return value
    return FactoredInteger.from_int(value)
