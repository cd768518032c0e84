"""Vectors and square matrices over Z/N.

Matrices act on row vectors, x -> xM, so the product MM' is "apply M first".
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np
from sympy import Matrix

from common.errors import DegreeMismatch, NotInvertible

__all__: tuple[str, ...] = (
    "ResidueVector",
    "ResidueMatrix",
)


def _check_modulus(modulus: int) -> int:
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    return int(modulus)


class ResidueVector:
    __slots__: tuple[str, ...] = ("modulus", "entries")

    def __init__(self, entries: Iterable[int], modulus: int):
        self.modulus: int = _check_modulus(modulus)
        self.entries: tuple[int, ...] = tuple(int(x) % self.modulus for x in entries)

    @classmethod
    def zero(cls, dimension: int, modulus: int) -> ResidueVector:
        return cls((0,) * dimension, modulus)

    @classmethod
    def unit(cls, dimension: int, position: int, modulus: int) -> ResidueVector:
        entries = [0] * dimension
        entries[position] = 1
        return cls(entries, modulus)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, position: int) -> int:
        return self.entries[position]

    def _same_space(self, other: ResidueVector) -> None:
        if self.modulus != other.modulus or len(self) != len(other):
            raise DegreeMismatch(
                f"vectors live in (Z/{self.modulus})^{len(self)} and (Z/{other.modulus})^{len(other)}"
            )

    def __add__(self, other: ResidueVector) -> ResidueVector:
        self._same_space(other)
        return ResidueVector((a + b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __sub__(self, other: ResidueVector) -> ResidueVector:
        self._same_space(other)
        return ResidueVector((a - b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __neg__(self) -> ResidueVector:
        return ResidueVector((-a for a in self.entries), self.modulus)

    def scale(self, scalar: int) -> ResidueVector:
        return ResidueVector((scalar * a for a in self.entries), self.modulus)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_unimodular(self) -> bool:
        """Spans a free direct summand Z/N, i.e. the entries are coprime to N together."""
        return math.gcd(self.modulus, *self.entries) == 1

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueVector):
            return NotImplemented
        return self.modulus == other.modulus and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.modulus, self.entries))

    def __repr__(self) -> str:
        return f"ResidueVector({list(self.entries)}, mod {self.modulus})"


class ResidueMatrix:
    """Square matrix over Z/N backed by a read-only int64 numpy array."""

    __slots__: tuple[str, ...] = ("modulus", "array")

    def __init__(self, entries: np.ndarray | Sequence[Sequence[int]], modulus: int):
        self.modulus: int = _check_modulus(modulus)
        array = np.array(entries, dtype=np.int64) % self.modulus
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DegreeMismatch(f"residue matrices are square, got shape {array.shape}")
        array.setflags(write=False)
        self.array: np.ndarray = array

    @classmethod
    def identity(cls, dimension: int, modulus: int) -> ResidueMatrix:
        return cls(np.eye(dimension, dtype=np.int64), modulus)

    @classmethod
    def scalar(cls, dimension: int, value: int, modulus: int) -> ResidueMatrix:
        return cls(value * np.eye(dimension, dtype=np.int64), modulus)

    @property
    def dimension(self) -> int:
        return self.array.shape[0]

    def _same_ring(self, other: ResidueMatrix) -> None:
        if self.modulus != other.modulus or self.dimension != other.dimension:
            raise DegreeMismatch(
                f"{self.dimension}x{self.dimension} over Z/{self.modulus} "
                f"and {other.dimension}x{other.dimension} over Z/{other.modulus}"
            )

    def __matmul__(self, other: ResidueMatrix) -> ResidueMatrix:
        self._same_ring(other)
        return ResidueMatrix(self.array @ other.array, self.modulus)

    def __pow__(self, exponent: int) -> ResidueMatrix:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ResidueMatrix.identity(self.dimension, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    @property
    def T(self) -> ResidueMatrix:
        return ResidueMatrix(self.array.T, self.modulus)

    def apply(self, vector: ResidueVector) -> ResidueVector:
        """Image of the row vector under x -> xM."""
        if vector.modulus != self.modulus or len(vector) != self.dimension:
            raise DegreeMismatch(f"vector {vector!r} does not fit a {self.dimension}x{self.dimension} matrix")
        return ResidueVector((vector.as_array() @ self.array).tolist(), self.modulus)

    def det(self) -> int:
        return int(Matrix(self.array.tolist()).det()) % self.modulus

    def det_unit(self) -> bool:
        """Invertible over Z/N iff the determinant is a unit."""
        return math.gcd(self.det(), self.modulus) == 1

    def inverse(self) -> ResidueMatrix:
        if not self.det_unit():
            raise NotInvertible(f"determinant {self.det()} is not a unit mod {self.modulus}")
        return ResidueMatrix(np.array(Matrix(self.array.tolist()).inv_mod(self.modulus).tolist()), self.modulus)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.array, np.eye(self.dimension, dtype=np.int64)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueMatrix):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.array, other.array)

    def __hash__(self) -> int:
        return hash((self.modulus, self.array.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"ResidueMatrix({self.array.tolist()}, mod {self.modulus})"
