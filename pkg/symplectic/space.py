"""The standard symplectic form on (Z/N)^{2n}, transvections and chains.

Basis order is e1, f1, e2, f2, ... with <e_i, f_i> = 1 and every other basic pairing 0.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from common.errors import DegreeMismatch, HypothesisViolation

from .residue import ResidueMatrix, ResidueVector

__all__: tuple[str, ...] = (
    "SymplecticSpace",
    "pairing",
    "is_symplectic",
    "transvection_matrix",
    "chain_vectors",
    "chain_pairings",
)

log = logging.getLogger(__name__)


class SymplecticSpace:
    __slots__: tuple[str, ...] = ("modulus", "rank", "gram")

    def __init__(self, dimension: int, modulus: int):
        if dimension < 2 or dimension % 2:
            raise HypothesisViolation(f"a symplectic space needs a positive even dimension, got {dimension}")
        self.modulus: int = modulus
        self.rank: int = dimension // 2
        gram = np.zeros((dimension, dimension), dtype=np.int64)
        for i in range(self.rank):
            gram[2 * i, 2 * i + 1] = 1
            gram[2 * i + 1, 2 * i] = -1
        self.gram: ResidueMatrix = ResidueMatrix(gram, modulus)

    @property
    def dimension(self) -> int:
        return 2 * self.rank

    def e(self, k: int) -> ResidueVector:
        """k-th (1-based) isotropic basis vector e_k."""
        return ResidueVector.unit(self.dimension, 2 * (k - 1), self.modulus)

    def f(self, k: int) -> ResidueVector:
        """k-th (1-based) dual basis vector f_k."""
        return ResidueVector.unit(self.dimension, 2 * (k - 1) + 1, self.modulus)

    def check(self, vector: ResidueVector) -> None:
        if vector.modulus != self.modulus or len(vector) != self.dimension:
            raise DegreeMismatch(
                f"vector of length {len(vector)} mod {vector.modulus} "
                f"outside (Z/{self.modulus})^{self.dimension}"
            )

    def __repr__(self) -> str:
        return f"SymplecticSpace(dimension={self.dimension}, modulus={self.modulus})"


def pairing(space: SymplecticSpace, u: ResidueVector, v: ResidueVector) -> int:
    """<u, v> = u J v^T mod N."""
    space.check(u)
    space.check(v)
    return int(u.as_array() @ space.gram.array @ v.as_array()) % space.modulus


def is_symplectic(space: SymplecticSpace, matrix: ResidueMatrix) -> bool:
    """M J M^T == J, the condition for x -> xM to preserve the form (equivalent to M^T J M == J)."""
    if matrix.modulus != space.modulus or matrix.dimension != space.dimension:
        return False
    return matrix @ space.gram @ matrix.T == space.gram


def transvection_matrix(space: SymplecticSpace, v: ResidueVector, lam: int = 1) -> ResidueMatrix:
    """Matrix of x -> x + lam <x, v> v, i.e. I + lam (J v^T) v."""
    space.check(v)
    column = space.gram.array @ v.as_array()
    outer = np.outer(column, v.as_array())
    return ResidueMatrix(np.eye(space.dimension, dtype=np.int64) + lam * outer, space.modulus)


def chain_vectors(dimension: int, count: int, modulus: int) -> list[ResidueVector]:
    """A chain v_1..v_{2n+1} in (Z/N)^{2n}: consecutive pairings are +-1, all others vanish.

    e1, f1, e1+e2, f2, e2+e3, ..., f_n, e_n
    """
    space = SymplecticSpace(dimension, modulus)
    n = space.rank
    if count != 2 * n + 1:
        raise HypothesisViolation(f"a chain in dimension {dimension} has {2 * n + 1} vectors, {count} requested")
    chain = [space.e(1), space.f(1)]
    for k in range(1, n):
        chain.append(space.e(k) + space.e(k + 1))
        chain.append(space.f(k + 1))
    chain.append(space.e(n))
    return chain


def chain_pairings(space: SymplecticSpace, chain: Sequence[ResidueVector]) -> list[list[int]]:
    """Gram matrix of the chain, handy for checking the +-1 / 0 pattern."""
    return [[pairing(space, u, v) for v in chain] for u in chain]
