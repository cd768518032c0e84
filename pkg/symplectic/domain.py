"""Enumerated point sets for matrix actions: all of (Z/N)^d or the projective space over Z/N.

Vectors are listed in base-N lexicographic order (first entry most significant),
which is also the order of their integer codes.
"""

from __future__ import annotations

import itertools
import logging
import math
from typing import Iterable, Sequence

import numpy as np

from common.constants import LIMITS
from common.errors import DegreeMismatch, DomainTooLarge, NotInvertible
from permtools.permutation import Permutation

from .residue import ResidueMatrix, ResidueVector
from .space import SymplecticSpace, transvection_matrix

__all__: tuple[str, ...] = (
    "VectorDomain",
    "all_vectors",
    "projective_domain",
    "projective_points",
    "matrix_action_perm",
    "transvection_perms",
)

log = logging.getLogger(__name__)


def _units(modulus: int) -> list[int]:
    return [u for u in range(1, modulus) if math.gcd(u, modulus) == 1]


def _ensure_enumerable(length: int, modulus: int) -> None:
    size = modulus**length
    if size > LIMITS.MAX_DOMAIN_VECTORS:
        raise DomainTooLarge(
            f"(Z/{modulus})^{length} has {size} vectors, more than the {LIMITS.MAX_DOMAIN_VECTORS} "
            f"that can be enumerated; use a smaller genus or modulus"
        )


class VectorDomain:
    """An ordered point set of vectors; `projective` domains identify unit multiples."""

    def __init__(self, vectors: Sequence[tuple[int, ...]], length: int, modulus: int, projective: bool):
        self.length: int = length
        self.modulus: int = modulus
        self.projective: bool = projective
        self.vectors: tuple[tuple[int, ...], ...] = tuple(vectors)
        self.weights: np.ndarray = modulus ** np.arange(length - 1, -1, -1, dtype=np.int64)
        self.units: tuple[int, ...] = tuple(_units(modulus)) if projective else (1,)
        codes = np.array(self.vectors, dtype=np.int64).reshape(-1, length) @ self.weights
        self.code_index: dict[int, int] = {int(c): i for i, c in enumerate(codes)}

    def __len__(self) -> int:
        return len(self.vectors)

    def canonical(self, vector: Iterable[int]) -> tuple[int, ...]:
        """Lexicographically least unit multiple (the vector itself for non-projective domains)."""
        entries = [int(x) % self.modulus for x in vector]
        return min(tuple(u * x % self.modulus for x in entries) for u in self.units)

    def index_of(self, vector: ResidueVector | Iterable[int]) -> int:
        entries = vector.entries if isinstance(vector, ResidueVector) else tuple(vector)
        if len(entries) != self.length:
            raise DegreeMismatch(f"vector of length {len(entries)} in a domain of length {self.length}")
        code = int(np.array(self.canonical(entries), dtype=np.int64) @ self.weights)
        try:
            return self.code_index[code]
        except KeyError:
            raise DegreeMismatch(f"{entries} is not a point of this domain") from None

    def point(self, index: int) -> ResidueVector:
        return ResidueVector(self.vectors[index], self.modulus)

    def image_indices(self, matrix: ResidueMatrix) -> list[int]:
        """Index of xM for every point x, vectorized over the domain."""
        images = np.array(self.vectors, dtype=np.int64).reshape(-1, self.length) @ matrix.array % self.modulus
        codes = np.min(
            np.stack([(u * images % self.modulus) @ self.weights for u in self.units]),
            axis=0,
        )
        return [self.code_index[int(c)] for c in codes]

    def __repr__(self) -> str:
        kind = "P" if self.projective else "A"
        return f"<VectorDomain {kind}(Z/{self.modulus})^{self.length} points={len(self)}>"


def all_vectors(dimension: int, modulus: int) -> VectorDomain:
    """(Z/N)^d in base-N lexicographic order."""
    _ensure_enumerable(dimension, modulus)
    vectors = list(itertools.product(range(modulus), repeat=dimension))
    return VectorDomain(vectors, dimension, modulus, projective=False)


def projective_points(length: int, modulus: int) -> list[ResidueVector]:
    """One representative per line: unimodular vectors modulo units, least multiple chosen.

    `length` is the rank m+1 of the free module, so this is P^m(Z/N).
    """
    _ensure_enumerable(length, modulus)
    units = _units(modulus)
    points = []
    for vector in itertools.product(range(modulus), repeat=length):
        if math.gcd(modulus, *vector) != 1:
            continue
        if vector == min(tuple(u * x % modulus for x in vector) for u in units):
            points.append(ResidueVector(vector, modulus))
    return points


def projective_domain(length: int, modulus: int) -> VectorDomain:
    points = projective_points(length, modulus)
    log.debug("P^%d(Z/%d) has %d points", length - 1, modulus, len(points))
    return VectorDomain([p.entries for p in points], length, modulus, projective=True)


def matrix_action_perm(matrix: ResidueMatrix, domain: VectorDomain) -> Permutation:
    """Permutation of the domain induced by x -> xM.

    A homomorphism for the apply-left-first product: perm(M M') == compose(perm(M), perm(M')).
    """
    if matrix.modulus != domain.modulus or matrix.dimension != domain.length:
        raise DegreeMismatch(f"{matrix.dimension}x{matrix.dimension} mod {matrix.modulus} matrix on {domain!r}")
    if not matrix.det_unit():
        raise NotInvertible(f"matrix with determinant {matrix.det()} mod {matrix.modulus} does not permute points")
    return Permutation(domain.image_indices(matrix), check=False)


def transvection_perms(
    space: SymplecticSpace,
    vectors: Sequence[ResidueVector],
    domain: VectorDomain,
    lam: int = 1,
) -> list[Permutation]:
    """Transvections in `vectors` as permutations of `domain`."""
    return [matrix_action_perm(transvection_matrix(space, v, lam), domain) for v in vectors]
