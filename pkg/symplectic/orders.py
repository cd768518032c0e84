from __future__ import annotations

from typing import Literal

from sympy import factorint

from permtools.factored import FactoredInteger

__all__: tuple[str, ...] = (
    "classical_order",
    "center_scalars",
    "projective_count",
)

ClassicalKind = Literal["Sp", "PSp"]


def _sp_prime_power(p: int, k: int, n: int) -> FactoredInteger:
    """|Sp(2n, Z/p^k)| = p^{(k-1)n(2n+1)} p^{n^2} prod_{i<=n} (p^{2i} - 1)."""
    order = FactoredInteger({p: (k - 1) * n * (2 * n + 1) + n * n})
    for i in range(1, n + 1):
        order = order * (p ** (2 * i) - 1)
    return order


def center_scalars(modulus: int) -> list[int]:
    """Units u of Z/N with u^2 = 1, the scalars in Sp(2n, Z/N)."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    return [u for u in range(1, modulus) if u * u % modulus == 1]


def classical_order(kind: ClassicalKind, dimension: int, modulus: int) -> FactoredInteger:
    """Exact order of Sp(dimension, Z/N) or its quotient by the scalars, by CRT over N's prime powers."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if dimension < 2 or dimension % 2:
        raise ValueError(f"symplectic dimension must be positive and even, got {dimension}")
    n = dimension // 2
    order = FactoredInteger.product(_sp_prime_power(p, k, n) for p, k in factorint(modulus).items())
    if kind == "PSp":
        return order / len(center_scalars(modulus))
    if kind != "Sp":
        raise ValueError(f"unknown classical group {kind!r}")
    return order


def projective_count(m: int, modulus: int) -> int:
    """|P^m(Z/N)| = N^m prod_{p | N} (1 + 1/p + ... + 1/p^m), without enumerating."""
    count = 1
    for p, k in factorint(modulus).items():
        count *= p ** ((k - 1) * m) * (p ** (m + 1) - 1) // (p - 1)
    return count
