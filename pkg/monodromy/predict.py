"""Group orders predicted by the wreath-type structure theorems.

Every prediction has the shape 1 -> left -> G -> right -> 1 where `left` is a
product over the points of Omega, so total = left * right exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from common.errors import HypothesisViolation
from common.formats import order_fields
from permtools.factored import FactoredInteger
from symplectic.orders import classical_order, projective_count

from .braids import genus_to_b

__all__: tuple[str, ...] = (
    "TheoremTag",
    "PredictedStructure",
    "predict",
)

log = logging.getLogger(__name__)

# |A6| and the exceptional 2-parts of the kernels at g = 0 and g = 1
A6_ORDER = 360
EXCEPTIONAL_TWO_PART = {0: 16, 1: 168}


class TheoremTag(StrEnum):
    THM1 = "thm1"
    THM1_G0 = "thm1-exceptional-g0"
    THM1_G1 = "thm1-exceptional-g1"
    THM2 = "thm2"
    THM3 = "thm3"


@dataclass(slots=True)
class PredictedStructure:
    tag: TheoremTag
    params: dict[str, int]
    omega_size: int
    fiber_size: int
    left: FactoredInteger
    right: FactoredInteger
    left_description: str
    right_description: str
    notes: list[str] = field(default_factory=list)

    @property
    def total(self) -> FactoredInteger:
        return self.left * self.right

    @property
    def sigma_degree(self) -> int:
        return self.omega_size * self.fiber_size

    def to_results(self) -> dict[str, Any]:
        return {
            "omega_size": self.omega_size,
            "fiber_size": self.fiber_size,
            "sigma_degree": self.sigma_degree,
            "left": {"structure": self.left_description, **order_fields(self.left)},
            "right": {"structure": self.right_description, **order_fields(self.right)},
            "total": order_fields(self.total),
            "notes": list(self.notes),
        }


def _require(condition: bool, hypothesis: str, **values: int) -> None:
    if not condition:
        shown = ", ".join(f"{k}={v}" for k, v in values.items())
        raise HypothesisViolation(f"hypothesis {hypothesis} fails for {shown}")


def _need(value: int | None, name: str, tag: str) -> int:
    if value is None:
        raise HypothesisViolation(f"{tag} needs --{name}")
    return value


def _thm1(g: int) -> PredictedStructure:
    _require(g > 1, "g>1 (use thm1-exceptional-g0 or thm1-exceptional-g1 for g=0, 1)", g=g)
    omega = projective_count(2 * g + 3, 3)
    return PredictedStructure(
        tag=TheoremTag.THM1,
        params={"g": g, "b": genus_to_b(g)},
        omega_size=omega,
        fiber_size=projective_count(2 * g + 1, 2),
        left=classical_order("Sp", 2 * g + 2, 2) ** omega,
        right=classical_order("PSp", 2 * g + 4, 3),
        left_description=f"Sp({2 * g + 2}, Z/2)^{omega}",
        right_description=f"PSp({2 * g + 4}, Z/3)",
    )


def _thm1_exceptional(g: int, tag: TheoremTag) -> PredictedStructure:
    omega = projective_count(2 * g + 3, 3)
    two = EXCEPTIONAL_TWO_PART[g]
    if g == 0:
        left = FactoredInteger({3: omega, 2: two})
        description = f"3^{omega}:2^{two}"
    else:
        left = FactoredInteger.from_int(A6_ORDER) ** omega * FactoredInteger({2: two})
        description = f"A6^{omega}:2^{two}"
    return PredictedStructure(
        tag=tag,
        params={"g": g, "b": genus_to_b(g)},
        omega_size=omega,
        fiber_size=projective_count(2 * g + 1, 2),
        left=left,
        right=classical_order("PSp", 2 * g + 4, 3),
        left_description=description,
        right_description=f"PSp({2 * g + 4}, Z/3)",
        notes=[f"the kernel is {description} instead of a full product of Sp({2 * g + 2}, Z/2)"],
    )


def _thm2(g: int, modulus: int) -> PredictedStructure:
    _require(modulus >= 2, "N>=2", N=modulus)
    _require(modulus % 3 != 0, "3 does not divide N", N=modulus)
    _require(g >= 0, "g>=0", g=g)
    if modulus % 2 == 0:
        _require(g > 1, "g>1 if N is even", g=g, N=modulus)
    omega = projective_count(2 * g + 3, 3)
    return PredictedStructure(
        tag=TheoremTag.THM2,
        params={"g": g, "N": modulus, "b": genus_to_b(g)},
        omega_size=omega,
        fiber_size=modulus ** (2 * g + 2),
        left=classical_order("Sp", 2 * g + 2, modulus) ** omega,
        right=classical_order("PSp", 2 * g + 4, 3),
        left_description=f"Sp({2 * g + 2}, Z/{modulus})^{omega}",
        right_description=f"PSp({2 * g + 4}, Z/3)",
        notes=["fiber_size counts the vectors of the local system's fiber (Z/N)^(2g+2)"],
    )


def _thm3(b: int, modulus: int) -> PredictedStructure:
    _require(modulus >= 2, "N>=2", N=modulus)
    _require(modulus % 3 != 0, "3 does not divide N", N=modulus)
    _require(b % 2 == 0, "b even", b=b)
    _require(b > 4, "b>4", b=b)
    if modulus % 2 == 0:
        _require(b > 8, "b>8 if N is even", b=b, N=modulus)
    omega = projective_count(b - 3, 3)
    return PredictedStructure(
        tag=TheoremTag.THM3,
        params={"b": b, "N": modulus},
        omega_size=omega,
        fiber_size=projective_count(b - 5, modulus),
        left=classical_order("PSp", b - 4, modulus) ** omega,
        right=classical_order("PSp", b - 2, 3),
        left_description=f"PSp({b - 4}, Z/{modulus})^{omega}",
        right_description=f"PSp({b - 2}, Z/3)",
    )


def predict(
    tag: TheoremTag | str,
    *,
    g: int | None = None,
    b: int | None = None,
    modulus: int | None = None,
) -> PredictedStructure:
    """Predicted orders for one theorem; a failed hypothesis raises HypothesisViolation naming it."""
    try:
        tag = TheoremTag(tag)
    except ValueError:
        raise HypothesisViolation(f"unknown theorem {tag!r}, choose from {', '.join(TheoremTag)}") from None
    match tag:
        case TheoremTag.THM1:
            result = _thm1(_need(g, "g", tag))
        case TheoremTag.THM1_G0:
            result = _thm1_exceptional(0, tag)
        case TheoremTag.THM1_G1:
            result = _thm1_exceptional(1, tag)
        case TheoremTag.THM2:
            result = _thm2(_need(g, "g", tag), _need(modulus, "N", tag))
        case TheoremTag.THM3:
            result = _thm3(_need(b, "b", tag), _need(modulus, "N", tag))
    log.debug("%s %s: total %s", tag, result.params, result.total)
    return result
