"""Chain-transvection models of the braid action, checked against exact group orders."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from common.errors import HypothesisViolation
from common.formats import order_fields
from nielsen.classes import enumerate_classes
from nielsen.groups import build_group
from permtools.bsgs import PermGroup, bsgs_build
from permtools.closure import normal_closure
from permtools.factored import FactoredInteger
from permtools.permutation import Permutation, power
from symplectic.domain import all_vectors, projective_domain, transvection_perms
from symplectic.orders import classical_order
from symplectic.space import SymplecticSpace, chain_vectors

from .braids import braid_perms, genus_to_b

__all__: tuple[str, ...] = (
    "ChainCheck",
    "chain_transvection_group",
    "chain_rep_check",
    "CubeClosureCheck",
    "cube_closure_check",
    "OmegaCrosscheck",
    "omega_transvection_crosscheck",
)

log = logging.getLogger(__name__)


def _check_genus(g: int) -> None:
    if g < 0:
        raise HypothesisViolation(f"genus must be >= 0, got {g}")


def chain_transvection_group(
    g: int, modulus: int, *, deadline: float | None = None
) -> tuple[list[Permutation], PermGroup]:
    """The 2g+3 chain transvections of Sp(2g+2, Z/N) acting on all of (Z/N)^{2g+2}, and their group."""
    _check_genus(g)
    dimension = 2 * g + 2
    domain = all_vectors(dimension, modulus)
    space = SymplecticSpace(dimension, modulus)
    perms = transvection_perms(space, chain_vectors(dimension, dimension + 1, modulus), domain)
    return perms, bsgs_build(perms, len(domain), deadline=deadline)


@dataclass(slots=True)
class ChainCheck:
    g: int
    modulus: int
    degree: int
    computed: FactoredInteger
    expected: FactoredInteger

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def to_results(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "computed": order_fields(self.computed),
            "expected_sp": order_fields(self.expected),
            "passed": self.passed,
        }


def chain_rep_check(g: int, modulus: int, *, deadline: float | None = None) -> ChainCheck:
    """Chain transvections generate all of Sp(2g+2, Z/N)."""
    perms, group = chain_transvection_group(g, modulus, deadline=deadline)
    expected = classical_order("Sp", 2 * g + 2, modulus)
    log.info("chain group g=%d N=%d: %s, Sp order %s", g, modulus, group.factored_order, expected)
    return ChainCheck(g, modulus, perms[0].degree, group.factored_order, expected)


@dataclass(slots=True)
class CubeClosureCheck:
    g: int
    modulus: int
    closure_order: FactoredInteger
    group_order: FactoredInteger

    @property
    def full(self) -> bool:
        return self.closure_order == self.group_order

    @property
    def expected_full(self) -> bool:
        return self.modulus % 3 != 0

    @property
    def passed(self) -> bool:
        return self.full == self.expected_full

    def to_results(self) -> dict[str, Any]:
        return {
            "closure": order_fields(self.closure_order),
            "group": order_fields(self.group_order),
            "full": self.full,
            "expected_full": self.expected_full,
            "passed": self.passed,
        }


def cube_closure_check(g: int, modulus: int, *, deadline: float | None = None) -> CubeClosureCheck:
    """Normal closure of the cube of the last chain transvection inside the chain group."""
    perms, group = chain_transvection_group(g, modulus, deadline=deadline)
    cube = power(perms[-1], 3)
    closure = normal_closure(group, [cube], deadline=deadline)
    log.info("cube closure g=%d N=%d: %s of %s", g, modulus, closure.factored_order, group.factored_order)
    return CubeClosureCheck(g, modulus, closure.factored_order, group.factored_order)


@dataclass(slots=True)
class OmegaCrosscheck:
    g: int
    points: int
    matrix_order: FactoredInteger
    nielsen_order: FactoredInteger
    expected: FactoredInteger
    cycle_types: list[dict[str, Any]] = field(default_factory=list)

    @property
    def cycle_types_agree(self) -> bool:
        return all(row["agree"] for row in self.cycle_types)

    @property
    def passed(self) -> bool:
        return self.matrix_order == self.expected and self.nielsen_order == self.expected and self.cycle_types_agree

    def to_results(self) -> dict[str, Any]:
        return {
            "points": self.points,
            "matrix_model": order_fields(self.matrix_order),
            "nielsen_model": order_fields(self.nielsen_order),
            "expected_psp": order_fields(self.expected),
            "cycle_types": self.cycle_types,
            "passed": self.passed,
        }


def _cycle_type_text(p: Permutation) -> str:
    return " ".join(f"{length}^{count}" for length, count in p.cycle_type())


def omega_transvection_crosscheck(g: int, *, deadline: float | None = None) -> OmegaCrosscheck:
    """Braid generators on Omega two ways: Hurwitz moves on S3 classes, and transvections on P^{2g+3}(Z/3)."""
    _check_genus(g)
    dimension = 2 * g + 4
    domain = projective_domain(dimension, 3)
    space = SymplecticSpace(dimension, 3)
    matrix_perms = transvection_perms(space, chain_vectors(dimension, dimension + 1, 3), domain)
    matrix_group = bsgs_build(matrix_perms, len(domain), deadline=deadline)

    omega = enumerate_classes(build_group("sym3"), genus_to_b(g), deadline=deadline)
    nielsen_perms = braid_perms(omega)
    nielsen_group = bsgs_build(nielsen_perms, len(omega), deadline=deadline)

    rows = []
    for i, (m, n) in enumerate(zip(matrix_perms, nielsen_perms), start=1):
        rows.append(
            {
                "generator": i,
                "matrix_model": _cycle_type_text(m),
                "nielsen_model": _cycle_type_text(n),
                "agree": m.cycle_type() == n.cycle_type(),
            }
        )
    return OmegaCrosscheck(
        g=g,
        points=len(domain),
        matrix_order=matrix_group.factored_order,
        nielsen_order=nielsen_group.factored_order,
        expected=classical_order("PSp", dimension, 3),
        cycle_types=rows,
    )
