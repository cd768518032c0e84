"""Braid monodromy of a class set over its S3 quotient.

The kernel of the action on Omega is never built: its order is |G| / |image on Omega|.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from common.constants import GROUP_KIND
from common.errors import EquivarianceError, HypothesisViolation, InternalError
from common.formats import order_fields
from nielsen.cache import load_or_enumerate
from nielsen.classes import ClassSet, enumerate_classes, project_to_s3
from nielsen.groups import build_group
from nielsen.tuples import seed_tuple
from permtools.bsgs import Method, PermGroup, bsgs_build
from permtools.closure import is_primitive
from permtools.factored import FactoredInteger
from permtools.permutation import Permutation

from .braids import braid_perms

__all__: tuple[str, ...] = (
    "NielsenSetup",
    "nielsen_setup",
    "MonodromyReport",
    "analyze",
    "check_equivariance",
    "fiber_restrict",
    "seed_omega_class",
)

log = logging.getLogger(__name__)


@dataclass(slots=True)
class NielsenSetup:
    """Sigma (the tuple classes of some group), Omega (its S3 classes) and the braid action on both."""

    sigma: ClassSet
    omega: ClassSet
    projection: list[int]
    sigma_perms: list[Permutation]
    omega_perms: list[Permutation]

    @property
    def b(self) -> int:
        return self.sigma.b


def nielsen_setup(
    kind: str,
    b: int,
    modulus: int | None = None,
    *,
    method: str = "orbit-bfs",
    threads: int | None = None,
    progress: bool = False,
    deadline: float | None = None,
    cache: str | Path | None = None,
) -> NielsenSetup:
    group = build_group(kind, modulus)
    sigma = load_or_enumerate(cache, group, b, method=method, threads=threads, progress=progress, deadline=deadline)
    if group.kind == GROUP_KIND.SYM3:
        omega = sigma
    else:
        omega = enumerate_classes(build_group(GROUP_KIND.SYM3), b, method, threads=threads, deadline=deadline)
    projection = project_to_s3(sigma, omega)
    return NielsenSetup(sigma, omega, projection, braid_perms(sigma), braid_perms(omega))


def seed_omega_class(omega: ClassSet) -> int:
    """Index of the class of ((12),(12),(23),..,(23)) in Omega."""
    return omega.lookup(seed_tuple(omega.group, omega.b).entries)


def check_equivariance(
    projection: Sequence[int],
    sigma_perms: Sequence[Permutation],
    omega_perms: Sequence[Permutation],
) -> None:
    """project(beta_i x) == beta_i project(x) for every generator and every class."""
    for i, (p, q) in enumerate(zip(sigma_perms, omega_perms), start=1):
        for x, image in enumerate(p.images):
            if projection[image] != q(projection[x]):
                raise EquivarianceError(f"beta_{i} does not commute with the projection at class {x}")


def fiber_restrict(
    cs: ClassSet,
    omega: ClassSet,
    projection: Sequence[int],
    elements: Sequence[Permutation],
    omega_class: int,
) -> list[Permutation]:
    """Restrictions to the fiber over `omega_class`, points renumbered in fiber order."""
    if len(projection) != len(cs) or not 0 <= omega_class < len(omega):
        raise HypothesisViolation(f"class {omega_class} and projection do not match {cs!r} over {omega!r}")
    fiber = cs.fiber(projection, omega_class)
    restricted = []
    for k, element in enumerate(elements):
        if any(projection[element(x)] != omega_class for x in fiber):
            raise HypothesisViolation(f"element {k} moves the Omega class {omega_class}, it cannot be restricted")
        restricted.append(element.restricted(fiber))
    return restricted


@dataclass(slots=True)
class MonodromyReport:
    degree: int
    transitive: bool
    group_order: FactoredInteger
    omega_degree: int
    omega_transitive: bool
    omega_order: FactoredInteger
    kernel_order: FactoredInteger
    fiber_sizes: dict[int, int]
    method: str
    omega_primitive: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_results(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "transitive": self.transitive,
            "group": order_fields(self.group_order),
            "omega_degree": self.omega_degree,
            "omega_transitive": self.omega_transitive,
            "omega_primitive": self.omega_primitive,
            "omega_image": order_fields(self.omega_order),
            "kernel": order_fields(self.kernel_order),
            "fiber_sizes": {str(size): count for size, count in sorted(self.fiber_sizes.items())},
            "bsgs_method": self.method,
            "notes": list(self.notes),
        }


def analyze(
    cs: ClassSet,
    omega: ClassSet,
    projection: Sequence[int],
    *,
    method: Method = "deterministic",
    seed: int = 0,
    deadline: float | None = None,
    progress: bool = False,
    sigma_perms: Sequence[Permutation] | None = None,
    omega_perms: Sequence[Permutation] | None = None,
) -> MonodromyReport:
    """Exact orders of the braid image on cs, on omega, and of the kernel between them."""
    sigma_perms = list(sigma_perms) if sigma_perms is not None else braid_perms(cs)
    omega_perms = list(omega_perms) if omega_perms is not None else braid_perms(omega)
    check_equivariance(projection, sigma_perms, omega_perms)

    group: PermGroup = bsgs_build(
        sigma_perms, len(cs), method=method, seed=seed, deadline=deadline, progress=progress
    )
    log.info("braid image on %d classes: order %s (%s)", len(cs), group.factored_order, group.method)
    image: PermGroup = bsgs_build(omega_perms, len(omega), deadline=deadline)
    log.info("braid image on Omega (%d classes): order %s", len(omega), image.factored_order)

    if group.order % image.order:
        raise InternalError(f"image order {image.order} does not divide group order {group.order}")
    kernel = group.factored_order / image.factored_order

    notes = []
    if not group.is_transitive():
        notes.append("the braid action on the classes is not transitive")
    primitive = is_primitive(image)[0] if image.is_transitive() else None
    return MonodromyReport(
        degree=len(cs),
        transitive=group.is_transitive(),
        group_order=group.factored_order,
        omega_degree=len(omega),
        omega_transitive=image.is_transitive(),
        omega_order=image.factored_order,
        kernel_order=kernel,
        fiber_sizes=dict(Counter(Counter(projection).values())),
        method=group.method,
        omega_primitive=primitive,
        notes=notes,
    )
