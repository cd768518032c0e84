"""The subgroup H2* of the braid image on Sigma and the permutation action on its cosets.

H2 is the stabilizer of the seed class w in Omega. Its action on the fiber over w
factors through the group S generated by the fiber restrictions of beta_1, beta_3 .. beta_{b-1}.
H2* is the kernel of the sign H2 -> S -> Z/2. For g in {0, 1}, S is S3 or S6, so that kernel
is "restriction lies in [S, S]", which is what membership tests.
"""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass
from typing import Any

from tqdm import tqdm

from common.constants import LIMITS
from common.errors import BudgetExceeded, HypothesisViolation, InternalError
from common.formats import order_fields
from permtools.bsgs import PermGroup, bsgs_build
from permtools.closure import derived_subgroup
from permtools.permutation import Permutation, commutator, compose, inverse, power

from .analysis import NielsenSetup, fiber_restrict, seed_omega_class
from .braids import BraidWord, b_to_genus

__all__: tuple[str, ...] = (
    "H2StarContext",
    "h2star_contains",
    "CosetRepresentation",
    "coset_representation",
    "CommutatorWitness",
    "commutator_witness",
)

log = logging.getLogger(__name__)


class H2StarContext:
    """Everything membership in H2* needs: w, its fiber, S and A = [S, S]."""

    def __init__(self, setup: NielsenSetup):
        self.setup: NielsenSetup = setup
        self.g: int = b_to_genus(setup.b)
        if self.g not in (0, 1):
            raise HypothesisViolation(
                f"H2* needs g in {{0, 1}}: for g={self.g} the restriction group S is simple and has no sign"
            )
        self.omega_class: int = seed_omega_class(setup.omega)
        self.fiber: list[int] = setup.sigma.fiber(setup.projection, self.omega_class)
        stabilizing = [setup.sigma_perms[0], *setup.sigma_perms[2:]]
        self.restrictions: list[Permutation] = fiber_restrict(
            setup.sigma, setup.omega, setup.projection, stabilizing, self.omega_class
        )
        self.S: PermGroup = bsgs_build(self.restrictions, len(self.fiber))
        self.A: PermGroup = derived_subgroup(self.S)
        log.info(
            "H2* context g=%d: fiber %d, |S| = %d, |A| = %d", self.g, len(self.fiber), self.S.order, self.A.order
        )

    def omega_image(self, gamma: Permutation) -> int:
        """The Omega class that gamma sends w to."""
        return self.setup.projection[gamma(self.fiber[0])]


def h2star_contains(gamma: Permutation, context: H2StarContext) -> bool:
    """gamma fixes w and its restriction to the fiber over w lies in [S, S]."""
    if context.omega_image(gamma) != context.omega_class:
        return False
    (restriction,) = fiber_restrict(
        context.setup.sigma, context.setup.omega, context.setup.projection, [gamma], context.omega_class
    )
    return context.A.contains(restriction)


@dataclass(slots=True)
class CosetRepresentation:
    degree: int
    words: list[BraidWord]
    generators: list[Permutation]
    image: PermGroup

    def to_results(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "image": order_fields(self.image.factored_order),
            "transitive": self.image.is_transitive(),
            "bsgs_method": self.image.method,
            "longest_word": max(len(w) for w in self.words),
        }


def coset_representation(
    context: H2StarContext,
    *,
    budget: int = LIMITS.MAX_COSETS,
    deadline: float | None = None,
    progress: bool = False,
) -> CosetRepresentation:
    """Right cosets H2* a of the braid image, found breadth first from H2* itself.

    Each new coset is H2* a beta_j^{+-1}; it is new unless it equals a known coset,
    decided by h2star_contains on the quotient of the two elements. Known cosets
    are bucketed by where they send w, and only same-bucket cosets are compared.
    """
    setup = context.setup
    degree = len(setup.sigma)
    gens = setup.sigma_perms
    inverses = [inverse(p) for p in gens]
    start = Permutation(range(degree), check=False)

    elements: list[Permutation] = [start]
    words: list[BraidWord] = [BraidWord()]
    buckets: dict[int, list[int]] = {context.omega_image(start): [0]}
    inverse_elements: list[Permutation] = [start]
    images: list[list[int]] = [[-1] * len(gens)]

    def locate(gamma: Permutation) -> int | None:
        for k in buckets.get(context.omega_image(gamma), ()):
            if h2star_contains(compose(gamma, inverse_elements[k]), context):
                return k
        return None

    queue = deque([0])
    with tqdm(desc=f"cosets g={context.g}", disable=not progress, leave=False) as bar:
        while queue:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time budget exhausted during the coset search", {"cosets_so_far": len(elements)})
            c = queue.popleft()
            for j in range(len(gens)):
                for sign, step in ((1, gens[j]), (-1, inverses[j])):
                    gamma = compose(elements[c], step)
                    k = locate(gamma)
                    if k is None:
                        if len(elements) >= budget:
                            raise BudgetExceeded(
                                f"more than {budget} cosets", {"cosets_so_far": len(elements), "coset_budget": budget}
                            )
                        k = len(elements)
                        elements.append(gamma)
                        inverse_elements.append(inverse(gamma))
                        words.append(words[c] * BraidWord((sign * (j + 1),)))
                        images.append([-1] * len(gens))
                        buckets.setdefault(context.omega_image(gamma), []).append(k)
                        queue.append(k)
                        bar.update(1)
                    if sign == 1:
                        images[c][j] = k

    count = len(elements)
    if any(x < 0 for row in images for x in row):
        raise InternalError("coset search finished with unassigned generator images")
    generators = [Permutation(images[c][j] for c in range(count)) for j in range(len(gens))]
    image = bsgs_build(generators, count, deadline=deadline)
    log.info("%d cosets of H2*, image order %s", count, image.factored_order)
    return CosetRepresentation(count, words, generators, image)


@dataclass(slots=True)
class CommutatorWitness:
    nontrivial: bool
    in_omega_kernel: bool
    fixed_fibers: list[int]
    witness_order: int
    moved_points: int

    @property
    def holds(self) -> bool:
        return self.nontrivial and self.in_omega_kernel and bool(self.fixed_fibers)

    def to_results(self) -> dict[str, Any]:
        return {
            "nontrivial": self.nontrivial,
            "in_omega_kernel": self.in_omega_kernel,
            "fibers_fixed_pointwise": len(self.fixed_fibers),
            "first_fixed_fiber": self.fixed_fibers[0] if self.fixed_fibers else None,
            "witness_order": self.witness_order,
            "moved_points": self.moved_points,
            "holds": self.holds,
        }


def commutator_witness(setup: NielsenSetup) -> CommutatorWitness:
    """c = [beta_1^3, beta_2^3] on Sigma: nontrivial, trivial on Omega, and trivial on some fiber."""
    c = commutator(power(setup.sigma_perms[0], 3), power(setup.sigma_perms[1], 3))
    projection = setup.projection
    in_kernel = all(projection[c(x)] == projection[x] for x in range(c.degree))
    fibers: dict[int, list[int]] = {}
    for x, w in enumerate(projection):
        fibers.setdefault(w, []).append(x)
    fixed_fibers = sorted(w for w, fiber in fibers.items() if all(c(x) == x for x in fiber))
    return CommutatorWitness(
        nontrivial=not c.is_identity(),
        in_omega_kernel=in_kernel,
        fixed_fibers=fixed_fibers,
        witness_order=c.order(),
        moved_points=c.degree - len(c.fixed_points()),
    )
