from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable

from common import Computation, Report
from common.constants import GROUP_KIND
from common.errors import BudgetExceeded, CheckFailed, CustomException
from monodromy import (
    H2StarContext,
    NielsenSetup,
    analyze,
    braid_relations_hold,
    chain_rep_check,
    chain_transvection_group,
    check_equivariance,
    commutator_witness,
    coset_representation,
    cube_closure_check,
    fiber_restrict,
    full_twist,
    genus_to_b,
    nielsen_setup,
    predict,
    sphere_word,
)
from nielsen import build_group, enumerate_classes, hurwitz_move
from permtools import FactoredInteger, bsgs_build, enumerate_elements, is_primitive, power
from symplectic import SymplecticSpace, chain_vectors, classical_order, is_symplectic, transvection_matrix

__all__ = ("DeskSuite",)

log = logging.getLogger(__name__)

# (group, b, N, classes)
NIELSEN_COUNTS = (
    (GROUP_KIND.SYM3, 4, None, 4),
    (GROUP_KIND.SYM3, 6, None, 40),
    (GROUP_KIND.SYM4, 6, None, 120),
    (GROUP_KIND.XN, 6, 5, 240),
)
CHAIN_CASES = ((0, 2), (0, 4), (0, 5), (1, 2), (1, 3))
CUBE_CASES = ((0, 2), (0, 4), (0, 5), (1, 2), (0, 3))
EXHAUSTIVE_ORACLE_LIMIT = 5000


@dataclass(slots=True)
class ItemResult:
    item: int
    title: str
    status: str
    detail: str

    def as_dict(self) -> dict[str, Any]:
        return {"item": self.item, "title": self.title, "status": self.status, "detail": self.detail}


class Skipped(Exception):
    pass


def expect(condition: object, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


class DeskSuite(Computation):
    """
    Run the desk-scale acceptance checks and print PASS/FAIL per item.
    Only the g=1 order on all 5460 classes needs --stretch; without it that item is a SKIP.
    """

    command = "verify"

    def __init__(self, config):
        super().__init__(config)
        self._setups: dict[tuple[str, int, int | None], NielsenSetup] = {}

    def setup(self, kind: str, b: int, modulus: int | None = None) -> NielsenSetup:
        key = (kind, b, modulus)
        if key not in self._setups:
            self._setups[key] = nielsen_setup(
                kind, b, modulus, threads=self.config.threads, progress=self.config.progress, deadline=self.deadline
            )
        return self._setups[key]

    def need_stretch(self, what: str) -> None:
        if not self.config.stretch:
            raise Skipped(f"{what} needs --stretch")

    def callback(self) -> Report:
        item_list: tuple[tuple[str, Callable[[], str]], ...] = (
            ("Nielsen class counts, both methods", self.nielsen_counts),
            ("g=0 braid monodromy orders", self.g0_monodromy),
            ("g=0 image on Omega is primitive", self.g0_primitive),
            ("fiber restrictions over the seed class", self.fiber_witnesses),
            ("coset representations", self.cosets),
            ("commutator witness at g=1", self.witness),
            ("chain representation orders", self.chain_orders),
            ("cube closures", self.cube_closures),
            ("X5 monodromy against thm3", self.x5_monodromy),
            ("property checks", self.properties),
            ("g=1 monodromy on all of Sigma", self.g1_monodromy),
        )
        rows: list[ItemResult] = []
        for number, (title, check) in enumerate(item_list, start=1):
            log.info("item %d: %s", number, title)
            try:
                rows.append(ItemResult(number, title, "PASS", check()))
            except BudgetExceeded as exc:
                raise BudgetExceeded(
                    f"item {number} ran out of time: {exc}", {"items": [r.as_dict() for r in rows], **exc.partial}
                ) from exc
            except Skipped as exc:
                rows.append(ItemResult(number, title, "SKIP", str(exc)))
            except CustomException as exc:
                rows.append(ItemResult(number, title, "FAIL", f"{exc.__class__.__name__}: {exc}"))
            log.info("item %d: %s", number, rows[-1].status)

        results = {
            "items": [r.as_dict() for r in rows],
            "passed": sum(r.status == "PASS" for r in rows),
            "failed": sum(r.status == "FAIL" for r in rows),
            "skipped": sum(r.status == "SKIP" for r in rows),
        }
        return Report(self.command, self.config.params(), results)

    def exit_code(self, report: Report) -> int:
        return 1 if report.results["failed"] else 0

    def nielsen_counts(self) -> str:
        found = []
        for kind, b, modulus, expected in NIELSEN_COUNTS:
            group = build_group(kind, modulus)
            by_bfs = enumerate_classes(group, b, "orbit-bfs", deadline=self.deadline)
            by_scan = enumerate_classes(group, b, "exhaustive", threads=self.config.threads, deadline=self.deadline)
            expect(by_bfs == by_scan, f"{group.kind} b={b}: orbit-bfs and exhaustive disagree")
            expect(len(by_bfs) == expected, f"{group.kind} b={b}: {len(by_bfs)} classes, expected {expected}")
            found.append(f"{group.kind}/{b}:{expected}")
        return " ".join(found)

    def g0_monodromy(self) -> str:
        s = self.setup(GROUP_KIND.SYM4, 6)
        report = analyze(s.sigma, s.omega, s.projection, sigma_perms=s.sigma_perms, omega_perms=s.omega_perms)
        psp = classical_order("PSp", 4, 3)
        kernel = FactoredInteger({3: 40, 2: 16})
        expect(report.transitive, "not transitive on the 120 classes")
        expect(report.omega_order == psp, f"Omega image {report.omega_order}, expected {psp}")
        expect(report.kernel_order == kernel, f"kernel {report.kernel_order}, expected {kernel}")
        expect(report.group_order == kernel * psp, f"|G| = {report.group_order}")
        return f"|G| = {report.group_order}"

    def g0_primitive(self) -> str:
        s = self.setup(GROUP_KIND.SYM4, 6)
        primitive, blocks = is_primitive(bsgs_build(s.omega_perms, len(s.omega), deadline=self.deadline))
        expect(primitive, f"the image on Omega preserves the blocks {blocks}")
        return f"primitive on {len(s.omega)} points"

    def fiber_witnesses(self) -> str:
        found = []
        for g, expected in ((0, 6), (1, 720)):
            s = self.setup(GROUP_KIND.SYM4, genus_to_b(g))
            context = H2StarContext(s)
            first, last = fiber_restrict(
                s.sigma,
                s.omega,
                s.projection,
                [power(s.sigma_perms[0], 3), power(s.sigma_perms[-1], 3)],
                context.omega_class,
            )
            expect(first.is_identity(), f"g={g}: beta_1^3 moves the fiber over the seed class")
            expect(not last.is_identity(), f"g={g}: beta_(b-1)^3 fixes the fiber over the seed class")
            expect(context.S.order == expected, f"g={g}: restrictions generate order {context.S.order}, not {expected}")
            found.append(f"g={g}: |S|={expected}")
        return " ".join(found)

    def cosets(self) -> str:
        expected = {
            0: (80, FactoredInteger({2: 16}) * classical_order("PSp", 4, 3)),
            1: (728, FactoredInteger({2: 168}) * classical_order("PSp", 6, 3)),
        }
        found = []
        for g, (degree, order) in expected.items():
            context = H2StarContext(self.setup(GROUP_KIND.SYM4, genus_to_b(g)))
            rep = coset_representation(context, deadline=self.deadline, progress=self.config.progress)
            expect(rep.degree == degree, f"g={g}: {rep.degree} cosets, expected {degree}")
            expect(rep.image.factored_order == order, f"g={g}: image {rep.image.factored_order}, expected {order}")
            found.append(f"g={g}: {degree} cosets")
        return " ".join(found)

    def witness(self) -> str:
        result = commutator_witness(self.setup(GROUP_KIND.SYM4, genus_to_b(1)))
        expect(result.nontrivial, "[beta_1^3, beta_2^3] is trivial")
        expect(result.in_omega_kernel, "[beta_1^3, beta_2^3] moves Omega")
        expect(result.fixed_fibers, "[beta_1^3, beta_2^3] fixes no fiber pointwise")
        return f"{len(result.fixed_fibers)} fibers fixed, order {result.witness_order}"

    def chain_orders(self) -> str:
        for g, modulus in CHAIN_CASES:
            check = chain_rep_check(g, modulus, deadline=self.deadline)
            expect(check.passed, f"g={g} N={modulus}: {check.computed}, Sp order {check.expected}")
        return f"{len(CHAIN_CASES)} cases"

    def cube_closures(self) -> str:
        for g, modulus in CUBE_CASES:
            check = cube_closure_check(g, modulus, deadline=self.deadline)
            expect(check.passed, f"g={g} N={modulus}: closure {check.closure_order} of {check.group_order}")
        return f"{len(CUBE_CASES)} cases"

    def x5_monodromy(self) -> str:
        s = self.setup(GROUP_KIND.XN, 6, 5)
        report = analyze(
            s.sigma,
            s.omega,
            s.projection,
            deadline=self.deadline,
            progress=self.config.progress,
            sigma_perms=s.sigma_perms,
            omega_perms=s.omega_perms,
        )
        expected = predict("thm3", b=6, modulus=5)
        expect(report.group_order == expected.total, f"|G| = {report.group_order}, predicted {expected.total}")
        expect(report.kernel_order == expected.left, f"kernel {report.kernel_order}, predicted {expected.left}")
        return f"|G| = {report.group_order}"

    def properties(self) -> str:
        s = self.setup(GROUP_KIND.SYM4, 6)
        for perms in (s.sigma_perms, s.omega_perms):
            expect(braid_relations_hold(perms), "braid relations fail")
            expect(sphere_word(s.b).evaluate(perms).is_identity(), "the sphere relation fails")
            expect(full_twist(s.b).evaluate(perms).is_identity(), "the full twist acts nontrivially")
        check_equivariance(s.projection, s.sigma_perms, s.omega_perms)

        for cs in (s.sigma, self.setup(GROUP_KIND.XN, 6, 5).sigma):
            for t in map(cs.tuple_at, range(len(cs))):
                for i in range(1, s.b):
                    for direction in ("forward", "inverse"):
                        moved = hurwitz_move(t, i, direction)
                        expect(moved.is_admissible(), f"move {i} {direction} of {t} leaves the Nielsen tuples")

        compared = 0
        for g, modulus in ((0, 2), (0, 4), (0, 5), (1, 2)):
            dimension = 2 * g + 2
            space = SymplecticSpace(dimension, modulus)
            for v in chain_vectors(dimension, dimension + 1, modulus):
                transvection = transvection_matrix(space, v)
                expect(is_symplectic(space, transvection), f"chain transvection mod {modulus} is not symplectic")
            perms, chain_group = chain_transvection_group(g, modulus, deadline=self.deadline)
            if chain_group.order <= EXHAUSTIVE_ORACLE_LIMIT:
                elements = enumerate_elements(perms, perms[0].degree)
                expect(len(elements) == chain_group.order, f"chain group mod {modulus}: BSGS and closure disagree")
                compared += 1
        small = (self.setup(GROUP_KIND.SYM3, 4).sigma_perms, H2StarContext(s).restrictions)
        for perms in small:
            degree = perms[0].degree
            order = bsgs_build(perms, degree).order
            if order <= EXHAUSTIVE_ORACLE_LIMIT:
                expect(len(enumerate_elements(perms, degree)) == order, f"group of order {order} on {degree} points")
                compared += 1
        return f"{compared} orders checked against exhaustive closure"

    def g1_monodromy(self) -> str:
        self.need_stretch("the g=1 order on 5460 classes")
        s = self.setup(GROUP_KIND.SYM4, genus_to_b(1))
        report = analyze(
            s.sigma,
            s.omega,
            s.projection,
            method=self.config.bsgs,
            seed=self.config.seed,
            deadline=self.deadline,
            progress=self.config.progress,
            sigma_perms=s.sigma_perms,
            omega_perms=s.omega_perms,
        )
        expected = predict("thm1-exceptional-g1")
        expect(report.omega_order == expected.right, f"Omega image {report.omega_order}, predicted {expected.right}")
        expect(report.group_order == expected.total, f"|G| = {report.group_order}, predicted {expected.total}")
        return f"|G| = {report.group_order}"
