"""
# Braid monodromy of a Hurwitz space fiber.
- [x] exact order of the braid image on Sigma (BSGS)
- [x] order of the image on Omega and of the kernel between them
- [x] comparison with the structure theorem's prediction
- [ ] g=1 full Sigma (degree 5460) only behind --stretch
"""

from __future__ import annotations

import logging
from typing import Any

from common import Computation, Report
from common.constants import GROUP_KIND, LIMITS
from common.errors import CheckFailed, HypothesisViolation
from common.formats import order_fields
from monodromy import NielsenSetup, PredictedStructure, analyze, b_to_genus, nielsen_setup, predict
from nielsen import enumerate_classes

__all__ = (
    "NielsenComputation",
    "AnalyzeMonodromy",
)

log = logging.getLogger(__name__)


class NielsenComputation(Computation):
    """Shared part of the commands that need Sigma, Omega and the braid action on them."""

    def nielsen_setup(self, kind: str | None = None, b: int | None = None) -> NielsenSetup:
        """`--method both` also runs the exhaustive scan on Sigma and fails unless it agrees."""
        config = self.config
        setup = nielsen_setup(
            kind or config.group,
            b or config.resolved_b,
            config.N,
            method="exhaustive" if config.method == "exhaustive" else "orbit-bfs",
            threads=config.threads,
            progress=config.progress,
            deadline=self.deadline,
            cache=config.cache,
        )
        if config.method == "both":
            by_scan = enumerate_classes(
                setup.sigma.group,
                setup.sigma.b,
                "exhaustive",
                threads=config.threads,
                progress=config.progress,
                deadline=self.deadline,
            )
            if by_scan != setup.sigma:
                raise CheckFailed(f"orbit search found {len(setup.sigma)} classes, the exhaustive scan {len(by_scan)}")
            log.info("exhaustive scan agrees on %d classes", len(by_scan))
        return setup


def expected_structure(kind: str, b: int, modulus: int | None) -> PredictedStructure | None:
    """The theorem that predicts this group's monodromy, when its hypotheses hold."""
    try:
        if kind == GROUP_KIND.XN:
            return predict("thm3", b=b, modulus=modulus)
        if kind == GROUP_KIND.SYM4:
            g = b_to_genus(b)
            if g in (0, 1):
                return predict(f"thm1-exceptional-g{g}")
            return predict("thm1", g=g)
    except HypothesisViolation as exc:
        log.info("no prediction: %s", exc)
    return None


class AnalyzeMonodromy(NielsenComputation):
    """Compute the braid monodromy group of the Nielsen classes of (group, b) exactly,
    its image on the S3 classes Omega, and the kernel order, and compare with the theorems.
    """

    command = "analyze"

    def callback(self) -> Report:
        config = self.config
        b = config.resolved_b
        setup = self.nielsen_setup()
        degree = len(setup.sigma)
        if degree > LIMITS.MAX_ANALYZE_DEGREE and not config.stretch:
            raise HypothesisViolation(
                f"{degree} classes is beyond desk scale ({LIMITS.MAX_ANALYZE_DEGREE}); rerun with --stretch"
            )
        report = analyze(
            setup.sigma,
            setup.omega,
            setup.projection,
            method=config.bsgs,  # type: ignore[arg-type]
            seed=config.seed,
            deadline=self.deadline,
            progress=config.progress,
            sigma_perms=setup.sigma_perms,
            omega_perms=setup.omega_perms,
        )
        results: dict[str, Any] = report.to_results()
        # json order_factored of the whole group sits at top level too
        results.update(order_fields(report.group_order))

        expected = expected_structure(setup.sigma.group.kind, b, config.N)
        if expected is not None:
            results["prediction"] = {
                "theorem": str(expected.tag),
                "total": order_fields(expected.total),
                "left": order_fields(expected.left),
                "matches_group": expected.total == report.group_order,
                "matches_kernel": expected.left == report.kernel_order,
            }
        return Report(self.command, config.params(), results)
