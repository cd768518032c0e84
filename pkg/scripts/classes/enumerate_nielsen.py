"""
# Enumerate Nielsen classes.
- [x] orbit search from the seed tuple by Hurwitz moves
- [x] exhaustive scan of all admissible tuples
- [x] both at once, which is the transitivity check
"""

from __future__ import annotations

import logging

from common import Computation, Report
from common.errors import InternalError
from nielsen import build_group, load_or_enumerate, project_to_s3, seed_tuple
from nielsen.classes import ClassSet, enumerate_classes
from symplectic import projective_count

__all__ = ("EnumerateClasses",)

log = logging.getLogger(__name__)


class EnumerateClasses(Computation):
    """Enumerate the Nielsen classes of (group, b): tuples of branch-cycle involutions
    with product 1 generating the group, up to simultaneous conjugation
    (and unit scalars on the kernel for xn).

    `--method both` runs the orbit search and the exhaustive scan and checks they agree.
    """

    command = "enumerate"

    def callback(self) -> Report:
        config = self.config
        b = config.resolved_b
        group = build_group(config.group, config.N)
        kwargs = {"threads": config.threads, "progress": config.progress, "deadline": self.deadline}

        results: dict = {"group_order": group.order, "admissible": len(group.admissible)}
        if config.method == "both":
            by_orbit = enumerate_classes(group, b, "orbit-bfs", **kwargs)
            by_scan = enumerate_classes(group, b, "exhaustive", **kwargs)
            results["methods_agree"] = by_orbit == by_scan
            if by_orbit != by_scan:
                log.warning("orbit search found %d classes, the scan %d", len(by_orbit), len(by_scan))
            classes: ClassSet = by_scan
        else:
            classes = load_or_enumerate(config.cache, group, b, method=config.method, **kwargs)

        results["classes"] = len(classes)
        results["seed"] = str(seed_tuple(group, b))
        results["first_class"] = group.label(classes.representatives[0])
        if group.kind == "sym3":
            results["projective_count"] = projective_count(b - 3, 3)
        else:
            omega = enumerate_classes(build_group("sym3"), b, **kwargs)
            projection = project_to_s3(classes, omega)
            sizes = sorted({projection.count(w) for w in range(len(omega))})
            if len(set(projection)) != len(omega):
                raise InternalError("some Omega class has an empty fiber")
            results["omega_classes"] = len(omega)
            results["fiber_sizes"] = sizes
        return Report(self.command, config.params(), results)

    def exit_code(self, report: Report) -> int:
        return 0 if report.results.get("methods_agree", True) else 1
