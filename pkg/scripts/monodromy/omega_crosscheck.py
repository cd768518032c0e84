from __future__ import annotations

from common import Computation, Report
from monodromy import omega_transvection_crosscheck

__all__ = ("CrosscheckOmega",)


class CrosscheckOmega(Computation):
    """Compare the braid action on the S3 classes Omega with chain transvections
    of Sp(2g+4, Z/3) on the projective space: group orders and cycle types per generator.
    """

    command = "omega-crosscheck"

    def callback(self) -> Report:
        check = omega_transvection_crosscheck(self.config.resolved_g, deadline=self.deadline)
        return Report(self.command, self.config.params(), check.to_results())

    def exit_code(self, report: Report) -> int:
        return 0 if report.results["passed"] else 1
