"""
# Chain transvections over Z/N.
- [x] the chain generates Sp(2g+2, Z/N), checked on all vectors
- [x] the cube of one transvection normally generates it when 3 does not divide N
"""

from __future__ import annotations

from common import Computation, Report
from monodromy import chain_rep_check, cube_closure_check

__all__ = (
    "CheckChainRepresentation",
    "CheckCubeClosure",
)


class CheckChainRepresentation(Computation):
    """Check that the 2g+3 chain transvections generate Sp(2g+2, Z/N) by an exact BSGS order."""

    command = "chain-check"

    def callback(self) -> Report:
        assert self.config.N is not None
        check = chain_rep_check(self.config.resolved_g, self.config.N, deadline=self.deadline)
        return Report(self.command, self.config.params(), check.to_results())

    def exit_code(self, report: Report) -> int:
        return 0 if report.results["passed"] else 1


class CheckCubeClosure(Computation):
    """Compute the normal closure of the cube of a chain transvection inside the chain group.
    It should be everything when 3 does not divide N and a proper subgroup when it does.
    """

    command = "cube-check"

    def callback(self) -> Report:
        assert self.config.N is not None
        check = cube_closure_check(self.config.resolved_g, self.config.N, deadline=self.deadline)
        return Report(self.command, self.config.params(), check.to_results())

    def exit_code(self, report: Report) -> int:
        return 0 if report.results["passed"] else 1
