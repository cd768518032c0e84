"""
# Action on the cosets of H2*.
- [x] H2* membership through the fiber over the seed class
- [x] breadth-first coset search, first-found braid words as representatives
- [x] the commutator witness [beta_1^3, beta_2^3]
"""

from __future__ import annotations

from common import Report
from common.constants import GROUP_KIND
from monodromy import H2StarContext, coset_representation, commutator_witness, genus_to_b

from .analyze_monodromy import NielsenComputation

__all__ = (
    "BuildCosetRepresentation",
    "FindCommutatorWitness",
)


class BuildCosetRepresentation(NielsenComputation):
    """Build the permutation action of the braid group on the cosets of H2*
    (g = 0 or 1) and compute the exact order of its image.
    """

    command = "coset-rep"

    def callback(self) -> Report:
        g = self.config.resolved_g
        setup = self.nielsen_setup(GROUP_KIND.SYM4, genus_to_b(g))
        context = H2StarContext(setup)
        representation = coset_representation(context, deadline=self.deadline, progress=self.config.progress)
        results = representation.to_results()
        results["fiber_size"] = len(context.fiber)
        results["restriction_group"] = context.S.order
        results["restriction_derived"] = context.A.order
        return Report(self.command, self.config.params(), results)


class FindCommutatorWitness(NielsenComputation):
    """Check that [beta_1^3, beta_2^3] acts nontrivially on the S4 classes,
    trivially on Omega, and trivially on at least one whole fiber.
    """

    command = "witness"

    def callback(self) -> Report:
        g = self.config.resolved_g
        setup = self.nielsen_setup(GROUP_KIND.SYM4, genus_to_b(g))
        witness = commutator_witness(setup)
        return Report(self.command, self.config.params(), witness.to_results())

    def exit_code(self, report: Report) -> int:
        return 0 if report.results["holds"] or self.config.resolved_g == 0 else 1
