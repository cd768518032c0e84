from __future__ import annotations

from common import Computation, Report
from monodromy import predict

__all__ = ("PredictStructure",)


class PredictStructure(Computation):
    """Print the exact orders a structure theorem predicts:
    thm1 (g > 1), thm1-exceptional-g0, thm1-exceptional-g1, thm2 (g, N) and thm3 (b, N).
    """

    command = "predict"

    def callback(self) -> Report:
        config = self.config
        assert config.theorem is not None
        structure = predict(config.theorem, g=config.g, b=config.b, modulus=config.N)
        return Report(self.command, config.params(), structure.to_results())
