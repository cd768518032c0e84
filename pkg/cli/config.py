from __future__ import annotations

import argparse
from dataclasses import dataclass, fields
from typing import Any

from common.constants import GROUP_KIND, LIMITS
from common.errors import DomainTooLarge, HypothesisViolation
from monodromy.braids import b_to_genus, genus_to_b
from monodromy.predict import predict

__all__: tuple[str, ...] = ("RunConfig",)

# per command, the fields that determine its report
_PARAMS: dict[str, tuple[str, ...]] = {
    "enumerate": ("group", "b", "N", "method"),
    "analyze": ("group", "b", "N", "method", "bsgs", "seed", "stretch"),
    "coset-rep": ("g",),
    "witness": ("g",),
    "omega-crosscheck": ("g",),
    "chain-check": ("g", "N"),
    "cube-check": ("g", "N"),
    "predict": ("theorem", "g", "b", "N"),
    "verify": ("suite",),
}
_GENUS_COMMANDS = frozenset({"coset-rep", "witness", "omega-crosscheck", "chain-check", "cube-check"})


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str
    group: str = GROUP_KIND.SYM4
    b: int | None = None
    g: int | None = None
    N: int | None = None
    method: str = "orbit-bfs"
    bsgs: str = "deterministic"
    format: str = "text"
    cache: str | None = None
    time_budget: float = LIMITS.DEFAULT_TIME_BUDGET
    stretch: bool = False
    threads: int | None = None
    progress: bool = False
    suite: str | None = None
    theorem: str | None = None
    seed: int = 0
    verbose: bool = False
    quiet: bool = False

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> RunConfig:
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in vars(namespace).items() if k in known})

    @property
    def resolved_b(self) -> int:
        if self.b is not None:
            return self.b
        return genus_to_b(self.g if self.g is not None else 0)

    @property
    def resolved_g(self) -> int:
        if self.g is not None:
            return self.g
        return b_to_genus(self.b) if self.b is not None else 0

    def params(self) -> dict[str, Any]:
        """The parameters that determine a report, as reported alongside it."""
        result: dict[str, Any] = {}
        for key in _PARAMS.get(self.command, ()):
            value = getattr(self, key)
            if key == "b" and self.command in ("enumerate", "analyze"):
                value = self.resolved_b
            elif key == "g" and self.command in _GENUS_COMMANDS:
                value = self.resolved_g
            if value is not None:
                result[key] = str(value) if isinstance(value, str) else value
        return result

    def validate(self) -> None:
        """Reject parameter combinations before any work starts."""
        if self.time_budget < 0:
            raise HypothesisViolation(f"time budget must be >= 0, got {self.time_budget}")
        if self.N is not None and self.N < 2:
            raise HypothesisViolation(f"N must be >= 2, got {self.N}")
        if self.g is not None and self.g < 0:
            raise HypothesisViolation(f"g must be >= 0, got {self.g}")
        if self.b is not None and self.g is not None and self.b != genus_to_b(self.g):
            raise HypothesisViolation(f"b={self.b} and g={self.g} disagree, b = 2g+6")

        if self.bsgs == "randomized" and not self.stretch:
            raise HypothesisViolation("the randomized Schreier-Sims variant is only for --stretch runs")

        match self.command:
            case "enumerate" | "analyze":
                if self.b is not None and (self.b < 4 or self.b % 2):
                    raise HypothesisViolation(f"b must be even and >= 4, got b={self.b}")
                if self.group == GROUP_KIND.XN:
                    if self.N is None:
                        raise HypothesisViolation("--group xn needs --N")
                    if self.command == "analyze" and self.N % 3 == 0:
                        raise HypothesisViolation(f"hypothesis 3 does not divide N fails for N={self.N}")
            case "coset-rep" | "witness":
                if self.resolved_g not in (0, 1):
                    raise HypothesisViolation(f"{self.command} needs g in {{0, 1}}, got g={self.resolved_g}")
            case "chain-check" | "cube-check":
                if self.N is None:
                    raise HypothesisViolation(f"{self.command} needs --N")
                size = self.N ** (2 * self.resolved_g + 2)
                if size > LIMITS.MAX_DOMAIN_VECTORS:
                    raise DomainTooLarge(
                        f"(Z/{self.N})^{2 * self.resolved_g + 2} has {size} vectors, "
                        f"more than {LIMITS.MAX_DOMAIN_VECTORS}; use a smaller g or N"
                    )
            case "omega-crosscheck":
                if 3 ** (2 * self.resolved_g + 4) > LIMITS.MAX_DOMAIN_VECTORS:
                    raise DomainTooLarge(f"P^{2 * self.resolved_g + 3}(Z/3) is too large to enumerate")
            case "predict":
                if self.theorem is None:
                    raise HypothesisViolation("predict needs a theorem tag")
                predict(self.theorem, g=self.g, b=self.b, modulus=self.N)
            case "verify":
                if self.suite != "desk":
                    raise HypothesisViolation(f"unknown suite {self.suite!r}, only 'desk' exists")
