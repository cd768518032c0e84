from __future__ import annotations

from enum import StrEnum
from typing import Any, NoReturn

__all__: tuple[str, ...] = (
    "ConstantsMeta",
    "LIMITS",
    "STRING",
    "GROUP_KIND",
)


class ConstantsMeta(type):
    def __setattr__(self, attr: str, nv: Any) -> NoReturn:
        raise RuntimeError(f"Constant <{attr}> cannot be assigned to.")

    def __delattr__(self, attr: str) -> NoReturn:
        raise RuntimeError(f"Constant <{attr}> cannot be deleted.")


class LIMITS(metaclass=ConstantsMeta):
    # (Z/N)^d domains the chain checks are willing to enumerate
    MAX_DOMAIN_VECTORS = 10_000
    # [G_2 : H_2*] is 80 at g=0 and 728 at g=1
    MAX_COSETS = 20_000
    # seconds; 0 means no budget
    DEFAULT_TIME_BUDGET = 0
    # Sigma degrees above this need --stretch (g=1 has 5460 classes)
    MAX_ANALYZE_DEGREE = 1_000
    # consecutive trivial sifts that end the randomized phase of Schreier-Sims
    RANDOM_EXIT_ROUNDS = 40


class STRING(StrEnum):
    VERSION = "0.4.1"
    CACHE_MAGIC = "nielsen-cache"
    CACHE_VERSION = "v1"
    THREADS_ENV = "HMLAB_THREADS"


class GROUP_KIND(StrEnum):
    SYM3 = "sym3"
    SYM4 = "sym4"
    XN = "xn"
