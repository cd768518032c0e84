from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from common import Computation, configure_logging
from common.constants import GROUP_KIND, LIMITS, STRING
from common.errors import CustomException
from monodromy.predict import TheoremTag
from scripts.chains import CheckChainRepresentation, CheckCubeClosure
from scripts.classes import EnumerateClasses
from scripts.desk_suite import DeskSuite
from scripts.monodromy import AnalyzeMonodromy, BuildCosetRepresentation, CrosscheckOmega, FindCommutatorWitness
from scripts.theorems import PredictStructure

from .config import RunConfig

__all__: tuple[str, ...] = (
    "COMMANDS",
    "build_parser",
    "dispatch",
    "main",
)

log = logging.getLogger(__name__)

USAGE_EXIT = 64

COMMANDS: dict[str, type[Computation]] = {
    cls.command: cls
    for cls in (
        EnumerateClasses,
        AnalyzeMonodromy,
        CrosscheckOmega,
        BuildCosetRepresentation,
        FindCommutatorWitness,
        CheckChainRepresentation,
        CheckCubeClosure,
        PredictStructure,
        DeskSuite,
    )
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("parameters")
    group.add_argument("--group", choices=list(GROUP_KIND), default=GROUP_KIND.SYM4, help="branch-cycle group")
    group.add_argument("--b", type=int, help="number of branch points (even, b = 2g + 6 for the S4 covers)")
    group.add_argument("--g", type=int, help="genus of the cover family")
    group.add_argument("--N", type=int, help="modulus of the coefficients")
    group.add_argument("--seed", type=int, default=0, help="random seed of the randomized Schreier-Sims variant")

    run = common.add_argument_group("running")
    run.add_argument("--method", choices=("orbit-bfs", "exhaustive", "both"), default="orbit-bfs")
    run.add_argument("--bsgs", choices=("deterministic", "randomized"), default="deterministic")
    run.add_argument("--cache", help="class-set cache file, read when valid and written otherwise")
    run.add_argument(
        "--time-budget",
        dest="time_budget",
        type=float,
        default=LIMITS.DEFAULT_TIME_BUDGET,
        help="seconds before giving up with partial results, 0 for none",
    )
    run.add_argument("--stretch", action="store_true", help="allow computations beyond desk scale")
    run.add_argument("--threads", type=int, help=f"worker threads, capped by ${STRING.THREADS_ENV}")
    run.add_argument("--progress", action="store_true", help="show progress bars")

    output = common.add_argument_group("output")
    output.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    verbosity = output.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true")
    verbosity.add_argument("--quiet", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hmlab", description="Hurwitz monodromy computations at desk scale.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {STRING.VERSION}")
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, cls in COMMANDS.items():
        doc = " ".join((cls.__doc__ or "").split())
        sub = subparsers.add_parser(name, parents=[common], help=doc.split(". ")[0], description=doc)
        if name == "predict":
            sub.add_argument("theorem", choices=list(TheoremTag))
        if name == "verify":
            sub.add_argument("--suite", default="desk", help="which acceptance suite to run")
    return parser


def dispatch(argv: Sequence[str]) -> int:
    """Parse argv, validate it and run the command. Returns the exit code."""
    parser = build_parser()
    argv = list(argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(f"unknown command {argv[0]!r}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE_EXIT
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else USAGE_EXIT

    config = RunConfig.from_namespace(namespace)
    configure_logging(config.verbose, config.quiet)
    log.debug("%s", config)
    try:
        config.validate()
    except CustomException as exc:
        print(f"{exc.__class__.__name__}: {exc}", file=sys.stderr)
        return exc.exit_code

    return COMMANDS[config.command](config).start()


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
