from __future__ import annotations

import logging
import sys
import time
from typing import TYPE_CHECKING, Any, ClassVar, NamedTuple

from .errors import BudgetExceeded, CustomException
from .formats import render_report

if TYPE_CHECKING:
    from cli.config import RunConfig

__all__: tuple[str, ...] = (
    "Computation",
    "Report",
    "configure_logging",
)

log = logging.getLogger(__name__)

# I'm doing it here so all if __main__ == '__main__': also get logging
logging.basicConfig(
    format="{asctime} | {levelname:<7} | {funcName:<30} | {message}",
    datefmt="%H:%M:%S %d/%m",
    style="{",
    level=logging.INFO,
    stream=sys.stderr,
)


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.getLogger().setLevel(level)


class Report(NamedTuple):
    computation: str
    params: dict[str, Any]
    results: dict[str, Any]


class Computation:
    """Base class of every command -
    Subclass meant to cut the repetition of running, timing and reporting a computation.

    Subclasses of Computation are supposed to implement the following function:
    * `def callback(self) -> Report:`
    which should do the whole work of the command,
    i.e. `AnalyzeMonodromy` builds the class sets and computes the group orders.

    Also doc-strings of Computation subclasses should be written
    in user-friendly way since they are shown as the command's help text.
    """

    command: ClassVar[str] = ""

    def __init__(self, config: RunConfig):
        self.config: RunConfig = config
        self.console_text: str = "No result yet"
        self.started: float = time.monotonic()

    @property
    def deadline(self) -> float | None:
        """Absolute `time.monotonic()` deadline from the configured budget, `None` without one."""
        budget = self.config.time_budget
        return self.started + budget if budget else None

    def start(self) -> int:
        """Run the callback, print the report and return the exit code."""
        log.info("Starting %s", self.command)
        self.started = time.monotonic()
        try:
            report = self.callback()
        except BudgetExceeded as exc:
            log.info(exc)
            report = Report(self.command, self.config.params(), {"budget_exceeded": str(exc), **exc.partial})
            self.emit(report)
            self.console_text = str(exc)
            print(self.console_text, file=sys.stderr)
            return exc.exit_code
        except CustomException as exc:
            self.console_text = str(exc)
            log.info(exc)
            print(f"{exc.__class__.__name__}: {exc}", file=sys.stderr)
            return exc.exit_code
        except Exception as exc:
            self.console_text = (
                f"Failed with exception. Contact developers about it:" f"\n{exc.__class__.__name__}: {str(exc)}"
            )
            log.error("%s: %s", exc.__class__.__name__, exc, exc_info=True)
            print(self.console_text, file=sys.stderr)
            return 70

        self.emit(report)
        self.console_text = f"{self.command} finished in {time.monotonic() - self.started:.1f}s"
        log.info(self.console_text)
        return self.exit_code(report)

    def emit(self, report: Report) -> None:
        print(render_report(report.computation, report.params, report.results, self.config.format))

    def exit_code(self, report: Report) -> int:
        """Exit code of a finished report. Commands with a pass/fail verdict override this."""
        return 0

    def callback(self) -> Report:
        """This function will be called by `start`.

        It is supposed to be implemented by subclasses and do the command job.
        And it should return the report to print.
        """
        raise NotImplementedError("You need to implement `def callback(self):` in Computation subclasses.")
