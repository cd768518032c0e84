from __future__ import annotations

import logging
from typing import Any

log = logging.getLogger(__name__)


__all__: tuple[str, ...] = (
    "CustomException",
    "HypothesisViolation",
    "BudgetExceeded",
    "DegreeMismatch",
    "InadmissibleTuple",
    "NotTransitive",
    "NotInvertible",
    "DomainTooLarge",
    "EquivarianceError",
    "CacheFormatError",
    "CheckFailed",
    "InternalError",
)


class CustomException(Exception):
    """The base exception for this project. All other custom-made exceptions should inherit from this.

    `exit_code` is what the command line returns when the exception ends a command.
    """

    __slots__: tuple[str, ...] = ()
    exit_code: int = 1


class HypothesisViolation(CustomException):
    """A theorem hypothesis or an input precondition does not hold."""

    __slots__: tuple[str, ...] = ()


class BudgetExceeded(CustomException):
    """The time budget or the coset budget ran out before the computation finished.

    `partial` holds whatever progress was made, so it can be reported.
    """

    exit_code = 2

    def __init__(self, message: str, partial: dict[str, Any] | None = None):
        super().__init__(message)
        self.partial: dict[str, Any] = partial or {}


class DegreeMismatch(HypothesisViolation):
    """Two permutations (or a permutation and a group) live on different degrees."""

    __slots__: tuple[str, ...] = ()


class InadmissibleTuple(HypothesisViolation):
    """A tuple is not a Nielsen tuple: wrong class, product not 1, or not generating."""

    __slots__: tuple[str, ...] = ()


class NotTransitive(HypothesisViolation):
    """The operation needs a transitive group."""

    __slots__: tuple[str, ...] = ()


class NotInvertible(HypothesisViolation):
    """A residue matrix is not invertible modulo its modulus."""

    __slots__: tuple[str, ...] = ()


class DomainTooLarge(HypothesisViolation):
    """The enumerated domain would exceed the desk-scale limit."""

    __slots__: tuple[str, ...] = ()


class EquivarianceError(HypothesisViolation):
    """A projection between class sets does not commute with the braid action."""

    __slots__: tuple[str, ...] = ()


class CacheFormatError(CustomException):
    """A class-set cache file is malformed or belongs to other parameters."""

    __slots__: tuple[str, ...] = ()


class CheckFailed(CustomException):
    """An acceptance check computed something other than the expected value."""

    __slots__: tuple[str, ...] = ()


class InternalError(CustomException):
    """Something that cannot happen happened. Contact developers about it."""

    __slots__: tuple[str, ...] = ()
    exit_code = 70
