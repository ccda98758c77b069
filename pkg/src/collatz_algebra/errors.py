"""Exception hierarchy shared by every module.

Everything raised on purpose derives from :class:`CollatzError`, which lets
the command line tell domain failures (exit status 1) apart from bugs.
"""

from __future__ import annotations


class CollatzError(Exception):
    """Base class for all domain errors raised by this package."""


class CutoffExceeded(CollatzError):
    """An orbit did not reach 1 within the configured number of steps.

    This means *undecided*, never *non-terminating*.
    """

    def __init__(self, n: int, max_steps: int) -> None:
        super().__init__(f"orbit of {n} did not reach 1 within {max_steps} steps")
        self.n = n
        self.max_steps = max_steps


class WordSyntaxError(CollatzError, ValueError):
    """Text that is not a valid word or block list."""


class ParityError(CollatzError, ValueError):
    """A word was applied to a value outside its domain.

    ``position`` is the 1-based index in application order (the rightmost
    symbol of the written word is position 1).
    """

    def __init__(self, position: int, symbol: int, value: int) -> None:
        need = "odd" if symbol else "even"
        super().__init__(
            f"step {position} ({symbol}) needs an {need} value, got {value}"
        )
        self.position = position
        self.symbol = symbol
        self.value = value


class BlockError(CollatzError, ValueError):
    """A word cannot be put into block normal form."""


class BoundExceeded(CollatzError, ValueError):
    """A size parameter exceeds its configured bound."""

    def __init__(self, name: str, value: int, bound: int) -> None:
        super().__init__(f"{name}={value} exceeds bound {bound}")
        self.name = name
        self.value = value
        self.bound = bound


class NotPeriodic(CollatzError, ValueError):
    """``lift_cycle`` was given a point that is not periodic with the stated period."""


class FamilySizeError(CollatzError):
    """A family member would exceed the configured decimal digit bound."""

    def __init__(self, digits: int, max_digits: int) -> None:
        super().__init__(f"member needs at least {digits} digits (bound {max_digits})")
        self.digits = digits
        self.max_digits = max_digits


class InconsistencyError(CollatzError):
    """Two independent computations of the same quantity disagreed.

    Should never be raised; it exists to trap bugs.
    """


class CrossCheckError(InconsistencyError):
    """The two level-set enumerators produced different sets."""


class ResidueCounterexample(CollatzError, AssertionError):
    """A residue-class descent assertion failed for some n."""

    def __init__(self, n: int, reason: str) -> None:
        super().__init__(f"n={n}: {reason}")
        self.n = n
        self.reason = reason
