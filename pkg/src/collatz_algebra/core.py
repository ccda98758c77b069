"""The accelerated Collatz map and its orbits.

``f(x) = (3x+1)/2`` for odd x and ``x/2`` for even x.  Lengths follow the
convention that the Collatz length is the least ``k >= 1`` with
``f^k(n) = 1``, so ``collatz_length(1) == 2`` (1 -> 2 -> 1), not 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutoffExceeded
from .words import IDENTITY, SWord

DEFAULT_MAX_STEPS = 10_000
DEFAULT_KEEP = 10_000


def step(x: int) -> int:
    if x < 1:
        raise ValueError(f"the map is defined on naturals, got {x}")
    return (3 * x + 1) >> 1 if x & 1 else x >> 1


def step_z(x: int) -> int:
    """The same two branches extended to all integers."""
    return (3 * x + 1) // 2 if x & 1 else x // 2


def strip_twos(n: int) -> tuple[int, int]:
    """Split ``n`` into ``(odd_part, exponent)`` with ``n == odd_part * 2**exponent``."""
    if n < 1:
        raise ValueError(f"strip_twos needs n >= 1, got {n}")
    e = (n & -n).bit_length() - 1
    return n >> e, e


@dataclass(frozen=True)
class OrbitRecord:
    """Iterates of ``start`` up to the first return to 1 (or the cutoff).

    ``iterates`` holds at most ``keep + 1`` leading values; ``length``,
    ``minimum`` and ``word`` are always exact for the whole walk.
    """

    start: int
    iterates: tuple[int, ...]
    word: SWord
    length: int | None
    minimum: int
    terminated: bool
    steps: int
    truncated: bool = False

    def checked_word(self) -> SWord:
        if not self.terminated:
            raise CutoffExceeded(self.start, self.steps)
        return self.word


def orbit(n: int, max_steps: int = DEFAULT_MAX_STEPS, keep: int = DEFAULT_KEEP) -> OrbitRecord:
    """Walk the orbit of ``n`` until it hits 1 at some index >= 1.

    Stopping at ``max_steps`` is a normal outcome and yields a record with
    ``terminated=False`` and an empty word.
    """
    if n < 1:
        raise ValueError(f"orbit needs n >= 1, got {n}")
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    stored = [n]
    parities = []
    x = n
    lo = n
    k = 0
    while k < max_steps:
        odd = x & 1
        x = (3 * x + 1) >> 1 if odd else x >> 1
        k += 1
        parities.append(odd)
        if x < lo:
            lo = x
        if k <= keep:
            stored.append(x)
        if x == 1:
            break
    done = x == 1 and k >= 1
    return OrbitRecord(
        start=n,
        iterates=tuple(stored),
        word=SWord.from_application_order(parities) if done else IDENTITY,
        length=k if done else None,
        minimum=lo,
        terminated=done,
        steps=k,
        truncated=k > keep,
    )


def collatz_length(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """Least ``k >= 1`` with ``f^k(n) == 1``.

    Zero runs are taken in one shift; the count is identical to single-stepping.

    Raises:
        CutoffExceeded: if 1 is not reached within ``max_steps`` steps.
    """
    if n < 1:
        raise ValueError(f"collatz_length needs n >= 1, got {n}")
    if n == 1:
        if max_steps < 2:
            raise CutoffExceeded(n, max_steps)
        return 2
    x = n
    k = 0
    while x != 1:
        if x & 1:
            x = (3 * x + 1) >> 1
            k += 1
        else:
            tz = (x & -x).bit_length() - 1
            x >>= tz
            k += tz
        if k > max_steps:
            raise CutoffExceeded(n, max_steps)
    return k


def glide(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> int | None:
    """Least ``k >= 1`` with ``f^k(n) < n``, or None if not seen within ``max_steps``."""
    if n < 1:
        raise ValueError(f"glide needs n >= 1, got {n}")
    if n == 1:
        return None
    x = n
    for k in range(1, max_steps + 1):
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        if x < n:
            return k
    return None
