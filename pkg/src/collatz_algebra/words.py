"""S-compositions: words over the two branch maps of the accelerated map.

``0`` is ``x -> x/2`` and ``1`` is ``x -> (3x+1)/2``.  A word is written the
way compositions are written, so the *rightmost* symbol is applied first::

    >>> apply(parse_word("10011"), 19)
    17

Words are stored run-length encoded, which keeps words such as
``0^81 1`` cheap and lets :func:`apply` consume a whole run at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import BlockError, ParityError, WordSyntaxError


class Step(IntEnum):
    ZERO = 0
    ONE = 1


Run = tuple[Step, int]


def _v2(x: int) -> int:
    """2-adic valuation of a nonzero integer (works for negatives)."""
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class SWord:
    """A word in normal form: runs in written order, adjacent symbols differ."""

    runs: tuple[Run, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for step, count in self.runs:
            if not isinstance(step, Step):
                raise TypeError(f"run symbol must be a Step, got {step!r}")
            if count < 1:
                raise ValueError(f"run count must be >= 1, got {count}")
            if step == prev:
                raise ValueError("adjacent runs must carry different symbols")
            prev = step

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> SWord:
        """Build a word from arbitrary runs, merging neighbours and dropping empty runs."""
        out: list[list] = []
        for sym, count in runs:
            if count < 0:
                raise ValueError(f"negative run count {count}")
            if count == 0:
                continue
            step = Step(sym)
            if out and out[-1][0] == step:
                out[-1][1] += count
            else:
                out.append([step, count])
        return cls(tuple((s, c) for s, c in out))

    @classmethod
    def from_bits(cls, bits: str) -> SWord:
        return cls.from_runs((int(b), 1) for b in bits)

    @classmethod
    def from_application_order(cls, symbols: Iterable[int]) -> SWord:
        """Build a word from symbols listed first-applied first."""
        return cls.from_bits("".join(str(int(s)) for s in symbols)[::-1])

    def __len__(self) -> int:
        return sum(c for _, c in self.runs)

    @property
    def support(self) -> int:
        return sum(c for s, c in self.runs if s is Step.ONE)

    def bits(self) -> str:
        return "".join(str(int(s)) * c for s, c in self.runs)

    def application_runs(self) -> Iterator[Run]:
        """Runs in the order they act on a value."""
        return reversed(self.runs)

    def __add__(self, other: SWord) -> SWord:
        # written concatenation: ``a + b`` applies b first, then a
        if not isinstance(other, SWord):
            return NotImplemented
        return SWord.from_runs(self.runs + other.runs)

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = SWord()


@dataclass(frozen=True)
class BlockWord:
    """The block form ``0^{k_1} 1^{m_1} ... 0^{k_n} 1^{m_n} 0^t``.

    ``blocks`` holds the ``(k_i, m_i)`` pairs left to right and
    ``trailing_zeros`` the final (first-applied) zero run ``t``.
    """

    blocks: tuple[tuple[int, int], ...] = ()
    trailing_zeros: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        for k, m in self.blocks:
            if k < 1 or m < 1:
                raise ValueError(f"block exponents must be >= 1, got ({k}, {m})")
        if self.trailing_zeros < 0:
            raise ValueError("trailing_zeros must be >= 0")

    @property
    def length(self) -> int:
        return sum(k + m for k, m in self.blocks) + self.trailing_zeros

    @property
    def support(self) -> int:
        return sum(m for _, m in self.blocks)

    def __str__(self) -> str:
        return format_blocks(self)


# -- text formats -----------------------------------------------------------

_BITSTRING = re.compile(r"[01]+")
_SINGLE_RUN = re.compile(r"([01])(?:\^(?:(\d+)|\{(\d+)\}))?")
# typeset compact runs: a bare exponent is one digit, longer ones need braces
_COMPACT_RUN = re.compile(r"([01])(?:\^(?:(\d)|\{(\d+)\}))?")


def _run_count(text: str, digits: str | None, braced: str | None) -> int:
    raw = digits if digits is not None else braced
    if raw is None:
        return 1
    count = int(raw)
    if count < 1:
        raise WordSyntaxError(f"run count must be >= 1 in {text!r}")
    return count


def _parse_token(token: str) -> list[tuple[int, int]]:
    m = _SINGLE_RUN.fullmatch(token)
    if m:
        return [(int(m.group(1)), _run_count(token, m.group(2), m.group(3)))]
    runs = []
    pos = 0
    while pos < len(token):
        m = _COMPACT_RUN.match(token, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {token[pos]!r} at offset {pos} in {token!r}")
        runs.append((int(m.group(1)), _run_count(token, m.group(2), m.group(3))))
        pos = m.end()
    return runs


def parse_word(text: str) -> SWord:
    """Parse a bitstring (``"10011"``) or caret runs (``"0^3 1^2 0"``).

    A whitespace-separated token that is a single run takes a full decimal
    exponent (``0^12``).  Longer tokens are read the way the runs are typeset
    in print, one exponent digit each unless braced, so
    ``"0^310^41^3"`` is ``0^3 1 0^4 1^3``.
    """
    text = text.strip()
    if not text:
        return IDENTITY
    if _BITSTRING.fullmatch(text):
        return SWord.from_bits(text)
    runs: list[tuple[int, int]] = []
    for token in text.split():
        runs.extend(_parse_token(token))
    return SWord.from_runs(runs)


def format_word(word: SWord) -> str:
    return " ".join(
        f"{int(s)}^{c}" if c > 1 else str(int(s)) for s, c in word.runs
    )


_PAIR = re.compile(r"(\d+),(\d+)")
_TRAIL = re.compile(r"t(\d+)")


def parse_blocks(text: str) -> BlockWord:
    """Parse ``"9,1 6,1 2,1"``; an optional final ``t<DECIMAL>`` sets trailing zeros."""
    tokens = text.replace("t", " t").split()
    blocks = []
    trailing = 0
    for i, tok in enumerate(tokens):
        if (m := _PAIR.fullmatch(tok)) is not None:
            blocks.append((int(m.group(1)), int(m.group(2))))
        elif (m := _TRAIL.fullmatch(tok)) is not None and i == len(tokens) - 1:
            trailing = int(m.group(1))
        else:
            raise WordSyntaxError(f"bad block token {tok!r} in {text!r}")
    if not blocks and not trailing:
        raise WordSyntaxError(f"empty block list {text!r}")
    try:
        return BlockWord(tuple(blocks), trailing)
    except ValueError as exc:
        raise WordSyntaxError(str(exc)) from None


def format_blocks(bw: BlockWord) -> str:
    parts = [f"{k},{m}" for k, m in bw.blocks]
    if bw.trailing_zeros:
        parts.append(f"t{bw.trailing_zeros}")
    return " ".join(parts)


# -- action -----------------------------------------------------------------

def apply(word: SWord, x: int, *, signed: bool = False) -> int:
    """Apply ``word`` to ``x``, checking parity before every step.

    Each zero step needs an even value and each one step an odd value;
    passing every check is exactly membership of the word in ``A_x``.
    With ``signed=True`` the same branches act on all integers (used for
    cycle verification).

    Raises:
        ParityError: at the first step whose parity requirement fails.
    """
    if not signed and x < 1:
        raise ValueError(f"apply needs a natural number, got {x}")
    pos = 0
    for step, count in word.application_runs():
        if step is Step.ZERO:
            if x != 0:
                tz = _v2(x)
                if tz < count:
                    raise ParityError(pos + tz + 1, 0, x >> tz)
                x >>= count
        else:
            # 1^j(x) = 3^j (x+1) / 2^j - 1, odd exactly while 2^(j+1) | x+1
            y = x + 1
            if y != 0:
                tz = _v2(y)
                if tz < count:
                    raise ParityError(pos + tz + 1, 1, 3**tz * (y >> tz) - 1)
                x = 3**count * (y >> count) - 1
        pos += count
    return x


def in_domain(word: SWord, x: int) -> bool:
    """True iff ``word`` lies in ``A_x``."""
    try:
        apply(word, x)
    except ParityError:
        return False
    return True


def inverse_apply(word: SWord, y: int | Fraction) -> Fraction:
    """Formal inverse of ``word``; the result need not be an integer."""
    y = Fraction(y)
    for step, count in word.runs:
        if step is Step.ZERO:
            y *= 2**count
        else:
            y = Fraction(2**count, 3**count) * (y + 1) - 1
    return y


def support(word: SWord) -> int:
    return word.support


def word_of(n: int, max_steps: int | None = None) -> SWord:
    """The canonical word of length ``collatz_length(n)`` sending n to 1."""
    from . import core

    steps = core.DEFAULT_MAX_STEPS if max_steps is None else max_steps
    return core.orbit(n, steps, keep=0).checked_word()


def to_blocks(word: SWord) -> BlockWord:
    if not word.runs:
        return BlockWord()
    if word.runs[0][0] is Step.ONE:
        raise BlockError(f"word {format_word(word)!r} starts with a 1-run")
    runs = list(word.runs)
    trailing = 0
    if len(runs) % 2:
        trailing = runs.pop()[1]
    blocks = tuple((runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2))
    return BlockWord(blocks, trailing)


def from_blocks(bw: BlockWord) -> SWord:
    runs: list[tuple[int, int]] = []
    for k, m in bw.blocks:
        runs += [(0, k), (1, m)]
    runs.append((0, bw.trailing_zeros))
    return SWord.from_runs(runs)
