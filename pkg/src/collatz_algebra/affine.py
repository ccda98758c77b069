"""Affine action of words and integer solutions of ``f^k(x) = x``.

A word of length l with s ones acts on its domain as
``x -> (3^s x + b) / 2^l``.  Periodic points of period k are the fixed
points ``b / (2^k - 3^s)`` of those maps that survive a parity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import step_z
from .errors import BoundExceeded, NotPeriodic, ParityError
from .words import Step, SWord, apply

DEFAULT_CYCLE_BOUND = 20


@dataclass(frozen=True)
class AffineMap:
    """``x -> (3**ones * x + offset) / 2**length``."""

    ones: int = 0
    offset: int = 0
    length: int = 0

    @property
    def multiplier(self) -> int:
        return 3**self.ones

    def __call__(self, x: int | Fraction) -> Fraction:
        return Fraction(self.multiplier * x + self.offset, 2**self.length)

    def after(self, first: AffineMap) -> AffineMap:
        """The map ``self ∘ first`` (``first`` acts first)."""
        return AffineMap(
            self.ones + first.ones,
            self.multiplier * first.offset + 2**first.length * self.offset,
            self.length + first.length,
        )


IDENTITY_MAP = AffineMap()
ZERO_MAP = AffineMap(0, 0, 1)
ONE_MAP = AffineMap(1, 1, 1)


def affine_of(word: SWord) -> AffineMap:
    s = b = l = 0
    for step, c in word.application_runs():
        if step is Step.ONE:
            # c one-steps at once: b -> 3^c b + 2^l (3^c - 2^c)
            p3 = 3**c
            b = p3 * b + ((p3 - 2**c) << l)
            s += c
        l += c
    return AffineMap(s, b, l)


def fixed_point(m: AffineMap) -> Fraction | None:
    den = 2**m.length - m.multiplier
    if den == 0:
        return None
    return Fraction(m.offset, den)


def _check_k(k: int, bound: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > bound:
        raise BoundExceeded("k", k, bound)


def ck_set(k: int, bound: int = DEFAULT_CYCLE_BOUND) -> set[tuple[int, int]]:
    """The pairs ``(3^s, b)`` over all words of length k.

    Built layer by layer: a word of length j is a word of length j-1 with a
    symbol prepended on the left, i.e. one more step applied last.  A zero
    keeps the pair; a one sends ``(a, b)`` to ``(3a, 3b + 2^(j-1))``.
    """
    _check_k(k, bound)
    layer = {(1, 0)}
    for j in range(1, k + 1):
        layer = layer | {(3 * a, 3 * b + 2 ** (j - 1)) for a, b in layer}
    return layer


def words_with_maps(k: int) -> Iterator[tuple[SWord, AffineMap]]:
    """All words of length k with their maps, in lexicographic written order."""
    # depth-first, extending on the right: map(p + sym) = map(p) ∘ map(sym)
    stack = [("", IDENTITY_MAP)]
    while stack:
        bits, m = stack.pop()
        if len(bits) == k:
            yield SWord.from_bits(bits), m
            continue
        stack.append((bits + "1", m.after(ONE_MAP)))
        stack.append((bits + "0", m.after(ZERO_MAP)))


@dataclass(frozen=True)
class CycleSolution:
    word: SWord
    x: int


def integer_cycles(k: int, bound: int = DEFAULT_CYCLE_BOUND) -> list[CycleSolution]:
    """Every length-k word whose fixed point is an integer it actually fixes."""
    _check_k(k, bound)
    out = []
    for word, m in words_with_maps(k):
        den = 2**k - m.multiplier
        q, r = divmod(m.offset, den)
        if r:
            continue
        try:
            if apply(word, q, signed=True) != q:
                continue
        except ParityError:
            continue
        out.append(CycleSolution(word, q))
    return out


@dataclass(frozen=True)
class LiftedCycle:
    """``2**lift * x`` enters the cycle through ``x`` after ``lift`` halvings."""

    x: int
    period: int
    lift: int
    chain: tuple[int, ...]


def lift_cycle(x: int, k: int, m: int) -> LiftedCycle:
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    y = x
    for _ in range(k):
        y = step_z(y)
    if y != x:
        raise NotPeriodic(f"{x} is not fixed by f^{k} (got {y})")
    chain = [x << m]
    for _ in range(m + k):
        chain.append(step_z(chain[-1]))
    assert chain[m] == x and chain[m + k] == x
    return LiftedCycle(x, k, m, tuple(chain))
