"""Infinite families of Collatz numbers with prescribed block structure.

For block counts n and parameters ``m_i, l_i >= 1`` put ``S_i = m_i + ... + m_n``
and choose

    k_1 = (2 l_1 - 1) 3^(S_1 - 1),    k_i = 2 l_i 3^(S_i - 1)  (i >= 2).

Then ``0^{k_1}1^{m_1}...0^{k_n}1^{m_n}`` inverts to a natural number.  n = 1
is the one-block family ``(2/3)^m (2^k + 1) - 1``.  These families are subsets
of the solutions, not all of them: 15 = inverse of ``0^3 1 0^4 1^4`` is a
two-block Collatz number that no parameter choice produces.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import FamilySizeError, InconsistencyError
from .solver import solve_blocks
from .words import BlockWord, apply, from_blocks

log = logging.getLogger(__name__)

DEFAULT_MAX_DIGITS = 10**6
_LOG10_2 = math.log10(2)
_LOG2_3 = math.log2(3)


@dataclass(frozen=True)
class FamilyParams:
    m: tuple[int, ...]
    l: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(self.m))
        object.__setattr__(self, "l", tuple(self.l))
        if not self.m or len(self.m) != len(self.l):
            raise ValueError("m and l must be nonempty and of equal length")
        if min(self.m + self.l) < 1:
            raise ValueError("every m_i and l_i must be >= 1")

    @property
    def n(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class FamilyMember:
    params: FamilyParams
    blocks: BlockWord
    alpha: int
    length: int


def family_exponents(params: FamilyParams) -> tuple[int, ...]:
    ks = []
    s = sum(params.m)
    for i, (m, l) in enumerate(zip(params.m, params.l)):
        coeff = 2 * l - 1 if i == 0 else 2 * l
        ks.append(coeff * 3 ** (s - 1))
        s -= m
    return tuple(ks)


def family_blocks(params: FamilyParams) -> BlockWord:
    return BlockWord(tuple(zip(family_exponents(params), params.m)))


def min_digits(bw: BlockWord) -> int:
    """A lower bound on the decimal digits of the block word's solution.

    Each block multiplies ``alpha + 1`` by at least ``2^(k-1) (2/3)^m``
    (all intermediates are >= 1), and ``alpha + 1`` starts at 2.
    """
    bits = 1 + sum(k - 1 + m - m * _LOG2_3 for k, m in bw.blocks)
    # one digit of slack so rounding in the logs never skips a legal member
    return max(1, math.floor(bits * _LOG10_2) - 1)


def _verified(params: FamilyParams, bw: BlockWord, alpha: int) -> FamilyMember:
    if apply(from_blocks(bw), alpha) != 1:
        raise InconsistencyError(f"family member {alpha} does not reach 1 under {bw}")
    return FamilyMember(params, bw, alpha, bw.length)


def n_block_member(params: FamilyParams, max_digits: int = DEFAULT_MAX_DIGITS) -> FamilyMember:
    bw = family_blocks(params)
    need = min_digits(bw)
    if need > max_digits:
        raise FamilySizeError(need, max_digits)
    res = solve_blocks(bw)
    if res.natural is None:
        raise InconsistencyError(f"family parameters {params} gave non-natural {res.candidate}")
    return _verified(params, bw, res.natural)


def corollary_member(m: int, l: int, max_digits: int = DEFAULT_MAX_DIGITS) -> FamilyMember:
    """One-block member, from the closed form ``2^m (2^k + 1) / 3^m - 1``."""
    params = FamilyParams((m,), (l,))
    k = (2 * l - 1) * 3 ** (m - 1)
    bw = BlockWord(((k, m),))
    need = min_digits(bw)
    if need > max_digits:
        raise FamilySizeError(need, max_digits)
    q, r = divmod(2**m * (2**k + 1), 3**m)
    if r:
        raise InconsistencyError(f"3^{m} does not divide 2^{m}(2^{k}+1)")
    return _verified(params, bw, q - 1)


def two_block_member(m1: int, m2: int, l1: int, l2: int, **kw) -> FamilyMember:
    return n_block_member(FamilyParams((m1, m2), (l1, l2)), **kw)


def three_block_member(m1: int, m2: int, m3: int, l1: int, l2: int, l3: int, **kw) -> FamilyMember:
    return n_block_member(FamilyParams((m1, m2, m3), (l1, l2, l3)), **kw)


def enumerate_family(
    n: int,
    max_param: int,
    max_digits: int = DEFAULT_MAX_DIGITS,
    on_skip: Callable[[FamilyParams, FamilySizeError], None] | None = None,
) -> Iterator[FamilyMember]:
    """Every n-block member with all ``m_i, l_i <= max_param``.

    Order is lexicographic in ``(m_1..m_n, l_1..l_n)``.  Members over the
    digit bound are skipped and passed to ``on_skip`` (logged by default).
    """
    if n < 1 or max_param < 1:
        raise ValueError("n and max_param must be >= 1")
    for values in itertools.product(range(1, max_param + 1), repeat=2 * n):
        params = FamilyParams(values[:n], values[n:])
        try:
            yield n_block_member(params, max_digits)
        except FamilySizeError as exc:
            if on_skip is None:
                log.warning("skipping %s: %s", params, exc)
            else:
                on_skip(params, exc)
