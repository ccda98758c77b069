"""Inverting block words: which alpha satisfies ``0^{k_1}1^{m_1}...0^{k_n}1^{m_n}(alpha) = 1``?

Undoing the leftmost zero run turns 1 into ``2^{k_1}``; undoing a run of m
ones sends y to ``(2/3)^m (y + 1) - 1``.  Alternating the two from the left
gives the nested formula

    alpha = (2/3)^{m_n}(2^{k_n}( ... ((2/3)^{m_1}(2^{k_1}+1) - 1) ... ) + 1) - 1

:func:`solve_blocks` evaluates it twice, once as a run-by-run recursion in
exact rationals and once expanded into a single integer numerator over
``3^(m_1+...+m_n)``, and refuses to answer if the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistencyError, ParityError
from .words import BlockWord, apply, from_blocks


@dataclass(frozen=True)
class SolveResult:
    blocks: BlockWord
    candidate: Fraction
    natural: int | None
    verified_length: int | None

    @property
    def is_natural(self) -> bool:
        return self.natural is not None


def lemma_k(m: int, alpha1: int | Fraction) -> Fraction:
    """Undo ``1^m``: the alpha with ``1^m(alpha) == alpha1``, as an exact rational."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return Fraction(2**m, 3**m) * (Fraction(alpha1) + 1) - 1


def recursive_candidate(blocks: tuple[tuple[int, int], ...]) -> Fraction:
    """Block-by-block: ``a_i = 2^{k_i} b_{i-1}``, ``b_i = 1^{-m_i}(a_i)``, ``b_0 = 1``."""
    beta = Fraction(1)
    for k, m in blocks:
        beta = lemma_k(m, 2**k * beta)
    return beta


def expanded_candidate(blocks: tuple[tuple[int, int], ...]) -> Fraction:
    """The nested formula multiplied out over the common denominator ``3^M``.

    With ``K = sum k_i`` and ``M = sum m_i``::

        3^M (alpha + 1) = 2^(1+K+M)
                          + sum_j (1 - 2^{k_j}) 2^(m_j + sum_{i>j}(k_i+m_i)) 3^(sum_{i<j} m_i)
    """
    total_m = sum(m for _, m in blocks)
    num = 1 << (1 + sum(k + m for k, m in blocks))
    tail = 0  # sum of (k_i + m_i) over i > j
    head = total_m  # sum of m_i over i <= j
    for k, m in reversed(blocks):
        head -= m
        num += (1 - (1 << k)) * 3**head << (m + tail)
        tail += k + m
    den = 3**total_m
    return Fraction(num - den, den)


def solve_blocks(bw: BlockWord) -> SolveResult:
    """Solve ``word(alpha) = 1`` for the block word ``bw`` and certify the answer.

    ``natural`` is set only when the candidate is a positive integer *and*
    forward application of the word succeeds with every parity check, so a
    lucky integer from cancellation is never reported.
    """
    if not bw.blocks and not bw.trailing_zeros:
        raise ValueError("the identity word has no inverse problem")
    a = recursive_candidate(bw.blocks)
    b = expanded_candidate(bw.blocks)
    if a != b:
        raise InconsistencyError(f"nested formula {b} != recursion {a} for {bw}")
    candidate = a * 2**bw.trailing_zeros
    natural = None
    if candidate.denominator == 1 and candidate >= 1:
        alpha = candidate.numerator
        try:
            if apply(from_blocks(bw), alpha) == 1:
                natural = alpha
        except ParityError:
            pass
    return SolveResult(bw, candidate, natural, bw.length if natural is not None else None)


def corollary_naturality(k: int, m: int) -> bool:
    """One block ``0^k 1^m`` has a natural solution iff k is an odd multiple of ``3^(m-1)``."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    q, r = divmod(k, 3 ** (m - 1))
    return r == 0 and q % 2 == 1
