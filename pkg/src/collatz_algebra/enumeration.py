"""All Collatz numbers of a given length, computed two independent ways.

``inverse_bfs`` walks the predecessor tree from 1.  ``word_enum`` instead
lists candidate words of the right length, discards the ones that cannot
end at 1 with that exact length, and inverts the rest with the nested
formula.  The two must agree.

Pruning rules on the written word (leftmost symbol = last step applied):

1. it cannot start with 1, since ``(3x+1)/2 = 1`` has no natural solution;
2. it cannot start with ``01``, since the value two steps before the end
   would already be 1 (except at length 2, where ``01`` certifies 1 itself);
3. the leading zero run ``k_1`` is odd unless the word is all zeros, since
   ``(3x+1)/2 = 2^{k_1}`` needs ``k_1 + 1`` even.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BoundExceeded, CrossCheckError
from .solver import solve_blocks
from .words import SWord, to_blocks

DEFAULT_BFS_BOUND = 40
DEFAULT_ENUM_BOUND = 24


@dataclass(frozen=True)
class LevelSet:
    depth: int
    members: tuple[int, ...]
    # word_enum records the certifying word for each member
    words: dict[int, SWord] = field(default_factory=dict, compare=False)


def predecessors(y: int) -> list[int]:
    out = [2 * y]
    x, r = divmod(2 * y - 1, 3)
    if r == 0 and x & 1:
        out.append(x)
    return out


def _check_theta(theta: int, bound: int) -> None:
    if theta < 1:
        raise ValueError(f"theta must be >= 1, got {theta}")
    if theta > bound:
        raise BoundExceeded("theta", theta, bound)


def inverse_bfs_levels(theta: int, bound: int = DEFAULT_BFS_BOUND) -> list[LevelSet]:
    """Level sets for depths 1..theta.

    A value is emitted at the depth where it is first found; the root 1 is
    the one exception and reappears at depth 2 (1 -> 2 -> 1).
    """
    _check_theta(theta, bound)
    seen = {1}
    frontier = [1]
    levels = []
    for depth in range(1, theta + 1):
        nxt = set()
        for y in frontier:
            for x in predecessors(y):
                if x not in seen or (x == 1 and depth == 2):
                    nxt.add(x)
        seen |= nxt
        frontier = sorted(nxt)
        levels.append(LevelSet(depth, tuple(frontier)))
    return levels


def inverse_bfs(theta: int, bound: int = DEFAULT_BFS_BOUND) -> LevelSet:
    return inverse_bfs_levels(theta, bound)[-1]


def compositions(theta: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of theta, largest first part first.

    Read as alternating run lengths starting with a zero run:
    ``(3, 2, 1)`` is the word ``0^3 1^2 0``.
    """
    if theta < 1:
        raise ValueError(f"theta must be >= 1, got {theta}")
    for first in range(theta, 0, -1):
        if first == theta:
            yield (theta,)
        else:
            for rest in compositions(theta - first):
                yield (first, *rest)


def composition_word(parts: tuple[int, ...]) -> SWord:
    return SWord.from_runs((i % 2, p) for i, p in enumerate(parts))


def _admissible_first_runs(theta: int) -> list[int]:
    firsts = [k for k in range(3, theta, 2)]
    if theta == 2:
        firsts.append(1)
    firsts.append(theta)
    return sorted(set(firsts), reverse=True)


def pruned_compositions(theta: int) -> Iterator[tuple[int, ...]]:
    """Compositions surviving the three rules (rule 1 holds by construction)."""
    for k1 in _admissible_first_runs(theta):
        if k1 == theta:
            yield (theta,)
        else:
            for rest in compositions(theta - k1):
                yield (k1, *rest)


def word_enum(theta: int, bound: int = DEFAULT_ENUM_BOUND, cross_check: bool = True) -> LevelSet:
    """Level set of depth theta by inverting every surviving word.

    Raises:
        CrossCheckError: if ``cross_check`` and the result differs from
            :func:`inverse_bfs`.
    """
    _check_theta(theta, bound)
    found: dict[int, SWord] = {}
    for parts in pruned_compositions(theta):
        word = composition_word(parts)
        res = solve_blocks(to_blocks(word))
        if res.natural is not None:
            found[res.natural] = word
    level = LevelSet(theta, tuple(sorted(found)), found)
    if cross_check:
        other = inverse_bfs(theta, max(bound, theta))
        if other.members != level.members:
            raise CrossCheckError(
                f"theta={theta}: word enumeration {level.members} != BFS {other.members}"
            )
    return level


@dataclass(frozen=True)
class PruneStats:
    theta: int
    total: int
    after_rule1: int
    after_rule2: int
    after_rule3: int
    naturals: int


def prune_count(theta: int, bound: int = DEFAULT_ENUM_BOUND) -> PruneStats:
    """Count the words of length theta left after each pruning rule, by brute force."""
    if theta < 2:
        raise ValueError(f"theta must be >= 2, got {theta}")
    _check_theta(theta, bound)
    total = 1 << theta
    top = 1 << (theta - 1)
    r1 = r2 = r3 = naturals = 0
    for w in range(total):
        if w & top:
            continue
        r1 += 1
        # leftmost two symbols are "01"
        if theta != 2 and (w >> (theta - 2)) == 1:
            continue
        r2 += 1
        k1 = theta - w.bit_length()
        if w and k1 % 2 == 0:
            continue
        r3 += 1
        word = SWord.from_bits(format(w, f"0{theta}b"))
        if solve_blocks(to_blocks(word)).natural is not None:
            naturals += 1
    return PruneStats(theta, total, r1, r2, r3, naturals)
