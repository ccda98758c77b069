"""Range scans: the fraction of m < M whose orbit dips below m, and the
residue-class descent facts behind it.

Both scans split their range into disjoint chunks whose counters merge by
addition, so results do not depend on chunking or on the worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .core import DEFAULT_MAX_STEPS, glide
from .errors import ResidueCounterexample

DEFAULT_CHUNK = 1 << 16


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, hi)) for a in range(lo, hi, size)]


def _map_chunks(fn, chunks, cutoff, workers):
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, chunks, [cutoff] * len(chunks)))
    return [fn(c, cutoff) for c in chunks]


@dataclass(frozen=True)
class DensityReport:
    """Glide counts over ``m in [1, M)``.

    ``A + undecided + never == M - 1``, where ``never`` counts the m known
    never to glide (only m = 1).  ``ratio = A / M`` is a certified lower
    bound on the true ratio.
    """

    M: int
    A: int
    ratio: Fraction
    cutoff: int
    undecided: int
    never: int


def _density_chunk(bounds: tuple[int, int], cutoff: int) -> tuple[int, int, int]:
    lo, hi = bounds
    a = undecided = never = 0
    for m in range(lo, hi):
        if m == 1:
            never += 1
        elif glide(m, cutoff) is not None:
            a += 1
        else:
            undecided += 1
    return a, undecided, never


def everett_density(
    M: int, cutoff: int = DEFAULT_MAX_STEPS, workers: int = 1, chunk: int = DEFAULT_CHUNK
) -> DensityReport:
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    parts = _map_chunks(_density_chunk, _chunks(1, M, chunk), cutoff, workers)
    a, undecided, never = (sum(col) for col in zip(*parts))
    return DensityReport(M, a, Fraction(a, M), cutoff, undecided, never)


@dataclass(frozen=True)
class ResidueReport:
    """Outcome of :func:`residue_glide_check` over ``[2, range_end]``.

    ``glides_3mod4`` maps a glide length to how many n = 3 (mod 4) have it.
    """

    range_end: int
    checked: int
    cutoff: int
    glides_3mod4: dict[int, int] = field(default_factory=dict)
    undecided_3mod4: tuple[int, ...] = ()

    @property
    def min_glide_3mod4(self) -> int | None:
        return min(self.glides_3mod4, default=None)


def _residue_chunk(bounds, cutoff):
    lo, hi = bounds
    hist: Counter[int] = Counter()
    undecided = []
    for n in range(lo, hi):
        if not n & 1:
            if n >> 1 >= n:
                raise ResidueCounterexample(n, "even but f(n) >= n")
        elif n & 3 == 1:
            # f(n) = (3n+1)/2 is even, so f^2(n) = (3n+1)/4
            f2 = (3 * n + 1) >> 1
            if f2 & 1:
                raise ResidueCounterexample(n, "f(n) odd for n = 1 (mod 4)")
            f2 >>= 1
            if f2 >= n or 4 * f2 != 3 * n + 1:
                raise ResidueCounterexample(n, "f^2(n) >= n for n = 1 (mod 4)")
        else:
            g = glide(n, cutoff)
            if g is None:
                undecided.append(n)
            else:
                if g <= 2:
                    raise ResidueCounterexample(n, f"glide {g} <= 2 for n = 3 (mod 4)")
                hist[g] += 1
    return hist, undecided


def residue_glide_check(
    range_end: int, cutoff: int = DEFAULT_MAX_STEPS, workers: int = 1, chunk: int = DEFAULT_CHUNK
) -> ResidueReport:
    """Check over ``[2, range_end]`` that only n = 3 (mod 4) can avoid dropping
    below itself within two steps.

    Even n satisfy ``f(n) < n``; n = 1 (mod 4), n > 1 satisfy
    ``f^2(n) = (3n+1)/4 < n``; n = 3 (mod 4) need at least three steps.

    Raises:
        ResidueCounterexample: for the first n violating any of these.
    """
    if range_end < 4:
        raise ValueError(f"range_end must be >= 4, got {range_end}")
    parts = _map_chunks(_residue_chunk, _chunks(2, range_end + 1, chunk), cutoff, workers)
    hist: Counter[int] = Counter()
    undecided: list[int] = []
    for h, u in parts:
        hist.update(h)
        undecided.extend(u)
    return ResidueReport(range_end, range_end - 1, cutoff, dict(sorted(hist.items())), tuple(undecided))
