from fractions import Fraction

import pytest

from collatz_algebra import everett_density, residue_glide_check
from collatz_algebra.stats import _residue_chunk

import oracles


def density_oracle(M, cutoff):
    a = sum(1 for m in range(1, M) if oracles.glide(m, cutoff) is not None)
    return a


def test_density_small():
    r = everett_density(10)
    assert (r.A, r.undecided, r.never) == (8, 0, 1)
    assert r.ratio == Fraction(8, 10)
    assert everett_density(2).A == 0


def test_density_matches_oracle():
    for M in (2, 3, 17, 100, 1000):
        assert everett_density(M).A == density_oracle(M, 10_000)


@pytest.mark.parametrize("M", [10**2, 10**3, 10**4])
def test_every_m_above_one_glides(M):
    r = everett_density(M, 10_000)
    # m ranges over [1, M); only m = 1 fails to glide
    assert r.A == M - 2
    assert r.undecided == 0 and r.never == 1
    assert r.A + r.undecided + r.never == M - 1


def test_density_undecided_is_counted_not_dropped():
    r = everett_density(100, cutoff=5)
    assert r.undecided > 0
    assert r.A + r.undecided + r.never == 99
    assert r.A == sum(1 for m in range(2, 100) if oracles.glide(m, 5) is not None)


def test_density_independent_of_chunking():
    base = everett_density(5000)
    for chunk in (1, 7, 1000, 10**6):
        assert everett_density(5000, chunk=chunk) == base
    assert everett_density(5000, workers=2, chunk=999) == base


def test_residue_examples():
    assert oracles.iterate(9, 2) == 7
    assert oracles.iterate(8, 1) == 4
    assert oracles.glide(7) == 7
    rep = residue_glide_check(9)
    assert rep.glides_3mod4 == {4: 1, 7: 1}  # n = 3 and n = 7


def test_residue_check_small_range():
    rep = residue_glide_check(10_000)
    assert rep.checked == 9_999
    assert rep.min_glide_3mod4 >= 3
    assert sum(rep.glides_3mod4.values()) == len([n for n in range(2, 10_001) if n % 4 == 3])
    assert rep.undecided_3mod4 == ()


def test_residue_chunk_independent_of_workers():
    a = residue_glide_check(20_000)
    b = residue_glide_check(20_000, workers=2, chunk=3000)
    assert a == b


def test_residue_undecided_with_tiny_cutoff():
    rep = residue_glide_check(100, cutoff=3)
    assert 27 in rep.undecided_3mod4


def test_residue_range_guard():
    with pytest.raises(ValueError):
        residue_glide_check(3)


def test_residue_chunk_hist():
    hist, undecided = _residue_chunk((2, 12), 100)
    assert dict(hist) == {4: 1, 7: 1, 5: 1}  # n = 3, 7, 11
    assert undecided == []
