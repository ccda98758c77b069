from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from collatz_algebra import (
    AffineMap,
    BoundExceeded,
    NotPeriodic,
    SWord,
    affine_of,
    apply,
    ck_set,
    fixed_point,
    integer_cycles,
    lift_cycle,
    parse_word,
)
from collatz_algebra.affine import words_with_maps

import oracles

bitstrings = st.text(alphabet="01", max_size=30)


@pytest.mark.parametrize(
    "word, expected",
    [("01", (1, 1, 2)), ("0^7", (0, 0, 7)), ("111", (3, 19, 3)), ("", (0, 0, 0)), ("10", (1, 2, 2))],
)
def test_affine_of(word, expected):
    assert affine_of(parse_word(word)) == AffineMap(*expected)


def test_affine_111_at_valid_points():
    # 1^3 is defined exactly on x = 7 (mod 8)
    m = affine_of(parse_word("111"))
    for x in (7, 15, 23, 1007):
        assert apply(parse_word("111"), x) == m(x) == Fraction(27 * x + 19, 8)


@given(bitstrings)
def test_affine_matches_formal_iteration(bits):
    m = affine_of(SWord.from_bits(bits))
    assert (m.ones, m.length) == (bits.count("1"), len(bits))
    for x in (Fraction(0), Fraction(1), Fraction(-3, 7)):
        assert m(x) == oracles.formal_bits(bits, x)


@given(bitstrings, bitstrings)
def test_composition_homomorphism(b2, b1):
    w2, w1 = SWord.from_bits(b2), SWord.from_bits(b1)
    assert affine_of(w2 + w1) == affine_of(w2).after(affine_of(w1))


def test_evaluation_agreement():
    for k in range(0, 13):
        for bits in oracles.all_bits(k):
            m = affine_of(SWord.from_bits(bits))
            # parity-valid starts form one residue class mod 2^k
            x0 = next(x for x in range(1, 2**k + 1) if oracles.apply_bits(bits, x) is not None)
            for x in range(x0, 10_001, 2**k):
                y = oracles.apply_bits(bits, x)
                assert y * 2**k == 3**m.ones * x + m.offset


def test_words_with_maps_order_and_values():
    got = list(words_with_maps(4))
    assert [w.bits() for w, _ in got] == oracles.all_bits(4)
    assert all(affine_of(w) == m for w, m in got)


def test_ck_set_small():
    assert ck_set(1) == {(1, 0), (3, 1)}
    assert ck_set(2) == {(1, 0), (3, 1), (3, 2), (9, 5)}


def test_ck_set_k3_matches_listing():
    first = {(1, 0), (3, 1), (3, 2), (3**2, 3 + 2)}
    second = {(3, 2**2), (3**2, 3 * 2 + 2**2), (3**2, 3 + 2**2), (3**3, 3**2 + 3 * 2 + 2**2)}
    assert ck_set(3) == first | second


def test_ck_set_layer_structure():
    # words whose last step is a zero keep the previous layer's pairs
    for k in range(2, 9):
        assert ck_set(k - 1) <= ck_set(k)


def test_ck_set_has_no_collisions():
    for k in range(1, 11):
        assert len(ck_set(k)) == 2**k
        by_enum = {(3**m.ones, m.offset) for _, m in words_with_maps(k)}
        assert by_enum == ck_set(k)


def test_ck_set_bound():
    with pytest.raises(BoundExceeded):
        ck_set(21)
    with pytest.raises(ValueError):
        ck_set(0)


@pytest.mark.parametrize("word, expected", [("01", 1), ("0", 0), ("111", -1), ("1", -1), ("10", 2)])
def test_fixed_point(word, expected):
    assert fixed_point(affine_of(parse_word(word))) == expected


def test_fixed_point_rational_and_degenerate():
    assert fixed_point(affine_of(parse_word("001"))) == Fraction(1, 5)
    assert fixed_point(AffineMap()) is None


def test_integer_cycles_k3():
    sols = integer_cycles(3)
    assert sorted(s.x for s in sols) == [-10, -7, -5, -1, 0]
    assert {s.word.bits(): s.x for s in sols} == {"000": 0, "011": -5, "101": -7, "110": -10, "111": -1}


def test_integer_cycles_k2_and_k1():
    assert {s.word.bits(): s.x for s in integer_cycles(2)} == {"00": 0, "01": 1, "10": 2, "11": -1}
    assert {s.word.bits(): s.x for s in integer_cycles(1)} == {"0": 0, "1": -1}


def test_integer_cycles_are_periodic_points():
    for k in range(1, 11):
        for s in integer_cycles(k):
            assert oracles.iterate(s.x, k) == s.x
            assert apply(s.word, s.x, signed=True) == s.x


def test_integer_cycles_complete_against_brute_force():
    # every integer k-periodic point in a window shows up, with its own orbit word
    for k in range(1, 9):
        found = {s.x for s in integer_cycles(k)}
        brute = {x for x in range(-2000, 2000) if oracles.iterate(x, k) == x}
        assert brute <= found


def test_only_trivial_positive_cycles_up_to_12():
    for k in range(1, 13):
        positives = {s.x for s in integer_cycles(k) if s.x > 0}
        assert positives <= {1, 2}
        assert positives == ({1, 2} if k % 2 == 0 else set())


@pytest.mark.parametrize(
    "x, k, m, chain",
    [
        (1, 2, 3, (8, 4, 2, 1, 2, 1)),
        (-5, 3, 1, (-10, -5, -7, -10, -5)),
        (0, 1, 4, (0, 0, 0, 0, 0, 0)),
    ],
)
def test_lift_cycle(x, k, m, chain):
    lifted = lift_cycle(x, k, m)
    assert lifted.chain == chain
    assert lifted.chain[m] == lifted.chain[m + k] == x


def test_lift_cycle_rejects_non_periodic():
    with pytest.raises(NotPeriodic):
        lift_cycle(3, 2, 1)
