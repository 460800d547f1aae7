"""Height descriptors and subgroups of the rationals."""

import math
import random
from fractions import Fraction

import pytest

from solbraid.qsubgroups import (
    HeightDescriptor,
    format_heights,
    heights_from_sequence,
    limit_member,
    parse_heights,
    parse_rational,
    q_isomorphic,
    q_member,
    sequence_from_heights,
    shift_multiplier,
)
from solbraid.sequences import DefiningSequence
from solbraid.words import ParseError

PRIMES = (2, 3, 5, 7, 11, 13)


def random_sequence(rng, max_len=5):
    def entry():
        return math.prod(rng.choice(PRIMES) for _ in range(rng.randrange(0, 3)))

    prefix = tuple(entry() for _ in range(rng.randrange(0, max_len)))
    cycle = tuple(entry() for _ in range(rng.randrange(1, max_len)))
    return DefiningSequence(tuple(max(1, n) for n in prefix), tuple(max(1, n) for n in cycle))


def random_rational(rng):
    num = rng.randrange(-(10**6), 10**6 + 1)
    den = rng.randrange(1, 10**6 + 1)
    return Fraction(num, den)


def random_descriptor(rng):
    chosen = sorted(rng.sample(PRIMES, rng.randrange(0, len(PRIMES) + 1)))
    entries = {}
    for p in chosen:
        entries[p] = math.inf if rng.random() < 0.4 else rng.randrange(2, 9)
    return HeightDescriptor.from_map(entries)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        HeightDescriptor(((4, 3),))
    with pytest.raises(ValueError):
        HeightDescriptor(((3, 1),))
    with pytest.raises(ValueError):
        HeightDescriptor(((3, 2), (2, 2)))
    d = HeightDescriptor.from_map({3: 2, 2: 1})
    assert d.height(2) == 1
    assert d.height(3) == 2
    assert d.height(7) == 1


def test_heights_example_and_membership_boundary():
    s = DefiningSequence((2, 4, 6, 8, 5), (3,))
    d = heights_from_sequence(s)
    assert d.height(2) == 8
    assert d.height(3) == math.inf
    assert d.height(5) == 2
    assert limit_member(s, Fraction(1, 2**7))
    assert not limit_member(s, Fraction(1, 2**8))
    assert q_member(d, Fraction(1, 2**7))
    assert not q_member(d, Fraction(1, 2**8))


def test_integer_and_zero_membership():
    d = HeightDescriptor(())
    assert q_member(d, Fraction(5))
    assert q_member(d, Fraction(0))
    assert not q_member(d, Fraction(1, 2))
    circle = DefiningSequence((), (1,))
    assert limit_member(circle, Fraction(-3))
    assert not limit_member(circle, Fraction(1, 5))


def test_two_membership_routes_agree():
    rng = random.Random(41)
    for _ in range(2000):
        s = random_sequence(rng)
        r = random_rational(rng)
        assert limit_member(s, r) == q_member(heights_from_sequence(s), r)


def test_descriptor_round_trip_through_sequences():
    rng = random.Random(42)
    for _ in range(500):
        d = random_descriptor(rng)
        assert heights_from_sequence(sequence_from_heights(d)) == d


def test_isomorphism_ignores_finite_heights():
    d1 = parse_heights("2:inf,3:5")
    d2 = parse_heights("2:inf,5:7")
    d3 = parse_heights("2:inf,3:inf")
    assert q_isomorphic(d1, d2)
    assert not q_isomorphic(d1, d3)
    rng = random.Random(43)
    for _ in range(200):
        a, b = random_descriptor(rng), random_descriptor(rng)
        assert q_isomorphic(a, b) == (a.infinite_primes() == b.infinite_primes())


def test_homeomorphic_sequences_have_isomorphic_groups():
    from solbraid.sequences import homeomorphic

    rng = random.Random(44)
    for _ in range(300):
        s1, s2 = random_sequence(rng), random_sequence(rng)
        if homeomorphic(s1, s2):
            assert q_isomorphic(heights_from_sequence(s1), heights_from_sequence(s2))


def test_shift_multiplier_partial_products():
    s = DefiningSequence((2, 3), (5,))
    assert shift_multiplier(s, 1) == 1
    assert shift_multiplier(s, 4) == Fraction(2 * 3 * 5)
    with pytest.raises(ValueError):
        shift_multiplier(s, 0)


def test_heights_text_round_trip():
    rng = random.Random(45)
    for _ in range(300):
        d = random_descriptor(rng)
        assert parse_heights(format_heights(d)) == d
    assert format_heights(HeightDescriptor(())) == ""
    assert parse_heights("") == HeightDescriptor(())
    assert parse_heights("2:1") == HeightDescriptor(())
    with pytest.raises(ParseError):
        parse_heights("2:0")
    with pytest.raises(ParseError):
        parse_heights("2:inf,2:3")
    with pytest.raises(ParseError):
        parse_heights("9:2")


def test_rational_parsing():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == Fraction(-2)
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("a/b")
