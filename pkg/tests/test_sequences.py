"""Defining sequences and solenoid homeomorphism."""

import math
import random

import pytest

from solbraid.sequences import (
    DefiningSequence,
    format_sequence,
    homeomorphic,
    multiplicities,
    normalize,
    parse_sequence,
    prime_factors,
)

PRIMES = (2, 3, 5, 7, 11, 13)


def random_sequence(rng, max_len=6, max_entry=30):
    prefix = tuple(rng.randrange(1, max_entry) for _ in range(rng.randrange(0, max_len)))
    cycle = tuple(rng.randrange(1, max_entry) for _ in range(rng.randrange(1, max_len)))
    return DefiningSequence(prefix, cycle)


def rewrite_by_factoring(rng, s):
    # split or merge entries without touching the multiset of prime factors
    def rewrite(entries, keep_nonempty):
        out = []
        for n in entries:
            factors = prime_factors(n)
            if factors and rng.random() < 0.5:
                cut = rng.randrange(1, len(factors) + 1)
                out.append(math.prod(factors[:cut]))
                out.append(math.prod(factors[cut:]))
            else:
                out.append(n)
        if not out and keep_nonempty:
            out = [1]
        return tuple(max(1, n) for n in out)

    return DefiningSequence(rewrite(s.prefix, False), rewrite(s.cycle, True))


def test_sequence_validation_and_entry():
    s = DefiningSequence((6,), (2, 3))
    assert [s.entry(i) for i in range(1, 6)] == [6, 2, 3, 2, 3]
    with pytest.raises(ValueError):
        DefiningSequence((), ())
    with pytest.raises(ValueError):
        DefiningSequence((0,), (2,))
    with pytest.raises(ValueError):
        s.entry(0)


def test_prime_factors_multiply_back_and_are_prime():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randrange(1, 10**6)
        factors = prime_factors(n)
        assert math.prod(factors) == n
        assert factors == sorted(factors)
        for p in factors:
            assert p >= 2
            assert all(p % d for d in range(2, int(p**0.5) + 1))


def test_normalize_is_idempotent_and_multiplicity_preserving():
    rng = random.Random(32)
    for _ in range(300):
        s = random_sequence(rng)
        n = normalize(s)
        assert normalize(n) == n
        assert all(entry >= 2 for entry in n.prefix + n.cycle) or n.is_circle
        if not n.is_circle:
            assert multiplicities(n) == multiplicities(s)


def test_multiplicities_example():
    m = multiplicities(DefiningSequence((2, 4, 6, 8, 5), (3,)))
    assert m[2] == 7
    assert m[3] == math.inf
    assert m[5] == 1


def test_homeomorphic_decides_the_three_listed_pairs():
    assert homeomorphic(parse_sequence("| 2,3"), parse_sequence("| 6"))
    assert not homeomorphic(parse_sequence("| 2"), parse_sequence("| 3"))
    assert homeomorphic(parse_sequence("7 | 2"), parse_sequence("| 2"))


def test_homeomorphic_is_an_equivalence_on_a_random_pool():
    rng = random.Random(33)
    pool = [random_sequence(rng, max_entry=14) for _ in range(12)]
    for a in pool:
        assert homeomorphic(a, a)
        for b in pool:
            assert homeomorphic(a, b) == homeomorphic(b, a)
            for c in pool:
                if homeomorphic(a, b) and homeomorphic(b, c):
                    assert homeomorphic(a, c)


def test_homeomorphic_ignores_prefix_edits_and_rewrites():
    rng = random.Random(34)
    for _ in range(300):
        s = random_sequence(rng, max_entry=14)
        edited = DefiningSequence(
            tuple(rng.randrange(1, 14) for _ in range(rng.randrange(0, 4))),
            s.cycle,
        )
        assert homeomorphic(s, edited)
        rotated = DefiningSequence(
            s.prefix, s.cycle[1:] + s.cycle[:1]
        )
        assert homeomorphic(s, rotated)
        assert homeomorphic(s, rewrite_by_factoring(rng, s))


def test_sequence_text_round_trip():
    rng = random.Random(35)
    for _ in range(200):
        s = random_sequence(rng)
        assert parse_sequence(format_sequence(s)) == s
    assert format_sequence(DefiningSequence((), (2,))) == "| 2"
    assert parse_sequence("2,3 | 6") == DefiningSequence((2, 3), (6,))
    with pytest.raises(Exception):
        parse_sequence("2,3")
    with pytest.raises(Exception):
        parse_sequence("| ")
