"""Free word and permutation core."""

import random

import pytest

from solbraid.words import (
    EMPTY,
    DegreeMismatch,
    FreeWord,
    MissingImage,
    ParseError,
    Permutation,
    Symbol,
    cyclically_reduce,
    exponent_sum,
    format_permutation,
    format_word,
    gen,
    parse_permutation,
    parse_symbol,
    parse_word,
    perm_compose,
    perm_cycles,
    perm_inverse,
    reduce,
    replace,
    substitute,
)

ALPHABET = (
    Symbol.t(0),
    Symbol.t(1),
    Symbol.x(1, 1),
    Symbol.x(1, 2),
    Symbol.x(2, 1),
    Symbol.s(0),
    Symbol.z(0),
    Symbol.z(3),
    Symbol.X(2),
)


def random_word(rng, length, alphabet=ALPHABET):
    letters = tuple(
        (rng.choice(alphabet), rng.choice((1, -1))) for _ in range(length)
    )
    return FreeWord(letters)


def random_reduced_word(rng, length, alphabet=ALPHABET):
    # grow letter by letter, never appending the inverse of the tail
    letters = []
    while len(letters) < length:
        sym = rng.choice(alphabet)
        sign = rng.choice((1, -1))
        if letters and letters[-1] == (sym, -sign):
            continue
        letters.append((sym, sign))
    return FreeWord(tuple(letters))


def insert_cancelling_pairs(rng, word, pairs):
    letters = list(word.letters)
    for _ in range(pairs):
        sym = rng.choice(ALPHABET)
        sign = rng.choice((1, -1))
        pos = rng.randrange(len(letters) + 1)
        letters[pos:pos] = [(sym, sign), (sym, -sign)]
    return FreeWord(tuple(letters))


def test_symbol_tokens_round_trip():
    for sym in ALPHABET:
        assert parse_symbol(str(sym)) == sym


def test_symbol_namespace_checks():
    with pytest.raises(ValueError):
        Symbol.x(0, 1)
    with pytest.raises(ValueError):
        Symbol.x(1, 0)
    with pytest.raises(ValueError):
        Symbol("t", level=-1)
    with pytest.raises(ValueError):
        Symbol("w", level=0)


def test_symbol_ordering_is_total_and_stable():
    ordered = sorted(ALPHABET)
    assert ordered == sorted(reversed(ordered))
    assert ordered[0].kind == "t"
    assert str(ordered[0]) == "t0"


def test_reduce_recovers_word_after_planted_cancellations():
    rng = random.Random(11)
    for _ in range(300):
        base = random_reduced_word(rng, rng.randrange(0, 12))
        padded = insert_cancelling_pairs(rng, base, rng.randrange(1, 6))
        assert reduce(padded) == base


def test_reduce_is_idempotent_and_marks_identity():
    rng = random.Random(12)
    for _ in range(200):
        w = reduce(random_word(rng, rng.randrange(0, 14)))
        assert reduce(w) == w
    assert reduce(EMPTY) is EMPTY
    assert EMPTY.is_identity


def test_group_laws():
    rng = random.Random(13)
    for _ in range(200):
        u = random_word(rng, rng.randrange(0, 8))
        v = random_word(rng, rng.randrange(0, 8))
        assert (u * v).inverse() == v.inverse() * u.inverse()
        assert (u * u.inverse()).is_identity
        assert u ** 0 == EMPTY
        assert u ** 3 == u * u * u
        assert u ** -2 == (u * u).inverse()


def test_cyclic_reduction_strips_conjugation():
    rng = random.Random(14)
    for _ in range(200):
        core = random_reduced_word(rng, rng.randrange(1, 8))
        if core != cyclically_reduce(core):
            continue
        c = random_word(rng, rng.randrange(0, 5))
        conjugated = c * core * c.inverse()
        stripped = cyclically_reduce(conjugated)
        rotations = {
            stripped.letters[i:] + stripped.letters[:i]
            for i in range(max(1, len(stripped.letters)))
        }
        assert core.letters in rotations


def test_substitute_is_an_antihomomorphism_on_inverses():
    x, y = Symbol.x(1, 1), Symbol.x(1, 2)
    images = {x: parse_word("t0 t1"), y: parse_word("t1^-1")}
    w = parse_word("x1.1 x1.2^-1 x1.1^-1")
    assert substitute(w, images) == parse_word("t0 t1 t0^-1")
    with pytest.raises(MissingImage):
        substitute(parse_word("z0"), images)
    assert replace(parse_word("z0 x1.1"), images) == parse_word("z0 t0 t1")


def test_exponent_sum_matches_direct_count():
    rng = random.Random(15)
    for _ in range(200):
        w = random_word(rng, rng.randrange(0, 15))
        for sym in ALPHABET:
            direct = sum(sign for s, sign in w.letters if s == sym)
            assert exponent_sum(w, sym) == direct


def test_word_text_round_trip():
    rng = random.Random(16)
    for _ in range(300):
        w = reduce(random_word(rng, rng.randrange(0, 12)))
        assert parse_word(format_word(w)) == w
    assert format_word(EMPTY) == "1"
    assert parse_word("1") == EMPTY
    assert format_word(parse_word("t0 t0 t0")) == "t0^3"


def test_word_parse_errors_name_the_token():
    with pytest.raises(ParseError) as info:
        parse_word("t0 q7")
    assert "q7" in str(info.value)
    with pytest.raises(ParseError):
        parse_word("t0^0")
    with pytest.raises(ParseError):
        parse_word("1 t0")


def test_permutation_compose_applies_left_to_right():
    a = parse_permutation("(1 2)", 3)
    b = parse_permutation("(2 3)", 3)
    assert perm_compose(a, b).apply(1) == 3
    assert perm_compose(b, a).apply(1) == 2
    with pytest.raises(DegreeMismatch):
        perm_compose(a, parse_permutation("(1 2)", 4))


def test_permutation_inverse_and_identity():
    rng = random.Random(17)
    for _ in range(100):
        degree = rng.randrange(1, 8)
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert perm_compose(p, perm_inverse(p)).is_identity
        assert perm_compose(perm_inverse(p), p) == Permutation.identity(degree)


def test_cycle_decomposition_rebuilds_the_permutation():
    rng = random.Random(18)
    for _ in range(100):
        degree = rng.randrange(1, 9)
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        cycles = perm_cycles(p)
        assert Permutation.from_cycles(degree, cycles) == p
        starts = [c[0] for c in cycles]
        assert starts == sorted(starts)
        assert sum(len(c) for c in cycles) == degree


def test_permutation_text_round_trip():
    rng = random.Random(19)
    for _ in range(100):
        degree = rng.randrange(1, 9)
        images = list(range(1, degree + 1))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert parse_permutation(format_permutation(p), degree) == p
    assert format_permutation(Permutation.identity(4)) == "id"
    assert parse_permutation("id", 2) == Permutation.identity(2)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ParseError):
        parse_permutation("(1 2", 3)
    with pytest.raises(ParseError):
        parse_permutation("(1 2) (2 3)", 3)
    with pytest.raises(ParseError):
        parse_permutation("(1 5)", 3)
