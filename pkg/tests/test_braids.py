"""Braid words, Artin action, closure data, and the built-in table."""

import random
from decimal import Decimal

import pytest

from solbraid.braids import (
    BraidWord,
    StrandOutOfRange,
    UnknownRow,
    artin_image,
    b_unknot,
    braid_exponent_sum,
    braid_mirror,
    braid_perm,
    closure_components,
    format_braid,
    full_twist,
    parse_braid,
    table1_braid,
    table1_rows,
)
from solbraid.words import FreeWord, Symbol, parse_word, reduce, substitute


def random_braid(rng, strands=None, length=None):
    strands = strands or rng.randrange(2, 6)
    length = rng.randrange(0, 8) if length is None else length
    letters = tuple(
        (rng.randrange(1, strands), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)


def perm_by_tracking(b):
    # follow each strand position through the crossings one at a time
    positions = list(range(1, b.strands + 1))
    for index, _ in b.letters:
        positions[index - 1], positions[index] = positions[index], positions[index - 1]
    # positions[j] is the strand that ends at slot j+1; invert to "start -> end"
    out = [0] * b.strands
    for slot, start in enumerate(positions, start=1):
        out[start - 1] = slot
    return tuple(out)


def components_by_walking(b):
    perm = perm_by_tracking(b)
    seen = set()
    count = 0
    for start in range(1, b.strands + 1):
        if start in seen:
            continue
        count += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
    return count


def test_braid_word_validation():
    with pytest.raises(StrandOutOfRange):
        BraidWord(2, ((2, 1),))
    with pytest.raises(StrandOutOfRange):
        BraidWord(3, ((0, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))
    with pytest.raises(ValueError):
        BraidWord(2, ((1, 1),)) * BraidWord(3, ((1, 1),))


def test_braid_perm_matches_strand_tracking():
    rng = random.Random(21)
    for _ in range(300):
        b = random_braid(rng)
        assert braid_perm(b).images == perm_by_tracking(b)


def test_closure_components_matches_cycle_walk():
    rng = random.Random(22)
    for _ in range(300):
        b = random_braid(rng)
        assert closure_components(b) == components_by_walking(b)


def test_artin_action_fixes_the_boundary_product():
    rng = random.Random(23)
    for _ in range(200):
        b = random_braid(rng)
        product = FreeWord(())
        for k in range(1, b.strands + 1):
            product = product * artin_image(b, k)
        expected = FreeWord(tuple((Symbol.x(1, k), 1) for k in range(1, b.strands + 1)))
        assert product == expected


def test_artin_action_is_compatible_with_concatenation():
    rng = random.Random(24)
    for _ in range(150):
        strands = rng.randrange(2, 5)
        b1 = random_braid(rng, strands=strands)
        b2 = random_braid(rng, strands=strands)
        images2 = {
            Symbol.x(1, k): artin_image(b2, k) for k in range(1, strands + 1)
        }
        for k in range(1, strands + 1):
            composed = substitute(artin_image(b1, k), images2)
            assert composed == artin_image(b1 * b2, k)


def test_artin_image_known_values():
    cubed = parse_braid("n=2: -1 -1 -1")
    assert artin_image(cubed, 1) == parse_word("x1.2^-1 x1.1^-1 x1.2 x1.1 x1.2")
    assert artin_image(cubed, 2) == parse_word(
        "x1.2^-1 x1.1^-1 x1.2^-1 x1.1 x1.2 x1.1 x1.2"
    )
    sweep = b_unknot(4)
    assert artin_image(sweep, 1) == parse_word(
        "x1.1 x1.2 x1.3 x1.4 x1.3^-1 x1.2^-1 x1.1^-1"
    )
    for k in range(2, 5):
        assert artin_image(sweep, k) == parse_word(f"x1.{k - 1}")
    assert artin_image(b_unknot(2), 1, level=3) == parse_word("x3.1 x3.2 x3.1^-1")
    with pytest.raises(StrandOutOfRange):
        artin_image(sweep, 5)


def test_unknot_braid_and_full_twist_shapes():
    for n in range(2, 7):
        b = b_unknot(n)
        assert b.strands == n
        assert closure_components(b) == 1
    assert closure_components(full_twist(3)) == 3
    assert braid_exponent_sum(full_twist(3)) == 6


def test_mirror_flips_signs():
    rng = random.Random(25)
    for _ in range(100):
        b = random_braid(rng)
        m = braid_mirror(b)
        assert m.strands == b.strands
        assert braid_exponent_sum(m) == -braid_exponent_sum(b)
        assert braid_mirror(m) == b
        assert braid_perm(m).images == braid_perm(b).images


def test_braid_text_round_trip():
    rng = random.Random(26)
    for _ in range(200):
        b = random_braid(rng)
        assert parse_braid(format_braid(b)) == b
    assert format_braid(BraidWord(1, ())) == "n=1:"
    assert parse_braid("n=1:") == BraidWord(1, ())
    with pytest.raises(Exception):
        parse_braid("n=2: 5")
    with pytest.raises(Exception):
        parse_braid("2: 1")


def test_table_rows_parse_and_close_to_knots():
    rows = table1_rows()
    assert len(rows) == 7
    volumes = [str(volume) for _, _, _, volume in rows]
    assert volumes == ["4.05", "5.97", "4.85", "7.51", "5.08", "5.90", "11.2"]
    for n, variant, braid, volume in rows:
        assert braid.strands == n
        assert closure_components(braid) == 1
        assert isinstance(volume, Decimal)
        again, vol_again = table1_braid(n, variant)
        assert again == braid and vol_again == volume
    with pytest.raises(UnknownRow):
        table1_braid(3, 9)
