"""Braid words, their permutations, and the Artin action on meridians.

A braid on n strands is a word in the generators sigma_1 .. sigma_{n-1};
letters are stored as (index, sign) pairs.  The chirality convention is
fixed package-wide and matters: the positive generator sigma_i acts on
the free group on meridians x_1 .. x_n by

    x_i     -> x_i x_{i+1} x_i^-1
    x_{i+1} -> x_i

with all other generators fixed, the letters of a braid word acting
left to right.  A negative letter acts by the inverse automorphism
(x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}).  Under this
convention the sweep braid ``b_unknot(n) = sigma_1 ... sigma_{n-1}``
conjugates the first meridian around the whole boundary word and shifts
every other meridian down by one, which is the normal form the rest of
the package is built on.  Swapping the convention for its mirror swaps
which knots the closed braids trace out; the canonical embedding
constructors in :mod:`solbraid.schemes` take the mirrored sweep braids
for exactly that reason.

Underlying permutations ignore letter signs, so the closed-braid
component count is sign-blind.  Braids print as ``n=3: -1 2`` meaning
sigma_1^-1 sigma_2 on three strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .words import (
    FreeWord,
    ParseError,
    Permutation,
    Symbol,
    perm_compose,
    perm_cycles,
)

__all__ = [
    "StrandOutOfRange",
    "UnknownRow",
    "BraidWord",
    "braid_perm",
    "closure_components",
    "artin_image",
    "b_unknot",
    "full_twist",
    "braid_mirror",
    "braid_exponent_sum",
    "table1_braid",
    "table1_rows",
    "parse_braid",
    "format_braid",
]


class StrandOutOfRange(ValueError):
    """A strand or generator index outside the braid's range."""


class UnknownRow(KeyError):
    """No recorded geometric braid for the requested (strands, variant)."""

    def __str__(self) -> str:
        return self.args[0] if self.args else "unknown row"


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators; letters are (index, sign) with 1 <= index < strands."""

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for index, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")
            if not 1 <= index <= self.strands - 1:
                raise StrandOutOfRange(
                    f"generator index {index} outside 1..{self.strands - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise StrandOutOfRange("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_braid(self)


def braid_perm(b: BraidWord) -> Permutation:
    """The underlying permutation; signs are ignored.

    >>> braid_perm(b_unknot(3)).images
    (3, 1, 2)
    """
    p = Permutation.identity(b.strands)
    for index, _ in b.letters:
        p = perm_compose(p, Permutation.transposition(b.strands, index, index + 1))
    return p


def closure_components(b: BraidWord) -> int:
    """Number of link components of the closed braid (cycles of the permutation).

    >>> closure_components(BraidWord(4, ((1, 1),)))
    3
    """
    return len(perm_cycles(braid_perm(b)))


def _gen_image(strand: int, index: int, sign: int) -> list[tuple[int, int]]:
    # Image of the positive letter x_strand under sigma_index^sign.
    if sign == 1:
        if strand == index:
            return [(index, 1), (index + 1, 1), (index, -1)]
        if strand == index + 1:
            return [(index, 1)]
    else:
        if strand == index:
            return [(index + 1, 1)]
        if strand == index + 1:
            return [(index + 1, -1), (index, 1), (index + 1, 1)]
    return [(strand, 1)]


def _reduce_pairs(letters: list[tuple[int, int]]) -> list[tuple[int, int]]:
    stack: list[tuple[int, int]] = []
    for strand, sign in letters:
        if stack and stack[-1][0] == strand and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((strand, sign))
    return stack


def artin_image(b: BraidWord, k: int, *, level: int = 1) -> FreeWord:
    """Image of the meridian x_k under the braid's automorphism.

    The result is a word over the level-``level`` strand meridians
    (symbols ``x<level>.<strand>``).

    >>> str(artin_image(b_unknot(3), 1))
    'x1.1 x1.2 x1.3 x1.2^-1 x1.1^-1'
    >>> str(artin_image(b_unknot(3), 3))
    'x1.2'
    """
    if not 1 <= k <= b.strands:
        raise StrandOutOfRange(f"strand {k} outside 1..{b.strands}")
    letters: list[tuple[int, int]] = [(k, 1)]
    for index, sign in b.letters:
        image: list[tuple[int, int]] = []
        for strand, e in letters:
            piece = _gen_image(strand, index, sign)
            if e == -1:
                piece = [(s, -t) for s, t in reversed(piece)]
            image.extend(piece)
        letters = _reduce_pairs(image)
    return FreeWord(tuple((Symbol.x(level, strand), sign) for strand, sign in letters))


def b_unknot(n: int) -> BraidWord:
    """The sweep braid sigma_1 sigma_2 ... sigma_{n-1}, whose closure is unknotted."""
    return BraidWord(n, tuple((i, 1) for i in range(1, n)))


def full_twist(n: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n, the full twist generating the braid group's center."""
    return BraidWord(n, b_unknot(n).letters * n)


def braid_mirror(b: BraidWord) -> BraidWord:
    """Flip the sign of every letter, keeping the order."""
    return BraidWord(b.strands, tuple((i, -s) for i, s in b.letters))


def braid_exponent_sum(b: BraidWord) -> int:
    """Sum of letter signs (the writhe of the braid diagram)."""
    return sum(sign for _, sign in b.letters)


# Recorded geometric rows: braids whose closures are knots and whose
# complements, drilled along the check curves, were measured to be
# hyperbolic.  Volumes are reference data and print verbatim; nothing in
# this package computes them.
_TABLE1: dict[tuple[int, int], tuple[str, str]] = {
    (3, 1): ("n=3: -1 2", "4.05"),
    (3, 2): ("n=3: -1 -1 -1 2", "5.97"),
    (4, 1): ("n=4: -1 2 3", "4.85"),
    (4, 2): ("n=4: -1 2 -3", "7.51"),
    (5, 1): ("n=5: -1 2 3 4", "5.08"),
    (5, 2): ("n=5: -1 -2 3 4", "5.90"),
    (5, 3): ("n=5: -1 2 -3 4", "11.2"),
}


def table1_braid(n: int, variant: int) -> tuple[BraidWord, Decimal]:
    """Recorded braid and reference volume for the row (n, variant)."""
    row = _TABLE1.get((n, variant))
    if row is None:
        raise UnknownRow(f"no recorded row for strands={n} variant={variant}")
    text, volume = row
    return parse_braid(text), Decimal(volume)


def table1_rows() -> list[tuple[int, int, BraidWord, Decimal]]:
    """All recorded rows in (strands, variant) order."""
    rows = []
    for (n, variant), (text, volume) in sorted(_TABLE1.items()):
        rows.append((n, variant, parse_braid(text), Decimal(volume)))
    return rows


def format_braid(b: BraidWord) -> str:
    head = f"n={b.strands}:"
    if not b.letters:
        return head
    return head + " " + " ".join(str(index * sign) for index, sign in b.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse ``n=<strands>: g1 g2 ...`` where g denotes sigma_|g| with g's sign.

    >>> str(parse_braid("n=3: -1 2"))
    'n=3: -1 2'
    """
    head, sep, rest = text.strip().partition(":")
    if not sep or not head.startswith("n="):
        raise ParseError("braid text must start with 'n=<strands>:'", text.strip(), 1)
    try:
        strands = int(head[2:])
    except ValueError:
        raise ParseError("bad strand count", head, 1) from None
    letters: list[tuple[int, int]] = []
    for position, token in enumerate(rest.split(), start=2):
        try:
            value = int(token)
        except ValueError:
            raise ParseError("braid letters must be integers", token, position) from None
        if value == 0:
            raise ParseError("0 is not a braid letter", token, position)
        letters.append((abs(value), 1 if value > 0 else -1))
    try:
        return BraidWord(strands, tuple(letters))
    except (StrandOutOfRange, ValueError) as exc:
        raise ParseError(str(exc), text.strip(), 1) from exc
