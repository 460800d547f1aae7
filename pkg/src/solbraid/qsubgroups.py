"""Subgroups of the rationals attached to solenoid defining sequences.

The first Cech cohomology of a solenoid is the additive subgroup of Q
generated by the reciprocals of the partial products of its defining
sequence.  Such a subgroup containing 1 is pinned down by a height
descriptor: for each prime p, the supremum k_p of e+1 over admissible
denominator exponents e; so 1/p^e belongs exactly when e < k_p.  Only
heights k >= 2 (or infinite) are stored; absent primes have height 1.

Two of these subgroups are abstractly isomorphic exactly when they
agree on which primes have infinite height: any finite heights can be
matched by scaling.  Rationals are stdlib ``fractions.Fraction`` values
and are always in lowest terms.

``limit_member`` deliberately tests membership by dividing the
denominator into actual partial products of the sequence, stopping when
a full pass of the cycle makes no progress.  It never looks at heights,
so it serves as an independent cross-check of ``q_member`` composed
with ``heights_from_sequence``.

Descriptors print as comma-separated ``p:k`` pairs with ``inf`` for an
infinite height, e.g. ``2:inf,3:5``; the trivial descriptor prints as
the empty string.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .sequences import DefiningSequence, multiplicities, prime_factors
from .words import ParseError

__all__ = [
    "HeightDescriptor",
    "heights_from_sequence",
    "sequence_from_heights",
    "q_member",
    "limit_member",
    "q_isomorphic",
    "shift_multiplier",
    "parse_heights",
    "format_heights",
    "parse_rational",
]


@dataclass(frozen=True)
class HeightDescriptor:
    """Finite map prime -> height; only heights >= 2 or inf are stored."""

    entries: tuple[tuple[int, int | float], ...] = ()

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.entries]
        if primes != sorted(set(primes)):
            raise ValueError("descriptor primes must be strictly increasing")
        for p, k in self.entries:
            if prime_factors(p) != [p]:
                raise ValueError(f"{p} is not prime")
            if k != math.inf and (not isinstance(k, int) or k < 2):
                raise ValueError(f"stored heights must be >= 2 or inf, got {k!r}")

    @classmethod
    def from_map(cls, mapping: dict[int, int | float]) -> "HeightDescriptor":
        """Build from a prime -> height map; height-1 entries are dropped."""
        return cls(tuple(sorted((p, k) for p, k in mapping.items() if k != 1)))

    def height(self, p: int) -> int | float:
        for prime, k in self.entries:
            if prime == p:
                return k
        return 1

    def infinite_primes(self) -> frozenset[int]:
        return frozenset(p for p, k in self.entries if k == math.inf)

    def __str__(self) -> str:
        return format_heights(self)


def heights_from_sequence(s: DefiningSequence) -> HeightDescriptor:
    """Heights of the subgroup of Q carried by the sequence: k_p = 1 + multiplicity.

    >>> format_heights(heights_from_sequence(DefiningSequence((2, 4, 6, 8, 5), (3,))))
    '2:8,3:inf,5:2'
    """
    mult = multiplicities(s)
    return HeightDescriptor.from_map(
        {p: (math.inf if m == math.inf else m + 1) for p, m in mult.items()}
    )


def sequence_from_heights(h: HeightDescriptor) -> DefiningSequence:
    """A defining sequence realizing the descriptor.

    Each finite-height prime contributes k_p - 1 prefix entries; each
    infinite-height prime occurs once per cycle period.  The empty
    descriptor yields the circle.  Only the round trip is canonical:
    ``heights_from_sequence(sequence_from_heights(h)) == h``.

    >>> str(sequence_from_heights(parse_heights("2:3,3:inf")))
    '2,2 | 3'
    """
    prefix: list[int] = []
    cycle: list[int] = []
    for p, k in h.entries:
        if k == math.inf:
            cycle.append(p)
        else:
            prefix.extend([p] * (k - 1))
    return DefiningSequence(tuple(prefix), tuple(cycle) if cycle else (1,))


def q_member(h: HeightDescriptor, r: Fraction) -> bool:
    """Whether r lies in the subgroup of Q described by h.

    Membership is a condition on the denominator alone: each prime p
    dividing it to the power e needs e < k_p.

    >>> q_member(parse_heights("2:inf"), Fraction(5, 32))
    True
    >>> q_member(parse_heights("2:inf"), Fraction(1, 3))
    False
    """
    d = r.denominator
    for p in set(prime_factors(d)):
        e = 0
        dd = d
        while dd % p == 0:
            e += 1
            dd //= p
        if not e < h.height(p):
            return False
    return True


def limit_member(s: DefiningSequence, r: Fraction) -> bool:
    """Whether the denominator of r divides some partial product of s.

    Walks the sequence dividing out common factors; a full cycle pass
    with no progress proves the remaining denominator can never clear.
    This route is independent of the height machinery on purpose.

    >>> limit_member(DefiningSequence((), (2,)), Fraction(3, 4))
    True
    >>> limit_member(DefiningSequence((), (2,)), Fraction(1, 6))
    False
    """
    d = r.denominator
    if d == 1:
        return True
    for n in s.prefix:
        d //= math.gcd(d, n)
        if d == 1:
            return True
    while True:
        before = d
        for n in s.cycle:
            d //= math.gcd(d, n)
            if d == 1:
                return True
        if d == before:
            return False


def q_isomorphic(h1: HeightDescriptor, h2: HeightDescriptor) -> bool:
    """Abstract isomorphism of the two subgroups of Q.

    Finite heights can always be traded off by multiplying by a
    rational, so only the infinite-height primes matter.
    """
    return h1.infinite_primes() == h2.infinite_primes()


def shift_multiplier(s: DefiningSequence, k: int) -> Fraction:
    """The partial product n_1 * ... * n_{k-1} relating coordinates k and 1.

    >>> shift_multiplier(DefiningSequence((), (2,)), 4)
    Fraction(8, 1)
    """
    if k < 1:
        raise ValueError("coordinates are numbered from 1")
    product = 1
    for i in range(1, k):
        product *= s.entry(i)
    return Fraction(product)


def format_heights(h: HeightDescriptor) -> str:
    return ",".join(
        f"{p}:inf" if k == math.inf else f"{p}:{k}" for p, k in h.entries
    )


def parse_heights(text: str) -> HeightDescriptor:
    """Parse ``2:inf,3:5``; the empty string is the trivial descriptor."""
    text = text.strip()
    if not text:
        return HeightDescriptor()
    mapping: dict[int, int | float] = {}
    for position, token in enumerate(text.split(","), start=1):
        token = token.strip()
        prime_text, sep, height_text = token.partition(":")
        if not sep:
            raise ParseError("descriptor entries look like p:k", token, position)
        try:
            p = int(prime_text)
        except ValueError:
            raise ParseError("descriptor prime must be an integer", token, position) from None
        if height_text == "inf":
            k: int | float = math.inf
        else:
            try:
                k = int(height_text)
            except ValueError:
                raise ParseError("descriptor height must be an integer or inf", token, position) from None
        if p in mapping:
            raise ParseError("descriptor prime repeated", token, position)
        mapping[p] = k
    try:
        return HeightDescriptor.from_map(mapping)
    except ValueError as exc:
        raise ParseError(str(exc), text, 1) from exc


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), text.strip(), 1) from exc
