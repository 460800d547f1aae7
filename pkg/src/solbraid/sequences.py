"""Defining sequences of solenoids and their homeomorphism invariant.

A solenoid is the inverse limit of solid tori, each wrapped n_i times in
the previous one; it is determined by the sequence {n_i}.  This package
handles eventually periodic sequences only, stored as a finite prefix
plus a repeating cycle.  The all-ones sequence is the circle.

Two solenoids are homeomorphic exactly when, for every prime p, the
total number of times p divides the sequence entries agrees whenever
either count is infinite; finitely many occurrences can always be
traded away by re-coordinatizing the leading tori.  ``multiplicities``
computes the count profile and ``homeomorphic`` compares two of them.

Sequences print as ``p1,p2,... | c1,c2,...`` with the prefix before the
bar, e.g. ``| 2`` for the dyadic solenoid and ``2,3 | 5`` for prefix
(2, 3) with cycle (5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import ParseError

__all__ = [
    "DefiningSequence",
    "prime_factors",
    "normalize",
    "multiplicities",
    "homeomorphic",
    "parse_sequence",
    "format_sequence",
]


@dataclass(frozen=True)
class DefiningSequence:
    """An eventually periodic sequence of winding numbers, all >= 1."""

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        for entry in self.prefix + self.cycle:
            if not isinstance(entry, int) or entry < 1:
                raise ValueError(f"entries must be integers >= 1, got {entry!r}")

    def entry(self, i: int) -> int:
        """The i-th winding number, 1-based."""
        if i < 1:
            raise ValueError("levels are numbered from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.cycle[(i - len(self.prefix) - 1) % len(self.cycle)]

    @property
    def is_circle(self) -> bool:
        """True when the tail is all ones, i.e. the solenoid is the circle."""
        return all(c == 1 for c in self.cycle)

    def __str__(self) -> str:
        return format_sequence(self)


def prime_factors(n: int) -> list[int]:
    """Prime factorization with multiplicity, ascending; 1 gives [].

    >>> prime_factors(12)
    [2, 2, 3]
    """
    if n < 1:
        raise ValueError("factorization needs n >= 1")
    factors: list[int] = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def normalize(s: DefiningSequence) -> DefiningSequence:
    """Canonical form: every entry prime, ones dropped, circle collapsed.

    Entries are expanded into their prime factors in ascending order.  A
    cycle whose entries are all 1 means the tail is trivial, so the
    whole sequence collapses to the canonical circle representation.

    >>> str(normalize(DefiningSequence((1, 2, 1), (3,))))
    '2 | 3'
    >>> str(normalize(DefiningSequence((4,), (6,))))
    '2,2 | 2,3'
    >>> normalize(DefiningSequence((5,), (1,))).is_circle
    True
    """
    cycle: list[int] = []
    for entry in s.cycle:
        cycle.extend(prime_factors(entry))
    if not cycle:
        return DefiningSequence((), (1,))
    prefix: list[int] = []
    for entry in s.prefix:
        prefix.extend(prime_factors(entry))
    return DefiningSequence(tuple(prefix), tuple(cycle))


def multiplicities(s: DefiningSequence) -> dict[int, int | float]:
    """Prime -> total occurrence count over the sequence, ``math.inf`` if unbounded.

    A prime dividing some cycle entry occurs infinitely often; otherwise
    its occurrences all lie in the prefix and are counted with
    multiplicity.  Primes that never occur are absent from the result.

    >>> multiplicities(parse_sequence("2,4,6,8,5 | 3"))
    {2: 7, 3: inf, 5: 1}
    """
    counts: dict[int, int | float] = {}
    infinite: set[int] = set()
    for entry in s.cycle:
        infinite.update(prime_factors(entry))
    for entry in s.prefix:
        for p in prime_factors(entry):
            if p not in infinite:
                counts[p] = counts.get(p, 0) + 1
    for p in infinite:
        counts[p] = math.inf
    return dict(sorted(counts.items()))


def homeomorphic(s1: DefiningSequence, s2: DefiningSequence) -> bool:
    """Whether the two solenoids are homeomorphic.

    True exactly when the multiplicity profiles agree at every prime
    where either side is infinite; finite counts never obstruct.

    >>> homeomorphic(parse_sequence("2,3 | 6"), parse_sequence("| 6"))
    True
    >>> homeomorphic(parse_sequence("| 2"), parse_sequence("| 3"))
    False
    """
    m1 = multiplicities(s1)
    m2 = multiplicities(s2)
    inf1 = {p for p, m in m1.items() if m == math.inf}
    inf2 = {p for p, m in m2.items() if m == math.inf}
    return inf1 == inf2


def format_sequence(s: DefiningSequence) -> str:
    cycle = ",".join(str(c) for c in s.cycle)
    if not s.prefix:
        return f"| {cycle}"
    return ",".join(str(p) for p in s.prefix) + f" | {cycle}"


def parse_sequence(text: str) -> DefiningSequence:
    """Parse ``p1,p2,... | c1,c2,...``; the prefix may be empty.

    >>> parse_sequence("| 2")
    DefiningSequence(prefix=(), cycle=(2,))
    """
    left, sep, right = text.partition("|")
    if not sep:
        raise ParseError("sequence text needs '|' between prefix and cycle", text.strip(), 1)

    def entries(part: str, what: str) -> tuple[int, ...]:
        part = part.strip()
        if not part:
            return ()
        out = []
        for position, token in enumerate(part.split(","), start=1):
            token = token.strip()
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"{what} entries must be integers", token, position) from None
            if value < 1:
                raise ParseError(f"{what} entries must be >= 1", token, position)
            out.append(value)
        return tuple(out)

    prefix = entries(left, "prefix")
    cycle = entries(right, "cycle")
    if not cycle:
        raise ParseError("cycle must be nonempty", text.strip(), 1)
    return DefiningSequence(prefix, cycle)
