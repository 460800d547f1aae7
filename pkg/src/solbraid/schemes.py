"""Embedding schemes: how a solenoid sits inside the 3-sphere.

A solenoid with defining sequence {n_i} is realized as a nested
intersection of solid tori, torus i winding n_i times through torus
i-1 as a closed braid.  A scheme records, per level, the braid on n_i
strands and a framing word expressing the level's longitude in terms
of the previous longitude and the strand meridians.  The first torus
is always standardly embedded; all knotting enters through the level
braids.

Framing words are written over the placeholder alphabet X0..Xn.  Xk
stands for the k-th strand meridian of the level, and X0 abbreviates
the full boundary product X1 X2 ... Xn; it is expanded whenever the
word is used.  The canonical unknotted framing is X0 X1^-n, whose
total exponent after expansion is zero (a nullhomologous longitude).

Levels are stored like defining sequences: a finite run of level
specs followed by a repeating cycle.  An empty cycle makes a finite
scheme; asking past its end raises LevelUnavailable.

Scheme text format: a `sequence:` header line, then one `level <i>:`
line per level with the braid and framing separated by ` ; `, with a
`repeat:` line introducing the cycle levels:

    sequence: | 2
    repeat:
    level 1: braid n=2: -1 ; framing X0 X1^-2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braids import BraidWord, b_unknot, braid_mirror, closure_components, format_braid, parse_braid, table1_braid
from .sequences import DefiningSequence, format_sequence, normalize, parse_sequence
from .words import FreeWord, ParseError, Symbol, gen, parse_word, replace, total_exponent

__all__ = [
    "LevelUnavailable",
    "UnsupportedStrandCount",
    "LevelSpec",
    "EmbeddingScheme",
    "ChoiceBits",
    "unknotted_scheme",
    "trefoil_scheme",
    "geometry_scheme",
    "merge_to_avoid_2",
    "Diagnostic",
    "validate_scheme",
    "parse_scheme",
    "format_scheme",
    "parse_choices",
    "format_choices",
]


class LevelUnavailable(LookupError):
    """A level index past the end of a finite scheme (or below 1)."""

    def __str__(self) -> str:
        return self.args[0] if self.args else "level unavailable"


class UnsupportedStrandCount(ValueError):
    """A strand count with no recorded geometric braid."""


@dataclass(frozen=True)
class LevelSpec:
    """One level of a scheme: strand count, braid, framing word."""

    strands: int
    braid: BraidWord
    framing: FreeWord

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a level needs at least one strand")
        if self.braid.strands != self.strands:
            raise ValueError(
                f"braid is on {self.braid.strands} strands, level has {self.strands}"
            )
        for sym, _ in self.framing.letters:
            if sym.kind != "X" or sym.strand > self.strands:
                raise ValueError(
                    f"framing letter {sym} outside alphabet X0..X{self.strands}"
                )

    def expanded_framing(self) -> FreeWord:
        """The framing with X0 replaced by the product X1 ... Xn."""
        product = FreeWord(tuple((Symbol.X(k), 1) for k in range(1, self.strands + 1)))
        return replace(self.framing, {Symbol.X(0): product})

    def instantiated_framing(self, level: int) -> FreeWord:
        """The framing as a word over the level's strand meridians.

        >>> spec = LevelSpec(2, BraidWord(2, ((1, -1),)), parse_word("X0 X1^-2"))
        >>> str(spec.instantiated_framing(3))
        'x3.1 x3.2 x3.1^-2'
        """
        images = {Symbol.X(k): gen(Symbol.x(level, k)) for k in range(1, self.strands + 1)}
        return replace(self.expanded_framing(), images)

    def framing_exponent(self) -> int:
        return total_exponent(self.expanded_framing())


@dataclass(frozen=True)
class EmbeddingScheme:
    """Per-level embedding data aligned with a defining sequence."""

    sequence: DefiningSequence
    level_prefix: tuple[LevelSpec, ...] = ()
    level_cycle: tuple[LevelSpec, ...] = ()

    def level_spec(self, i: int) -> LevelSpec:
        """The level-i spec, 1-based; cycles repeat forever."""
        if i < 1:
            raise LevelUnavailable("levels are numbered from 1")
        if i <= len(self.level_prefix):
            return self.level_prefix[i - 1]
        if not self.level_cycle:
            raise LevelUnavailable(
                f"finite scheme has only {len(self.level_prefix)} levels, asked for {i}"
            )
        return self.level_cycle[(i - len(self.level_prefix) - 1) % len(self.level_cycle)]

    def __str__(self) -> str:
        return format_scheme(self)


def _unknotted_level(n: int) -> LevelSpec:
    framing = FreeWord.from_syllables([(Symbol.X(0), 1), (Symbol.X(1), -n)])
    return LevelSpec(n, braid_mirror(b_unknot(n)), framing)


def unknotted_scheme(s: DefiningSequence) -> EmbeddingScheme:
    """The standard unknotted embedding over the normalized sequence.

    Every level uses the mirrored sweep braid (each closure an unknot)
    and the framing X0 X1^-n.  The circle gets a single trivial
    one-strand cycle level.

    >>> print(unknotted_scheme(DefiningSequence((), (2,))))
    sequence: | 2
    repeat:
    level 1: braid n=2: -1 ; framing X0 X1^-2
    """
    ns = normalize(s)
    return EmbeddingScheme(
        ns,
        tuple(_unknotted_level(n) for n in ns.prefix),
        tuple(_unknotted_level(n) for n in ns.cycle),
    )


def trefoil_scheme() -> EmbeddingScheme:
    """The knotted dyadic embedding: every level a trefoil closed braid.

    >>> print(trefoil_scheme())
    sequence: | 2
    repeat:
    level 1: braid n=2: -1 -1 -1 ; framing X0^3 X1^-6
    """
    braid = BraidWord(2, ((1, -1),) * 3)
    framing = FreeWord.from_syllables([(Symbol.X(0), 3), (Symbol.X(1), -6)])
    return EmbeddingScheme(DefiningSequence((), (2,)), (), (LevelSpec(2, braid, framing),))


@dataclass(frozen=True)
class ChoiceBits:
    """An eventually periodic bit sequence, one bit per level."""

    prefix: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.cycle:
            raise ValueError("choice cycle must be nonempty")
        for b in self.prefix + self.cycle:
            if b not in (0, 1):
                raise ValueError(f"choice bits must be 0 or 1, got {b!r}")

    def bit(self, i: int) -> int:
        if i < 1:
            raise ValueError("levels are numbered from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.cycle[(i - len(self.prefix) - 1) % len(self.cycle)]

    def __str__(self) -> str:
        return format_choices(self)


def format_choices(c: ChoiceBits) -> str:
    cycle = "".join(str(b) for b in c.cycle)
    if not c.prefix:
        return cycle
    return "".join(str(b) for b in c.prefix) + "|" + cycle


def parse_choices(text: str) -> ChoiceBits:
    """Parse a bit string such as ``01`` (pure cycle) or ``1|0`` (prefix | cycle)."""
    text = text.strip()
    left, sep, right = text.partition("|")
    prefix_text, cycle_text = (left, right) if sep else ("", left)
    for position, ch in enumerate(prefix_text + cycle_text, start=1):
        if ch not in "01":
            raise ParseError("choice bits must be 0 or 1", ch, position)
    if not cycle_text:
        raise ParseError("choice cycle must be nonempty", text, 1)
    return ChoiceBits(tuple(int(b) for b in prefix_text), tuple(int(b) for b in cycle_text))


def geometry_scheme(s: DefiningSequence, choices: ChoiceBits) -> EmbeddingScheme:
    """An embedding built from the recorded geometric braids.

    Each level takes the recorded braid for its strand count, variant 1
    for bit 0 and variant 2 for bit 1, with the zero-exponent framing
    X0 X1^-n.  Distinct choice sequences give schemes differing in some
    level's braid.  Strand counts must all be in the recorded range;
    apply merge_to_avoid_2 first for sequences with entries below 3.

    The level data is laid out over a common representation: the prefix
    covers both prefixes, the cycle length is the least common multiple
    of the two cycle lengths, and the returned scheme carries the
    sequence re-expanded to that shape.
    """
    for entry in s.prefix + s.cycle:
        if entry not in (3, 4, 5):
            raise UnsupportedStrandCount(
                f"no recorded braids on {entry} strands; merge_to_avoid_2 first"
            )
    P = max(len(s.prefix), len(choices.prefix))
    C = math.lcm(len(s.cycle), len(choices.cycle))
    aligned = DefiningSequence(
        tuple(s.entry(i) for i in range(1, P + 1)),
        tuple(s.entry(i) for i in range(P + 1, P + C + 1)),
    )
    levels = []
    for i in range(1, P + C + 1):
        n = s.entry(i)
        braid, _ = table1_braid(n, 1 + choices.bit(i))
        framing = FreeWord.from_syllables([(Symbol.X(0), 1), (Symbol.X(1), -n)])
        levels.append(LevelSpec(n, braid, framing))
    return EmbeddingScheme(aligned, tuple(levels[:P]), tuple(levels[P:]))


def merge_to_avoid_2(s: DefiningSequence) -> DefiningSequence:
    """Merge consecutive entries until every entry is at least 3.

    Entries are grouped greedily left to right, closing a group as soon
    as its product reaches 3.  A cycle whose whole product is 2 is
    unrolled once so the doubled pass groups to a single entry 4.  A
    prefix remainder of 2 absorbs the first cycle entry into the prefix
    and the cycle rotates by one.  The result is homeomorphic to the
    input; a circle (cycle product 1) cannot be merged anywhere.

    >>> str(merge_to_avoid_2(parse_sequence("| 2")))
    '| 4'
    >>> str(merge_to_avoid_2(parse_sequence("2 | 3")))
    '6 | 3'
    >>> str(merge_to_avoid_2(parse_sequence("| 5")))
    '| 5'
    """

    def group(entries: tuple[int, ...]) -> tuple[list[int], int]:
        groups: list[int] = []
        acc = 1
        for n in entries:
            acc *= n
            if acc >= 3:
                groups.append(acc)
                acc = 1
        return groups, acc

    cycle_groups, cycle_left = group(s.cycle)
    if not cycle_groups:
        if cycle_left == 1:
            raise ValueError("cannot merge a circle tail above 2")
        cycle_groups, cycle_left = group(s.cycle * 2)
    if cycle_left > 1:
        cycle_groups[-1] *= cycle_left
    prefix_groups, prefix_left = group(s.prefix)
    if prefix_left > 1:
        prefix_groups.append(prefix_left * cycle_groups[0])
        cycle_groups = cycle_groups[1:] + cycle_groups[:1]
    return DefiningSequence(tuple(prefix_groups), tuple(cycle_groups))


@dataclass(frozen=True)
class Diagnostic:
    """A validation finding: severity is ``error`` or ``warning``."""

    severity: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity} {self.where}: {self.message}"


def validate_scheme(e: EmbeddingScheme) -> list[Diagnostic]:
    """Check a scheme's side conditions; findings, never exceptions.

    Errors: a level braid whose closure is a link (not a knot), strand
    counts disagreeing with the sequence, level lists misaligned with
    the sequence representation.  Warning: a framing word with nonzero
    total exponent after X0 expansion (a legal but non-nullhomologous
    longitude).
    """
    out: list[Diagnostic] = []
    P = len(e.level_prefix)
    if P != len(e.sequence.prefix):
        out.append(Diagnostic(
            "error", "scheme",
            f"{P} prefix levels for {len(e.sequence.prefix)} prefix entries",
        ))
    cycle_aligned = len(e.level_cycle) == len(e.sequence.cycle)
    if e.level_cycle and not cycle_aligned:
        out.append(Diagnostic(
            "error", "scheme",
            f"{len(e.level_cycle)} cycle levels for {len(e.sequence.cycle)} cycle entries",
        ))
    labeled = [(i, f"level {i}", spec) for i, spec in enumerate(e.level_prefix, start=1)]
    labeled += [
        (P + j, f"level {P + j} (cycle)", spec)
        for j, spec in enumerate(e.level_cycle, start=1)
    ]
    for i, where, spec in labeled:
        components = closure_components(spec.braid)
        if components != 1:
            out.append(Diagnostic(
                "error", where, f"closed braid has {components} components, need a knot"
            ))
        in_prefix = i <= P
        if (in_prefix and i <= len(e.sequence.prefix)) or (not in_prefix and cycle_aligned):
            expected = e.sequence.entry(i)
            if spec.strands != expected:
                out.append(Diagnostic(
                    "error", where, f"{spec.strands} strands but sequence entry is {expected}"
                ))
        exponent = spec.framing_exponent()
        if exponent != 0:
            out.append(Diagnostic(
                "warning", where, f"framing total exponent {exponent} != 0"
            ))
    return out


def format_scheme(e: EmbeddingScheme) -> str:
    lines = [f"sequence: {format_sequence(e.sequence)}"]
    counter = 0
    for spec in e.level_prefix:
        counter += 1
        lines.append(f"level {counter}: braid {format_braid(spec.braid)} ; framing {spec.framing}")
    if e.level_cycle:
        lines.append("repeat:")
        for spec in e.level_cycle:
            counter += 1
            lines.append(f"level {counter}: braid {format_braid(spec.braid)} ; framing {spec.framing}")
    return "\n".join(lines)


def parse_scheme(text: str) -> EmbeddingScheme:
    """Parse the scheme text format; inverse of ``format_scheme``."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith("sequence:"):
        raise ParseError("scheme text must open with a 'sequence:' line", lines[0] if lines else "", 1)
    sequence = parse_sequence(lines[0][len("sequence:"):].strip())
    prefix: list[LevelSpec] = []
    cycle: list[LevelSpec] = []
    in_cycle = False
    counter = 0
    for lineno, line in enumerate(lines[1:], start=2):
        if line == "repeat:":
            if in_cycle:
                raise ParseError("duplicate 'repeat:' line", line, lineno)
            in_cycle = True
            continue
        counter += 1
        head, sep, body = line.partition(":")
        if not sep or head != f"level {counter}":
            raise ParseError(f"expected 'level {counter}:'", line, lineno)
        braid_part, sep, framing_part = body.partition(";")
        braid_part = braid_part.strip()
        framing_part = framing_part.strip()
        if not sep or not braid_part.startswith("braid ") or not framing_part.startswith("framing "):
            raise ParseError("level line needs 'braid <braid> ; framing <word>'", line, lineno)
        braid = parse_braid(braid_part[len("braid "):])
        framing = parse_word(framing_part[len("framing "):])
        try:
            spec = LevelSpec(braid.strands, braid, framing)
        except ValueError as exc:
            raise ParseError(str(exc), line, lineno) from exc
        (cycle if in_cycle else prefix).append(spec)
    return EmbeddingScheme(sequence, tuple(prefix), tuple(cycle))
