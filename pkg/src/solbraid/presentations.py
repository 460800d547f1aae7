"""Finite presentations of truncated solenoid complement groups.

Cutting a nested-torus embedding off after L levels leaves a knot
complement whose fundamental group has a presentation read directly
off the levels: each level contributes conjugation relators saying the
previous longitude conjugates strand meridians by the level's braid
automorphism, and consecutive levels are glued by a meridian product
relator and a framed longitude relator.  The first longitude is
trivial, which is the single-letter relator t0.

Relators follow one orientation convention everywhere: the equation
A = B is stored as the word A B^-1, reduced and cyclically reduced.

The rest of the module is simplification: the two-strand normal form
that renames generators to the s/z families, a conservative
deterministic Tietze reducer, and Abelianization through exact integer
Smith normal form.

Presentation text format: a `gens:` line, one `rel:` line per relator,
and an optional `meridian:`/`longitude:` pair for the peripheral
words of the last level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braids import BraidWord, artin_image
from .schemes import EmbeddingScheme, LevelUnavailable
from .words import (
    FreeWord,
    ParseError,
    Symbol,
    cyclically_reduce,
    exponent_sum,
    gen,
    parse_symbol,
    parse_word,
    reduce,
    replace,
)

__all__ = [
    "NotDyadicShape",
    "GroupPresentation",
    "AbelianInvariants",
    "Elimination",
    "piece_presentation",
    "truncate",
    "dyadic_form",
    "dyadic_form_with_map",
    "tietze_reduce",
    "tietze_reduce_with_trace",
    "abelianize",
    "smith_normal_form",
    "h1_scaling",
    "parse_presentation",
    "format_presentation",
]


class NotDyadicShape(ValueError):
    """The presentation is not a two-strand truncation layout."""


@dataclass(frozen=True)
class GroupPresentation:
    """Generators, relators, and optional peripheral (meridian, longitude).

    Relators are normalized on construction: freely reduced, then
    cyclically reduced.  Peripheral words are genuine group elements,
    not conjugacy classes, so they are only freely reduced.
    """

    generators: tuple[Symbol, ...]
    relators: tuple[FreeWord, ...] = ()
    peripheral: tuple[FreeWord, FreeWord] | None = None

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generators")
        known = set(self.generators)
        object.__setattr__(
            self, "relators", tuple(cyclically_reduce(r) for r in self.relators)
        )
        for r in self.relators:
            stray = r.symbols() - known
            if stray:
                raise ValueError(f"relator uses unknown generator {min(stray)}")
        if self.peripheral is not None:
            meridian, longitude = (reduce(w) for w in self.peripheral)
            object.__setattr__(self, "peripheral", (meridian, longitude))
            for w in (meridian, longitude):
                stray = w.symbols() - known
                if stray:
                    raise ValueError(f"peripheral word uses unknown generator {min(stray)}")

    def __str__(self) -> str:
        return format_presentation(self)


def piece_presentation(b: BraidWord) -> GroupPresentation:
    """The group of one solid-torus piece: a closed-braid complement.

    Generators are the outer longitude t0 and one meridian per strand;
    each relator conjugates a meridian by t0 into its braid image.

    >>> from .braids import parse_braid
    >>> print(piece_presentation(parse_braid("n=2: -1")))
    gens: t0 x1.1 x1.2
    rel: t0^-1 x1.1 t0 x1.2^-1
    rel: t0^-1 x1.2 t0 x1.2^-1 x1.1^-1 x1.2
    meridian: x1.1
    longitude: t0
    """
    t = Symbol.t(0)
    gens = (t,) + tuple(Symbol.x(1, k) for k in range(1, b.strands + 1))
    relators = []
    for k in range(1, b.strands + 1):
        head = ((t, -1), (Symbol.x(1, k), 1), (t, 1))
        relators.append(reduce(FreeWord(head + artin_image(b, k).inverse().letters)))
    return GroupPresentation(gens, tuple(relators), (gen(Symbol.x(1, 1)), gen(t)))


def truncate(e: EmbeddingScheme, L: int) -> GroupPresentation:
    """Present the complement of the scheme's level-L solid torus.

    Generators: t0..t(L-1) and the strand meridians of levels 1..L.
    Relators, in order: t0; the conjugation relators of each level;
    the framed longitude gluings t_i = t_{i-1}^{n_i} v_i; the meridian
    gluings x_{i.1} = x_{i+1.1} ... x_{i+1.n}.  The peripheral pair is
    the level-L meridian and the framed level-L longitude.

    >>> from .sequences import DefiningSequence
    >>> from .schemes import unknotted_scheme
    >>> print(truncate(unknotted_scheme(DefiningSequence((), (2,))), 1))
    gens: t0 x1.1 x1.2
    rel: t0
    rel: t0^-1 x1.1 t0 x1.2^-1
    rel: t0^-1 x1.2 t0 x1.2^-1 x1.1^-1 x1.2
    meridian: x1.1
    longitude: t0^2 x1.1 x1.2 x1.1^-2
    """
    if L < 1:
        raise LevelUnavailable("truncation needs at least one level")
    specs = [e.level_spec(i) for i in range(1, L + 1)]
    t = [Symbol.t(i) for i in range(L)]
    gens = tuple(t) + tuple(
        Symbol.x(i, k)
        for i in range(1, L + 1)
        for k in range(1, specs[i - 1].strands + 1)
    )
    relators = [gen(t[0])]
    for i in range(1, L + 1):
        spec = specs[i - 1]
        for k in range(1, spec.strands + 1):
            head = ((t[i - 1], -1), (Symbol.x(i, k), 1), (t[i - 1], 1))
            image = artin_image(spec.braid, k, level=i)
            relators.append(reduce(FreeWord(head + image.inverse().letters)))
    for i in range(1, L):
        n_i = specs[i - 1].strands
        v = specs[i - 1].instantiated_framing(i)
        word = FreeWord(((t[i], 1),) + v.inverse().letters + ((t[i - 1], -1),) * n_i)
        relators.append(reduce(word))
    for i in range(1, L):
        n_next = specs[i].strands
        product = tuple((Symbol.x(i + 1, k), 1) for k in range(1, n_next + 1))
        word = FreeWord(((Symbol.x(i, 1), 1),) + FreeWord(product).inverse().letters)
        relators.append(reduce(word))
    n_L = specs[L - 1].strands
    v_L = specs[L - 1].instantiated_framing(L)
    longitude = reduce(FreeWord(((t[L - 1], 1),) * n_L + v_L.letters))
    return GroupPresentation(gens, tuple(relators), (gen(Symbol.x(L, 1)), longitude))


def _dyadic_mapping(L: int) -> dict[Symbol, FreeWord]:
    # t_i -> s_i; x_{i.1} -> z_i; x_{i.2} -> z_i^-1 z_{i-1}, where z_0
    # names the reinstated product x_{1.1} x_{1.2}.
    mapping: dict[Symbol, FreeWord] = {}
    for i in range(L):
        mapping[Symbol.t(i)] = gen(Symbol.s(i))
    for i in range(1, L + 1):
        mapping[Symbol.x(i, 1)] = gen(Symbol.z(i))
        mapping[Symbol.x(i, 2)] = FreeWord(((Symbol.z(i), -1), (Symbol.z(i - 1), 1)))
    return mapping


def dyadic_form_with_map(p: GroupPresentation) -> tuple[GroupPresentation, dict[Symbol, FreeWord]]:
    """Two-strand normal form plus the generator translation used.

    The translation sends each old generator to its word over the new
    ones, so homomorphism witnesses on the normal form pull back to
    the raw truncation.
    """
    L = sum(1 for g in p.generators if g.kind == "t")
    expected = [Symbol.t(i) for i in range(L)] + [
        Symbol.x(i, k) for i in range(1, L + 1) for k in (1, 2)
    ]
    if L < 1 or list(p.generators) != expected:
        raise NotDyadicShape("generators do not form a two-strand truncation")
    if len(p.relators) != 1 + 2 * L + 2 * (L - 1):
        raise NotDyadicShape("relator count does not match a two-strand truncation")
    if p.relators[0] != gen(Symbol.t(0)):
        raise NotDyadicShape("first relator must be t0")
    mapping = _dyadic_mapping(L)
    conj: list[FreeWord] = []
    for i in range(1, L + 1):
        t_prev = Symbol.t(i - 1)
        images: dict[int, FreeWord] = {}
        for k in (1, 2):
            r = p.relators[2 * (i - 1) + k]
            head = ((t_prev, -1), (Symbol.x(i, k), 1), (t_prev, 1))
            if r.letters[:3] != head:
                raise NotDyadicShape(f"level {i} strand {k} relator is not conjugation-shaped")
            image = r.inverse() * FreeWord(head)
            if any(sym.kind != "x" or sym.level != i for sym in image.symbols()):
                raise NotDyadicShape(f"level {i} strand {k} braid image leaves the level")
            images[k] = image
        boundary = FreeWord(((Symbol.x(i, 1), 1), (Symbol.x(i, 2), 1)))
        if images[1] * images[2] != boundary:
            raise NotDyadicShape(f"level {i} braid does not fix the boundary product")
        conj.append(replace(p.relators[2 * (i - 1) + 1], mapping))
    commutators = [
        FreeWord(((Symbol.s(i), -1), (Symbol.z(i), -1), (Symbol.s(i), 1), (Symbol.z(i), 1)))
        for i in range(L)
    ]
    framing = [replace(p.relators[2 * L + i], mapping) for i in range(1, L)]
    for i in range(1, L):
        glued = replace(p.relators[2 * L + (L - 1) + i], mapping)
        if glued.letters:
            raise NotDyadicShape(f"meridian gluing at level {i} does not cancel")
    gens = tuple(Symbol.s(i) for i in range(L)) + tuple(Symbol.z(i) for i in range(L + 1))
    relators = tuple(commutators) + tuple(conj) + tuple(framing) + (gen(Symbol.s(0)),)
    peripheral = None
    if p.peripheral is not None:
        peripheral = (replace(p.peripheral[0], mapping), replace(p.peripheral[1], mapping))
    return GroupPresentation(gens, relators, peripheral), mapping


def dyadic_form(p: GroupPresentation) -> GroupPresentation:
    """Rewrite a two-strand truncation in the s/z normal form.

    Second strand meridians are eliminated through the meridian
    gluings (x_{i-1.1} = x_{i.1} x_{i.2}), the survivors are renamed
    t_i -> s_i and x_{i.1} -> z_i with a fresh z_0 for the level-0
    boundary product, and each second-strand conjugation relator is
    traded for the commutator [s_i, z_i], valid because the braid
    automorphism fixes the boundary product.  Relators come out
    grouped: commutators, conjugations, framings, then s0.

    >>> from .sequences import DefiningSequence
    >>> from .schemes import unknotted_scheme
    >>> print(dyadic_form(truncate(unknotted_scheme(DefiningSequence((), (2,))), 1)))
    gens: s0 z0 z1
    rel: s0^-1 z0^-1 s0 z0
    rel: s0^-1 z1 s0 z0^-1 z1
    rel: s0
    meridian: z1
    longitude: s0^2 z0 z1^-2
    """
    return dyadic_form_with_map(p)[0]


@dataclass(frozen=True)
class Elimination:
    """One Tietze elimination: the generator and the word replacing it."""

    generator: Symbol
    replacement: FreeWord


def _cyclic_key(r: FreeWord) -> tuple:
    # Canonical form of a relator up to rotation and inversion.
    def letter_key(letter: tuple[Symbol, int]) -> tuple:
        sym, sign = letter
        return (sym.sort_key(), sign)

    def min_rotation(letters: tuple[tuple[Symbol, int], ...]) -> tuple:
        keys = [letter_key(letter) for letter in letters]
        rotations = [tuple(keys[i:] + keys[:i]) for i in range(len(keys))]
        return min(rotations)

    return min(min_rotation(r.letters), min_rotation(r.inverse().letters))


def tietze_reduce_with_trace(p: GroupPresentation) -> tuple[GroupPresentation, tuple[Elimination, ...]]:
    """Reduce and report the eliminations in the order they happened.

    Replaying the trace backwards extends any generator assignment on
    the reduced presentation to the original one.
    """
    gens = list(p.generators)
    relators = list(p.relators)
    peripheral = p.peripheral
    trace: list[Elimination] = []
    while True:
        cleaned: list[FreeWord] = []
        seen: set[tuple] = set()
        for r in relators:
            r = cyclically_reduce(r)
            if not r.letters:
                continue
            key = _cyclic_key(r)
            if key in seen:
                continue
            seen.add(key)
            cleaned.append(r)
        relators = cleaned
        candidates: dict[Symbol, list[tuple[int, int]]] = {}
        for idx, r in enumerate(relators):
            counts: dict[Symbol, int] = {}
            for sym, _ in r.letters:
                counts[sym] = counts.get(sym, 0) + 1
            for sym, c in counts.items():
                if c == 1:
                    candidates.setdefault(sym, []).append((len(r.letters), idx))
        if not candidates:
            break
        g = min(candidates)
        _, idx = min(candidates[g])
        r = relators.pop(idx)
        pos = next(j for j, (sym, _) in enumerate(r.letters) if sym == g)
        sign = r.letters[pos][1]
        rest = FreeWord(r.letters[pos + 1:] + r.letters[:pos])
        replacement = rest.inverse() if sign == 1 else rest
        images = {g: replacement}
        relators = [replace(w, images) for w in relators]
        if peripheral is not None:
            peripheral = (replace(peripheral[0], images), replace(peripheral[1], images))
        gens.remove(g)
        trace.append(Elimination(g, replacement))
    return GroupPresentation(tuple(gens), tuple(relators), peripheral), tuple(trace)


def tietze_reduce(p: GroupPresentation) -> GroupPresentation:
    """Deterministic conservative simplification.

    Repeatedly drops trivial and cyclically-duplicate relators (up to
    rotation and inversion) and eliminates any generator that some
    relator mentions exactly once, substituting its expression
    everywhere.  The lowest eligible generator goes first, taken from
    its shortest defining relator.  The group is unchanged.

    >>> z = Symbol.z
    >>> print(tietze_reduce(GroupPresentation((z(0), z(1)), (gen(z(1)),))))
    gens: z0
    """
    return tietze_reduce_with_trace(p)[0]


@dataclass(frozen=True)
class AbelianInvariants:
    """Rank and torsion chain of a finitely generated abelian group."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion factors are at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion factors must form a divisibility chain")


def _snf(M: list[list[int]], ncols: int) -> tuple[list[int], list[list[int]]]:
    # Diagonalize by unimodular row and column operations; only column
    # operations are tracked (in Q), since row j of Q is the class of
    # generator j in the quotient.
    nrows = len(M)
    Q = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    limit = min(nrows, ncols)
    t = 0
    while t < limit:
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = M[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            M[t], M[pi] = M[pi], M[t]
        if pj != t:
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            for row in Q:
                row[t], row[pj] = row[pj], row[t]
        pivot = M[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            if M[i][t]:
                q = M[i][t] // pivot
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    dirty = True
        for j in range(t + 1, ncols):
            if M[t][j]:
                q = M[t][j] // pivot
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                    for row in Q:
                        row[j] -= q * row[t]
                if M[t][j]:
                    dirty = True
        if dirty:
            continue
        witness = None
        for i in range(t + 1, nrows):
            if any(M[i][j] % pivot for j in range(t + 1, ncols)):
                witness = i
                break
        if witness is not None:
            M[t] = [a + b for a, b in zip(M[t], M[witness])]
            continue
        if pivot < 0:
            M[t] = [-a for a in M[t]]
        t += 1
    return [M[i][i] for i in range(limit)], Q


def smith_normal_form(matrix) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    >>> smith_normal_form([[2, 4], [6, 8]])
    (2, 4)
    >>> smith_normal_form([[0]])
    (0,)
    """
    rows = [list(row) for row in matrix]
    width = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != width:
            raise ValueError("matrix rows have unequal lengths")
        for v in row:
            if not isinstance(v, int):
                raise ValueError(f"matrix entries must be integers, got {v!r}")
    diag, _ = _snf(rows, width)
    return tuple(diag)


def abelianize(p: GroupPresentation) -> tuple[AbelianInvariants, dict[Symbol, tuple[int, ...]]]:
    """Invariants of the Abelianized group, plus each generator's class.

    A class vector lists the generator's coordinates in the free part
    (first ``rank`` entries) followed by one entry per torsion factor,
    reduced modulo that factor.

    >>> z = Symbol.z
    >>> abelianize(GroupPresentation((z(0),), (parse_word("z0^2"),)))[0]
    AbelianInvariants(rank=0, torsion=(2,))
    """
    n = len(p.generators)
    M = [[exponent_sum(r, g) for g in p.generators] for r in p.relators]
    diag, Q = _snf(M, n)
    effective = diag + [0] * (n - len(diag))
    free_idx = [i for i, d in enumerate(effective) if d == 0]
    tor_idx = [i for i, d in enumerate(effective) if d >= 2]
    invariants = AbelianInvariants(len(free_idx), tuple(effective[i] for i in tor_idx))
    classes: dict[Symbol, tuple[int, ...]] = {}
    for j, g in enumerate(p.generators):
        free = tuple(Q[j][i] for i in free_idx)
        torsion = tuple(Q[j][i] % effective[i] for i in tor_idx)
        classes[g] = free + torsion
    return invariants, classes


def h1_scaling(e: EmbeddingScheme, L: int) -> int:
    """The factor relating the classes of x_{L-1.1} and x_{L.1} in H1.

    Every valid scheme gives the winding number n_L: one more level
    multiplies the meridian class by how often it wraps.

    >>> from .schemes import trefoil_scheme
    >>> h1_scaling(trefoil_scheme(), 4)
    2
    """
    if L < 2:
        raise LevelUnavailable("scaling compares levels L-1 and L, so L must be >= 2")
    invariants, classes = abelianize(truncate(e, L))
    rank = invariants.rank
    v_prev = classes[Symbol.x(L - 1, 1)][:rank]
    v_last = classes[Symbol.x(L, 1)][:rank]
    factor = None
    for a, b in zip(v_prev, v_last):
        if b == 0:
            if a != 0:
                raise ValueError("lower class is not a multiple of the top class")
            continue
        candidate = Fraction(a, b)
        if factor is None:
            factor = candidate
        elif factor != candidate:
            raise ValueError("meridian classes are not proportional")
    if factor is None or factor.denominator != 1:
        raise ValueError("no integer factor relates the meridian classes")
    return int(factor)


def format_presentation(p: GroupPresentation) -> str:
    head = "gens:"
    if p.generators:
        head += " " + " ".join(str(g) for g in p.generators)
    lines = [head]
    lines.extend(f"rel: {r}" for r in p.relators)
    if p.peripheral is not None:
        meridian, longitude = p.peripheral
        lines.append(f"meridian: {meridian}")
        lines.append(f"longitude: {longitude}")
    return "\n".join(lines)


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the `gens:`/`rel:` line format; inverse of ``format_presentation``."""
    gens: tuple[Symbol, ...] | None = None
    relators: list[FreeWord] = []
    meridian: FreeWord | None = None
    longitude: FreeWord | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tag, sep, body = line.partition(":")
        if not sep:
            raise ParseError("presentation lines look like 'tag: ...'", line, lineno)
        body = body.strip()
        if tag == "gens":
            if gens is not None:
                raise ParseError("duplicate gens line", line, lineno)
            gens = tuple(
                parse_symbol(token, i) for i, token in enumerate(body.split(), start=1)
            )
        elif tag == "rel":
            relators.append(parse_word(body))
        elif tag == "meridian":
            meridian = parse_word(body)
        elif tag == "longitude":
            longitude = parse_word(body)
        else:
            raise ParseError("unknown presentation line tag", tag, lineno)
    if gens is None:
        raise ParseError("presentation needs a gens: line", "", 1)
    if (meridian is None) != (longitude is None):
        raise ParseError("meridian and longitude must appear together", "", 1)
    peripheral = (meridian, longitude) if meridian is not None and longitude is not None else None
    try:
        return GroupPresentation(gens, tuple(relators), peripheral)
    except ValueError as exc:
        raise ParseError(str(exc), "", 1) from exc
