"""Finite permutation quotients as non-Abelianness certificates.

A presented group maps onto a permutation group once each generator
gets an image and every relator evaluates to the identity.  If two
images fail to commute, the presented group is not Abelian, and the
assignment is a finite, checkable certificate of that fact.

Words evaluate letter by letter: the image of ``a b`` does ``a`` first
and ``b`` second.  The knotted two-strand normal forms all admit the
same alternating-group certificate in degree L+2, built from the
overlapping 3-cycles (i, i+1, i+2).

Assignment text format: a ``deg=<m>`` line, then one ``gen -> cycles``
line per generator, where the image is disjoint cycle notation or
``id``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .presentations import Elimination, GroupPresentation
from .words import (
    FreeWord,
    MissingImage,
    ParseError,
    Permutation,
    Symbol,
    format_permutation,
    parse_permutation,
    parse_symbol,
    perm_compose,
    perm_inverse,
)

__all__ = [
    "HomAssignment",
    "SearchResult",
    "evaluate_word",
    "verify_hom",
    "alternating_witness",
    "search_homs",
    "transport_assignment",
    "pull_back_assignment",
    "parse_assignment",
    "format_assignment",
]


@dataclass(frozen=True)
class HomAssignment:
    """Generator images in the symmetric group of the given degree."""

    degree: int
    images: dict[Symbol, Permutation]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be positive")
        object.__setattr__(self, "images", dict(self.images))
        for sym, perm in self.images.items():
            if perm.degree != self.degree:
                raise ValueError(
                    f"image of {sym} has degree {perm.degree}, expected {self.degree}"
                )

    def __str__(self) -> str:
        return format_assignment(self)


def evaluate_word(word: FreeWord, assignment: HomAssignment) -> Permutation:
    """Image of a word: letters apply left to right.

    >>> z = Symbol.z
    >>> a = HomAssignment(3, {z(1): parse_permutation("(1 2)", 3)})
    >>> evaluate_word(FreeWord(((z(1), 1), (z(1), -1))), a)
    Permutation(images=(1, 2, 3))
    """
    out = Permutation.identity(assignment.degree)
    for sym, sign in word.letters:
        if sym not in assignment.images:
            raise MissingImage(sym)
        perm = assignment.images[sym]
        if sign < 0:
            perm = perm_inverse(perm)
        out = perm_compose(out, perm)
    return out


def verify_hom(p: GroupPresentation, assignment: HomAssignment) -> bool:
    """Do the images satisfy every relator?

    The relator b = a^-1 b^-1 a^2 holds for the 3-cycles below:

    >>> from .words import parse_word
    >>> z = Symbol.z
    >>> p = GroupPresentation((z(0), z(1)), (parse_word("z1 z0^-2 z1 z0"),))
    >>> a = HomAssignment(4, {z(0): parse_permutation("(1 2 3)", 4),
    ...                       z(1): parse_permutation("(2 3 4)", 4)})
    >>> verify_hom(p, a)
    True
    """
    return all(evaluate_word(r, assignment).is_identity for r in p.relators)


def alternating_witness(L: int) -> HomAssignment:
    """Degree L+2 certificate for the knotted two-strand normal forms.

    Longitudes go to the identity and the meridian chain goes to the
    overlapping 3-cycles c_i = (i, i+1, i+2), with the level-0 product
    meridian at c_1^-1.  Each image is an even permutation, and c_1
    and c_2 already fail to commute, so for L >= 2 the image group is
    not Abelian.

    >>> from .presentations import dyadic_form, truncate
    >>> from .schemes import trefoil_scheme
    >>> verify_hom(dyadic_form(truncate(trefoil_scheme(), 3)), alternating_witness(3))
    True
    """
    if L < 1:
        raise ValueError("the witness needs at least one level")
    degree = L + 2
    images: dict[Symbol, Permutation] = {}
    for i in range(L):
        images[Symbol.s(i)] = Permutation.identity(degree)
    for i in range(1, L + 1):
        images[Symbol.z(i)] = Permutation.from_cycles(degree, ((i, i + 1, i + 2),))
    images[Symbol.z(0)] = Permutation.from_cycles(degree, ((1, 3, 2),))
    return HomAssignment(degree, images)


@dataclass(frozen=True)
class SearchResult:
    """Assignments found by an exhaustive search, and whether it ran dry."""

    assignments: tuple[HomAssignment, ...]
    budget_exhausted: bool


def search_homs(p: GroupPresentation, degree: int, budget: int = 10**6) -> SearchResult:
    """Exhaustively search degree-m images with a non-commuting pair.

    Generators take images in presentation order, candidates run in
    lexicographic order, and a relator is checked as soon as all its
    generators have images.  Complete assignments count only when some
    two images fail to commute, so a hit certifies non-Abelianness.
    Each candidate tried costs one unit of budget; an exhausted budget
    stops the search and is reported rather than raised.

    >>> from .words import parse_word
    >>> z = Symbol.z
    >>> p = GroupPresentation((z(0), z(1)), (parse_word("z0^-1 z1^-1 z0 z1"),))
    >>> search_homs(p, 3)
    SearchResult(assignments=(), budget_exhausted=False)
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    candidates = [
        Permutation(images) for images in itertools.permutations(range(1, degree + 1))
    ]
    gens = p.generators
    position = {g: i for i, g in enumerate(gens)}
    # relators become checkable once their deepest generator is assigned
    checkpoints: list[list[FreeWord]] = [[] for _ in gens]
    for r in p.relators:
        syms = r.symbols()
        if syms:
            checkpoints[max(position[s] for s in syms)].append(r)
    found: list[HomAssignment] = []
    remaining = budget
    exhausted = False

    def descend(depth: int, images: dict[Symbol, Permutation]) -> None:
        nonlocal remaining, exhausted
        if depth == len(gens):
            perms = list(images.values())
            if any(
                perm_compose(a, b) != perm_compose(b, a)
                for i, a in enumerate(perms)
                for b in perms[i + 1:]
            ):
                found.append(HomAssignment(degree, images))
            return
        g = gens[depth]
        for candidate in candidates:
            if exhausted:
                return
            if remaining <= 0:
                exhausted = True
                return
            remaining -= 1
            images[g] = candidate
            partial = HomAssignment(degree, images)
            if all(
                evaluate_word(r, partial).is_identity for r in checkpoints[depth]
            ):
                descend(depth + 1, images)
            del images[g]

    if gens:
        descend(0, {})
    return SearchResult(tuple(found), exhausted)


def transport_assignment(
    assignment: HomAssignment, trace: tuple[Elimination, ...]
) -> HomAssignment:
    """Extend an assignment on a reduced presentation to the original.

    The eliminations are replayed newest first, so each replacement
    word only mentions generators whose images already exist.
    """
    images = dict(assignment.images)
    for step in reversed(trace):
        extended = HomAssignment(assignment.degree, images)
        images[step.generator] = evaluate_word(step.replacement, extended)
    return HomAssignment(assignment.degree, images)


def pull_back_assignment(
    assignment: HomAssignment, mapping: dict[Symbol, FreeWord]
) -> HomAssignment:
    """Compose a generator translation with an assignment on its target."""
    images = {
        sym: evaluate_word(word, assignment) for sym, word in mapping.items()
    }
    return HomAssignment(assignment.degree, images)


def format_assignment(assignment: HomAssignment) -> str:
    lines = [f"deg={assignment.degree}"]
    for sym in sorted(assignment.images):
        lines.append(f"{sym} -> {format_permutation(assignment.images[sym])}")
    return "\n".join(lines)


def parse_assignment(text: str) -> HomAssignment:
    """Parse the ``deg=``/arrow format; inverse of ``format_assignment``."""
    degree: int | None = None
    images: dict[Symbol, Permutation] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if degree is None:
            head, sep, value = line.partition("=")
            if head.strip() != "deg" or not sep:
                raise ParseError("assignment starts with a deg=<m> line", line, lineno)
            try:
                degree = int(value)
            except ValueError:
                raise ParseError("degree must be an integer", value, lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", value, lineno)
            continue
        target, sep, perm_text = line.partition("->")
        if not sep:
            raise ParseError("assignment lines look like 'gen -> cycles'", line, lineno)
        sym = parse_symbol(target.strip(), lineno)
        if sym in images:
            raise ParseError("duplicate image", target.strip(), lineno)
        images[sym] = parse_permutation(perm_text.strip(), degree)
    if degree is None:
        raise ParseError("assignment needs a deg=<m> line", "", 1)
    return HomAssignment(degree, images)
