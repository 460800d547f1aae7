"""Words in finitely generated free groups, and finite permutations.

Group elements are words over structured symbols.  A symbol is a tagged
index: ``t3`` is the longitude conjugator of level 3, ``x2.1`` is strand
meridian 1 of level 2, ``s3``/``z3`` are the canonical names produced by
the two-strand normal form, and ``X0``, ``X1``, ... are the abstract
placeholders used by framing words before they are instantiated at a
level.  Symbols order by (namespace, level, strand) so generator lists
and printed output are reproducible.

Everything here is a value: words and permutations are frozen and all
operations return new objects, so callers may share them freely across
threads.  The composition convention is fixed once for the whole
package: letters of a word act left to right, and ``perm_compose(p, q)``
means "p then q".

Words print in a whitespace-separated token format with ``^e`` for
syllable exponents, e.g. ``x1.1^2 t0^-1``; the empty word prints as
``1``.  ``parse_word`` inverts ``format_word`` exactly.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

__all__ = [
    "ParseError",
    "MissingImage",
    "DegreeMismatch",
    "Symbol",
    "FreeWord",
    "EMPTY",
    "gen",
    "reduce",
    "cyclically_reduce",
    "substitute",
    "replace",
    "exponent_sum",
    "total_exponent",
    "parse_symbol",
    "parse_word",
    "format_word",
    "Permutation",
    "perm_compose",
    "perm_inverse",
    "perm_cycles",
    "parse_permutation",
    "format_permutation",
]


class ParseError(ValueError):
    """Malformed text input; remembers the offending token and position."""

    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(message)
        self.message = message
        self.token = token
        self.position = position

    def __str__(self) -> str:
        if self.token:
            return f"{self.message}: '{self.token}' (position {self.position})"
        return self.message


class MissingImage(KeyError):
    """A substitution or homomorphism lacks an image for a symbol."""

    def __str__(self) -> str:  # KeyError wraps its arg in quotes otherwise
        return self.args[0] if self.args else "missing image"


class DegreeMismatch(ValueError):
    """Permutations of different degrees were combined."""


_KINDS = ("t", "x", "s", "z", "X")
_KIND_RANK = {kind: rank for rank, kind in enumerate(_KINDS)}


@functools.total_ordering
@dataclass(frozen=True)
class Symbol:
    """A structured generator name.

    ``kind`` is the namespace tag.  ``t``, ``s`` and ``z`` symbols carry
    a level index only; ``x`` symbols carry (level, strand) with both at
    least 1; ``X`` symbols are level-free framing placeholders indexed
    by strand, with ``X0`` reserved for the whole-boundary shorthand.
    """

    kind: str
    level: int = 0
    strand: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown symbol namespace {self.kind!r}")
        if self.kind == "x":
            if self.level < 1 or self.strand < 1:
                raise ValueError(f"x symbol needs level >= 1 and strand >= 1, got {self}")
        elif self.kind == "X":
            if self.level != 0 or self.strand < 0:
                raise ValueError("X placeholder carries only a strand index")
        else:
            if self.level < 0 or self.strand != 0:
                raise ValueError(f"{self.kind} symbol carries only a level index >= 0")

    @classmethod
    def t(cls, level: int) -> "Symbol":
        return cls("t", level)

    @classmethod
    def x(cls, level: int, strand: int) -> "Symbol":
        return cls("x", level, strand)

    @classmethod
    def s(cls, level: int) -> "Symbol":
        return cls("s", level)

    @classmethod
    def z(cls, level: int) -> "Symbol":
        return cls("z", level)

    @classmethod
    def X(cls, strand: int) -> "Symbol":
        return cls("X", 0, strand)

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], self.level, self.strand)

    def __lt__(self, other: object):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x{self.level}.{self.strand}"
        if self.kind == "X":
            return f"X{self.strand}"
        return f"{self.kind}{self.level}"


_SYMBOL_RE = re.compile(r"^(?:(?P<tsz>[tsz])(?P<level>\d+)|x(?P<xlevel>\d+)\.(?P<strand>\d+)|X(?P<xcap>\d+))$")


def parse_symbol(token: str, position: int = 0) -> Symbol:
    """Parse one symbol token such as ``t0``, ``x1.2``, ``s3`` or ``X0``."""
    m = _SYMBOL_RE.match(token)
    if m is None:
        raise ParseError("not a symbol token", token, position)
    try:
        if m.group("tsz") is not None:
            return Symbol(m.group("tsz"), int(m.group("level")))
        if m.group("xlevel") is not None:
            return Symbol("x", int(m.group("xlevel")), int(m.group("strand")))
        return Symbol("X", 0, int(m.group("xcap")))
    except ValueError as exc:
        raise ParseError(str(exc), token, position) from exc


@dataclass(frozen=True)
class FreeWord:
    """A word over symbols: a tuple of (symbol, sign) letters.

    The raw constructor stores letters exactly as given, so unreduced
    words can be built for testing ``reduce``.  The arithmetic operators
    (``*``, ``**``, ``inverse``) return freely reduced words.
    """

    letters: tuple[tuple[Symbol, int], ...] = ()

    def __post_init__(self) -> None:
        for sym, sign in self.letters:
            if not isinstance(sym, Symbol) or sign not in (1, -1):
                raise ValueError(f"bad letter ({sym!r}, {sign!r})")

    @classmethod
    def from_syllables(cls, syllables: Sequence[tuple[Symbol, int]]) -> "FreeWord":
        """Build a word from (symbol, exponent) pairs, expanding exponents.

        >>> str(FreeWord.from_syllables([(Symbol.X(0), 1), (Symbol.X(1), -2)]))
        'X0 X1^-2'
        """
        letters: list[tuple[Symbol, int]] = []
        for sym, exp in syllables:
            sign = 1 if exp > 0 else -1
            letters.extend((sym, sign) for _ in range(abs(exp)))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[tuple[Symbol, int]]:
        return iter(self.letters)

    @property
    def is_identity(self) -> bool:
        return not reduce(self).letters

    def symbols(self) -> frozenset[Symbol]:
        return frozenset(sym for sym, _ in self.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((sym, -sign) for sym, sign in reversed(self.letters)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return reduce(FreeWord(self.letters + other.letters))

    def __pow__(self, exponent: int) -> "FreeWord":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = FreeWord(self.letters * exponent)
        return reduce(out)

    def __str__(self) -> str:
        return format_word(self)


EMPTY = FreeWord()


def gen(sym: Symbol) -> FreeWord:
    """The one-letter word on ``sym``."""
    return FreeWord(((sym, 1),))


def reduce(word: FreeWord) -> FreeWord:
    """Freely reduce: cancel adjacent inverse pairs until none remain.

    The result is independent of cancellation order, so a single stack
    pass suffices.

    >>> a, b = Symbol.x(1, 1), Symbol.x(1, 2)
    >>> w = FreeWord(((a, 1), (b, 1), (b, -1), (a, 1)))
    >>> str(reduce(w))
    'x1.1^2'
    """
    stack: list[tuple[Symbol, int]] = []
    for sym, sign in word.letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((sym, sign))
    if len(stack) == len(word.letters):
        return word
    return FreeWord(tuple(stack))


def cyclically_reduce(word: FreeWord) -> FreeWord:
    """Freely reduce, then strip matching inverse pairs from the two ends."""
    w = reduce(word)
    letters = w.letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2:
        sym, sign = letters[lo]
        last_sym, last_sign = letters[hi - 1]
        if sym == last_sym and sign == -last_sign:
            lo += 1
            hi -= 1
        else:
            break
    if lo == 0:
        return w
    return FreeWord(letters[lo:hi])


def substitute(word: FreeWord, images: Mapping[Symbol, FreeWord]) -> FreeWord:
    """Apply the homomorphism sending each symbol to its image word.

    Inverse letters map through the inverse image (anti-homomorphism on
    letters).  Every symbol of ``word`` must be mapped.

    >>> img = {Symbol.x(1, 1): parse_word("z0 z1")}
    >>> str(substitute(parse_word("x1.1^-1"), img))
    'z1^-1 z0^-1'
    """
    out: list[tuple[Symbol, int]] = []
    for sym, sign in word.letters:
        if sym not in images:
            raise MissingImage(f"no image for symbol {sym}")
        image = images[sym]
        out.extend(image.letters if sign == 1 else image.inverse().letters)
    return reduce(FreeWord(tuple(out)))


def replace(word: FreeWord, images: Mapping[Symbol, FreeWord]) -> FreeWord:
    """Like ``substitute`` but unmapped symbols are kept as themselves."""
    out: list[tuple[Symbol, int]] = []
    for sym, sign in word.letters:
        image = images.get(sym)
        if image is None:
            out.append((sym, sign))
        else:
            out.extend(image.letters if sign == 1 else image.inverse().letters)
    return reduce(FreeWord(tuple(out)))


def exponent_sum(word: FreeWord, sym: Symbol) -> int:
    """Signed count of ``sym`` letters.

    >>> exponent_sum(parse_word("x1.1 t0 x1.1^-1"), Symbol.x(1, 1))
    0
    """
    return sum(sign for s, sign in word.letters if s == sym)


def total_exponent(word: FreeWord) -> int:
    """Sum of all letter signs.

    >>> total_exponent(parse_word("x1.1 x1.2 x1.1^-2"))
    0
    """
    return sum(sign for _, sign in word.letters)


def format_word(word: FreeWord) -> str:
    """Render a word in token format; the empty word prints as ``1``."""
    if not word.letters:
        return "1"
    parts: list[str] = []
    i = 0
    letters = word.letters
    while i < len(letters):
        sym, sign = letters[i]
        j = i
        while j < len(letters) and letters[j] == (sym, sign):
            j += 1
        exp = (j - i) * sign
        parts.append(str(sym) if exp == 1 else f"{sym}^{exp}")
        i = j
    return " ".join(parts)


def parse_word(text: str) -> FreeWord:
    """Parse the token format produced by ``format_word``.

    >>> str(parse_word("s1 z1^2 z0^-1 s0^-2"))
    's1 z1^2 z0^-1 s0^-2'
    >>> parse_word("1") == EMPTY
    True
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty word text; the identity is written '1'", text.strip(), 1)
    if tokens == ["1"]:
        return EMPTY
    letters: list[tuple[Symbol, int]] = []
    for position, token in enumerate(tokens, start=1):
        if token == "1":
            raise ParseError("'1' is only valid as a whole word", token, position)
        base, caret, exp_text = token.partition("^")
        if caret:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ParseError("bad exponent", token, position) from None
            if exp == 0:
                raise ParseError("zero exponent", token, position)
        else:
            exp = 1
        sym = parse_symbol(base, position)
        sign = 1 if exp > 0 else -1
        letters.extend((sym, sign) for _ in range(abs(exp)))
    return FreeWord(tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., m}; ``images[j-1]`` is the image of j."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..{m}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> "Permutation":
        images = list(range(1, degree + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; (a b c) sends a to b, b to c, c to a."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    @property
    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return format_permutation(self)


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """"p then q": the composite sends j to q(p(j)).

    >>> p = Permutation.from_cycles(4, [(1, 2, 3)])
    >>> q = Permutation.from_cycles(4, [(2, 3, 4)])
    >>> perm_compose(p, q).apply(1)
    3
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"degree {p.degree} vs {q.degree}")
    return Permutation(tuple(q.images[img - 1] for img in p.images))


def perm_inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for j, img in enumerate(p.images, start=1):
        images[img - 1] = j
    return Permutation(tuple(images))


def perm_cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles partitioning {1, ..., m}, fixed points included.

    Cycles are listed by smallest element and each starts at its
    smallest element.

    >>> perm_cycles(Permutation.from_cycles(4, [(1, 2)]))
    [(1, 2), (3,), (4,)]
    """
    seen: set[int] = set()
    cycles: list[tuple[int, ...]] = []
    for start in range(1, p.degree + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        point = p.apply(start)
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = p.apply(point)
        cycles.append(tuple(cycle))
    return cycles


def format_permutation(p: Permutation) -> str:
    """Cycle notation with fixed points omitted; the identity is ``id``."""
    cycles = [c for c in perm_cycles(p) if len(c) > 1]
    if not cycles:
        return "id"
    return "".join("(" + " ".join(str(pt) for pt in cycle) + ")" for cycle in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``(1 2 3)(4 5)`` or ``id``."""
    stripped = text.strip()
    if stripped == "id":
        return Permutation.identity(degree)
    matched = "".join(m.group(0) for m in _CYCLE_RE.finditer(stripped))
    if matched.replace(" ", "") != stripped.replace(" ", ""):
        raise ParseError("not cycle notation", stripped, 1)
    cycles: list[list[int]] = []
    for m in _CYCLE_RE.finditer(stripped):
        body = m.group(1).split()
        if len(body) < 2:
            raise ParseError("cycle needs at least two points", m.group(0), 1)
        try:
            cycles.append([int(pt) for pt in body])
        except ValueError:
            raise ParseError("cycle points must be integers", m.group(0), 1) from None
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise ParseError(str(exc), stripped, 1) from exc
