"""Free-group words over the indexed generator alphabet.

A generator symbol is a family letter plus optional indices: ``a``, ``b``
(ambient surface-group generators), ``c``, ``d``, ``f``, ``g`` (kernel
generators), ``x`` (torus lifts) and ``del`` (the extra last-factor
generator).  Words are stored freely reduced; every constructor reduces,
so equality of words is equality in the free group.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

# Index arity by family: which of (sub, sup) a symbol carries.
_BARE = frozenset({"d", "del"})
_SUB_ONLY = frozenset({"x"})
_SUB_SUP = frozenset({"a", "b", "c", "f", "g"})
FAMILIES = ("a", "b", "c", "d", "del", "f", "g", "x")


class WordError(ValueError):
    pass


class MissingImage(WordError):
    """A symbol occurring in a word has no assigned image."""


@dataclass(frozen=True)
class Symbol:
    """One generator symbol; totally ordered by (family, sub, sup)."""

    family: str
    sub: int | None = None
    sup: int | None = None

    def __post_init__(self):
        fam = self.family
        if fam in _BARE:
            ok = self.sub is None and self.sup is None
        elif fam in _SUB_ONLY:
            ok = self.sub in (1, 2) and self.sup is None
        elif fam in _SUB_SUP:
            ok = self.sub in (1, 2) and isinstance(self.sup, int) and self.sup >= 1
        else:
            raise WordError(f"unknown symbol family {fam!r}")
        if not ok:
            raise WordError(f"bad indices for family {fam!r}: sub={self.sub} sup={self.sup}")

    def key(self) -> tuple:
        return (self.family, self.sub or 0, self.sup or 0)

    def __lt__(self, other: "Symbol") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        if self.family in _BARE:
            return self.family
        if self.family in _SUB_ONLY:
            return f"{self.family}[{self.sub}]"
        return f"{self.family}[{self.sub},{self.sup}]"


@functools.lru_cache(maxsize=None)
def sym(family: str, sub: int | None = None, sup: int | None = None) -> Symbol:
    """Interned symbol constructor; the alphabet in play is always small."""
    return Symbol(family, sub, sup)


# A letter is (symbol, exponent) with exponent exactly +1 or -1.
Letter = tuple[Symbol, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for s, e in letters:
        if e not in (1, -1):
            raise WordError(f"letter exponent must be +1 or -1, got {e}")
        if stack and stack[-1][0] == s and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((s, e))
    return tuple(stack)


class Word:
    """A freely reduced word; the empty word is the identity."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def gen(s: Symbol, exp: int = 1) -> "Word":
        if exp == 0:
            return EMPTY
        e = 1 if exp > 0 else -1
        return Word([(s, e)] * abs(exp))

    # -- group operations ------------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word([(s, -e) for s, e in reversed(self.letters)])

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = EMPTY
        for _ in range(n):
            out = out * self
        return out

    def reverse(self) -> "Word":
        """Letters in reverse order, exponents untouched (an involution)."""
        return Word(reversed(self.letters))

    # -- queries ----------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({self!s})" if self.letters else "Word()"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(str(s) + ("'" if e < 0 else "") for s, e in self.letters)

    def symbols(self) -> set[Symbol]:
        return {s for s, _ in self.letters}

    def exponent_sum(self, s: Symbol) -> int:
        return sum(e for t, e in self.letters if t == s)


EMPTY = Word()


def free_reduce(letters: Iterable[Letter]) -> Word:
    """Free reduction of a raw letter sequence; idempotent."""
    return Word(letters)


def word(*gens: tuple[Symbol, int] | Symbol) -> Word:
    """Build a word from symbols (exponent +1) or (symbol, exponent) pairs."""
    letters: list[Letter] = []
    for g in gens:
        if isinstance(g, Symbol):
            letters.append((g, 1))
        else:
            s, e = g
            letters.extend([(s, 1 if e > 0 else -1)] * abs(e))
    return Word(letters)


def conjugate(w: Word, g: Word) -> Word:
    """g w g^-1."""
    return g * w * g.inverse()


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w = conjugator * core * conjugator^-1 with core cyclically reduced."""
    letters = list(w.letters)
    prefix: list[Letter] = []
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        prefix.append(letters[0])
        letters = letters[1:-1]
    return Word(letters), Word(prefix)


def substitute(w: Word, images: Mapping[Symbol, Word]) -> Word:
    """Homomorphic extension of a map on symbols, freely reduced."""
    letters: list[Letter] = []
    for s, e in w.letters:
        if s not in images:
            raise MissingImage(f"no image for symbol {s}")
        img = images[s]
        letters.extend(img.letters if e > 0 else img.inverse().letters)
    return Word(letters)


# -- convenience constructors for the concrete alphabets ------------------------


def a(i: int, k: int) -> Word:
    return Word.gen(sym("a", i, k))


def b(i: int, k: int) -> Word:
    return Word.gen(sym("b", i, k))


def c(i: int, k: int = 1) -> Word:
    return Word.gen(sym("c", i, k))


def d() -> Word:
    return Word.gen(sym("d"))


def f(i: int, k: int) -> Word:
    return Word.gen(sym("f", i, k))


def g(i: int, k: int) -> Word:
    return Word.gen(sym("g", i, k))


def x(i: int) -> Word:
    return Word.gen(sym("x", i))


def delta() -> Word:
    return Word.gen(sym("del"))
