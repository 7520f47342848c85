"""The ambient product of genus-2 surface groups and the torus map.

An ambient word lives over the letters a[i,k], b[i,k] with i in {1,2} and
k up to the rank.  Identity and conjugacy are decided factor by factor:
cross-factor letters commute, so projecting to each factor and running
Dehn's algorithm there is a complete decision procedure for the product.
The torus homomorphism sends a[j,k] and b[j,k] to the j-th coordinate;
its kernel is the group all the presentations in this package describe.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import words
from .dehn import SymmetrizedRelators, dehn_reduce, is_conjugate as _factor_conjugate
from .words import Word, commutator, sym


class RankMismatch(ValueError):
    pass


def surface_relator(k: int) -> Word:
    """[a1,a2][b1,b2] in the sup-k letters."""
    return commutator(words.a(1, k), words.a(2, k)) * commutator(words.b(1, k), words.b(2, k))


@functools.lru_cache(maxsize=None)
def factor_relators(k: int) -> SymmetrizedRelators:
    return SymmetrizedRelators.build(surface_relator(k))


@dataclass(frozen=True)
class AmbientWord:
    """A word in the rank-r product, over a/b letters with sup <= rank."""

    word: Word
    rank: int

    def __post_init__(self):
        if self.rank < 2:
            raise RankMismatch(f"rank must be >= 2, got {self.rank}")
        for s, _ in self.word:
            if s.family not in ("a", "b") or not 1 <= s.sup <= self.rank:
                raise ValueError(f"letter {s} is not an ambient letter of rank {self.rank}")

    def __mul__(self, other: "AmbientWord") -> "AmbientWord":
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        return AmbientWord(self.word * other.word, self.rank)

    def inverse(self) -> "AmbientWord":
        return AmbientWord(self.word.inverse(), self.rank)

    __invert__ = inverse


def project(aw: AmbientWord) -> tuple[Word, ...]:
    """Per-factor subsequences; valid because cross-factor letters commute."""
    parts: list[list] = [[] for _ in range(aw.rank)]
    for s, e in aw.word:
        parts[s.sup - 1].append((s, e))
    return tuple(Word(p) for p in parts)


def is_identity(aw: AmbientWord) -> bool:
    """True iff every factor projection Dehn-reduces to the empty word."""
    for k, part in enumerate(project(aw), start=1):
        if part and dehn_reduce(part, factor_relators(k)).final:
            return False
    return True


def are_equal(lhs: AmbientWord, rhs: AmbientWord) -> bool:
    if lhs.rank != rhs.rank:
        raise RankMismatch(f"rank {lhs.rank} vs {rhs.rank}")
    return is_identity(lhs * rhs.inverse())


def are_conjugate(lhs: AmbientWord, rhs: AmbientWord) -> bool:
    """Conjugacy in a direct product holds iff it holds in every factor."""
    if lhs.rank != rhs.rank:
        raise RankMismatch(f"rank {lhs.rank} vs {rhs.rank}")
    for k, (u, v) in enumerate(zip(project(lhs), project(rhs)), start=1):
        if not _factor_conjugate(u, v, factor_relators(k)):
            return False
    return True


def torus_image(aw: AmbientWord) -> tuple[int, int]:
    """Exponent sums toward the two torus coordinates."""
    m = [0, 0]
    for s, e in aw.word:
        m[s.sub - 1] += e
    return (m[0], m[1])


def in_kernel(aw: AmbientWord) -> bool:
    return torus_image(aw) == (0, 0)


def drop_factor(aw: AmbientWord, k: int) -> AmbientWord:
    """Delete the sup-k letters; the projection away from factor k.

    Only sensible for k = rank (the result is a rank-(k-1) word).
    """
    if k != aw.rank:
        raise RankMismatch(f"can only drop the last factor {aw.rank}, got {k}")
    kept = [(s, e) for s, e in aw.word if s.sup != k]
    return AmbientWord(Word(kept), aw.rank - 1)


def ambient_gen(family: str, i: int, k: int, rank: int) -> AmbientWord:
    return AmbientWord(Word.gen(sym(family, i, k)), rank)
