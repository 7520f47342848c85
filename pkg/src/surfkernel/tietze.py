"""Elementary Tietze moves with machine-checked replay.

A replay session tracks the presentation together with its embedding into
the ambient product.  After every move two invariants are re-checked:
the abelianization (rank and torsion) is unchanged, and every relator
still maps to the identity in the product.  Relator additions carry
either a syntactic derivation certificate (a product of conjugates of
existing relators) or run as checked replacements against the product
oracle; the long simplification chains are handled the second way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Union

from .abelianization import abelianize
from .ambient import AmbientWord, is_identity as ambient_identity
from .presentations import (
    Presentation,
    Relator,
    SubstitutionMap,
    Variant,
    build_presentation,
    embedding_map,
)
from .words import EMPTY, Symbol, Word, conjugate, substitute, sym


class TietzeError(RuntimeError):
    pass


class InvalidCertificate(TietzeError):
    pass


class IndexOutOfRange(TietzeError):
    pass


class GeneratorInUse(TietzeError):
    pass


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CertStep:
    relator_index: int
    conjugator: Word
    sign: int  # +1 or -1


DerivationCertificate = tuple[CertStep, ...]


def certificate_product(p: Presentation, cert: Iterable[CertStep]) -> Word:
    out = EMPTY
    for step in cert:
        if not 0 <= step.relator_index < len(p.relators):
            raise IndexOutOfRange(f"relator index {step.relator_index}")
        rel = p.relators[step.relator_index].word
        if step.sign == -1:
            rel = rel.inverse()
        elif step.sign != 1:
            raise InvalidCertificate(f"sign must be +-1, got {step.sign}")
        out = out * conjugate(rel, step.conjugator)
    return out


def verify_certificate(p: Presentation, target: Word, cert: Iterable[CertStep]) -> bool:
    return certificate_product(p, cert) == target


def search_certificate(
    p: Presentation,
    target: Word,
    max_factors: int = 2,
    conjugator_radius: int = 1,
) -> DerivationCertificate | None:
    """Bounded brute-force search for a derivation certificate.

    Only meant for small cases; the search space is all products of at
    most ``max_factors`` conjugates with conjugators from the ball of the
    given radius in the generators.
    """
    ball = [EMPTY]
    frontier = [EMPTY]
    for _ in range(conjugator_radius):
        nxt = []
        for w in frontier:
            for s in p.generators:
                for e in (1, -1):
                    cand = w * Word([(s, e)])
                    if len(cand) > len(w):
                        nxt.append(cand)
        ball.extend(nxt)
        frontier = nxt
    steps = [
        CertStep(i, g, e)
        for i in range(len(p.relators))
        for g in ball
        for e in (1, -1)
    ]
    for n in range(1, max_factors + 1):
        for combo in itertools.product(steps, repeat=n):
            if certificate_product(p, combo) == target:
                return tuple(combo)
    return None


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AddRelator:
    word: Word
    provenance: str = "added"
    certificate: DerivationCertificate | None = None  # None = checked replacement


@dataclass(frozen=True)
class RemoveRelator:
    index: int
    certificate: DerivationCertificate | None = None  # over the remaining relators


@dataclass(frozen=True)
class AddGenerator:
    symbol: Symbol
    defining: Word


@dataclass(frozen=True)
class RemoveGenerator:
    symbol: Symbol


TietzeMove = Union[AddRelator, RemoveRelator, AddGenerator, RemoveGenerator]


@dataclass(frozen=True)
class TietzeScript:
    start_variant: Variant
    rank: int
    moves: tuple[TietzeMove, ...]
    expect_variant: Variant | None = None


# ---------------------------------------------------------------------------
# Replay session
# ---------------------------------------------------------------------------


def _sorted_gens(gens: Iterable[Symbol]) -> tuple[Symbol, ...]:
    return tuple(sorted(gens, key=Symbol.key))


def _solve_generator(rel: Word, s: Symbol) -> Word:
    """Solve relator u s^e v = 1 (single occurrence of s) for s."""
    positions = [n for n, (t, _) in enumerate(rel.letters) if t == s]
    if len(positions) != 1:
        raise GeneratorInUse(f"{s} occurs {len(positions)} times in {rel}")
    n = positions[0]
    e = rel.letters[n][1]
    u = Word(rel.letters[:n])
    v = Word(rel.letters[n + 1 :])
    return u.inverse() * v.inverse() if e == 1 else v * u


class ReplaySession:
    """Applies moves one at a time, re-checking invariants after each."""

    def __init__(self, presentation: Presentation, embedding: SubstitutionMap,
                 check_oracle: bool = True):
        self.p = presentation
        self.images = dict(embedding.images)
        self.rank = embedding.rank
        self.check_oracle = check_oracle
        self.log: list[str] = []
        self._invariants = self._abelian_invariants()
        if check_oracle:
            self._check_all_relators()

    # -- checks ---------------------------------------------------------------

    def _abelian_invariants(self):
        rep = abelianize(self.p)
        return (rep.rank, tuple(rep.torsion))

    def _relator_ok(self, w: Word) -> bool:
        return ambient_identity(AmbientWord(substitute(w, self.images), self.rank))

    def _check_all_relators(self):
        for rel in self.p.relators:
            if not self._relator_ok(rel.word):
                raise TietzeError(f"relator {rel.provenance} no longer vanishes in the product")

    def _after_move(self, description: str, recheck_all: bool):
        inv = self._abelian_invariants()
        if inv != self._invariants:
            raise TietzeError(
                f"{description}: abelianization changed {self._invariants} -> {inv}")
        if self.check_oracle and recheck_all:
            self._check_all_relators()
        self.log.append(description)

    # -- moves ----------------------------------------------------------------

    def apply(self, move: TietzeMove) -> None:
        if isinstance(move, AddRelator):
            self._add_relator(move)
        elif isinstance(move, RemoveRelator):
            self._remove_relator(move)
        elif isinstance(move, AddGenerator):
            self._add_generator(move)
        elif isinstance(move, RemoveGenerator):
            self._remove_generator(move)
        else:
            raise TietzeError(f"unknown move {move!r}")

    def _replace(self, generators, relators) -> None:
        self.p = Presentation(self.p.variant, self.p.rank, _sorted_gens(generators),
                              tuple(relators), self.p.duplicates_removed)

    def _add_relator(self, move: AddRelator) -> None:
        if move.certificate is not None:
            if not verify_certificate(self.p, move.word, move.certificate):
                raise InvalidCertificate(f"certificate does not derive {move.word}")
        elif self.check_oracle and not self._relator_ok(move.word):
            raise TietzeError(f"checked add: {move.word} is not a relation in the product")
        self._replace(self.p.generators, self.p.relators + (Relator(move.word, move.provenance),))
        self._after_move(f"add-relator {move.provenance}", recheck_all=False)

    def _remove_relator(self, move: RemoveRelator) -> None:
        if not 0 <= move.index < len(self.p.relators):
            raise IndexOutOfRange(f"relator index {move.index}")
        removed = self.p.relators[move.index]
        rest = self.p.relators[: move.index] + self.p.relators[move.index + 1 :]
        if move.certificate is not None:
            probe = Presentation(self.p.variant, self.p.rank, self.p.generators, rest)
            if not verify_certificate(probe, removed.word, move.certificate):
                raise InvalidCertificate(f"removed relator {removed.provenance} not derivable")
        elif self.check_oracle and not self._relator_ok(removed.word):
            raise TietzeError(f"checked remove: {removed.word} was not a relation")
        self._replace(self.p.generators, rest)
        self._after_move(f"remove-relator {removed.provenance}", recheck_all=False)

    def _add_generator(self, move: AddGenerator) -> None:
        if move.symbol in self.p.generators:
            raise TietzeError(f"generator {move.symbol} already present")
        if move.symbol in move.defining.symbols():
            raise TietzeError(f"defining word of {move.symbol} mentions the new symbol")
        defining_rel = Relator(Word.gen(move.symbol) * move.defining.inverse(),
                               f"defines[{move.symbol}]")
        self.images[move.symbol] = substitute(move.defining, self.images)
        self._replace(self.p.generators + (move.symbol,), self.p.relators + (defining_rel,))
        self._after_move(f"add-generator {move.symbol}", recheck_all=True)

    def _remove_generator(self, move: RemoveGenerator) -> None:
        s = move.symbol
        if s not in self.p.generators:
            raise TietzeError(f"no generator {s}")
        defining_index = None
        for n, rel in enumerate(self.p.relators):
            if sum(1 for t, _ in rel.word if t == s) == 1:
                defining_index = n
                break
        if defining_index is None:
            raise GeneratorInUse(f"no relator has a single occurrence of {s}")
        solution = _solve_generator(self.p.relators[defining_index].word, s)
        mapping = {t: Word.gen(t) for t in self.p.generators if t != s}
        mapping[s] = solution
        new_relators = []
        for n, rel in enumerate(self.p.relators):
            if n == defining_index:
                continue
            w = substitute(rel.word, mapping)
            if not w:
                self.log.append(f"  (relator {rel.provenance} became trivial, dropped)")
                continue
            new_relators.append(Relator(w, rel.provenance))
        del self.images[s]
        self._replace((t for t in self.p.generators if t != s), new_relators)
        self._after_move(f"remove-generator {s} := {solution}", recheck_all=True)


def replay(script: TietzeScript, check_oracle: bool = True) -> tuple[Presentation, list[str]]:
    start = build_presentation(script.rank, script.start_variant)
    session = ReplaySession(start, embedding_map(script.rank, script.start_variant),
                            check_oracle=check_oracle)
    for move in script.moves:
        session.apply(move)
    if script.expect_variant is not None:
        target = build_presentation(script.rank, script.expect_variant)
        _compare(session.p, target)
        session.log.append(f"final presentation matches {script.expect_variant.value}")
    return session.p, session.log


def _compare(got: Presentation, want: Presentation) -> None:
    if set(got.generators) != set(want.generators):
        raise TietzeError(
            f"generator mismatch: extra {set(got.generators) - set(want.generators)}, "
            f"missing {set(want.generators) - set(got.generators)}")
    got_words = sorted((str(r.word) for r in got.relators))
    want_words = sorted((str(r.word) for r in want.relators))
    if got_words != want_words:
        extra = [w for w in got_words if w not in want_words]
        missing = [w for w in want_words if w not in got_words]
        raise TietzeError(f"relator mismatch: {len(extra)} extra, {len(missing)} missing")


# ---------------------------------------------------------------------------
# The simplification script: fiber-product output -> simplified kernel
# ---------------------------------------------------------------------------


def simplification_script(r: int) -> TietzeScript:
    """Moves taking the full kernel presentation to the simplified one.

    Generator moves first: the torus lifts are eliminated against the
    f^(r) generators, the g^(r) generators are introduced, and the
    last-factor c and del generators are eliminated.  The remaining
    relator-set differences are applied as checked replacements.
    """
    if r < 4:
        raise TietzeError(f"simplification needs rank >= 4, got {r}")
    moves: list[TietzeMove] = [
        RemoveGenerator(sym("x", 1)),
        RemoveGenerator(sym("x", 2)),
    ]
    for i in (1, 2):
        defining = Word.gen(sym("c", i, 1)).inverse() * Word.gen(sym("f", i, r)) \
            * Word.gen(sym("c", i, r))
        moves.append(AddGenerator(sym("g", i, r), defining))
    moves.append(RemoveGenerator(sym("c", 1, r)))
    moves.append(RemoveGenerator(sym("c", 2, r)))
    moves.append(RemoveGenerator(sym("del")))

    # Dry-run the generator moves to see the surviving relator multiset,
    # then emit the removals and additions that reach the target.
    session = ReplaySession(
        build_presentation(r, Variant.KERNEL_FULL),
        embedding_map(r, Variant.KERNEL_FULL),
        check_oracle=False,
    )
    for move in moves:
        session.apply(move)
    target = build_presentation(r, Variant.KERNEL_SIMPLIFIED)
    target_words = {rel.word for rel in target.relators}
    current_words = {rel.word for rel in session.p.relators}

    removal_indices = []
    seen: set[Word] = set()
    for n, rel in enumerate(session.p.relators):
        if rel.word not in target_words or rel.word in seen:
            removal_indices.append(n)
        seen.add(rel.word)
    for n in sorted(removal_indices, reverse=True):
        moves.append(RemoveRelator(n))
    for rel in target.relators:
        if rel.word not in current_words:
            moves.append(AddRelator(rel.word, rel.provenance))
    return TietzeScript(Variant.KERNEL_FULL, r, tuple(moves), Variant.KERNEL_SIMPLIFIED)
