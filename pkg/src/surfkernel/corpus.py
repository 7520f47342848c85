"""The identity corpus: every checkable equation behind the construction.

Each claim is a labeled assertion about ambient words: a word vanishes in
the product, two words are equal, or two words are conjugate.  The corpus
instantiates every claim over its full index range at a given rank.

Claims with ``report_only=True`` come from source lines with suspected
index typos; both the verbatim and the corrected readings are generated
and their verdicts reported side by side rather than silently adopting
one reading.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import words
from .ambient import AmbientWord, are_conjugate, are_equal, is_identity
from .presentations import (
    Variant,
    af_comm_value,
    ag_comm_value,
    cg_twist,
    embedding_map,
    f_twist,
    standard_kernel_images,
)
from .words import Symbol, Word, commutator, substitute, sym


class ClaimKind(enum.Enum):
    IDENTITY = "identity"
    EQUAL = "equal"
    CONJUGATE = "conjugate"


@dataclass(frozen=True)
class Claim:
    label: str
    kind: ClaimKind
    lhs: AmbientWord
    rhs: AmbientWord | None = None
    report_only: bool = False


def evaluate(claim: Claim) -> bool:
    if claim.kind is ClaimKind.IDENTITY:
        return is_identity(claim.lhs)
    if claim.kind is ClaimKind.EQUAL:
        return are_equal(claim.lhs, claim.rhs)
    return are_conjugate(claim.lhs, claim.rhs)


def claim_images(r: int) -> dict[Symbol, Word]:
    """Images for mixed claim words: ambient letters fixed, kernel letters
    expanded, torus lifts and del read through the kernel embedding."""
    images = dict(embedding_map(r, Variant.KERNEL_FULL).images)
    for i in (1, 2):
        for k in range(1, r + 1):
            images[sym("a", i, k)] = words.a(i, k)
            images[sym("b", i, k)] = words.b(i, k)
    return images


class _Builder:
    def __init__(self, r: int):
        self.r = r
        self.images = claim_images(r)
        self.claims: list[Claim] = []

    def emb(self, w: Word) -> AmbientWord:
        return AmbientWord(substitute(w, self.images), self.r)

    def identity(self, label: str, w: Word, report_only: bool = False):
        self.claims.append(Claim(label, ClaimKind.IDENTITY, self.emb(w), None, report_only))

    def equal(self, label: str, lhs: Word, rhs: Word, report_only: bool = False):
        self.claims.append(Claim(label, ClaimKind.EQUAL, self.emb(lhs), self.emb(rhs), report_only))

    def conjugate(self, label: str, lhs: Word, rhs: Word, report_only: bool = False):
        self.claims.append(Claim(label, ClaimKind.CONJUGATE, self.emb(lhs), self.emb(rhs), report_only))


def _ij_eps():
    for i in (1, 2):
        for j in (1, 2):
            for eps in (1, -1):
                yield i, j, eps


def identity_corpus(r: int) -> list[Claim]:
    """All claims at rank r; filter on ``report_only`` for the hard subset."""
    if r < 3:
        raise ValueError(f"corpus needs rank >= 3, got {r}")
    B = _Builder(r)
    ks = range(2, r + 1)

    # Commutator values of the first-factor letters against the kernel
    # generators, k-dependent and k-free forms, all epsilons.
    for k in ks:
        for i, j, eps in _ij_eps():
            B.equal(f"conj-af-value[i={i},j={j},eps={eps},k={k}]",
                    commutator(words.a(i, 1) ** eps, words.f(j, k)),
                    af_comm_value(i, j, eps))
            B.equal(f"conj-ag-value[i={i},j={j},eps={eps},k={k}]",
                    commutator(words.a(i, 1) ** eps, words.g(j, k)),
                    ag_comm_value(i, j, eps))
    for i, j, eps in _ij_eps():
        B.equal(f"conj-aa-value[i={i},j={j},eps={eps}]",
                commutator(words.a(i, 1) ** eps, words.a(j, 1)),
                af_comm_value(i, j, eps))
        B.equal(f"conj-ab-value[i={i},j={j},eps={eps}]",
                commutator(words.a(i, 1) ** eps, words.b(j, 1)),
                ag_comm_value(i, j, eps))

    # Conjugation transfer: a_i and f_i^(k) act identically on c_j and d.
    for k in ks:
        for i, j, eps in _ij_eps():
            B.equal(f"normalize-c[i={i},j={j},eps={eps},k={k}]",
                    words.a(i, 1) ** eps * words.c(j) * words.a(i, 1) ** -eps,
                    words.f(i, k) ** eps * words.c(j) * words.f(i, k) ** -eps)
        for i in (1, 2):
            for eps in (1, -1):
                B.equal(f"normalize-d[i={i},eps={eps},k={k}]",
                        words.a(i, 1) ** eps * words.d() * words.a(i, 1) ** -eps,
                        words.f(i, k) ** eps * words.d() * words.f(i, k) ** -eps)

    # First-factor commutator bullets, verbatim and corrected readings.
    B.equal("bullet-bb-d-verbatim", commutator(words.b(1, 1), words.b(1, 2)), words.d(),
            report_only=True)
    B.equal("bullet-bb-d-corrected", commutator(words.b(1, 1), words.b(2, 1)), words.d(),
            report_only=True)
    B.equal("bullet-aa-bb", commutator(words.a(1, 1), words.a(2, 1)),
            commutator(words.b(1, 1), words.b(2, 1)).inverse())
    for k in ks:
        for i in (1, 2):
            B.equal(f"bullet-ab-same[i={i},k={k}]",
                    commutator(words.a(i, 1), words.b(i, 1)),
                    commutator(words.f(i, k), words.c(i).inverse()))
        for i, j in ((1, 2), (2, 1)):
            verbatim = (words.c(i) * words.d() ** (2 * j - 3) * words.g(j, k)
                        * words.c(1).inverse() * words.g(2, k).inverse())
            corrected = (words.c(i) * words.d() ** (2 * j - 3) * words.g(j, k)
                         * words.c(i).inverse() * words.g(j, k).inverse())
            B.equal(f"bullet-ab-cross-verbatim[i={i},j={j},k={k}]",
                    commutator(words.a(i, 1), words.b(j, 1)), verbatim, report_only=True)
            B.equal(f"bullet-ab-cross-corrected[i={i},j={j},k={k}]",
                    commutator(words.a(i, 1), words.b(j, 1)), corrected, report_only=True)

    # Cross-factor commutators of first-factor letters with later factors.
    for k in ks:
        for i in (1, 2):
            for j in (1, 2):
                B.identity(f"cross-comm-aa[i={i},j={j},k={k}]",
                           commutator(words.a(i, 1), words.a(j, k)))
                B.identity(f"cross-comm-ab[i={i},j={j},k={k}]",
                           commutator(words.a(i, 1), words.b(j, k)))
                B.identity(f"cross-comm-ba[i={i},j={j},k={k}]",
                           commutator(words.b(i, 1), words.a(j, k)))

    # Rewriting ambient commutators over the kernel alphabet.
    for k in ks:
        for i in (1, 2):
            for j in (1, 2):
                B.conjugate(f"rewrite-bb-first[i={i},j={j},k={k}]",
                            commutator(words.b(i, 1), words.b(j, k)),
                            commutator(words.c(i), words.g(j, k))
                            * commutator(words.c(j).inverse() * words.f(j, k), words.c(i)))
    for k in ks:
        for l in ks:
            for i in (1, 2):
                for j in (1, 2):
                    v_inv = af_comm_value(i, j, 1).inverse()
                    mid_aa = (words.f(i, k).inverse() * words.f(j, l).inverse() * v_inv
                              * words.f(i, k) * words.f(j, l))
                    B.equal(f"rewrite-aa-pair-eq[i={i},j={j},k={k},l={l}]",
                            commutator(words.a(i, k), words.a(j, l)), mid_aa)
                    B.conjugate(f"rewrite-aa-pair[i={i},j={j},k={k},l={l}]",
                                commutator(words.a(i, k), words.a(j, l)),
                                commutator(words.f(i, k), words.f(j, l)) * v_inv)
                    B.conjugate(f"rewrite-ab-pair[i={i},j={j},k={k},l={l}]",
                                commutator(words.a(i, k), words.b(j, l)),
                                commutator(words.f(i, k), words.g(j, l))
                                * ag_comm_value(i, j, 1).inverse())
                    cgi = words.c(i) * words.g(i, k)
                    cgj = words.c(j) * words.g(j, l)
                    mid_bb_verbatim = (cgi.inverse()
                                       * (words.g(j, l) * words.c(j)).inverse() * v_inv
                                       * cgi * (words.c(j) * words.g(j, k)))
                    # corrected: both cg blocks in c-then-g order with the
                    # l superscript, matching the aa-pair shape
                    mid_bb_corrected = cgi.inverse() * cgj.inverse() * v_inv * cgi * cgj
                    B.equal(f"rewrite-bb-pair-eq-verbatim[i={i},j={j},k={k},l={l}]",
                            commutator(words.b(i, k), words.b(j, l)), mid_bb_verbatim,
                            report_only=True)
                    B.equal(f"rewrite-bb-pair-eq-corrected[i={i},j={j},k={k},l={l}]",
                            commutator(words.b(i, k), words.b(j, l)), mid_bb_corrected,
                            report_only=True)
                    B.conjugate(f"rewrite-bb-pair-verbatim[i={i},j={j},k={k},l={l}]",
                                commutator(words.b(i, k), words.b(j, l)),
                                commutator(cgi, words.c(j) * words.g(j, k)) * v_inv,
                                report_only=True)
                    B.conjugate(f"rewrite-bb-pair-corrected[i={i},j={j},k={k},l={l}]",
                                commutator(words.b(i, k), words.b(j, l)),
                                commutator(cgi, words.c(j) * words.g(j, l)) * v_inv,
                                report_only=True)

    # The two printed forms of the c/g relator family.
    for k in ks:
        for i in (1, 2):
            for j in (1, 2):
                B.identity(f"altform-cg[i={i},j={j},k={k}]",
                           commutator(words.c(i), words.g(j, k))
                           * ag_comm_value(i, j, 1).inverse() * words.c(i)
                           * af_comm_value(i, j, 1).inverse() * words.c(i).inverse(),
                           report_only=True)
                B.identity(f"mainform-cg[i={i},j={j},k={k}]",
                           commutator(words.c(i), words.g(j, k))
                           * commutator(words.c(j).inverse() * words.f(j, k), words.c(i)))
        for l in ks:
            if l == k:
                continue
            for i in (1, 2):
                for j in (1, 2):
                    B.identity(f"altform-gcg[i={i},j={j},k={k},l={l}]",
                               commutator(words.g(i, k), words.c(j) * words.g(j, l))
                               * ag_comm_value(j, i, 1),
                               report_only=True)

    # Relator replacements used by the simplification (rank >= 3).
    for i in (1, 2):
        for j in (1, 2):
            B.identity(f"swap-cc[i={i},j={j}]",
                       commutator(words.c(i), words.g(j, r))
                       * commutator(words.c(j).inverse() * words.f(j, r), words.c(i)))
            for k in range(2, r):
                B.identity(f"swap-fg[i={i},j={j},k={k}]",
                           commutator(words.f(i, k), words.g(j, r))
                           * ag_comm_value(i, j, 1).inverse())
                B.identity(f"swap-cgcg[i={i},j={j},l={k}]",
                           commutator(words.c(i) * words.g(i, r), words.c(j) * words.g(j, k))
                           * af_comm_value(i, j, 1).inverse())
    B.identity("swap-xxd", commutator(commutator(words.x(2), words.x(1)), words.d()))

    # Redundant-relator derivations and the twist swap (rank >= 4 only).
    if r >= 4:
        for i in (1, 2):
            B.identity(f"drop-cr-d[i={i}]", commutator(words.c(i, r), words.d()))
            B.identity(f"drop-del-c[i={i}]", commutator(words.delta(), words.c(i)))
            for k in range(2, r):
                B.identity(f"drop-del-f[i={i},k={k}]", commutator(words.delta(), words.f(i, k)))
                B.identity(f"drop-del-g[i={i},k={k}]", commutator(words.delta(), words.g(i, k)))
        for l in range(2, r):
            B.equal(f"aux-d-as-ff[l={l}]", words.d(),
                    commutator(words.f(2, r), words.f(1, l)))
            for k in range(2, r):
                if k == l:
                    continue
                f1r, f2r = words.f(1, r), words.f(2, r)
                f2l, f2k = words.f(2, l), words.f(2, k)
                B.identity(f"aux-ff-vanish[k={k},l={l}]",
                           f2l.inverse() * f1r * f2r.inverse() * f2k * f1r.inverse()
                           * f2l * f1r * f2k.inverse() * f2r * f1r.inverse())
        for l in range(2, r):
            c1g1r = words.c(1) * words.g(1, r)
            c2g2r = words.c(2) * words.g(2, r)
            c1g1l = words.c(1) * words.g(1, l)
            B.identity(f"st-swap-core[l={l}]",
                       commutator(words.f(2, r).inverse(), words.f(1, l).inverse())
                       * c1g1r.inverse()
                       * commutator(c2g2r.inverse(), c1g1l)
                       * c1g1r)
            xpart = (words.x(2).inverse() * words.x(1).inverse()
                     * words.delta() ** -2 * words.x(2) * words.x(1))
            B.equal(f"st-swap-head[l={l}]", xpart,
                    f_twist(r)
                    * words.f(2, r).inverse() * words.f(1, l).inverse()
                    * words.f(2, r) * words.f(1, l))

    # The twist relator family, repaired and verbatim middle letter.
    for k in ks:
        B.identity(f"st-repaired[k={k}]", f_twist(k) * cg_twist(k))
    B.identity(f"st-verbatim[k={r}]", f_twist(r) * cg_twist(r, uncorrected=True),
               report_only=True)

    return B.claims


def corpus_verdicts(r: int) -> dict[str, bool]:
    return {cl.label: evaluate(cl) for cl in identity_corpus(r)}
