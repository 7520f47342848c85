"""Finite presentations of the torus-map kernel and its ambient relatives.

Five presentation variants are generated, all on explicit indexed
generators and with every relator carrying a provenance label:

* ``PRODUCT_FULL``      -- the whole rank-r product, rewritten on the
  torus lifts x1, x2 and the kernel generators.
* ``SURFACE_LAST``      -- the last surface factor in fiber-product form.
* ``KERNEL_FULL``       -- the kernel, as output by the fiber-product
  construction (extra generators x_i, f_i^(r), c_i^(r), del).
* ``KERNEL_SIMPLIFIED`` -- the simplified kernel presentation, rank >= 4.
* ``KERNEL_R3``         -- the explicit rank-3 kernel presentation.

The parametrized word families here (commutator values, twist words) are
exactly the ones the relator lists quote; all of them live over the
kernel alphabet with the sup-2 letters fixed inside the values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from . import words
from .ambient import AmbientWord
from .words import EMPTY, Symbol, Word, commutator, substitute, sym


class BadIndex(ValueError):
    pass


class BadRank(ValueError):
    pass


class VariantRankMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# Parametrized word families
# ---------------------------------------------------------------------------


def _check_ij_eps(i: int, j: int, eps: int) -> None:
    if i not in (1, 2) or j not in (1, 2) or eps not in (1, -1):
        raise BadIndex(f"need i, j in {{1,2}} and eps = +-1, got {(i, j, eps)}")


def af_comm_value(i: int, j: int, eps: int) -> Word:
    """Kernel word equal to [(a_i)^eps, f_j^(k)] in the product (sup 2 fixed)."""
    _check_ij_eps(i, j, eps)
    if i == j:
        return EMPTY
    if eps == 1:
        return words.d() ** (2 * i - 3)
    return words.f(i, 2).inverse() * words.d() ** (3 - 2 * i) * words.f(i, 2)


def ag_comm_value(i: int, j: int, eps: int) -> Word:
    """Kernel word equal to [(a_i)^eps, g_j^(k)] in the product (sup 2 fixed)."""
    _check_ij_eps(i, j, eps)
    if i == j:
        return commutator(words.f(i, 2) ** eps, words.c(i).inverse())
    if eps == 1:
        return words.f(i, 2) * words.c(j).inverse() * words.f(i, 2).inverse() * words.d() ** (2 * i - 3) * words.c(j)
    return words.f(i, 2).inverse() * words.c(j).inverse() * words.d() ** (3 - 2 * i) * words.f(i, 2) * words.c(j)


def _check_k(k: int, r: int | None = None) -> None:
    if k < 2 or (r is not None and k > r):
        raise BadIndex(f"need 2 <= k <= rank, got k={k}")


def f_twist(k: int) -> Word:
    """(f1^(k))^-1 (f2^(k))^-1 d f1^(k) f2^(k)."""
    _check_k(k)
    f1, f2 = words.f(1, k), words.f(2, k)
    return f1.inverse() * f2.inverse() * words.d() * f1 * f2


def cg_twist(k: int, uncorrected: bool = False) -> Word:
    """(c1 g1^(k))^-1 (c2 g2^(k))^-1 d c1 g1^(k) c2 g2^(k).

    The middle c1 is printed with superscript k in one source line; that
    reading is reproducible with ``uncorrected=True`` (it fails the
    product oracle, see the corpus report).
    """
    _check_k(k)
    c1, c2 = words.c(1), words.c(2)
    g1, g2 = words.g(1, k), words.g(2, k)
    middle_c1 = words.c(1, k) if uncorrected else c1
    return (c1 * g1).inverse() * (c2 * g2).inverse() * words.d() * middle_c1 * g1 * c2 * g2


def factor_twist_relator(k: int) -> Word:
    """f_twist(k) * cg_twist(k): the sup-k surface relation over kernel words."""
    return f_twist(k) * cg_twist(k)


def surface_lift_relator(k: int) -> Word:
    """The first-factor surface relation rewritten over kernel generators."""
    _check_k(k)
    c1, c2 = words.c(1), words.c(2)
    f1, f2 = words.f(1, k), words.f(2, k)
    dd = words.d()
    return (
        dd.inverse() * c1.inverse() * f1 * c2.inverse() * f1.inverse()
        * dd.inverse() * f2 * c1 * f2.inverse() * c2
    )


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


class Variant(enum.Enum):
    PRODUCT_FULL = "thmG"
    SURFACE_LAST = "prop-surface"
    KERNEL_FULL = "thm4.1"
    KERNEL_SIMPLIFIED = "thm1.1"
    KERNEL_R3 = "r3"

    @property
    def min_rank(self) -> int:
        return {Variant.PRODUCT_FULL: 2, Variant.KERNEL_SIMPLIFIED: 4}.get(self, 3)


def check_variant_rank(variant: Variant, r: int) -> None:
    if variant is Variant.KERNEL_R3:
        if r != 3:
            raise VariantRankMismatch(f"{variant.value} requires rank 3, got {r}")
    elif r < variant.min_rank:
        raise VariantRankMismatch(f"{variant.value} requires rank >= {variant.min_rank}, got {r}")


@dataclass(frozen=True)
class Relator:
    word: Word
    provenance: str


@dataclass(frozen=True)
class Presentation:
    variant: Variant
    rank: int
    generators: tuple[Symbol, ...]
    relators: tuple[Relator, ...]
    duplicates_removed: int = 0

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generators")
        for rel in self.relators:
            if not rel.word:
                raise ValueError(f"empty relator ({rel.provenance})")
            extra = rel.word.symbols() - gens
            if extra:
                raise ValueError(f"relator {rel.provenance} uses undeclared generators {extra}")

    def words(self) -> list[Word]:
        return [rel.word for rel in self.relators]


def _label(fam: str, **idx: int) -> str:
    if not idx:
        return fam
    inner = ",".join(f"{k}={v}" for k, v in idx.items())
    return f"{fam}[{inner}]"


def _dedup(relators: Iterable[Relator]) -> tuple[tuple[Relator, ...], int]:
    seen: set[Word] = set()
    out: list[Relator] = []
    dropped = 0
    for rel in relators:
        if rel.word in seen:
            dropped += 1
            continue
        seen.add(rel.word)
        out.append(rel)
    return tuple(out), dropped


def _norm_conj(u: Word, t: Word, v: Word, eps: int) -> Word:
    """u^eps t u^-eps v^eps t^-1 v^-eps."""
    return u ** eps * t * u ** -eps * v ** eps * t.inverse() * v ** -eps


def _kernel_gens(r: int, k_hi: int) -> list[Symbol]:
    out = [sym("c", 1, 1), sym("c", 2, 1), sym("d")]
    for k in range(2, k_hi + 1):
        for i in (1, 2):
            out.append(sym("f", i, k))
            out.append(sym("g", i, k))
    return out


def _pair_families(k_range: Iterable[int]):
    """Yield (i, j, k, l) with k != l over the supplied superscript range."""
    ks = list(k_range)
    for k in ks:
        for l in ks:
            if l == k:
                continue
            for i in (1, 2):
                for j in (1, 2):
                    yield i, j, k, l


def _shared_kernel_relators(k_range: list[int]) -> list[Relator]:
    """Families common to the product and kernel presentations."""
    rels: list[Relator] = []
    for k in k_range:
        for i in (1, 2):
            for j in (1, 2):
                rels.append(Relator(
                    commutator(words.c(i), words.g(j, k))
                    * commutator(words.c(j).inverse() * words.f(j, k), words.c(i)),
                    _label("pair-cg", i=i, j=j, k=k)))
    for i, j, k, l in _pair_families(k_range):
        rels.append(Relator(
            commutator(words.f(i, k), words.f(j, l)) * af_comm_value(i, j, 1).inverse(),
            _label("pair-ff", i=i, j=j, k=k, l=l)))
    for i, j, k, l in _pair_families(k_range):
        rels.append(Relator(
            commutator(words.f(i, k), words.g(j, l)) * ag_comm_value(i, j, 1).inverse(),
            _label("pair-fg", i=i, j=j, k=k, l=l)))
    for i, j, k, l in _pair_families(k_range):
        rels.append(Relator(
            commutator(words.c(i) * words.g(i, k), words.c(j) * words.g(j, l))
            * af_comm_value(i, j, 1).inverse(),
            _label("pair-cgcg", i=i, j=j, k=k, l=l)))
    for k in k_range:
        rels.append(Relator(surface_lift_relator(k), _label("surface-lift", k=k)))
        rels.append(Relator(factor_twist_relator(k), _label("surface-st", k=k)))
    return rels


def _x_action_relators(k_range: list[int]) -> list[Relator]:
    """Conjugation action of the torus lifts on the kernel generators."""
    rels: list[Relator] = []
    for k in k_range:
        for i in (1, 2):
            for j in (1, 2):
                rels.append(Relator(
                    commutator(words.x(i), words.f(j, k)) * af_comm_value(i, j, 1).inverse(),
                    _label("comm-xf", i=i, j=j, k=k)))
    for k in k_range:
        for i in (1, 2):
            for j in (1, 2):
                rels.append(Relator(
                    commutator(words.x(i), words.g(j, k)) * ag_comm_value(i, j, 1).inverse(),
                    _label("comm-xg", i=i, j=j, k=k)))
    for k in k_range:
        for i in (1, 2):
            for j in (1, 2):
                for eps in (1, -1):
                    rels.append(Relator(
                        _norm_conj(words.x(i), words.c(j), words.f(i, k), eps),
                        _label("conj-xc", i=i, j=j, eps=eps, k=k)))
    for k in k_range:
        for i in (1, 2):
            for eps in (1, -1):
                rels.append(Relator(
                    _norm_conj(words.x(i), words.d(), words.f(i, k), eps),
                    _label("conj-xd", i=i, eps=eps, k=k)))
    return rels


def _last_factor_relator(r: int) -> Word:
    """del^-2 x2 x1 [(x1 c1^(r))^-1, (x2 c2^(r))^-1] x2^-1 x1^-1."""
    u1 = (words.x(1) * words.c(1, r)).inverse()
    u2 = (words.x(2) * words.c(2, r)).inverse()
    return (
        words.delta() ** -2 * words.x(2) * words.x(1)
        * commutator(u1, u2) * words.x(2).inverse() * words.x(1).inverse()
    )


def _block_commutators(block_a: list[Symbol], block_b: list[Symbol]) -> list[Relator]:
    return [
        Relator(commutator(Word.gen(sa), Word.gen(sb)), f"comm-block[{sa},{sb}]")
        for sa in block_a
        for sb in block_b
    ]


def build_presentation(r: int, variant: Variant) -> Presentation:
    check_variant_rank(variant, r)
    builder = {
        Variant.PRODUCT_FULL: _build_product_full,
        Variant.SURFACE_LAST: _build_surface_last,
        Variant.KERNEL_FULL: _build_kernel_full,
        Variant.KERNEL_SIMPLIFIED: _build_kernel_simplified,
        Variant.KERNEL_R3: _build_kernel_r3,
    }[variant]
    gens, rels = builder(r)
    rels, dropped = _dedup(rels)
    return Presentation(variant, r, tuple(sorted(gens, key=Symbol.key)), rels, dropped)


def _build_product_full(r: int):
    gens = [sym("x", 1), sym("x", 2)] + _kernel_gens(r, r)
    k_range = list(range(2, r + 1))
    rels = _x_action_relators(k_range)
    rels.append(Relator(commutator(words.x(1), words.x(2)) * words.d(), "torus-comm"))
    rels += _shared_kernel_relators(k_range)
    return gens, rels


def _build_surface_last(r: int):
    gens = [sym("x", 1), sym("x", 2), sym("c", 1, r), sym("c", 2, r), sym("del")]
    rels = [
        Relator(commutator(words.x(1), words.x(2)) * words.delta(), "torus-comm"),
        Relator(_last_factor_relator(r), "last-factor"),
    ]
    return gens, rels


def _kernel_block_a(r: int) -> list[Symbol]:
    return _kernel_gens(r, r - 1)


def _kernel_block_b(r: int) -> list[Symbol]:
    return [sym("c", 1, r), sym("c", 2, r), sym("del")]


def _build_kernel_full(r: int):
    block_a = _kernel_block_a(r)
    block_b = _kernel_block_b(r)
    gens = [sym("x", 1), sym("x", 2), sym("f", 1, r), sym("f", 2, r)] + block_a + block_b
    k_range = list(range(2, r))
    rels = _x_action_relators(k_range)
    rels.append(Relator(commutator(words.x(1), words.x(2)) * words.delta() * words.d(), "torus-comm"))
    rels += _shared_kernel_relators(k_range)
    rels.append(Relator(_last_factor_relator(r), "last-factor"))
    rels += _block_commutators(block_a, block_b)
    for i in (1, 2):
        rels.append(Relator(words.f(i, r) * words.x(i).inverse(), _label("f-equals-x", i=i)))
    return gens, rels


def _build_kernel_simplified(r: int):
    gens = _kernel_gens(r, r)
    k_range = list(range(2, r + 1))
    rels: list[Relator] = []
    for i, j, k, l in _pair_families(k_range):
        for eps in (1, -1):
            rels.append(Relator(
                _norm_conj(words.f(i, k), words.c(j), words.f(i, l), eps),
                _label("conj-fc", i=i, j=j, eps=eps, k=k, l=l)))
    for k in k_range:
        for l in k_range:
            if l == k:
                continue
            for i in (1, 2):
                for eps in (1, -1):
                    rels.append(Relator(
                        _norm_conj(words.f(i, k), words.d(), words.f(i, l), eps),
                        _label("conj-fd", i=i, eps=eps, k=k, l=l)))
    rels.append(Relator(
        commutator(commutator(words.f(1, r), words.f(2, r)), words.d()), "comm-ffd"))
    rels += _shared_kernel_relators(k_range)
    return gens, rels


def _build_kernel_r3(r: int):
    block_a = _kernel_block_a(3)
    block_b = _kernel_block_b(3)
    gens = [sym("x", 1), sym("x", 2)] + block_a + block_b
    rels = _x_action_relators([2])
    rels.append(Relator(commutator(words.x(1), words.x(2)) * words.delta() * words.d(), "torus-comm"))
    for i in (1, 2):
        for j in (1, 2):
            rels.append(Relator(
                commutator(words.c(i), words.g(j, 2))
                * commutator(words.c(j).inverse() * words.f(j, 2), words.c(i)),
                _label("pair-cg", i=i, j=j, k=2)))
    rels += _block_commutators(block_a, block_b)
    rels.append(Relator(surface_lift_relator(2), _label("surface-lift", k=2)))
    rels.append(Relator(factor_twist_relator(2), _label("surface-st", k=2)))
    rels.append(Relator(_last_factor_relator(3), "last-factor"))
    return gens, rels


# ---------------------------------------------------------------------------
# Substitution maps: embeddings, the product lift, and projection preimages
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubstitutionMap:
    """A homomorphism given by generator images, applied by substitution."""

    name: str
    images: Mapping[Symbol, Word]
    rank: int | None = None

    def apply(self, w: Word) -> Word:
        return substitute(w, self.images)

    def apply_ambient(self, w: Word) -> AmbientWord:
        if self.rank is None:
            raise ValueError(f"map {self.name} has no ambient codomain")
        return AmbientWord(self.apply(w), self.rank)


def standard_kernel_images(r: int) -> dict[Symbol, Word]:
    """The defining images of the kernel generators inside the product."""
    images = {
        sym("c", 1, 1): words.a(1, 1) * words.b(1, 1).inverse(),
        sym("c", 2, 1): words.a(2, 1) * words.b(2, 1).inverse(),
        sym("d"): commutator(words.b(1, 1), words.b(2, 1)),
    }
    for k in range(2, r + 1):
        for i in (1, 2):
            images[sym("f", i, k)] = words.a(i, 1) * words.a(i, k).inverse()
            images[sym("g", i, k)] = words.b(i, 1) * words.b(i, k).inverse()
    return images


def product_lift_map(r: int) -> SubstitutionMap:
    """Images for the product presentation: x_i goes to a_i in factor 1."""
    images = standard_kernel_images(r)
    images[sym("x", 1)] = words.a(1, 1)
    images[sym("x", 2)] = words.a(2, 1)
    return SubstitutionMap("product-lift", images, rank=r)


def embedding_map(r: int, variant: Variant) -> SubstitutionMap:
    """Generator images in the rank-r product, per presentation variant."""
    check_variant_rank(variant, r)
    if variant is Variant.PRODUCT_FULL:
        return product_lift_map(r)
    if variant is Variant.SURFACE_LAST:
        images = {
            sym("x", 1): words.a(1, r).inverse(),
            sym("x", 2): words.a(2, r).inverse(),
            sym("c", 1, r): words.a(1, r) * words.b(1, r).inverse(),
            sym("c", 2, r): words.a(2, r) * words.b(2, r).inverse(),
            sym("del"): commutator(words.a(2, r).inverse(), words.a(1, r).inverse()),
        }
        return SubstitutionMap("surface-last", images, rank=r)
    images = standard_kernel_images(r)
    for i in (1, 2):
        images[sym("x", i)] = images[sym("f", i, r)]
        # c_i^(r) is the composite (f_i^(r))^-1 c_i g_i^(r); it reduces to
        # the last-factor analogue of c_i.
        images[sym("c", i, r)] = (
            images[sym("f", i, r)].inverse() * images[sym("c", i, 1)] * images[sym("g", i, r)]
        )
    images[sym("del")] = (
        commutator(images[sym("f", 2, r)], images[sym("f", 1, r)]) * images[sym("d")].inverse()
    )
    return SubstitutionMap(f"kernel-embedding-{variant.value}", images, rank=r)


def lifting_map(r: int) -> SubstitutionMap:
    """Rewrite ambient generators over the product presentation generators."""
    if r < 2:
        raise BadRank(f"rank must be >= 2, got {r}")
    images: dict[Symbol, Word] = {}
    for i in (1, 2):
        images[sym("a", i, 1)] = words.x(i)
        images[sym("b", i, 1)] = words.c(i).inverse() * words.x(i)
        for k in range(2, r + 1):
            images[sym("a", i, k)] = words.f(i, k).inverse() * words.x(i)
            images[sym("b", i, k)] = words.g(i, k).inverse() * words.c(i).inverse() * words.x(i)
    return SubstitutionMap("ambient-lift", images, rank=None)


def projection_preimages(r: int) -> dict[Symbol, Word]:
    """Kernel words projecting onto each generator of the first r-1 factors.

    Projection here means deleting the last-factor letters from the
    embedding image; surjectivity of that projection is what these words
    witness.
    """
    if r < 3:
        raise BadRank(f"rank must be >= 3, got {r}")
    out: dict[Symbol, Word] = {}
    for i in (1, 2):
        out[sym("a", i, 1)] = words.f(i, r)
        out[sym("b", i, 1)] = words.g(i, r)
        for k in range(2, r):
            out[sym("a", i, k)] = words.f(i, k).inverse() * words.f(i, r)
            out[sym("b", i, k)] = words.g(i, k).inverse() * words.g(i, r)
    return out
