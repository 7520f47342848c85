from collections import Counter

import pytest

from surfkernel import words
from surfkernel.ambient import (
    AmbientWord,
    are_equal,
    drop_factor,
    in_kernel,
    is_identity,
    project,
    surface_relator,
)
from surfkernel.presentations import (
    BadIndex,
    BadRank,
    Presentation,
    Relator,
    SubstitutionMap,
    Variant,
    VariantRankMismatch,
    af_comm_value,
    ag_comm_value,
    build_presentation,
    cg_twist,
    embedding_map,
    f_twist,
    factor_twist_relator,
    lifting_map,
    product_lift_map,
    projection_preimages,
    standard_kernel_images,
)
from surfkernel.words import EMPTY, Word, commutator, substitute, sym


class TestCommutatorValues:
    def test_equal_indices_give_identity(self):
        assert af_comm_value(1, 1, 1) == EMPTY
        assert af_comm_value(2, 2, -1) == EMPTY

    def test_unequal_positive(self):
        assert af_comm_value(2, 1, 1) == words.d()
        assert af_comm_value(1, 2, 1) == words.d().inverse()

    def test_unequal_negative(self):
        assert af_comm_value(1, 2, -1) == words.f(1, 2).inverse() * words.d() * words.f(1, 2)

    def test_ag_equal_indices(self):
        want = words.f(1, 2) * words.c(1).inverse() * words.f(1, 2).inverse() * words.c(1)
        assert ag_comm_value(1, 1, 1) == want

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            af_comm_value(3, 1, 1)
        with pytest.raises(BadIndex):
            ag_comm_value(1, 1, 0)


class TestTwistWords:
    def test_f_twist_letters(self):
        want = (words.f(1, 3).inverse() * words.f(2, 3).inverse() * words.d()
                * words.f(1, 3) * words.f(2, 3))
        assert f_twist(3) == want
        assert len(f_twist(3)) == 5

    def test_cg_twist_letter_count(self):
        # counting the letters of the defining expression:
        # (c1 g1)^-1 (c2 g2)^-1 d c1 g1 c2 g2 -> 2+2+1+1+1+1+1 = 9
        assert len(cg_twist(2)) == 9
        # and the combined twist relator has 5 + 9 = 14 letters
        assert len(factor_twist_relator(2)) == 14

    def test_twist_relator_vanishes_in_product(self):
        images = standard_kernel_images(4)
        for k in (2, 3, 4):
            w = substitute(factor_twist_relator(k), images)
            assert is_identity(AmbientWord(w, 4))

    def test_uncorrected_middle_letter_fails(self):
        images = dict(standard_kernel_images(3))
        images[sym("c", 1, 3)] = words.a(1, 3) * words.b(1, 3).inverse()
        w = substitute(f_twist(3) * cg_twist(3, uncorrected=True), images)
        assert not is_identity(AmbientWord(w, 3))

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            f_twist(1)


def family_census(p: Presentation) -> Counter:
    return Counter(rel.provenance.split("[")[0] for rel in p.relators)


class TestKernelFull:
    def test_generator_count(self):
        # x1, x2, f_i^(r) (4), block A (3 + 4(r-2)), block B (3)
        for r in (3, 4, 6):
            p = build_presentation(r, Variant.KERNEL_FULL)
            assert len(p.generators) == 4 + (3 + 4 * (r - 2)) + 3 == 4 * r + 2

    def test_family_counts_r4(self):
        census = family_census(build_presentation(4, Variant.KERNEL_FULL))
        assert census["conj-xc"] == 2 * 2 * 2 * 2   # i, j, eps, k in {2,3}
        assert census["conj-xd"] == 2 * 2 * 2
        assert census["comm-xf"] == census["comm-xg"] == 2 * 2 * 2
        assert census["pair-ff"] == census["pair-fg"] == census["pair-cgcg"] == 2 * 2 * 2
        assert census["pair-cg"] == 2 * 2 * 2
        assert census["surface-lift"] == census["surface-st"] == 2
        assert census["comm-block"] == 11 * 3
        assert census["torus-comm"] == 1
        assert census["last-factor"] == 1
        assert census["f-equals-x"] == 2

    def test_no_duplicates(self):
        p = build_presentation(5, Variant.KERNEL_FULL)
        assert p.duplicates_removed == 0
        assert len({rel.word for rel in p.relators}) == len(p.relators)


class TestKernelSimplified:
    def test_generator_count(self):
        for r in (4, 5, 7):
            p = build_presentation(r, Variant.KERNEL_SIMPLIFIED)
            assert len(p.generators) == 4 * r - 1

    def test_rank_gate(self):
        with pytest.raises(VariantRankMismatch):
            build_presentation(3, Variant.KERNEL_SIMPLIFIED)

    def test_family_counts_r4(self):
        census = family_census(build_presentation(4, Variant.KERNEL_SIMPLIFIED))
        pairs = 3 * 2  # ordered (k, l), k != l in {2,3,4}
        assert census["conj-fc"] == 4 * 2 * pairs
        assert census["conj-fd"] == 2 * 2 * pairs
        assert census["comm-ffd"] == 1
        assert census["pair-ff"] == census["pair-fg"] == census["pair-cgcg"] == 4 * pairs
        assert census["pair-cg"] == 4 * 3
        assert census["surface-lift"] == census["surface-st"] == 3


class TestKernelR3:
    def test_exact_census(self):
        p = build_presentation(3, Variant.KERNEL_R3)
        assert len(p.generators) == 12
        census = family_census(p)
        assert census == Counter({
            "conj-xc": 8, "conj-xd": 4, "torus-comm": 1, "pair-cg": 4,
            "comm-xf": 4, "comm-xg": 4, "comm-block": 21,
            "surface-lift": 1, "surface-st": 1, "last-factor": 1,
        })

    def test_rank_gate(self):
        with pytest.raises(VariantRankMismatch):
            build_presentation(4, Variant.KERNEL_R3)

    def test_matches_kernel_full_after_identification(self):
        """The explicit rank-3 lists are the general shape with the f^(3)
        generators eliminated against x (f^(3) is read as x there)."""
        r3 = {rel.word for rel in build_presentation(3, Variant.KERNEL_R3).relators}
        full = build_presentation(3, Variant.KERNEL_FULL)
        mapping = {s: Word.gen(s) for s in full.generators}
        for i in (1, 2):
            mapping[sym("f", i, 3)] = words.x(i)
        identified = set()
        for rel in full.relators:
            w = substitute(rel.word, mapping)
            if w:
                identified.add(w)
        assert identified == r3


class TestProductFull:
    def test_generator_count(self):
        for r in (2, 3, 5):
            p = build_presentation(r, Variant.PRODUCT_FULL)
            assert len(p.generators) == 4 * r + 1

    def test_all_relators_vanish(self):
        p = build_presentation(3, Variant.PRODUCT_FULL)
        psi = embedding_map(3, Variant.PRODUCT_FULL)
        for rel in p.relators:
            assert is_identity(psi.apply_ambient(rel.word)), rel.provenance

    def test_minimum_rank(self):
        build_presentation(2, Variant.PRODUCT_FULL)
        with pytest.raises(VariantRankMismatch):
            build_presentation(1, Variant.PRODUCT_FULL)


class TestSurfaceLast:
    def test_two_relators(self):
        p = build_presentation(3, Variant.SURFACE_LAST)
        assert len(p.generators) == 5
        assert len(p.relators) == 2

    def test_relators_live_in_last_factor(self):
        p = build_presentation(3, Variant.SURFACE_LAST)
        emb = embedding_map(3, Variant.SURFACE_LAST)
        for rel in p.relators:
            img = emb.apply_ambient(rel.word)
            parts = project(img)
            assert all(part == EMPTY for part in parts[:-1])
            assert is_identity(img), rel.provenance


class TestEmbeddings:
    def test_last_factor_c_image(self):
        emb = embedding_map(4, Variant.KERNEL_FULL)
        assert emb.images[sym("c", 1, 4)] == words.a(1, 4) * words.b(1, 4).inverse()

    def test_kernel_membership_of_all_generator_images(self):
        for r, variant in ((3, Variant.KERNEL_R3), (4, Variant.KERNEL_FULL),
                           (4, Variant.KERNEL_SIMPLIFIED)):
            emb = embedding_map(r, variant)
            p = build_presentation(r, variant)
            for s in p.generators:
                assert in_kernel(AmbientWord(emb.images[s], r)), s

    def test_delta_image_matches_last_factor_form(self):
        # the product [x1,x2] del d maps to the identity, which ties the
        # kernel image of del to the last-factor commutator form
        emb = embedding_map(3, Variant.KERNEL_FULL)
        w = commutator(words.x(1), words.x(2)) * words.delta() * words.d()
        assert is_identity(emb.apply_ambient(w))
        last = project(AmbientWord(emb.images[sym("del")], 3))[2]
        assert last == commutator(words.a(2, 3).inverse(), words.a(1, 3).inverse())

    def test_variant_rank_checked(self):
        with pytest.raises(VariantRankMismatch):
            embedding_map(3, Variant.KERNEL_SIMPLIFIED)


class TestLiftingMap:
    def test_round_trip_on_ambient_generators(self):
        r = 3
        lift = lifting_map(r)
        psi = product_lift_map(r)
        for s in lift.images:
            got = substitute(lift.images[s], psi.images)
            assert got == Word.gen(s)

    def test_b_image(self):
        lift = lifting_map(3)
        assert lift.images[sym("b", 1, 1)] == words.c(1).inverse() * words.x(1)

    def test_surface_relator_round_trip(self):
        lift = lifting_map(3)
        psi = product_lift_map(3)
        for k in (1, 2, 3):
            lifted = substitute(surface_relator(k), lift.images)
            assert is_identity(psi.apply_ambient(lifted))


class TestProjectionPreimages:
    def test_count(self):
        for r in (3, 4, 6):
            assert len(projection_preimages(r)) == 4 * (r - 1)

    def test_examples(self):
        pre = projection_preimages(4)
        assert pre[sym("a", 1, 1)] == words.f(1, 4)
        assert pre[sym("b", 2, 1)] == words.g(2, 4)
        assert pre[sym("a", 1, 2)] == words.f(1, 2).inverse() * words.f(1, 4)

    def test_projections_hit_named_generators(self):
        r = 4
        emb = embedding_map(r, Variant.KERNEL_SIMPLIFIED)
        for target, kw in projection_preimages(r).items():
            img = drop_factor(emb.apply_ambient(kw), r)
            assert are_equal(img, AmbientWord(Word.gen(target), r - 1)), target

    def test_bad_rank(self):
        with pytest.raises(BadRank):
            projection_preimages(2)


class TestPresentationInvariants:
    def test_relators_use_declared_generators(self):
        with pytest.raises(ValueError):
            Presentation(Variant.KERNEL_R3, 3, (sym("d"),),
                         (Relator(words.c(1), "stray"),))

    def test_no_empty_relators(self):
        with pytest.raises(ValueError):
            Presentation(Variant.KERNEL_R3, 3, (sym("d"),), (Relator(EMPTY, "empty"),))

    def test_substitution_map_requires_rank_for_ambient(self):
        m = SubstitutionMap("t", {sym("d"): words.d()}, rank=None)
        with pytest.raises(ValueError):
            m.apply_ambient(words.d())
