from collections import Counter

import pytest

from surfkernel.corpus import ClaimKind, Claim, claim_images, evaluate, identity_corpus


def by_family(claims):
    out = {}
    for c in claims:
        out.setdefault(c.label.split("[")[0], []).append(c)
    return out


class TestCorpusShape:
    def test_eq3_instance_count_r4(self):
        fams = by_family(identity_corpus(4))
        # i, j in {1,2} x eps = +-1 x k in {2,3,4}
        assert len(fams["conj-af-value"]) == 24

    def test_kinds_present(self):
        kinds = {c.kind for c in identity_corpus(3)}
        assert kinds == {ClaimKind.IDENTITY, ClaimKind.EQUAL, ClaimKind.CONJUGATE}

    def test_rank_gate(self):
        with pytest.raises(ValueError):
            identity_corpus(2)

    def test_rank4_only_families_absent_at_rank3(self):
        fams3 = by_family(identity_corpus(3))
        for name in ("drop-cr-d", "drop-del-c", "aux-d-as-ff", "st-swap-core"):
            assert name not in fams3
        fams4 = by_family(identity_corpus(4))
        for name in ("drop-cr-d", "drop-del-c", "aux-d-as-ff", "st-swap-core"):
            assert name in fams4


class TestMainClaims:
    @pytest.mark.parametrize("r", [3, 4])
    def test_all_hold(self, r):
        failures = [c.label for c in identity_corpus(r)
                    if not c.report_only and not evaluate(c)]
        assert failures == []


class TestReportedReadings:
    """Frozen verdicts for the suspected-typo lines, computed by the product
    oracle: the corrected readings hold, the verbatim readings fail in a
    fixed pattern."""

    @pytest.fixture(scope="class")
    @staticmethod
    def verdicts():
        return {c.label: evaluate(c) for c in identity_corpus(4) if c.report_only}

    def test_bb_d_bullet(self, verdicts):
        assert verdicts["bullet-bb-d-verbatim"] is False
        assert verdicts["bullet-bb-d-corrected"] is True

    def test_ab_cross_bullet(self, verdicts):
        # the printed fixed indices happen to agree with (i,j) = (1,2)
        for k in (2, 3, 4):
            assert verdicts[f"bullet-ab-cross-verbatim[i=1,j=2,k={k}]"] is True
            assert verdicts[f"bullet-ab-cross-verbatim[i=2,j=1,k={k}]"] is False
            assert verdicts[f"bullet-ab-cross-corrected[i=1,j=2,k={k}]"] is True
            assert verdicts[f"bullet-ab-cross-corrected[i=2,j=1,k={k}]"] is True

    def test_bb_pair_rewrites(self, verdicts):
        groups = Counter()
        for label, v in verdicts.items():
            fam = label.split("[")[0]
            if fam.startswith("rewrite-bb-pair"):
                groups[(fam, v)] += 1
        assert groups[("rewrite-bb-pair-eq-verbatim", False)] == 36
        assert groups[("rewrite-bb-pair-eq-corrected", True)] == 36
        assert groups[("rewrite-bb-pair-corrected", True)] == 36
        # the verbatim conjugacy reading fails exactly when i != j and k != l
        assert groups[("rewrite-bb-pair-verbatim", True)] == 24
        assert groups[("rewrite-bb-pair-verbatim", False)] == 12
        for label, v in verdicts.items():
            if label.startswith("rewrite-bb-pair-verbatim"):
                idx = dict(kv.split("=") for kv in label.split("[")[1][:-1].split(","))
                expect = not (idx["i"] != idx["j"] and idx["k"] != idx["l"])
                assert v is expect, label

    def test_alternative_relator_forms_hold(self, verdicts):
        alts = [v for label, v in verdicts.items() if label.startswith("altform-")]
        assert alts and all(alts)

    def test_verbatim_twist_middle_fails(self, verdicts):
        assert verdicts["st-verbatim[k=4]"] is False


class TestClaimImages:
    def test_mixed_alphabet(self):
        images = claim_images(3)
        from surfkernel.words import sym
        assert sym("a", 1, 1) in images
        assert sym("x", 1) in images
        assert sym("c", 1, 3) in images
