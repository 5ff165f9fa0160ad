"""Exhaustive finite-ring searches and the realization audit.

Frozen facts are recomputed inline with plain modular arithmetic wherever a
one-line independent check is possible.
"""

import pytest

from osdrazin.drazin import (
    verify_left_drazin,
    verify_left_strongly_pi,
    verify_right_drazin,
)
from osdrazin.errors import BudgetExceeded, PreconditionFailure
from osdrazin.matrix import SquareMatrix
from osdrazin.rings import IntegersMod
from osdrazin.ringlab import (
    FiniteRingSpec,
    realization_audit,
    search_left_drazin,
    search_left_regular,
    search_left_strongly_pi,
    search_right_drazin,
    search_right_regular,
    search_right_strongly_pi,
)


def _scalar(spec, value):
    return SquareMatrix(spec.ring, [[value]])


class TestFiniteRingSpec:
    def test_element_count(self):
        assert FiniteRingSpec(2, 2).element_count == 16
        assert FiniteRingSpec(1, 6).element_count == 6
        assert FiniteRingSpec(2, 3).element_count == 81

    def test_enumeration_is_lexicographic_and_complete(self):
        spec = FiniteRingSpec(1, 6)
        values = [m.rows[0][0] for m in spec.elements()]
        assert values == [0, 1, 2, 3, 4, 5]
        spec2 = FiniteRingSpec(2, 2)
        seen = {tuple(tuple(r) for r in m.rows) for m in spec2.elements()}
        assert len(seen) == 16

    def test_budget_enforced(self):
        spec = FiniteRingSpec(2, 7, budget=100)
        with pytest.raises(BudgetExceeded):
            spec.check_budget()
        with pytest.raises(BudgetExceeded):
            list(spec.elements())

    def test_bad_parameters(self):
        with pytest.raises(PreconditionFailure):
            FiniteRingSpec(0, 2)
        with pytest.raises(PreconditionFailure):
            FiniteRingSpec(1, 1)

    def test_index_bound_covers_composite_nilpotency(self):
        # over Z_4 the scalar 2 vanishes only at the second power, so the
        # scan bound must exceed the matrix dimension alone
        assert FiniteRingSpec(1, 4).index_bound >= 2

    def test_doc(self):
        doc = FiniteRingSpec(2, 3, budget=500).to_doc()
        assert doc == {"matrix_dim": 2, "modulus": 3, "budget": 500}


class TestScalarSearchesModSix:
    """Z_6 (as 1x1 matrices): every element is strongly pi-regular; frozen
    witness facts recomputed from first principles."""

    spec = FiniteRingSpec(1, 6)

    def test_two_is_its_own_drazin_witness_at_index_one(self):
        # 2^3 == 8 == 2 (mod 6), so x == 2 satisfies x^2 a == x and
        # x a^2 == a^1
        assert (2 * 2 * 2) % 6 == 2
        found = search_left_drazin(self.spec, _scalar(self.spec, 2))
        assert found is not None
        x, j = found
        assert x.rows[0][0] == 2 and j == 1
        assert verify_left_drazin(_scalar(self.spec, 2), x, j)

    def test_strongly_pi_witnesses_are_not_unique(self):
        # both 2 and 5 satisfy x * 2^2 == 2^1 (mod 6): 2*4 == 8 == 2 and
        # 5*4 == 20 == 2; only 2 also passes the full one-sided system
        a = _scalar(self.spec, 2)
        hits = [
            x.rows[0][0]
            for x in self.spec.elements()
            if (x.rows[0][0] * 4) % 6 == 2
        ]
        assert hits == [2, 5]
        assert verify_left_strongly_pi(a, _scalar(self.spec, 5), 1)
        assert not verify_left_drazin(a, _scalar(self.spec, 5), 1)

    def test_every_element_has_witnesses_on_both_sides(self):
        for a in self.spec.elements():
            assert search_left_drazin(self.spec, a) is not None
            assert search_right_drazin(self.spec, a) is not None
            assert search_left_strongly_pi(self.spec, a) is not None
            assert search_right_strongly_pi(self.spec, a) is not None

    def test_regular_search_matches_regularity(self):
        # in Z_6 every element is von Neumann regular (a == a * x * a for
        # some x), hence also one-sided regular in the squared sense used
        # here exactly when a is in the ideal generated by a^2
        for a in self.spec.elements():
            v = a.rows[0][0]
            expected = any((x * v * v) % 6 == v for x in range(6))
            assert (search_left_regular(self.spec, a) is not None) == expected
            assert (search_right_regular(self.spec, a) is not None) == expected


class TestScalarSearchesModFour:
    """Z_4 exercises genuine nilpotency of the composite modulus."""

    spec = FiniteRingSpec(1, 4)

    def test_nilpotent_scalar_witnessed_by_zero(self):
        # 2^2 == 0 (mod 4): the zero witness works at j == 2 and nothing
        # smaller, which requires the scan bound to go past dim == 1
        a = _scalar(self.spec, 2)
        found = search_left_drazin(self.spec, a)
        assert found is not None
        x, j = found
        assert x.rows[0][0] == 0 and j == 2
        assert not verify_left_drazin(a, x, 1)

    def test_right_side_agrees(self):
        a = _scalar(self.spec, 2)
        found = search_right_drazin(self.spec, a)
        assert found is not None
        y, k = found
        assert y.rows[0][0] == 0 and k == 2
        assert verify_right_drazin(a, y, k)


class TestRealizationAudit:
    def test_m2_z2_audit_passes(self):
        report = realization_audit(FiniteRingSpec(2, 2))
        assert report.ok()
        assert report.indices["elements_audited"] == 16
        assert ("all-elements-audited", True) in report.checks
        assert any("exhaustive scan of M_2(Z_2)" in n for n in report.notes)

    def test_z6_audit_passes(self):
        report = realization_audit(FiniteRingSpec(1, 6))
        assert report.ok()
        assert report.indices["elements_audited"] == 6

    def test_z4_audit_passes(self):
        # composite modulus with a genuinely nilpotent scalar
        report = realization_audit(FiniteRingSpec(1, 4))
        assert report.ok()
        assert report.indices["elements_audited"] == 4

    def test_audit_doc_identity(self):
        report = realization_audit(FiniteRingSpec(1, 6))
        doc = report.to_doc()
        assert doc["instance"] == "realization-audit-dim1-mod6"
        assert doc["ok"] is True


class TestSearchConsistency:
    def test_searched_witnesses_pass_predicates_m2_z3(self):
        spec = FiniteRingSpec(2, 3)
        checked = 0
        for a in spec.elements():
            found = search_left_drazin(spec, a)
            assert found is not None  # matrices over a field always qualify
            x, j = found
            assert verify_left_drazin(a, x, j)
            checked += 1
            if checked >= 20:
                break

    def test_strongly_pi_and_drazin_existence_agree_m2_z2(self):
        spec = FiniteRingSpec(2, 2)
        for a in spec.elements():
            lsp = search_left_strongly_pi(spec, a)
            ld = search_left_drazin(spec, a)
            assert (lsp is None) == (ld is None)
