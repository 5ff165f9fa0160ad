"""Exact spectra: polynomial helpers, planted Jordan structure, point
indices, group spectra, and the product / pair spectral identities.

Independent oracles:
  * polynomial division is checked by reconstructing f == q*(t - r) + rem;
  * charpoly is checked against companion matrices (planted polynomial),
    triangular matrices (product of diagonal factors), and evaluation at
    points outside the interpolation nodes;
  * planted Jordan structure fixes every eigenvalue, multiplicity, and
    point index in advance.
"""

import random

import pytest
from hypothesis import given, strategies as st

from osdrazin.errors import (
    DimensionMismatch,
    OsdrazinError,
    PreconditionFailure,
    UnsupportedRing,
)
from osdrazin.generators import random_matrix
from osdrazin.intertwine import IntertwinePair, pair_exhaustive
from osdrazin.matrix import SquareMatrix
from osdrazin.rings import QQ, QQI, GaussianRational, IntegersMod, mpq
from osdrazin.spectra import (
    JordanSpec,
    SpectrumReport,
    charpoly,
    detect_eigenvalues,
    format_poly,
    group_spectrum,
    intertwine_identity_check,
    jordan_block,
    jordan_realize,
    point_index,
    poly_equal,
    poly_eval,
    poly_from_roots,
    poly_mul,
    poly_trim,
    product_identity_check,
    rational_root_candidates,
    synthetic_divide,
)

small_rationals = st.builds(mpq, st.integers(-6, 6), st.integers(1, 4))


def _companion(ring, monic):
    """Companion matrix of a monic polynomial (low-first coefficients)."""
    n = len(monic) - 1
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = ring.one
    for i in range(n):
        rows[i][n - 1] = ring.reduce(-monic[i])
    return SquareMatrix(ring, rows)


class TestPolynomialHelpers:
    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_poly_from_roots_reconstructs(self, roots):
        coeffs = poly_from_roots(QQ, roots)
        assert len(coeffs) == len(roots) + 1
        assert coeffs[-1] == QQ.one
        for r in roots:
            assert poly_eval(QQ, coeffs, r) == QQ.zero

    @given(
        st.lists(small_rationals, min_size=1, max_size=4),
        st.lists(small_rationals, min_size=1, max_size=4),
        small_rationals,
    )
    def test_poly_mul_matches_evaluation(self, f, g, point):
        prod = poly_mul(QQ, f, g)
        lhs = poly_eval(QQ, prod, point)
        rhs = QQ.reduce(poly_eval(QQ, f, point) * poly_eval(QQ, g, point))
        assert lhs == rhs

    @given(st.lists(small_rationals, min_size=2, max_size=5), small_rationals)
    def test_synthetic_divide_reconstructs(self, coeffs, root):
        quot, rem = synthetic_divide(QQ, coeffs, root)
        rebuilt = poly_mul(QQ, quot, [QQ.reduce(-root), QQ.one])
        rebuilt[0] = QQ.reduce(rebuilt[0] + rem)
        assert poly_equal(QQ, rebuilt, coeffs)

    def test_synthetic_divide_rejects_constants(self):
        with pytest.raises(PreconditionFailure):
            synthetic_divide(QQ, [mpq(3)], mpq(1))

    def test_trim_and_format(self):
        assert poly_trim(QQ, [mpq(1), mpq(0), mpq(0)]) == [mpq(1)]
        assert poly_trim(QQ, [mpq(0)]) == [mpq(0)]
        assert format_poly(QQ, [mpq(1, 2), mpq(-3)]) == ["1/2", "-3"]


class TestCharpoly:
    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_companion_matrix_recovers_planted_polynomial(self, lower):
        monic = list(lower) + [QQ.one]
        a = _companion(QQ, monic)
        assert poly_equal(QQ, charpoly(a), monic)

    def test_triangular_oracle(self):
        a = SquareMatrix(QQ, [[2, 5, 1], [0, 3, 7], [0, 0, 2]])
        expected = poly_from_roots(QQ, [mpq(2), mpq(3), mpq(2)])
        assert poly_equal(QQ, charpoly(a), expected)

    @given(st.integers(1, 3), st.integers(0, 10**6))
    def test_evaluation_outside_interpolation_nodes(self, dim, seed):
        rng = random.Random(seed)
        a = random_matrix(rng, QQ, dim)
        coeffs = charpoly(a)
        eye = SquareMatrix.identity(QQ, dim)
        for s in (-1, dim + 5):
            det = (eye.scale(QQ.coerce(s)) - a).det()
            assert poly_eval(QQ, coeffs, QQ.coerce(s)) == det

    def test_gaussian_matrix(self):
        i = GaussianRational(0, 1)
        a = SquareMatrix(QQI, [[i, QQI.zero], [QQI.zero, -i]])
        expected = poly_from_roots(QQI, [i, -i])  # t^2 + 1
        assert poly_equal(QQI, charpoly(a), expected)

    def test_modular_matrices_rejected(self):
        a = SquareMatrix.identity(IntegersMod(5), 2)
        with pytest.raises(UnsupportedRing):
            charpoly(a)


class TestRootDetection:
    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_candidates_contain_planted_roots(self, roots):
        coeffs = poly_from_roots(QQ, roots)
        cands = set(rational_root_candidates(coeffs))
        for r in roots:
            assert QQ.coerce(r) in {QQ.coerce(c) for c in cands}

    def test_zero_root_detected(self):
        cands = rational_root_candidates([mpq(0), mpq(0), mpq(1)])
        assert mpq(0) in {mpq(c) for c in cands}

    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_full_split_for_rational_spectra(self, roots):
        coeffs = poly_from_roots(QQ, roots)
        found, residual = detect_eigenvalues(QQ, coeffs)
        assert sum(m for _, m in found) == len(roots)
        assert len(residual) == 1  # constant residual: fully split

    def test_irrational_roots_stay_in_residual(self):
        # t^2 - 2 has no rational roots
        found, residual = detect_eigenvalues(QQ, [mpq(-2), mpq(0), mpq(1)])
        assert found == []
        assert residual == [mpq(-2), mpq(0), mpq(1)]

    def test_complex_roots_need_candidates(self):
        # t^2 + 1 over the plain rationals: nothing detectable
        found, residual = detect_eigenvalues(QQ, [mpq(1), mpq(0), mpq(1)])
        assert found == [] and len(residual) == 3
        # over the Gaussian rationals with candidates, fully split
        i = GaussianRational(0, 1)
        coeffs = [QQI.one, QQI.zero, QQI.one]
        found2, residual2 = detect_eigenvalues(QQI, coeffs, [i, -i])
        assert {ev for ev, _ in found2} == {QQI.coerce(i), QQI.coerce(-i)}
        assert len(residual2) == 1


class TestJordanSpecs:
    def test_validation(self):
        with pytest.raises(PreconditionFailure):
            JordanSpec(())
        with pytest.raises(PreconditionFailure):
            JordanSpec(((mpq(1), 0),))

    def test_ring_promotion(self):
        assert JordanSpec(((mpq(2), 1),)).ring is QQ
        assert JordanSpec(((GaussianRational(0, 1), 1),)).ring is QQI

    def test_doc_round_trip(self):
        spec = JordanSpec(((mpq(1, 2), 2), (mpq(-3), 1)))
        again = JordanSpec.from_doc(spec.to_doc())
        assert again == spec

    def test_block_shape(self):
        b = jordan_block(QQ, mpq(5), 3)
        assert b.rows[0][0] == mpq(5) and b.rows[0][1] == QQ.one
        assert b.rows[2][2] == mpq(5)

    def test_realization_matches_expected_charpoly(self, rng):
        spec = JordanSpec(((mpq(2), 2), (mpq(0), 1), (mpq(-1), 1)))
        a = jordan_realize(spec, rng)
        assert poly_equal(QQ, charpoly(a), spec.expected_charpoly())


class TestPointIndex:
    def test_planted_block_sizes_recovered(self, rng):
        spec = JordanSpec(((mpq(3), 2), (mpq(3), 1), (mpq(0), 1), (mpq(1), 3)))
        a = jordan_realize(spec, rng)
        assert point_index(a, mpq(3)) == 2
        assert point_index(a, mpq(0)) == 1
        assert point_index(a, mpq(1)) == 3
        assert point_index(a, mpq(7)) == 0  # not an eigenvalue

    def test_complex_value_promotes_rational_matrix(self):
        rot = SquareMatrix(QQ, [[0, -1], [1, 0]])  # eigenvalues i, -i
        i = GaussianRational(0, 1)
        assert point_index(rot, i) == 1
        assert point_index(rot, GaussianRational(0, -1)) == 1
        assert point_index(rot, GaussianRational(1, 1)) == 0


class TestGroupSpectrum:
    def test_planted_structure_fully_recovered(self, rng):
        spec = JordanSpec(((mpq(2), 2), (mpq(2), 1), (mpq(5), 1), (mpq(0), 2)))
        a = jordan_realize(spec, rng)
        report = group_spectrum(a)
        assert report.fully_split()
        assert list(report.eigenvalues) == [mpq(0), mpq(2), mpq(5)]
        assert report.multiplicities[mpq(2)] == 3
        assert report.point_indices[mpq(2)] == 2
        assert list(report.group_spectrum) == [mpq(0), mpq(2)]
        assert any("one-sided Drazin spectra are empty" in n for n in report.notes)

    def test_residual_reported_honestly(self):
        # companion of (t^2 - 2)(t - 1): only the rational root is detected
        coeffs = poly_mul(QQ, [mpq(-2), mpq(0), mpq(1)], [mpq(-1), mpq(1)])
        a = _companion(QQ, coeffs)
        report = group_spectrum(a)
        assert not report.fully_split()
        assert list(report.eigenvalues) == [mpq(1)]
        assert poly_equal(QQ, list(report.residual_factor), [mpq(-2), mpq(0), mpq(1)])
        assert any("residual factor of degree 2" in n for n in report.notes)

    def test_complex_candidates_promote(self):
        rot = SquareMatrix(QQ, [[0, -1], [1, 0]])
        i = GaussianRational(0, 1)
        report = group_spectrum(rot, candidates=[i, GaussianRational(0, -1)])
        assert report.ring is QQI
        assert report.fully_split()
        assert len(report.eigenvalues) == 2
        assert report.group_spectrum == ()

    def test_doc_declares_empty_one_sided_spectra(self, rng):
        a = random_matrix(rng, QQ, 2)
        doc = group_spectrum(a).to_doc()
        assert doc["one_sided_drazin_spectra"] == "empty"
        assert doc["kind"] == "spectrum-report"

    def test_report_invariants_enforced(self):
        with pytest.raises(OsdrazinError):
            SpectrumReport(
                ring=QQ,
                dim=1,
                charpoly_coeffs=(mpq(0), mpq(1)),
                eigenvalues=(mpq(0),),
                multiplicities={mpq(0): 1},
                point_indices={mpq(0): 1},
                group_spectrum=(mpq(3),),  # escapes the eigenvalue list
                residual_factor=None,
            )
        with pytest.raises(OsdrazinError):
            SpectrumReport(
                ring=QQ,
                dim=1,
                charpoly_coeffs=(mpq(0), mpq(1)),
                eigenvalues=(mpq(0),),
                multiplicities={mpq(0): 1},
                point_indices={mpq(0): 0},  # detected root with index 0
                group_spectrum=(),
                residual_factor=None,
            )


class TestProductIdentity:
    @given(st.integers(0, 10**6))
    def test_holds_for_random_factors(self, seed):
        rng = random.Random(seed)
        a = random_matrix(rng, QQ, 3)
        c = random_matrix(rng, QQ, 3)
        report = product_identity_check(a, c)
        assert report.ok()

    def test_unit_defect_indices_recorded(self, rng):
        a = random_matrix(rng, QQ, 3)
        c = random_matrix(rng, QQ, 3)
        doc = product_identity_check(a, c).to_doc()
        assert doc["indices"]["unit-defect-index-ac"] == doc["indices"][
            "unit-defect-index-ca"
        ]

    def test_shape_mismatch_rejected(self, rng):
        a = random_matrix(rng, QQ, 2)
        c = random_matrix(rng, QQ, 3)
        with pytest.raises(DimensionMismatch):
            product_identity_check(a, c)


class TestIntertwineIdentity:
    # 26 of the 28 level-1 pairs over M_2(Z_2) still satisfy the pair laws
    # after lifting the 0/1 entries to the rationals
    LIFTED_PAIR_COUNT = 26

    def test_all_lifted_mod2_pairs_satisfy_the_identity(self):
        survivors = 0
        for p in pair_exhaustive(2, 2, 1):
            a = SquareMatrix(QQ, [[int(e) for e in row] for row in p.a.rows])
            b = SquareMatrix(QQ, [[int(e) for e in row] for row in p.b.rows])
            try:
                lifted = IntertwinePair(a, b, 1)
            except PreconditionFailure:
                continue
            survivors += 1
            assert intertwine_identity_check(lifted).ok()
        assert survivors == self.LIFTED_PAIR_COUNT

    def test_planted_pair_identity(self):
        rng = random.Random("pair-spec")
        from osdrazin.generators import planted_pair

        p = planted_pair(rng, QQ, 4, 2)
        report = intertwine_identity_check(p)
        assert report.ok()
        doc = report.to_doc()
        assert doc["indices"]["unit-defect-index-a"] == 2
        assert doc["indices"]["unit-defect-index-b"] == 2
