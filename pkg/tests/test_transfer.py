"""Quad-based transfer formulas between 1 - ac and 1 - bd.

Independent oracle for the binomial contraction elements: sympy with
noncommutative symbols proves the contraction identity is a pure ring
identity, so the matrix implementation is checked against symbol algebra.
"""

import random

import pytest
import sympy as sp

from osdrazin.drazin import (
    drazin_index,
    drazin_inverse,
    verify_left_drazin,
    verify_left_gdrazin,
    verify_left_strongly_pi,
    verify_right_drazin,
)
from osdrazin.errors import PreconditionFailure
from osdrazin.generators import (
    case_ii_quad,
    classical_quad,
    random_invertible,
    random_matrix,
    solved_quad,
    zero_product_quad,
)
from osdrazin.matrix import SquareMatrix
from osdrazin.rings import QQ
from osdrazin.transfer import (
    JacobsonQuad,
    binomial_elements,
    binomial_probe,
    cline_partial_left,
    cline_partial_right,
    drazin_transfer,
    drazin_transfer_reverse,
    gdrazin_transfer,
    gdrazin_transfer_reverse,
    group_transfer,
    left_regular_reverse,
    left_regular_transfer,
    quad_from_classical,
    quad_solve,
    right_regular_reverse,
    right_regular_transfer,
    strong_pi_reverse,
    strong_pi_transfer,
)


def _mat(entries):
    return SquareMatrix(QQ, [[QQ.parse(e) for e in row] for row in entries])


def _quad(seed, dim=3, plant=None, maker=classical_quad):
    rng = random.Random(seed)
    return maker(rng, QQ, dim, plant=plant)


class TestQuadValidation:
    def test_laws_rechecked_on_construction(self):
        a = _mat([["1", "0"], ["0", "1"]])
        bad = _mat([["0", "1"], ["1", "0"]])
        with pytest.raises(PreconditionFailure):
            JacobsonQuad(a, bad, a, a)

    def test_classical_specialization_always_valid(self, rng):
        for _ in range(5):
            a = random_matrix(rng, QQ, 3)
            c = random_matrix(rng, QQ, 3)
            q = quad_from_classical(a, c)
            assert q.b == c and q.d == a

    def test_doc_round_trip_revalidates(self):
        q = _quad(7, plant=1)
        doc = q.to_doc()
        q2 = JacobsonQuad.from_doc(doc)
        assert q2.alpha == q.alpha and q2.beta == q.beta

    def test_generators_produce_valid_quads(self):
        for maker in (classical_quad, case_ii_quad, solved_quad, zero_product_quad):
            rng = random.Random(maker.__name__)
            if maker is zero_product_quad:
                q = maker(rng, QQ, 3)
            else:
                q = maker(rng, QQ, 3, plant=1)
            # __post_init__ already enforced the laws; re-state them anyway
            assert q.a * q.c * q.d == q.d * q.b * q.d
            assert q.d * q.b * q.a == q.a * q.c * q.a


class TestQuadSolve:
    def test_recovers_a_valid_completion(self, rng):
        a = random_invertible(rng, QQ, 2)
        d = random_invertible(rng, QQ, 2)
        b = random_matrix(rng, QQ, 2)
        q = quad_solve(a, d, b)
        assert q is not None
        assert q.b == b and q.a == a and q.d == d

    def test_inconsistent_system_returns_none(self, rng):
        # a == 0 forces acd == 0, so any d, b with dbd != 0 is inconsistent
        zero = SquareMatrix.zeros(QQ, 2)
        d = SquareMatrix.identity(QQ, 2)
        b = SquareMatrix.identity(QQ, 2)
        assert (d * b * d).is_zero() is False
        assert quad_solve(zero, d, b) is None


class TestRegularTransfer:
    def _invertible_alpha_quad(self, seed):
        for trial in range(64):
            q = _quad(f"{seed}:{trial}", dim=3)
            if q.alpha.try_inverse() is not None:
                return q
        raise AssertionError("no invertible alpha found")

    @pytest.mark.parametrize("seed", range(4))
    def test_round_trip(self, seed):
        q = self._invertible_alpha_quad(seed)
        x = q.alpha.inverse()
        y = left_regular_transfer(q, x)
        assert y * q.beta * q.beta == q.beta
        x2 = left_regular_reverse(q, y)
        assert x2 * q.alpha * q.alpha == q.alpha

    @pytest.mark.parametrize("seed", range(4))
    def test_right_handed_round_trip(self, seed):
        q = self._invertible_alpha_quad(100 + seed)
        x = q.alpha.inverse()
        y = right_regular_transfer(q, x)
        assert q.beta * q.beta * y == q.beta
        x2 = right_regular_reverse(q, y)
        assert q.alpha * q.alpha * x2 == q.alpha

    def test_hypothesis_rechecked(self):
        q = _quad(3, dim=2)
        junk = _mat([["5", "7"], ["11", "13"]])
        if junk * q.alpha * q.alpha == q.alpha:  # pragma: no cover
            pytest.skip("junk accidentally a witness")
        with pytest.raises(PreconditionFailure):
            left_regular_transfer(q, junk)

    def test_zero_product_degeneracy_closed_form(self, rng):
        """With a == 0 and dbd == 0: alpha == 1, x == 1 works, bac == 0, and
        the transfer collapses to y == 1 + bd, the exact inverse of beta."""
        q = zero_product_quad(rng, QQ, 3)
        assert q.a.is_zero()
        assert (q.d * q.b * q.d).is_zero()
        x = q.one
        y = left_regular_transfer(q, x)
        assert y == q.one + q.bd
        assert y * q.beta == q.one
        assert q.beta * y == q.one


class TestStrongPiTransfer:
    @pytest.mark.parametrize("maker", [classical_quad, case_ii_quad, solved_quad])
    def test_same_power_transfers(self, maker):
        q = _quad("pi", dim=3, plant=2, maker=maker)
        x, k = drazin_inverse(q.alpha)
        assert verify_left_strongly_pi(q.alpha, x, k)
        y = strong_pi_transfer(q, x, k)
        assert verify_left_strongly_pi(q.beta, y, k)
        x2 = strong_pi_reverse(q, y, k)
        assert verify_left_strongly_pi(q.alpha, x2, k)

    def test_power_is_not_inflated(self):
        q = _quad("pi-min", dim=3, plant=2, maker=solved_quad)
        x, k = drazin_inverse(q.alpha)
        assert k == 2
        y = strong_pi_transfer(q, x, k)
        # the transferred witness already satisfies the power-k equation;
        # strictly lower powers must fail for the planted index
        assert verify_left_strongly_pi(q.beta, y, k)


class TestBinomialElements:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_contraction_is_pure_ring_identity(self, n):
        """Symbolic oracle: with noncommuting B, D the identity
        (1 - BD)^n == 1 - B_n D holds with no quad hypotheses at all."""
        B, D = sp.symbols("B D", commutative=False)
        b_n = sp.Integer(0)
        for i in range(1, n + 1):
            coeff = sp.binomial(n, i) if i % 2 == 1 else -sp.binomial(n, i)
            b_n += coeff * (B * D) ** (i - 1) * B
        lhs = sp.expand((1 - B * D) ** n)
        rhs = sp.expand(1 - b_n * D)
        assert sp.expand(lhs - rhs) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matrix_contractions_match(self, n):
        q = _quad(f"bin{n}", dim=3, plant=1, maker=solved_quad)
        b_n, c_n = binomial_elements(q, n)
        assert q.beta.pow(n) == q.one - b_n * q.d
        assert q.alpha.pow(n) == q.one - q.a * c_n

    def test_probe_report(self):
        q = _quad("probe", dim=3, plant=1, maker=solved_quad)
        report = binomial_probe(q, 3)
        assert report.ok()
        names = [name for name, _ in report.checks]
        assert names == [
            "contraction-bd",
            "contraction-ac",
            "induced-quad-first-law",
            "induced-quad-second-law",
        ]
        assert any("orderings state the same equality" in note for note in report.notes)
        assert "b_n" in report.matrices and "c_n" in report.matrices

    def test_rejects_nonpositive_n(self):
        q = _quad("bad-n", dim=2)
        with pytest.raises(PreconditionFailure):
            binomial_elements(q, 0)


class TestDrazinTransfer:
    @pytest.mark.parametrize("maker", [classical_quad, case_ii_quad, solved_quad])
    @pytest.mark.parametrize("plant", [0, 1, 2])
    def test_index_preserved_both_directions(self, maker, plant):
        q = _quad(f"dz:{plant}", dim=3, plant=plant, maker=maker)
        x, k = drazin_inverse(q.alpha)
        w = drazin_transfer(q, x, k)
        assert verify_left_drazin(q.beta, w.candidate, k)
        assert w.index == k
        back = drazin_transfer_reverse(q, w.candidate, k)
        assert verify_left_drazin(q.alpha, back.candidate, k)

    def test_group_specialization(self):
        q = _quad("grp", dim=3, plant=1, maker=solved_quad)
        x, k = drazin_inverse(q.alpha)
        assert k == 1
        w = group_transfer(q, x)
        assert verify_left_drazin(q.beta, w.candidate, 1)
        full = drazin_transfer(q, x, 1)
        assert w.candidate == full.candidate

    def test_hypothesis_rechecked(self):
        q = _quad("dz-bad", dim=2)
        junk = _mat([["3", "1"], ["4", "1"]])
        if verify_left_drazin(q.alpha, junk, 1):  # pragma: no cover
            pytest.skip("junk accidentally a witness")
        with pytest.raises(PreconditionFailure):
            drazin_transfer(q, junk, 1)


class TestGeneralizedDrazinTransfer:
    @pytest.mark.parametrize("maker", [classical_quad, case_ii_quad, solved_quad])
    def test_forward_and_reverse(self, maker):
        q = _quad("gdz", dim=3, plant=2, maker=maker)
        x, _ = drazin_inverse(q.alpha)
        w = gdrazin_transfer(q, x)
        assert verify_left_gdrazin(q.beta, w.candidate)
        back = gdrazin_transfer_reverse(q, w.candidate)
        assert verify_left_gdrazin(q.alpha, back.candidate)

    def test_reverse_bracket_must_be_mirrored(self):
        """Frozen regression: the reverse direction needs the bracket built
        from beta and bd.  Reusing the forward bracket (with ac) produces an
        element that fails the generalized-Drazin laws on this instance."""
        a = _mat([["0", "1", "-2"], ["-1", "-2", "-2"], ["2", "0", "0"]])
        b = _mat(
            [
                ["-5/8", "-7/8", "19/8"],
                ["3/8", "1/8", "-5/8"],
                ["1/8", "-1/8", "1/8"],
            ]
        )
        c = _mat(
            [
                ["-3/8", "-5/8", "13/8"],
                ["7/8", "19/24", "-59/24"],
                ["1/8", "11/24", "-25/24"],
            ]
        )
        d = _mat([["0", "1", "2"], ["2", "-1", "0"], ["2", "2", "-2"]])
        q = JacobsonQuad(a, b, c, d)
        y, _ = drazin_inverse(q.beta)
        assert verify_left_gdrazin(q.beta, y)

        shipped = gdrazin_transfer_reverse(q, y)
        assert verify_left_gdrazin(q.alpha, shipped.candidate)

        p2 = q.one - y * q.beta
        wrong_bracket = q.one - p2 * q.beta * (q.one + q.ac)
        inv = wrong_bracket.try_inverse()
        assert inv is not None
        wrong = (q.one - q.d * p2 * inv * q.bac) * (q.one + q.ac) + q.d * y * q.bac
        assert not verify_left_gdrazin(q.alpha, wrong)

    def test_hypothesis_rechecked(self):
        q = _quad("gdz-bad", dim=2)
        junk = _mat([["2", "3"], ["5", "7"]])
        if verify_left_gdrazin(q.alpha, junk):  # pragma: no cover
            pytest.skip("junk accidentally a witness")
        with pytest.raises(PreconditionFailure):
            gdrazin_transfer(q, junk)


class TestClineShift:
    def test_left_shift(self, rng):
        c = random_invertible(rng, QQ, 3)
        a = random_matrix(rng, QQ, 3)
        x, k = drazin_inverse(a * c)
        w = cline_partial_left(a, c, x, k)
        assert w.index == k + 1
        assert verify_left_drazin(c * a, w.candidate, k + 1)

    def test_right_shift(self, rng):
        a = random_invertible(rng, QQ, 3)
        c = random_matrix(rng, QQ, 3)
        x, k = drazin_inverse(a * c)
        w = cline_partial_right(a, c, x, k)
        assert verify_right_drazin(c * a, w.candidate, k + 1)

    def test_shifted_true_index_can_be_lower(self, rng):
        """The shift claims index k + 1; the true minimal index of ca may be
        smaller, and the claimed index is only an upper bound."""
        c = random_invertible(rng, QQ, 3)
        a = random_invertible(rng, QQ, 3)
        x, k = drazin_inverse(a * c)
        assert k == 0
        w = cline_partial_left(a, c, x, k)
        assert verify_left_drazin(c * a, w.candidate, 1)
        assert drazin_index(c * a) == 0

    def test_invertibility_requirement(self, rng):
        c = SquareMatrix.zeros(QQ, 2)
        a = random_matrix(rng, QQ, 2)
        x, k = drazin_inverse(a * c)
        with pytest.raises(PreconditionFailure):
            cline_partial_left(a, c, x, k)
        a2 = SquareMatrix.zeros(QQ, 2)
        c2 = random_matrix(rng, QQ, 2)
        x2, k2 = drazin_inverse(a2 * c2)
        with pytest.raises(PreconditionFailure):
            cline_partial_right(a2, c2, x2, k2)
