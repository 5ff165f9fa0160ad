"""Witness transfer across product-intertwined quadruples.

A quad (a, b, c, d) satisfies the two-sided intertwining laws

    a c d == d b d      and      d b a == a c a,

which generalize the classical pairing b = c, d = a (where both laws collapse
to a c a == a c a). Throughout, alpha = 1 - a c and beta = 1 - b d. Every
transfer below converts a one-sided witness for alpha into one for beta of
the same flavor and index, via the bridge elements bac (left) and d (right);
reverse transfers go the other way. All hypotheses are re-checked on entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Optional, Tuple

from .drazin import (
    verify_left_drazin,
    verify_left_gdrazin,
    verify_left_strongly_pi,
    verify_right_drazin,
)
from .errors import PreconditionFailure, SingularResolvent
from .matrix import SquareMatrix, solve_linear
from .witnesses import (
    DRAZIN,
    GENERALIZED_DRAZIN,
    GROUP,
    LEFT,
    RIGHT,
    VerificationReport,
    Witness,
)


@dataclass(frozen=True)
class JacobsonQuad:
    """Validated quadruple (a, b, c, d) with acd == dbd and dba == aca."""

    a: SquareMatrix
    b: SquareMatrix
    c: SquareMatrix
    d: SquareMatrix

    def __post_init__(self):
        self.a._check_compatible(self.b)
        self.a._check_compatible(self.c)
        self.a._check_compatible(self.d)
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * c * d != d * b * d:
            raise PreconditionFailure("quad law acd == dbd fails")
        if d * b * a != a * c * a:
            raise PreconditionFailure("quad law dba == aca fails")

    @cached_property
    def one(self) -> SquareMatrix:
        return SquareMatrix.identity(self.a.ring, self.a.dim)

    @cached_property
    def ac(self) -> SquareMatrix:
        return self.a * self.c

    @cached_property
    def bd(self) -> SquareMatrix:
        return self.b * self.d

    @cached_property
    def alpha(self) -> SquareMatrix:
        return self.one - self.ac

    @cached_property
    def beta(self) -> SquareMatrix:
        return self.one - self.bd

    @cached_property
    def bac(self) -> SquareMatrix:
        return self.b * self.a * self.c

    def to_doc(self) -> dict:
        return {name: getattr(self, name).to_doc() for name in "abcd"}

    @staticmethod
    def from_doc(doc: dict) -> "JacobsonQuad":
        return JacobsonQuad(
            *(SquareMatrix.from_doc(doc[name]) for name in "abcd")
        )


def quad_from_classical(a: SquareMatrix, c: SquareMatrix) -> JacobsonQuad:
    """The classical specialization b := c, d := a; valid for every a, c."""
    return JacobsonQuad(a, c, c, a)


def quad_solve(
    a: SquareMatrix, d: SquareMatrix, b: SquareMatrix
) -> Optional[JacobsonQuad]:
    """Complete (a, ?, b, d) to a quad by solving the laws for c exactly.

    Both laws are linear in c: a c d == d b d and a c a == d b a. Returns the
    quad with the least-constrained solution (free coordinates zero), or None
    when the system is inconsistent.
    """
    a._check_compatible(d)
    a._check_compatible(b)
    n = a.dim
    ring = a.ring
    dbd = d * b * d
    dba = d * b * a
    rows = []
    rhs = []
    for lhs_right, target in ((d, dbd), (a, dba)):
        for i in range(n):
            for j in range(n):
                row = [None] * (n * n)
                for p in range(n):
                    aip = a.rows[i][p]
                    for q in range(n):
                        row[p * n + q] = ring.reduce(aip * lhs_right.rows[q][j])
                rows.append(row)
                rhs.append(target.rows[i][j])
    flat = solve_linear(ring, rows, rhs)
    if flat is None:
        return None
    c = SquareMatrix(ring, [flat[i * n : (i + 1) * n] for i in range(n)])
    return JacobsonQuad(a, b, c, d)


# -- regular and strongly pi-regular transfer --------------------------------


def left_regular_transfer(q: JacobsonQuad, x: SquareMatrix) -> SquareMatrix:
    """From x alpha^2 == alpha build y = 1 + bd + bacxd with y beta^2 == beta."""
    if x * q.alpha * q.alpha != q.alpha:
        raise PreconditionFailure("x is not a left regular witness for alpha")
    return q.one + q.bd + q.bac * x * q.d


def left_regular_reverse(q: JacobsonQuad, y: SquareMatrix) -> SquareMatrix:
    """From y beta^2 == beta build x = 1 + ac + dybac with x alpha^2 == alpha."""
    if y * q.beta * q.beta != q.beta:
        raise PreconditionFailure("y is not a left regular witness for beta")
    return q.one + q.ac + q.d * y * q.bac


def right_regular_transfer(q: JacobsonQuad, x: SquareMatrix) -> SquareMatrix:
    """Mirrored hypothesis alpha^2 x == alpha; same element transfers."""
    if q.alpha * q.alpha * x != q.alpha:
        raise PreconditionFailure("x is not a right regular witness for alpha")
    return q.one + q.bd + q.bac * x * q.d


def right_regular_reverse(q: JacobsonQuad, y: SquareMatrix) -> SquareMatrix:
    if q.beta * q.beta * y != q.beta:
        raise PreconditionFailure("y is not a right regular witness for beta")
    return q.one + q.ac + q.d * y * q.bac


def strong_pi_transfer(q: JacobsonQuad, x: SquareMatrix, p: int) -> SquareMatrix:
    """Left strongly pi-regular witness for alpha at p -> same for beta at p."""
    if not verify_left_strongly_pi(q.alpha, x, p):
        raise PreconditionFailure("x is not left strongly pi-regular for alpha at p")
    return q.one + q.bd + q.bac * x * q.d


def strong_pi_reverse(q: JacobsonQuad, y: SquareMatrix, p: int) -> SquareMatrix:
    if not verify_left_strongly_pi(q.beta, y, p):
        raise PreconditionFailure("y is not left strongly pi-regular for beta at p")
    return q.one + q.ac + q.d * y * q.bac


# -- binomial elements for the pi-regular induction ---------------------------


def binomial_elements(
    q: JacobsonQuad, n: int
) -> Tuple[SquareMatrix, SquareMatrix]:
    """The contraction elements b_n, c_n with (1-bd)^n == 1 - b_n d and
    (1-ac)^n == 1 - a c_n.

    b_n = sum_{i=1}^{n} C(n,i) (-1)^{i-1} (bd)^{i-1} b and c_n likewise with
    c (ac)^{i-1}. The alternating sign starts positive; the verification
    campaign checks the contraction identities directly, so a wrong sign
    cannot survive testing.
    """
    if n < 1:
        raise PreconditionFailure("binomial elements need n >= 1")
    bd_pow = q.one
    ac_pow = q.one
    b_n = SquareMatrix.zeros(q.a.ring, q.a.dim)
    c_n = SquareMatrix.zeros(q.a.ring, q.a.dim)
    for i in range(1, n + 1):
        coeff = comb(n, i) if i % 2 == 1 else -comb(n, i)
        b_n = b_n + (bd_pow * q.b).scale(coeff)
        c_n = c_n + (q.c * ac_pow).scale(coeff)
        bd_pow = bd_pow * q.bd
        ac_pow = ac_pow * q.ac
    return b_n, c_n


def binomial_probe(q: JacobsonQuad, n: int) -> VerificationReport:
    """Check the contraction identities and whether (a, b_n, c_n, d) is again
    a quad, i.e. a c_n d == d b_n d and d b_n a == a c_n a."""
    b_n, c_n = binomial_elements(q, n)
    report = VerificationReport(instance_id=f"binomial-probe-n{n}")
    report.check(
        "contraction-bd", q.beta.pow(n) == q.one - b_n * q.d
    )
    report.check(
        "contraction-ac", q.alpha.pow(n) == q.one - q.a * c_n
    )
    first = q.a * c_n * q.d == q.d * b_n * q.d
    second = q.d * b_n * q.a == q.a * c_n * q.a
    report.check("induced-quad-first-law", first)
    report.check("induced-quad-second-law", second)
    report.notes.append(
        "second law recorded once; both printed orderings state the same equality"
    )
    report.record_matrix("b_n", b_n)
    report.record_matrix("c_n", c_n)
    return report


# -- Drazin / group / generalized Drazin transfer -----------------------------


def _resolvent_sum(base: SquareMatrix, one: SquareMatrix, k: int) -> SquareMatrix:
    """sum_{j=0}^{k-1} (1 - base^2)^j (the empty sum is the zero matrix)."""
    defect = one - base * base
    total = SquareMatrix.zeros(base.ring, base.dim)
    term = one
    for _ in range(k):
        total = total + term
        term = term * defect
    return total


def drazin_transfer(q: JacobsonQuad, x: SquareMatrix, k: int) -> Witness:
    """Left Drazin witness for alpha at index k -> one for beta at index k.

    y = (1 - bac p r d)(1 + bd) + bac x d, with p = 1 - x alpha (an
    idempotent commuting with ac) and r = sum_{j<k} (1 - (ac)^2)^j.
    """
    if not verify_left_drazin(q.alpha, x, k):
        raise PreconditionFailure("x is not a left Drazin witness for alpha at k")
    p = q.one - x * q.alpha
    r = _resolvent_sum(q.ac, q.one, k)
    y = (q.one - q.bac * p * r * q.d) * (q.one + q.bd) + q.bac * x * q.d
    return Witness(candidate=y, side=LEFT, kind=DRAZIN, index=k)


def drazin_transfer_reverse(q: JacobsonQuad, y: SquareMatrix, k: int) -> Witness:
    """Mirror direction: witness for beta -> witness for alpha at the same k.

    x = (1 - d p' r' bac)(1 + ac) + d y bac, with p' = 1 - y beta and
    r' = sum_{j<k} (1 - (bd)^2)^j.
    """
    if not verify_left_drazin(q.beta, y, k):
        raise PreconditionFailure("y is not a left Drazin witness for beta at k")
    p2 = q.one - y * q.beta
    r2 = _resolvent_sum(q.bd, q.one, k)
    x = (q.one - q.d * p2 * r2 * q.bac) * (q.one + q.ac) + q.d * y * q.bac
    return Witness(candidate=x, side=LEFT, kind=DRAZIN, index=k)


def group_transfer(q: JacobsonQuad, x: SquareMatrix) -> Witness:
    """Index-1 specialization: y = (1 - bac p d)(1 + bd) + bac x d."""
    if not verify_left_drazin(q.alpha, x, 1):
        raise PreconditionFailure("x is not a left Drazin witness for alpha at 1")
    p = q.one - x * q.alpha
    y = (q.one - q.bac * p * q.d) * (q.one + q.bd) + q.bac * x * q.d
    return Witness(candidate=y, side=LEFT, kind=GROUP, index=1)


def gdrazin_transfer(q: JacobsonQuad, x: SquareMatrix) -> Witness:
    """Left generalized-Drazin witness for alpha -> one for beta.

    y = (1 - bac p [1 - p alpha (1 + ac)]^{-1} d)(1 + bd) + bac x d. The
    bracket is invertible because p alpha is nilpotent and commutes with ac;
    a singular bracket therefore signals a bug, not a legitimate outcome.
    """
    if not verify_left_gdrazin(q.alpha, x):
        raise PreconditionFailure("x is not a left generalized-Drazin witness")
    p = q.one - x * q.alpha
    bracket = q.one - p * q.alpha * (q.one + q.ac)
    inv = bracket.try_inverse()
    if inv is None:
        raise SingularResolvent("1 - p alpha (1 + ac) was singular")
    y = (q.one - q.bac * p * inv * q.d) * (q.one + q.bd) + q.bac * x * q.d
    return Witness(candidate=y, side=LEFT, kind=GENERALIZED_DRAZIN)


def gdrazin_transfer_reverse(q: JacobsonQuad, y: SquareMatrix) -> Witness:
    """Mirror of gdrazin_transfer with bracket [1 - p' beta (1 + bd)]^{-1}."""
    if not verify_left_gdrazin(q.beta, y):
        raise PreconditionFailure("y is not a left generalized-Drazin witness")
    p2 = q.one - y * q.beta
    bracket = q.one - p2 * q.beta * (q.one + q.bd)
    inv = bracket.try_inverse()
    if inv is None:
        raise SingularResolvent("1 - p' beta (1 + bd) was singular")
    x = (q.one - q.d * p2 * inv * q.bac) * (q.one + q.ac) + q.d * y * q.bac
    return Witness(candidate=x, side=LEFT, kind=GENERALIZED_DRAZIN)


# -- partial reverse-product shift (Cline direction) ---------------------------


def cline_partial_left(
    a: SquareMatrix, c: SquareMatrix, x: SquareMatrix, k: int
) -> Witness:
    """Shift a left Drazin witness from ac to ca when c is invertible.

    y = c x^2 a satisfies (ca) y (ca) == y (ca)^2, y^2 (ca) == y, and
    y (ca)^{k+2} == (ca)^{k+1}; i.e. a left Drazin witness at index k + 1.
    """
    a._check_compatible(c)
    if not verify_left_drazin(a * c, x, k):
        raise PreconditionFailure("x is not a left Drazin witness for ac at k")
    if c.try_inverse() is None:
        raise PreconditionFailure("c is not invertible")
    y = c * x * x * a
    return Witness(candidate=y, side=LEFT, kind=DRAZIN, index=k + 1)


def cline_partial_right(
    a: SquareMatrix, c: SquareMatrix, x: SquareMatrix, k: int
) -> Witness:
    """Right-handed counterpart; needs a invertible.

    y = c x^2 a satisfies (ca) y (ca) == (ca)^2 y, (ca) y^2 == y, and
    (ca)^{k+2} y == (ca)^{k+1}.
    """
    a._check_compatible(c)
    if not verify_right_drazin(a * c, x, k):
        raise PreconditionFailure("x is not a right Drazin witness for ac at k")
    if a.try_inverse() is None:
        raise PreconditionFailure("a is not invertible")
    y = c * x * x * a
    return Witness(candidate=y, side=RIGHT, kind=DRAZIN, index=k + 1)
