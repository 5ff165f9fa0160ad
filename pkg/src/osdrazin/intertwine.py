"""Witness transfer between 1-a and 1-b for power-intertwined pairs.

A pair (a, b) at level n >= 1 satisfies

    a b^n == b^{n+1}      and      b a^n == a^{n+1}.

Consequences used throughout: a^j b^n == b^{n+j}, (1-a)^j b^n == b^n (1-b)^j,
and a^n b^n == b^{2n}. Transfers convert left witnesses for 1-a into left
witnesses for 1-b through the bridge elements a^n (left) and b^n (right),
with the correction polynomial 1 + b + ... + b^{2n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .drazin import (
    verify_left_drazin,
    verify_left_gdrazin,
    verify_left_strongly_pi,
)
from .errors import BudgetExceeded, PreconditionFailure, SingularResolvent
from .matrix import SquareMatrix
from .rings import IntegersMod
from .witnesses import (
    DRAZIN,
    GENERALIZED_DRAZIN,
    GROUP,
    LEFT,
    Witness,
)


@dataclass(frozen=True)
class IntertwinePair:
    """Validated pair (a, b) with a b^n == b^{n+1} and b a^n == a^{n+1}."""

    a: SquareMatrix
    b: SquareMatrix
    n: int

    def __post_init__(self):
        self.a._check_compatible(self.b)
        if not isinstance(self.n, int) or self.n < 1:
            raise PreconditionFailure("pair level n must be an integer >= 1")
        bn = self.b.pow(self.n)
        an = self.a.pow(self.n)
        if self.a * bn != bn * self.b:
            raise PreconditionFailure("pair law a b^n == b^{n+1} fails")
        if self.b * an != an * self.a:
            raise PreconditionFailure("pair law b a^n == a^{n+1} fails")

    @cached_property
    def one(self) -> SquareMatrix:
        return SquareMatrix.identity(self.a.ring, self.a.dim)

    @cached_property
    def a_n(self) -> SquareMatrix:
        return self.a.pow(self.n)

    @cached_property
    def b_n(self) -> SquareMatrix:
        return self.b.pow(self.n)

    @cached_property
    def one_minus_a(self) -> SquareMatrix:
        return self.one - self.a

    @cached_property
    def one_minus_b(self) -> SquareMatrix:
        return self.one - self.b

    @cached_property
    def b_geom(self) -> SquareMatrix:
        """1 + b + b^2 + ... + b^{2n-1}."""
        return _geometric(self.b, 2 * self.n)

    @cached_property
    def a_geom(self) -> SquareMatrix:
        """1 + a + a^2 + ... + a^{2n-1}."""
        return _geometric(self.a, 2 * self.n)

    def to_doc(self) -> dict:
        return {"a": self.a.to_doc(), "b": self.b.to_doc(), "n": self.n}

    @staticmethod
    def from_doc(doc: dict) -> "IntertwinePair":
        return IntertwinePair(
            SquareMatrix.from_doc(doc["a"]),
            SquareMatrix.from_doc(doc["b"]),
            int(doc["n"]),
        )


def _geometric(m: SquareMatrix, count: int) -> SquareMatrix:
    """1 + m + ... + m^{count-1}."""
    total = SquareMatrix.zeros(m.ring, m.dim)
    term = SquareMatrix.identity(m.ring, m.dim)
    for _ in range(count):
        total = total + term
        term = term * m
    return total


def pair_exhaustive(
    dim: int, modulus: int, n: int, pair_budget: int = 10**5
) -> Iterator[IntertwinePair]:
    """Every intertwined pair in M_dim(Z_modulus) at level n, in lexicographic
    order (row-major, value-major on a, then on b)."""
    ring = IntegersMod(modulus)
    count = modulus ** (dim * dim)
    if count * count > pair_budget:
        raise BudgetExceeded(
            f"{count}^2 pairs exceeds the budget of {pair_budget}"
        )
    elements = [_element_at(ring, dim, modulus, idx) for idx in range(count)]
    powers_n = [m.pow(n) for m in elements]
    powers_n1 = [p * m for p, m in zip(powers_n, elements)]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if a * powers_n[j] == powers_n1[j] and b * powers_n[i] == powers_n1[i]:
                yield IntertwinePair(a, b, n)


def _element_at(ring, dim: int, modulus: int, idx: int) -> SquareMatrix:
    digits = []
    for _ in range(dim * dim):
        digits.append(idx % modulus)
        idx //= modulus
    digits.reverse()
    rows = [digits[r * dim : (r + 1) * dim] for r in range(dim)]
    return SquareMatrix(ring, rows)


# -- transfers ----------------------------------------------------------------


def regular_transfer_pair(p: IntertwinePair, x: SquareMatrix) -> SquareMatrix:
    """x (1-a)^2 == 1-a  ->  y = 1 + b + ... + b^{2n-1} + a^n x b^n with
    y (1-b)^2 == 1-b."""
    if x * p.one_minus_a * p.one_minus_a != p.one_minus_a:
        raise PreconditionFailure("x is not a left regular witness for 1-a")
    return p.b_geom + p.a_n * x * p.b_n


def regular_reverse_pair(p: IntertwinePair, y: SquareMatrix) -> SquareMatrix:
    """Mirror: y (1-b)^2 == 1-b -> x = 1 + a + ... + a^{2n-1} + b^n y a^n."""
    if y * p.one_minus_b * p.one_minus_b != p.one_minus_b:
        raise PreconditionFailure("y is not a left regular witness for 1-b")
    return p.a_geom + p.b_n * y * p.a_n


def strong_pi_transfer_pair(
    p: IntertwinePair, x: SquareMatrix, idx: int
) -> SquareMatrix:
    """Left strongly pi-regular witness for 1-a at idx -> same for 1-b."""
    if not verify_left_strongly_pi(p.one_minus_a, x, idx):
        raise PreconditionFailure("x is not left strongly pi-regular for 1-a")
    return p.b_geom + p.a_n * x * p.b_n


def drazin_transfer_pair(p: IntertwinePair, x: SquareMatrix, k: int) -> Witness:
    """Left Drazin witness for 1-a at k -> one for 1-b at k.

    y = (1 - a^n r q b^n)(1 + b + ... + b^{2n-1}) + a^n x b^n with
    q = 1 - x(1-a) and r = sum_{i<k} (1 - a^{2n})^i. q commutes with a, so
    r q == q r; both orderings are computed and must agree.
    """
    if not verify_left_drazin(p.one_minus_a, x, k):
        raise PreconditionFailure("x is not a left Drazin witness for 1-a at k")
    q = p.one - x * p.one_minus_a
    r = _defect_sum(p, k)
    head_rq = p.one - p.a_n * r * q * p.b_n
    head_qr = p.one - p.a_n * q * r * p.b_n
    if head_rq != head_qr:
        raise SingularResolvent("r and q failed to commute; hypothesis violated")
    y = head_rq * p.b_geom + p.a_n * x * p.b_n
    return Witness(candidate=y, side=LEFT, kind=DRAZIN, index=k)


def drazin_reverse_pair(p: IntertwinePair, y: SquareMatrix, k: int) -> Witness:
    """Mirror direction, swapping the roles of a and b."""
    if not verify_left_drazin(p.one_minus_b, y, k):
        raise PreconditionFailure("y is not a left Drazin witness for 1-b at k")
    q2 = p.one - y * p.one_minus_b
    r2 = _defect_sum_b(p, k)
    x = (p.one - p.b_n * r2 * q2 * p.a_n) * p.a_geom + p.b_n * y * p.a_n
    return Witness(candidate=x, side=LEFT, kind=DRAZIN, index=k)


def group_transfer_pair(p: IntertwinePair, x: SquareMatrix) -> Witness:
    """Index-1 specialization: y = (1 - a^n q b^n)(1 + ... + b^{2n-1}) +
    a^n x b^n with q = 1 - x(1-a)."""
    if not verify_left_drazin(p.one_minus_a, x, 1):
        raise PreconditionFailure("x is not a left Drazin witness for 1-a at 1")
    q = p.one - x * p.one_minus_a
    y = (p.one - p.a_n * q * p.b_n) * p.b_geom + p.a_n * x * p.b_n
    return Witness(candidate=y, side=LEFT, kind=GROUP, index=1)


def gdrazin_transfer_pair(p: IntertwinePair, x: SquareMatrix) -> Witness:
    """Left generalized-Drazin witness for 1-a -> one for 1-b.

    y = (1 - a^n [1 - q(1 - a^{2n})]^{-1} q b^n)(1 + ... + b^{2n-1}) +
    a^n x b^n. q(1 - a^{2n}) is nilpotent and commutes with a, so the bracket
    is invertible; a singular bracket signals a bug.
    """
    if not verify_left_gdrazin(p.one_minus_a, x):
        raise PreconditionFailure("x is not a left generalized-Drazin witness")
    q = p.one - x * p.one_minus_a
    bracket = p.one - q * (p.one - p.a_n * p.a_n)
    inv = bracket.try_inverse()
    if inv is None:
        raise SingularResolvent("1 - q(1 - a^{2n}) was singular")
    y = (p.one - p.a_n * inv * q * p.b_n) * p.b_geom + p.a_n * x * p.b_n
    return Witness(candidate=y, side=LEFT, kind=GENERALIZED_DRAZIN)


def gdrazin_reverse_pair(p: IntertwinePair, y: SquareMatrix) -> Witness:
    """Mirror with bracket [1 - q'(1 - b^{2n})]^{-1} and bridge b^n ... a^n."""
    if not verify_left_gdrazin(p.one_minus_b, y):
        raise PreconditionFailure("y is not a left generalized-Drazin witness")
    q2 = p.one - y * p.one_minus_b
    bracket = p.one - q2 * (p.one - p.b_n * p.b_n)
    inv = bracket.try_inverse()
    if inv is None:
        raise SingularResolvent("1 - q'(1 - b^{2n}) was singular")
    x = (p.one - p.b_n * inv * q2 * p.a_n) * p.a_geom + p.b_n * y * p.a_n
    return Witness(candidate=x, side=LEFT, kind=GENERALIZED_DRAZIN)


def _defect_sum(p: IntertwinePair, k: int) -> SquareMatrix:
    """sum_{i=0}^{k-1} (1 - a^{2n})^i."""
    defect = p.one - p.a_n * p.a_n
    total = SquareMatrix.zeros(p.a.ring, p.a.dim)
    term = p.one
    for _ in range(k):
        total = total + term
        term = term * defect
    return total


def _defect_sum_b(p: IntertwinePair, k: int) -> SquareMatrix:
    defect = p.one - p.b_n * p.b_n
    total = SquareMatrix.zeros(p.a.ring, p.a.dim)
    term = p.one
    for _ in range(k):
        total = total + term
        term = term * defect
    return total


def quad_to_pair(
    a: SquareMatrix,
    b: SquareMatrix,
    c: SquareMatrix,
    d: SquareMatrix,
    n: int,
) -> Optional[IntertwinePair]:
    """Check whether (ac, db) is an intertwined pair at level n.

    The laws ac (db)^n == (db)^{n+1} and db (ac)^n == (ac)^{n+1} do not follow
    from the quad laws in general; this checks them for the given instance and
    returns the pair on success, None otherwise.
    """
    ac = a * c
    db = d * b
    dbn = db.pow(n)
    acn = ac.pow(n)
    if ac * dbn != dbn * db or db * acn != acn * ac:
        return None
    return IntertwinePair(ac, db, n)
