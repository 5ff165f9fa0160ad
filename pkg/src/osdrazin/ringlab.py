"""Exhaustive one-sided witness searches over small finite matrix rings.

The ring M_k(Z_m) is enumerated in lexicographic order: an element's rank in
the enumeration is its row-major digit string read base m, most significant
digit first. Searches scan candidates in that order and report the first
witness found, so results are reproducible constants.

Over a composite modulus everything here sticks to ring operations (products,
powers, equality); no rank, no division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .drazin import (
    azumaya_left,
    azumaya_right,
    verify_left_drazin,
    verify_left_strongly_pi,
    verify_right_drazin,
    verify_right_strongly_pi,
)
from .errors import BudgetExceeded, PreconditionFailure
from .matrix import SquareMatrix
from .rings import IntegersMod, ceil_log2
from .witnesses import VerificationReport


@dataclass(frozen=True)
class FiniteRingSpec:
    """M_{matrix_dim}(Z_modulus), with an enumeration budget."""

    matrix_dim: int
    modulus: int
    budget: int = 10**4

    def __post_init__(self):
        if self.matrix_dim < 1:
            raise PreconditionFailure("matrix_dim must be >= 1")
        if self.modulus < 2:
            raise PreconditionFailure("modulus must be >= 2")

    @property
    def ring(self) -> IntegersMod:
        return IntegersMod(self.modulus)

    @property
    def element_count(self) -> int:
        return self.modulus ** (self.matrix_dim * self.matrix_dim)

    @property
    def index_bound(self) -> int:
        """Scan bound for minimal witness indices over this ring."""
        return self.matrix_dim * ceil_log2(self.modulus) + self.matrix_dim

    def check_budget(self):
        if self.element_count > self.budget:
            raise BudgetExceeded(
                f"{self.element_count} elements exceeds the budget {self.budget}"
            )

    def elements(self) -> Iterator[SquareMatrix]:
        """All elements in lexicographic (row-major, value-major) order."""
        self.check_budget()
        ring = self.ring
        k, m = self.matrix_dim, self.modulus
        cells = k * k
        for idx in range(self.element_count):
            digits = []
            rest = idx
            for _ in range(cells):
                digits.append(rest % m)
                rest //= m
            digits.reverse()
            yield SquareMatrix(ring, [digits[r * k : (r + 1) * k] for r in range(k)])

    def to_doc(self) -> dict:
        return {
            "matrix_dim": self.matrix_dim,
            "modulus": self.modulus,
            "budget": self.budget,
        }


def _powers(a: SquareMatrix, up_to: int):
    out = [SquareMatrix.identity(a.ring, a.dim)]
    for _ in range(up_to):
        out.append(out[-1] * a)
    return out


def search_left_strongly_pi(
    spec: FiniteRingSpec, a: SquareMatrix, p_max: Optional[int] = None
) -> Optional[Tuple[SquareMatrix, int]]:
    """First x (lexicographically) with axa == xa^2 and x a^{p+1} == a^p for
    some p <= p_max; returns (x, minimal such p for that x), or None."""
    bound = spec.index_bound if p_max is None else p_max
    pw = _powers(a, bound + 1)
    for x in spec.elements():
        if a * x * a != x * a * a:
            continue
        for p in range(bound + 1):
            if x * pw[p + 1] == pw[p]:
                return x, p
    return None


def search_right_strongly_pi(
    spec: FiniteRingSpec, a: SquareMatrix, q_max: Optional[int] = None
) -> Optional[Tuple[SquareMatrix, int]]:
    bound = spec.index_bound if q_max is None else q_max
    pw = _powers(a, bound + 1)
    for y in spec.elements():
        if a * y * a != a * a * y:
            continue
        for q in range(bound + 1):
            if pw[q + 1] * y == pw[q]:
                return y, q
    return None


def search_left_drazin(
    spec: FiniteRingSpec, a: SquareMatrix, j_max: Optional[int] = None
) -> Optional[Tuple[SquareMatrix, int]]:
    """First x with the full left system at some minimal j <= j_max."""
    bound = spec.index_bound if j_max is None else j_max
    pw = _powers(a, bound + 1)
    for x in spec.elements():
        if a * x * a != x * a * a or x * x * a != x:
            continue
        for j in range(bound + 1):
            if x * pw[j + 1] == pw[j]:
                return x, j
    return None


def search_right_drazin(
    spec: FiniteRingSpec, a: SquareMatrix, k_max: Optional[int] = None
) -> Optional[Tuple[SquareMatrix, int]]:
    bound = spec.index_bound if k_max is None else k_max
    pw = _powers(a, bound + 1)
    for y in spec.elements():
        if a * y * a != a * a * y or a * y * y != y:
            continue
        for k in range(bound + 1):
            if pw[k + 1] * y == pw[k]:
                return y, k
    return None


def search_left_regular(
    spec: FiniteRingSpec, a: SquareMatrix
) -> Optional[SquareMatrix]:
    for x in spec.elements():
        if x * a * a == a:
            return x
    return None


def search_right_regular(
    spec: FiniteRingSpec, a: SquareMatrix
) -> Optional[SquareMatrix]:
    for x in spec.elements():
        if a * a * x == a:
            return x
    return None


def realization_audit(spec: FiniteRingSpec) -> VerificationReport:
    """Audit the strongly-pi-regular <-> one-sided-Drazin equivalence.

    For every element a of the ring, on each side: a witness search for the
    strongly pi-regular system succeeds exactly when one for the one-sided
    Drazin system does, and when it succeeds the realized element
    x^{p+1} a^p (resp. a^q y^{q+1}) passes the full one-sided Drazin
    predicate at the claimed index. The searches themselves are the oracle;
    any violation is reported with the offending element.
    """
    report = VerificationReport(
        instance_id=f"realization-audit-dim{spec.matrix_dim}-mod{spec.modulus}"
    )
    audited = 0
    for a in spec.elements():
        audited += 1
        lsp = search_left_strongly_pi(spec, a)
        ld = search_left_drazin(spec, a)
        if (lsp is None) != (ld is None):
            report.check(f"left-existence-agrees-{audited - 1}", False)
            report.record_matrix(f"left-existence-counterexample-{audited - 1}", a)
            continue
        if lsp is not None:
            x, p = lsp
            w = azumaya_left(a, x, p)
            if not verify_left_drazin(a, w.candidate, p):
                report.check(f"left-realization-{audited - 1}", False)
                report.record_matrix(f"left-realization-counterexample-{audited - 1}", a)
        rsp = search_right_strongly_pi(spec, a)
        rd = search_right_drazin(spec, a)
        if (rsp is None) != (rd is None):
            report.check(f"right-existence-agrees-{audited - 1}", False)
            report.record_matrix(f"right-existence-counterexample-{audited - 1}", a)
            continue
        if rsp is not None:
            y, q = rsp
            w = azumaya_right(a, y, q)
            if not verify_right_drazin(a, w.candidate, q):
                report.check(f"right-realization-{audited - 1}", False)
                report.record_matrix(f"right-realization-counterexample-{audited - 1}", a)
    report.check("all-elements-audited", True)
    report.indices["elements_audited"] = audited
    report.notes.append(
        f"exhaustive scan of M_{spec.matrix_dim}(Z_{spec.modulus}),"
        f" {audited} elements, both sides"
    )
    return report
