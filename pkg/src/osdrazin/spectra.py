"""Exact spectral computations: point indices, group spectra, and the
product / intertwined-pair spectral identities.

Eigenvalue detection is exact throughout: the characteristic polynomial is
computed over the (Gaussian) rationals and roots are found by rational-root
search plus caller-supplied candidates (planted-spectrum knowledge). Roots
that are not detectable this way are excluded from the identity checks and
reported through the residual factor — honest partial verification, never a
floating-point eigensolver.

Every square matrix over a field is Drazin invertible, so the one-sided
Drazin spectra are empty as a structural fact of this model; the interesting
exact invariant per eigenvalue is its point index (the Drazin index of
lambda*I - A, equal to the largest Jordan block size at lambda), and the
group spectrum collects the eigenvalues of index >= 2.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .drazin import drazin_index
from .errors import DimensionMismatch, OsdrazinError, PreconditionFailure, UnsupportedRing
from .intertwine import IntertwinePair
from .matrix import SquareMatrix
from .rings import (
    QQ,
    QQI,
    GaussianRational,
    GaussianRationals,
    IntegersMod,
    Rationals,
    Ring,
    mpq,
    scalar_sort_key,
)
from .witnesses import VerificationReport

# -- exact polynomials (coefficient lists, low degree first) -------------------


def poly_trim(ring: Ring, coeffs: Sequence) -> list:
    out = list(coeffs)
    zero = ring.zero
    while len(out) > 1 and out[-1] == zero:
        out.pop()
    return out or [zero]


def poly_eval(ring: Ring, coeffs: Sequence, point):
    acc = ring.zero
    red = ring.reduce
    for c in reversed(coeffs):
        acc = red(acc * point + c)
    return acc


def poly_mul(ring: Ring, f: Sequence, g: Sequence) -> list:
    out = [ring.zero] * (len(f) + len(g) - 1)
    red = ring.reduce
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = red(out[i + j] + a * b)
    return poly_trim(ring, out)


def poly_from_roots(ring: Ring, roots: Sequence) -> list:
    out = [ring.one]
    for r in roots:
        out = poly_mul(ring, out, [ring.reduce(-ring.coerce(r)), ring.one])
    return out


def synthetic_divide(ring: Ring, coeffs: Sequence, root):
    """Divide by (t - root): returns (quotient, remainder) with remainder the
    scalar value of the polynomial at root."""
    if len(coeffs) < 2:
        raise PreconditionFailure("cannot divide a constant polynomial")
    red = ring.reduce
    quot = [ring.zero] * (len(coeffs) - 1)
    carry = ring.zero
    for i in range(len(coeffs) - 1, 0, -1):
        carry = red(coeffs[i] + carry * root)
        quot[i - 1] = carry
    rem = red(coeffs[0] + carry * root)
    return poly_trim(ring, quot), rem


def poly_equal(ring: Ring, f: Sequence, g: Sequence) -> bool:
    return poly_trim(ring, f) == poly_trim(ring, g)


def format_poly(ring: Ring, coeffs: Sequence) -> list:
    return [ring.format(c) for c in poly_trim(ring, coeffs)]


def charpoly(a: SquareMatrix) -> list:
    """Monic characteristic polynomial det(t*I - A), coefficients low first.

    Evaluate the determinant at t = 0..dim and interpolate; exact over the
    rationals and Gaussian rationals (characteristic zero guarantees the
    sample points are distinct).
    """
    ring = a.ring
    if isinstance(ring, IntegersMod):
        raise UnsupportedRing(
            "characteristic polynomial is computed over rational scalars; "
            "lift mod-m instances entrywise first"
        )
    n = a.dim
    points = list(range(n + 1))
    eye = SquareMatrix.identity(ring, n)
    values = [(eye.scale(t) - a).det() for t in points]
    out = [ring.zero] * (n + 1)
    for i, t_i in enumerate(points):
        numer = [ring.one]
        denom = ring.one
        for j, t_j in enumerate(points):
            if j == i:
                continue
            numer = poly_mul(ring, numer, [ring.coerce(-t_j), ring.one])
            denom = ring.reduce(denom * ring.coerce(t_i - t_j))
        weight = ring.div(values[i], denom)
        for d, c in enumerate(numer):
            out[d] = ring.reduce(out[d] + c * weight)
    out = poly_trim(ring, out)
    if len(out) != n + 1 or out[-1] != ring.one:
        raise OsdrazinError("characteristic polynomial interpolation lost monicity")
    return out


# -- exact root detection -------------------------------------------------------


def _divisors(n: int) -> list:
    n = abs(n)
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def rational_root_candidates(coeffs: Sequence) -> list:
    """All rational values that could be roots of a polynomial with the given
    rational coefficients (numerators dividing the lowest nonzero coefficient,
    denominators dividing the leading one, after clearing denominators)."""
    dens = [int(mpq(c).denominator) for c in coeffs]
    scale = math.lcm(*dens)
    ints = [int(mpq(c) * scale) for c in coeffs]
    low = 0
    while low < len(ints) and ints[low] == 0:
        low += 1
    if low == len(ints):
        return [0]
    cands = [0] if low > 0 else []
    for p in _divisors(ints[low]):
        for q in _divisors(ints[-1]):
            value = mpq(p, q)
            cands.append(value)
            cands.append(-value)
    return cands


def detect_eigenvalues(ring: Ring, coeffs: Sequence, candidates: Sequence = ()):
    """Split off all detectable roots of a monic polynomial.

    Detectable means: a rational-root-theorem candidate, or one of the
    caller-supplied candidate scalars (planted-spectrum knowledge). Returns
    (roots, residual) where roots is a list of (value, multiplicity) in
    deterministic scalar order and residual is the undetected monic factor.
    """
    pool = {}
    for cand in candidates:
        c = ring.coerce(cand)
        pool[c] = None
    gaussian = isinstance(ring, GaussianRationals)
    rationals = list(coeffs)
    searchable = not gaussian or all(
        isinstance(c, GaussianRational) and c.im == 0 or not isinstance(c, GaussianRational)
        for c in coeffs
    )
    if searchable:
        if gaussian:
            rationals = [
                c.re if isinstance(c, GaussianRational) else c for c in coeffs
            ]
        for cand in rational_root_candidates(rationals):
            pool[ring.coerce(cand)] = None
    ordered = sorted(pool, key=lambda v: scalar_sort_key(ring, v))
    work = poly_trim(ring, coeffs)
    found = []
    for cand in ordered:
        mult = 0
        while len(work) > 1:
            quot, rem = synthetic_divide(ring, work, cand)
            if rem != ring.zero:
                break
            work = quot
            mult += 1
        if mult:
            found.append((cand, mult))
    return found, work


# -- planted Jordan instances ----------------------------------------------------


@dataclass(frozen=True)
class JordanSpec:
    """A target Jordan structure: (eigenvalue, block size) pairs.

    The scalar domain is chosen automatically: Gaussian rationals when any
    eigenvalue has a nonzero imaginary part, plain rationals otherwise.
    """

    blocks: tuple

    def __post_init__(self):
        if not self.blocks:
            raise PreconditionFailure("a Jordan structure needs at least one block")
        ring = QQ
        for _, size in self.blocks:
            if not isinstance(size, int) or size < 1:
                raise PreconditionFailure("block sizes must be positive integers")
        for value, _ in self.blocks:
            if isinstance(value, GaussianRational) and value.im != 0:
                ring = QQI
        norm = tuple((ring.coerce(value), size) for value, size in self.blocks)
        object.__setattr__(self, "blocks", norm)
        object.__setattr__(self, "_ring", ring)

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def dim(self) -> int:
        return sum(size for _, size in self.blocks)

    def max_block_size(self, value) -> int:
        v = self.ring.coerce(value)
        return max((s for ev, s in self.blocks if ev == v), default=0)

    def eigenvalues(self) -> list:
        seen = {}
        for ev, _ in self.blocks:
            seen[ev] = None
        return sorted(seen, key=lambda v: scalar_sort_key(self.ring, v))

    def expected_charpoly(self) -> list:
        roots = []
        for ev, size in self.blocks:
            roots.extend([ev] * size)
        return poly_from_roots(self.ring, roots)

    def to_doc(self) -> dict:
        return {
            "kind": "jordan-spec",
            "ring": self.ring.name,
            "blocks": [[self.ring.format(ev), size] for ev, size in self.blocks],
        }

    @staticmethod
    def from_doc(doc: dict) -> "JordanSpec":
        from .rings import ring_from_name

        ring = ring_from_name(doc["ring"])
        return JordanSpec(
            tuple((ring.parse(ev), int(size)) for ev, size in doc["blocks"])
        )


def jordan_block(ring: Ring, value, size: int) -> SquareMatrix:
    lam = ring.coerce(value)
    one, zero = ring.one, ring.zero
    return SquareMatrix(
        ring,
        [
            [lam if j == i else one if j == i + 1 else zero for j in range(size)]
            for i in range(size)
        ],
    )


def jordan_realize(spec: JordanSpec, rng: random.Random) -> SquareMatrix:
    """S * J * S^{-1} for a random invertible S: exact matrix with the planted
    Jordan structure, hence fully known spectrum and point indices."""
    from .generators import random_invertible

    j = SquareMatrix.block_diagonal(
        [jordan_block(spec.ring, ev, size) for ev, size in spec.blocks]
    )
    s = random_invertible(rng, spec.ring, spec.dim)
    return s * j * s.inverse()


# -- spectra ---------------------------------------------------------------------


def point_index(a: SquareMatrix, value) -> int:
    """Drazin index of value*I - A: 0 exactly when value is not an eigenvalue,
    else the largest Jordan block size at that eigenvalue."""
    ring = a.ring
    if (
        isinstance(value, GaussianRational)
        and value.im != 0
        and isinstance(ring, Rationals)
    ):
        a = a.to_gaussian()
        ring = a.ring
    lam = ring.coerce(value)
    shifted = SquareMatrix.identity(ring, a.dim).scale(lam) - a
    return drazin_index(shifted)


@dataclass(frozen=True)
class SpectrumReport:
    """Exact spectral data for one matrix: detected eigenvalues with
    multiplicities and point indices, the group spectrum (indices >= 2), and
    the monic residual factor left after removing every detected root."""

    ring: Ring
    dim: int
    charpoly_coeffs: tuple
    eigenvalues: tuple
    multiplicities: dict
    point_indices: dict
    group_spectrum: tuple
    residual_factor: Optional[tuple]
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        listed = set(self.eigenvalues)
        if not set(self.group_spectrum) <= listed:
            raise OsdrazinError("group spectrum escaped the detected eigenvalues")
        for ev in self.eigenvalues:
            if self.point_indices[ev] < 1:
                raise OsdrazinError("a detected eigenvalue reported index 0")

    def fully_split(self) -> bool:
        return self.residual_factor is None

    def nonzero_eigenvalues(self) -> list:
        zero = self.ring.zero
        return [ev for ev in self.eigenvalues if ev != zero]

    def to_doc(self) -> dict:
        fmt = self.ring.format
        doc = {
            "kind": "spectrum-report",
            "ring": self.ring.name,
            "dim": self.dim,
            "charpoly": format_poly(self.ring, self.charpoly_coeffs),
            "eigenvalues": [fmt(ev) for ev in self.eigenvalues],
            "multiplicities": {fmt(ev): self.multiplicities[ev] for ev in self.eigenvalues},
            "point_indices": {fmt(ev): self.point_indices[ev] for ev in self.eigenvalues},
            "group_spectrum": [fmt(ev) for ev in self.group_spectrum],
            "residual_factor": (
                None
                if self.residual_factor is None
                else format_poly(self.ring, self.residual_factor)
            ),
            "one_sided_drazin_spectra": "empty",
            "notes": list(self.notes),
        }
        return doc


def group_spectrum(a: SquareMatrix, candidates: Sequence = ()) -> SpectrumReport:
    """Exact group spectrum over the detectable eigenvalues of A.

    Detectability = rational-root search on the exact characteristic
    polynomial plus the supplied candidate scalars; anything else lands in
    the residual factor and is excluded (reported, never approximated).
    """
    ring = a.ring
    if isinstance(ring, Rationals) and any(
        isinstance(c, GaussianRational) and c.im != 0 for c in candidates
    ):
        a = a.to_gaussian()
        ring = a.ring
    coeffs = charpoly(a)
    roots, residual = detect_eigenvalues(ring, coeffs, candidates)
    eigenvalues = tuple(ev for ev, _ in roots)
    multiplicities = {ev: mult for ev, mult in roots}
    point_indices = {ev: point_index(a, ev) for ev in eigenvalues}
    group = tuple(ev for ev in eigenvalues if point_indices[ev] >= 2)
    notes = [
        "one-sided Drazin spectra are empty: every square matrix over a "
        "field is strongly pi-regular, hence Drazin invertible"
    ]
    residual_out = None
    if len(residual) > 1:
        residual_out = tuple(residual)
        notes.append(
            "residual factor of degree %d has no detectable roots; those "
            "eigenvalues are excluded from the report" % (len(residual) - 1)
        )
    return SpectrumReport(
        ring=ring,
        dim=a.dim,
        charpoly_coeffs=tuple(coeffs),
        eigenvalues=eigenvalues,
        multiplicities=multiplicities,
        point_indices=point_indices,
        group_spectrum=group,
        residual_factor=residual_out,
        notes=tuple(notes),
    )


# -- spectral identities ---------------------------------------------------------


def _record_pair(report: VerificationReport, first: str, m1, second: str, m2) -> None:
    if not report.ok():
        report.record_matrix(first, m1)
        report.record_matrix(second, m2)


def _compare_spectra(
    report: VerificationReport,
    left: SpectrumReport,
    right: SpectrumReport,
    left_tag: str,
    right_tag: str,
) -> None:
    """Shared away-from-zero comparison: same detected nonzero eigenvalues,
    equal point indices there, and identical group membership."""
    nz_left = left.nonzero_eigenvalues()
    nz_right = right.nonzero_eigenvalues()
    report.check("nonzero-detection-agreement", nz_left == nz_right)
    common = [ev for ev in nz_left if ev in set(nz_right)]
    report.check(
        "point-index-agreement-away-from-zero",
        all(left.point_indices[ev] == right.point_indices[ev] for ev in common),
    )
    report.check(
        "group-membership-agreement-away-from-zero",
        all(
            (left.point_indices[ev] >= 2) == (right.point_indices[ev] >= 2)
            for ev in common
        ),
    )
    for ev in common:
        name = left.ring.format(ev)
        report.indices[f"index-{left_tag}@{name}"] = left.point_indices[ev]
        report.indices[f"index-{right_tag}@{name}"] = right.point_indices[ev]


def product_identity_check(
    a: SquareMatrix, c: SquareMatrix, candidates: Sequence = ()
) -> VerificationReport:
    """The product spectral identities: AC and CA share a characteristic
    polynomial, their unit defects 1 - AC and 1 - CA have equal Drazin index,
    and their group spectra agree away from zero."""
    if a.dim != c.dim or a.ring != c.ring:
        raise DimensionMismatch("product identity needs same-shape, same-ring factors")
    ac = a * c
    ca = c * a
    report = VerificationReport(instance_id="product-spectral-identity")
    report.check(
        "charpoly-product-symmetry", poly_equal(a.ring, charpoly(ac), charpoly(ca))
    )
    eye = SquareMatrix.identity(a.ring, a.dim)
    k_ac = drazin_index(eye - ac)
    k_ca = drazin_index(eye - ca)
    report.indices["unit-defect-index-ac"] = k_ac
    report.indices["unit-defect-index-ca"] = k_ca
    report.check("unit-defect-index-equal", k_ac == k_ca)
    _compare_spectra(
        report,
        group_spectrum(ac, candidates),
        group_spectrum(ca, candidates),
        "ac",
        "ca",
    )
    _record_pair(report, "a", a, "c", c)
    return report


def intertwine_identity_check(
    p: IntertwinePair, candidates: Sequence = ()
) -> VerificationReport:
    """Spectral agreement for an intertwined pair: equal characteristic
    polynomials, equal Drazin index of the unit defects 1 - a and 1 - b, and
    group spectra agreeing away from zero."""
    report = VerificationReport(instance_id="intertwine-spectral-identity")
    report.check(
        "charpoly-agreement", poly_equal(p.a.ring, charpoly(p.a), charpoly(p.b))
    )
    k_a = drazin_index(p.one - p.a)
    k_b = drazin_index(p.one - p.b)
    report.indices["unit-defect-index-a"] = k_a
    report.indices["unit-defect-index-b"] = k_b
    report.check("unit-defect-index-equal", k_a == k_b)
    _compare_spectra(
        report,
        group_spectrum(p.a, candidates),
        group_spectrum(p.b, candidates),
        "a",
        "b",
    )
    _record_pair(report, "a", p.a, "b", p.b)
    return report
