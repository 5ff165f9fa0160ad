"""Verification campaigns: a registered runner per verified statement.

Each runner draws one instance from a per-trial seeded stream, executes the
construction under test, and re-checks every claimed identity exactly; the
campaign loop aggregates the reports deterministically (identical config =>
byte-identical aggregate document, timings excluded). Counterexamples are
embedded verbatim — full exact matrices — because any failure is either a
library bug or a genuine discovery, and both demand reproducibility.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from . import drazin as dz
from . import generators as gen
from . import intertwine as itw
from . import ringlab
from . import spectra
from . import transfer as tr
from .errors import OsdrazinError, PreconditionFailure, SingularResolvent
from .matrix import SquareMatrix
from .rings import IntegersMod, Ring, ring_from_name
from .witnesses import VerificationReport

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class CampaignConfig:
    theorem: str
    trials: int = 100
    dim: int = 3
    scalar: str = "rational"
    seed: int = 0
    family: str = "default"
    budget_seconds: Optional[float] = None

    def ring(self) -> Ring:
        return ring_from_name(self.scalar)

    def to_doc(self) -> dict:
        return asdict(self)


class UnknownTheorem(ValueError):
    pass


class BadCampaignConfig(ValueError):
    pass


# -- instance selection --------------------------------------------------------

QUAD_FAMILIES = ("classical", "case-ii", "solved", "zero-product", "random")
PAIR_FAMILIES = ("idempotent", "planted", "diagonal")


def _make_quad(cfg: CampaignConfig, rng: random.Random, max_index=None):
    """One quad from the configured family; with max_index set, redraws until
    drazin_index(alpha) fits (the case-II nullspace perturbation does not pin
    the index exactly, unlike the classical and solved constructions)."""
    ring = cfg.ring()
    for _ in range(64):
        family = cfg.family
        if family in ("default", "mixed"):
            family = rng.choice(("classical", "case-ii", "solved"))
        hi = cfg.dim if max_index is None else min(max_index, cfg.dim)
        plant = rng.randint(0, hi)
        if family == "classical":
            q = gen.classical_quad(rng, ring, cfg.dim, plant)
        elif family == "case-ii":
            q = gen.case_ii_quad(rng, ring, cfg.dim, plant)
        elif family == "solved":
            q = gen.solved_quad(rng, ring, cfg.dim, plant)
        elif family == "zero-product":
            q = gen.zero_product_quad(rng, ring, cfg.dim)
        elif family == "random":
            q = gen.classical_quad(rng, ring, cfg.dim, None)
        else:
            raise BadCampaignConfig(f"unknown quad family {family!r}")
        if max_index is None or dz.drazin_index(q.alpha) <= max_index:
            return q
    raise PreconditionFailure(
        f"no {cfg.family} quad with index <= {max_index} after 64 draws"
    )


def _make_pair(cfg: CampaignConfig, rng: random.Random, max_plant=None):
    family = cfg.family
    if family in ("default", "mixed"):
        family = rng.choice(PAIR_FAMILIES) if cfg.dim >= 2 else "diagonal"
    ring = cfg.ring()
    n = rng.randint(1, 2)
    if family == "idempotent":
        return gen.idempotent_pair(rng, ring, cfg.dim, n)
    if family == "planted":
        hi = cfg.dim - 1 if max_plant is None else min(max_plant, cfg.dim - 1)
        return gen.planted_pair(rng, ring, cfg.dim, rng.randint(1, max(1, hi)), n)
    if family == "diagonal":
        hi = cfg.dim if max_plant is None else min(max_plant, cfg.dim)
        return gen.diagonal_pair(rng, ring, cfg.dim, n, plant=rng.randint(0, hi))
    raise BadCampaignConfig(f"unknown pair family {family!r}")


def _modulus(cfg: CampaignConfig) -> int:
    ring = cfg.ring()
    if not isinstance(ring, IntegersMod):
        raise BadCampaignConfig(
            f"{cfg.theorem} runs over a finite scalar ring; pass --scalar mod:m"
        )
    return ring.modulus


# -- runners: core predicates and section-2 constructions -----------------------


def run_core_predicates(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    planted = cfg.family in ("default", "planted")
    if planted:
        plant = rng.randint(0, cfg.dim)
        a = gen.planted_index_matrix(rng, ring, cfg.dim, plant)
    else:
        a = gen.random_matrix(rng, ring, cfg.dim)
    rep = VerificationReport(instance_id="core-predicates")
    x, k = dz.drazin_inverse(a)
    if planted:
        rep.check("planted-index-recovered", k == plant)
    rep.check("left-system", dz.verify_left_drazin(a, x, k))
    rep.check("right-system", dz.verify_right_drazin(a, x, k))
    rep.check("commutation", a * x == x * a)
    rep.check("left-minimality", k == 0 or not dz.verify_left_drazin(a, x, k - 1))
    rep.check("right-minimality", k == 0 or not dz.verify_right_drazin(a, x, k - 1))
    rep.indices["witness-index"] = k
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("x", x)
    return rep


def run_agreement(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    a = gen.planted_index_matrix(rng, ring, cfg.dim, rng.randint(0, cfg.dim))
    rep = VerificationReport(instance_id="one-sided-agreement")
    x, k = dz.drazin_inverse(a)
    j_left = dz.left_witness_index(a, x)
    j_right = dz.right_witness_index(a, x)
    rep.check("left-witness-valid", j_left is not None)
    rep.check("right-witness-valid", j_right is not None)
    rep.check("minimal-indices-equal", j_left == j_right == k)
    if j_left is not None and j_right is not None:
        rep.check("agreement", dz.one_sided_agreement(a, x, j_left, x, j_right))
    rep.indices["witness-index"] = k
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("x", x)
    return rep


def run_normalize(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    a = gen.planted_index_matrix(rng, ring, cfg.dim, rng.randint(0, cfg.dim))
    x, _ = dz.drazin_inverse(a)
    rep = VerificationReport(instance_id="witness-normalization")
    b = dz.normalize_left_gdrazin(a, x)
    rep.check("left-skew", a * b * a == b * a * a)
    rep.check("left-inner", b * a * b == b)
    rep.check("left-sq", b * b * a == b)
    rep.check("left-defect-nilpotent", (a * b * a - a).is_nilpotent())
    c = dz.normalize_right_gdrazin(a, x)
    rep.check("right-skew", a * c * a == a * a * c)
    rep.check("right-inner", c * a * c == c)
    rep.check("right-sq", a * c * c == c)
    rep.check("right-defect-nilpotent", (a * c * a - a).is_nilpotent())
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("x", x)
    return rep


def run_intertwine_witnesses(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    ring = cfg.ring()
    rep = VerificationReport(instance_id="witness-intertwining")
    a = gen.random_matrix(rng, ring, cfg.dim)
    z = gen.random_invertible(rng, ring, cfg.dim)
    b = z.inverse() * a * z
    x, _ = dz.drazin_inverse(a)
    y = z.inverse() * x * z
    rep.check("similarity-bridge", dz.intertwine_check(a, b, z, x, y))
    if cfg.dim >= 2:
        r = rng.randint(1, cfg.dim - 1)
        blocks_a = [gen.random_matrix(rng, ring, r), gen.random_matrix(rng, ring, cfg.dim - r)]
        blocks_b = [blocks_a[0], gen.random_matrix(rng, ring, cfg.dim - r)]
        a2 = SquareMatrix.block_diagonal(blocks_a)
        b2 = SquareMatrix.block_diagonal(blocks_b)
        z2 = SquareMatrix.block_diagonal(
            [
                SquareMatrix.identity(ring, r),
                SquareMatrix.zeros(ring, cfg.dim - r),
            ]
        )
        x2, _ = dz.drazin_inverse(a2)
        y2, _ = dz.drazin_inverse(b2)
        rep.check("singular-bridge", dz.intertwine_check(a2, b2, z2, x2, y2))
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("z", z)
    return rep


def run_reverse_order(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    b = gen.planted_index_matrix(rng, ring, cfg.dim, rng.randint(0, cfg.dim))
    a = gen.polynomial_of(rng, b)
    x, _ = dz.drazin_inverse(a)
    y, _ = dz.drazin_inverse(b)
    rep = VerificationReport(instance_id="reverse-order-product")
    w = dz.reverse_order_left(a, b, x, y)
    ab = a * b
    rep.check("product-witness-gdrazin", dz.verify_left_gdrazin(ab, w.candidate))
    if w.index is not None:
        rep.check(
            "product-witness-at-index",
            dz.verify_left_drazin(ab, w.candidate, w.index),
        )
        rep.indices["product-witness-index"] = w.index
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("b", b)
        rep.record_matrix("w", w.candidate)
    return rep


def run_realization_audit(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    spec = ringlab.FiniteRingSpec(cfg.dim, _modulus(cfg))
    return ringlab.realization_audit(spec)


# -- runners: quad transfers -----------------------------------------------------


def run_quad_regular_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    q = _make_quad(cfg, rng, max_index=1)
    rep = VerificationReport(instance_id="quad-regular-left")
    x, _ = dz.drazin_inverse(q.alpha)
    rep.check("hypothesis", x * q.alpha * q.alpha == q.alpha)
    y = tr.left_regular_transfer(q, x)
    rep.check("transfer-law", y * q.beta * q.beta == q.beta)
    x2 = tr.left_regular_reverse(q, y)
    rep.check("reverse-law", x2 * q.alpha * q.alpha == q.alpha)
    if not rep.ok():
        _record_quad(rep, q)
    return rep


def run_quad_regular_right(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    q = _make_quad(cfg, rng, max_index=1)
    rep = VerificationReport(instance_id="quad-regular-right")
    x, _ = dz.drazin_inverse(q.alpha)
    rep.check("hypothesis", q.alpha * q.alpha * x == q.alpha)
    y = tr.right_regular_transfer(q, x)
    rep.check("transfer-law", q.beta * q.beta * y == q.beta)
    x2 = tr.right_regular_reverse(q, y)
    rep.check("reverse-law", q.alpha * q.alpha * x2 == q.alpha)
    if not rep.ok():
        _record_quad(rep, q)
    return rep


def run_quad_strong_pi_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    q = _make_quad(cfg, rng)
    rep = VerificationReport(instance_id="quad-strong-pi-left")
    x, k = dz.drazin_inverse(q.alpha)
    rep.check("hypothesis", dz.verify_left_strongly_pi(q.alpha, x, k))
    y = tr.strong_pi_transfer(q, x, k)
    rep.check("transfer-law", dz.verify_left_strongly_pi(q.beta, y, k))
    witness = dz.azumaya_left(q.beta, y, k)
    rep.check(
        "azumaya-composition",
        dz.verify_left_drazin(q.beta, witness.candidate, witness.index),
    )
    x2 = tr.strong_pi_reverse(q, y, k)
    rep.check("reverse-law", dz.verify_left_strongly_pi(q.alpha, x2, k))
    rep.indices["witness-index"] = k
    if not rep.ok():
        _record_quad(rep, q)
    return rep


def run_quad_drazin_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    q = _make_quad(cfg, rng)
    rep = VerificationReport(instance_id="quad-drazin-left")
    x, k = dz.drazin_inverse(q.alpha)
    w = tr.drazin_transfer(q, x, k)
    rep.check("transfer-predicate", dz.verify_left_drazin(q.beta, w.candidate, k))
    rep.check("index-preserved", dz.drazin_index(q.beta) == k)
    back = tr.drazin_transfer_reverse(q, w.candidate, k)
    rep.check("reverse-predicate", dz.verify_left_drazin(q.alpha, back.candidate, k))
    rep.indices["witness-index"] = k
    if not rep.ok():
        _record_quad(rep, q)
        rep.record_matrix("y", w.candidate)
    return rep


def run_quad_group_left(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    q = _make_quad(cfg, rng, max_index=1)
    rep = VerificationReport(instance_id="quad-group-left")
    x, k = dz.drazin_inverse(q.alpha)
    rep.check("hypothesis-index", k <= 1)
    w = tr.group_transfer(q, x)
    rep.check("transfer-predicate", dz.verify_left_drazin(q.beta, w.candidate, 1))
    rep.check("index-preserved", dz.drazin_index(q.beta) <= 1)
    rep.indices["alpha-index"] = k
    if not rep.ok():
        _record_quad(rep, q)
    return rep


def run_quad_gdrazin_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    q = _make_quad(cfg, rng)
    rep = VerificationReport(instance_id="quad-gdrazin-left")
    x, _ = dz.drazin_inverse(q.alpha)
    try:
        w = tr.gdrazin_transfer(q, x)
    except SingularResolvent:
        rep.check("bracket-invertible", False)
        _record_quad(rep, q)
        return rep
    rep.check("bracket-invertible", True)
    y = w.candidate
    rep.check("transfer-predicate", dz.verify_left_gdrazin(q.beta, y))
    rep.check("defect-nilpotent", (q.beta - q.beta * y * q.beta).is_nilpotent())
    try:
        back = tr.gdrazin_transfer_reverse(q, y)
    except SingularResolvent:
        rep.check("reverse-bracket-invertible", False)
        _record_quad(rep, q)
        return rep
    rep.check("reverse-bracket-invertible", True)
    rep.check("reverse-predicate", dz.verify_left_gdrazin(q.alpha, back.candidate))
    if not rep.ok():
        _record_quad(rep, q)
        rep.record_matrix("y", y)
    return rep


def run_binomial_probe(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    q = _make_quad(cfg, rng)
    return tr.binomial_probe(q, rng.randint(1, 4))


def run_cline_left(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    c = gen.random_invertible(rng, ring, cfg.dim)
    m = gen.planted_index_matrix(rng, ring, cfg.dim, rng.randint(0, cfg.dim))
    a = m * c.inverse()
    rep = VerificationReport(instance_id="cline-left")
    x, k = dz.drazin_inverse(a * c)
    w = tr.cline_partial_left(a, c, x, k)
    rep.check(
        "shifted-predicate", dz.verify_left_drazin(c * a, w.candidate, k + 1)
    )
    rep.indices["source-index"] = k
    rep.indices["shifted-claimed-index"] = w.index
    rep.indices["shifted-true-index"] = dz.drazin_index(c * a)
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("c", c)
        rep.record_matrix("y", w.candidate)
    return rep


def run_cline_right(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    a = gen.random_invertible(rng, ring, cfg.dim)
    m = gen.planted_index_matrix(rng, ring, cfg.dim, rng.randint(0, cfg.dim))
    c = a.inverse() * m
    rep = VerificationReport(instance_id="cline-right")
    x, k = dz.drazin_inverse(a * c)
    w = tr.cline_partial_right(a, c, x, k)
    rep.check(
        "shifted-predicate", dz.verify_right_drazin(c * a, w.candidate, k + 1)
    )
    rep.indices["source-index"] = k
    rep.indices["shifted-claimed-index"] = w.index
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("c", c)
        rep.record_matrix("y", w.candidate)
    return rep


def run_unit_defect_indices(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    ring = cfg.ring()
    a = gen.random_matrix(rng, ring, cfg.dim)
    c = gen.random_matrix(rng, ring, cfg.dim)
    q = tr.quad_from_classical(a, c)
    rep = VerificationReport(instance_id="unit-defect-index-identity")
    k1 = dz.drazin_index(q.alpha)
    k2 = dz.drazin_index(q.beta)
    rep.indices["index-1-ac"] = k1
    rep.indices["index-1-ca"] = k2
    rep.check("index-equal", k1 == k2)
    x, k = dz.drazin_inverse(q.alpha)
    w = tr.drazin_transfer(q, x, k)
    rep.check("transfer-valid", dz.verify_left_drazin(q.beta, w.candidate, k))
    if not rep.ok():
        rep.record_matrix("a", a)
        rep.record_matrix("c", c)
    return rep


def _random_jordan_spec(cfg: CampaignConfig, rng: random.Random) -> spectra.JordanSpec:
    remaining = cfg.dim
    blocks = []
    pool = [-2, -1, 0, 0, 1, 2, 3]
    while remaining:
        size = rng.randint(1, min(3, remaining))
        blocks.append((rng.choice(pool), size))
        remaining -= size
    return spectra.JordanSpec(tuple(blocks))


def run_product_spectra(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    ring = cfg.ring()
    if cfg.family == "planted-jordan":
        spec = _random_jordan_spec(cfg, rng)
        t = spectra.jordan_realize(spec, rng)
        c = gen.random_invertible(rng, ring, cfg.dim)
        a = t * c.inverse()
        rep = spectra.product_identity_check(a, c, candidates=spec.eigenvalues())
        planted_group = {
            spec.ring.format(ev)
            for ev in spec.eigenvalues()
            if spec.max_block_size(ev) >= 2
        }
        detected = spectra.group_spectrum(a * c, candidates=spec.eigenvalues())
        rep.check(
            "planted-group-spectrum-recovered",
            {spec.ring.format(ev) for ev in detected.group_spectrum} == planted_group,
        )
        rep.check("planted-fully-split", detected.fully_split())
        return rep
    a = gen.random_matrix(rng, ring, cfg.dim)
    c = gen.random_matrix(rng, ring, cfg.dim)
    return spectra.product_identity_check(a, c)


# -- runners: intertwined-pair transfers ------------------------------------------


def run_pair_regular_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    p = _make_pair(cfg, rng, max_plant=1)
    rep = VerificationReport(instance_id="pair-regular-left")
    x, _ = dz.drazin_inverse(p.one_minus_a)
    rep.check("hypothesis", x * p.one_minus_a * p.one_minus_a == p.one_minus_a)
    y = itw.regular_transfer_pair(p, x)
    rep.check("transfer-law", y * p.one_minus_b * p.one_minus_b == p.one_minus_b)
    x2 = itw.regular_reverse_pair(p, y)
    rep.check("reverse-law", x2 * p.one_minus_a * p.one_minus_a == p.one_minus_a)
    if not rep.ok():
        _record_pair(rep, p)
    return rep


def run_pair_strong_pi_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    p = _make_pair(cfg, rng)
    rep = VerificationReport(instance_id="pair-strong-pi-left")
    x, k = dz.drazin_inverse(p.one_minus_a)
    rep.check("hypothesis", dz.verify_left_strongly_pi(p.one_minus_a, x, k))
    y = itw.strong_pi_transfer_pair(p, x, k)
    rep.check("transfer-law", dz.verify_left_strongly_pi(p.one_minus_b, y, k))
    rep.indices["witness-index"] = k
    if not rep.ok():
        _record_pair(rep, p)
    return rep


def run_pair_drazin_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    p = _make_pair(cfg, rng)
    rep = VerificationReport(instance_id="pair-drazin-left")
    x, k = dz.drazin_inverse(p.one_minus_a)
    w = itw.drazin_transfer_pair(p, x, k)
    rep.check(
        "transfer-predicate", dz.verify_left_drazin(p.one_minus_b, w.candidate, k)
    )
    rep.check("index-preserved", dz.drazin_index(p.one_minus_b) == k)
    back = itw.drazin_reverse_pair(p, w.candidate, k)
    rep.check(
        "reverse-predicate", dz.verify_left_drazin(p.one_minus_a, back.candidate, k)
    )
    rep.indices["witness-index"] = k
    if not rep.ok():
        _record_pair(rep, p)
        rep.record_matrix("y", w.candidate)
    return rep


def run_pair_group_left(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    p = _make_pair(cfg, rng, max_plant=1)
    rep = VerificationReport(instance_id="pair-group-left")
    x, k = dz.drazin_inverse(p.one_minus_a)
    rep.check("hypothesis-index", k <= 1)
    w = itw.group_transfer_pair(p, x)
    rep.check(
        "transfer-predicate", dz.verify_left_drazin(p.one_minus_b, w.candidate, 1)
    )
    rep.check("index-preserved", dz.drazin_index(p.one_minus_b) <= 1)
    if not rep.ok():
        _record_pair(rep, p)
    return rep


def run_pair_gdrazin_left(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    p = _make_pair(cfg, rng)
    rep = VerificationReport(instance_id="pair-gdrazin-left")
    x, _ = dz.drazin_inverse(p.one_minus_a)
    try:
        w = itw.gdrazin_transfer_pair(p, x)
    except SingularResolvent:
        rep.check("bracket-invertible", False)
        _record_pair(rep, p)
        return rep
    rep.check("bracket-invertible", True)
    y = w.candidate
    beta = p.one_minus_b
    rep.check("transfer-predicate", dz.verify_left_gdrazin(beta, y))
    rep.check("defect-nilpotent", (beta - beta * y * beta).is_nilpotent())
    try:
        back = itw.gdrazin_reverse_pair(p, y)
    except SingularResolvent:
        rep.check("reverse-bracket-invertible", False)
        _record_pair(rep, p)
        return rep
    rep.check("reverse-bracket-invertible", True)
    rep.check(
        "reverse-predicate", dz.verify_left_gdrazin(p.one_minus_a, back.candidate)
    )
    if not rep.ok():
        _record_pair(rep, p)
        rep.record_matrix("y", y)
    return rep


def run_pair_spectra(cfg: CampaignConfig, rng: random.Random) -> VerificationReport:
    p = _make_pair(cfg, rng)
    return spectra.intertwine_identity_check(p)


def _pair_level(cfg: CampaignConfig) -> int:
    if cfg.family in ("default", "mixed"):
        return 1
    if cfg.family.startswith("n="):
        n = int(cfg.family[2:])
        if n < 1:
            raise BadCampaignConfig("pair level must be >= 1")
        return n
    raise BadCampaignConfig(
        f"family {cfg.family!r} invalid here; use n=<level> or default"
    )


def run_pair_exhaustive_audit(
    cfg: CampaignConfig, rng: random.Random
) -> VerificationReport:
    """Every intertwined pair in M_dim(Z_m) at the given level: transfer the
    full ladder (regular when applicable, strongly pi, Drazin with reverse,
    group when applicable, generalized Drazin) and re-check each output."""
    modulus = _modulus(cfg)
    level = _pair_level(cfg)
    ring = IntegersMod(modulus)
    rep = VerificationReport(instance_id="pair-exhaustive-audit")
    spec = ringlab.FiniteRingSpec(cfg.dim, modulus)
    audited = 0
    all_ok = True
    for i, p in enumerate(itw.pair_exhaustive(cfg.dim, modulus, level)):
        audited += 1
        if ring.is_field:
            x, k = dz.drazin_inverse(p.one_minus_a)
        else:
            found = ringlab.search_left_drazin(spec, p.one_minus_a)
            mirror = ringlab.search_left_drazin(spec, p.one_minus_b)
            if not rep.check(f"pair-{i}-existence-iff", (found is None) == (mirror is None)):
                all_ok = False
                _record_pair(rep, p, prefix=f"pair-{i}-")
                continue
            if found is None:
                continue
            x, k = found
        ok = True
        w = itw.drazin_transfer_pair(p, x, k)
        ok &= dz.verify_left_drazin(p.one_minus_b, w.candidate, k)
        back = itw.drazin_reverse_pair(p, w.candidate, k)
        ok &= dz.verify_left_drazin(p.one_minus_a, back.candidate, k)
        if ring.is_field:
            ok &= dz.drazin_index(p.one_minus_b) == k
        y_pi = itw.strong_pi_transfer_pair(p, x, k)
        ok &= dz.verify_left_strongly_pi(p.one_minus_b, y_pi, k)
        if k <= 1:
            ok &= (
                itw.regular_transfer_pair(p, x) * p.one_minus_b * p.one_minus_b
                == p.one_minus_b
            )
            wg = itw.group_transfer_pair(p, x)
            ok &= dz.verify_left_drazin(p.one_minus_b, wg.candidate, 1)
        try:
            wgd = itw.gdrazin_transfer_pair(p, x)
            ok &= dz.verify_left_gdrazin(p.one_minus_b, wgd.candidate)
        except SingularResolvent:
            ok = False
        if not ok:
            all_ok = False
            rep.check(f"pair-{i}-transfers", False)
            _record_pair(rep, p, prefix=f"pair-{i}-")
        rep.indices[f"pair-{i}-index"] = k
    rep.indices["pairs_audited"] = audited
    rep.check("all-pairs-verified", all_ok)
    rep.notes.append(
        f"exhaustive level-{level} pairs in M_{cfg.dim}(Z_{modulus}); "
        "every transfer output re-checked against its defining identities"
    )
    return rep


def _record_quad(rep: VerificationReport, q) -> None:
    rep.record_matrix("a", q.a)
    rep.record_matrix("b", q.b)
    rep.record_matrix("c", q.c)
    rep.record_matrix("d", q.d)


def _record_pair(rep: VerificationReport, p, prefix: str = "") -> None:
    rep.record_matrix(prefix + "a", p.a)
    rep.record_matrix(prefix + "b", p.b)


# -- the registry -----------------------------------------------------------------


@dataclass(frozen=True)
class TheoremEntry:
    theorem: str
    statement: str
    runner: Callable[[CampaignConfig, random.Random], VerificationReport]
    whole_run: bool = False
    needs_finite: bool = False
    families: tuple = ()

    def accepts_family(self, family: str) -> bool:
        if family in ("default", "mixed"):
            return True
        if "n=*" in self.families:
            tail = family[2:] if family.startswith("n=") else ""
            return tail.isdigit() and int(tail) >= 1
        return family in self.families


_ENTRIES = [
    TheoremEntry(
        "core-predicates",
        "canonical Drazin inverse satisfies both one-sided witness systems at "
        "the minimal index and fails one index lower",
        run_core_predicates,
        families=("planted", "random"),
    ),
    TheoremEntry(
        "prop-1.4",
        "minimal left and right Drazin witness indices agree and the witness "
        "serves both sides",
        run_agreement,
    ),
    TheoremEntry(
        "prop-2.1",
        "x a x strengthens a one-sided generalized-Drazin witness to an inner, "
        "square-collapsing one on the same side",
        run_normalize,
    ),
    TheoremEntry(
        "prop-2.2",
        "witnesses intertwine across az == zb, including singular bridges",
        run_intertwine_witnesses,
    ),
    TheoremEntry(
        "thm-2.4",
        "reverse-order witness y x for a product a b when a is a polynomial "
        "in b",
        run_reverse_order,
    ),
    TheoremEntry(
        "thm-2.7-audit",
        "exhaustive finite-ring audit: one-sided Drazin invertibility holds "
        "exactly where one-sided strong pi-regularity does, and the "
        "constructive witness passes at the claimed index",
        run_realization_audit,
        whole_run=True,
        needs_finite=True,
    ),
    TheoremEntry(
        "thm-3-regular-left",
        "left regularity of 1 - ac transfers to 1 - ca via y = 1 + bd + bacxd "
        "(quad form), with reverse",
        run_quad_regular_left,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "thm-3-regular-right",
        "right regularity transfers with the same element under the mirrored "
        "hypothesis",
        run_quad_regular_right,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "thm-3-strong-pi-left",
        "left strong pi-regularity transfers at the same power, and the "
        "transferred witness feeds the constructive Drazin realization",
        run_quad_strong_pi_left,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "thm-3.5-left",
        "left Drazin witnesses transfer across a quad with the index "
        "preserved, and the mirrored formula transfers back",
        run_quad_drazin_left,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "thm-3-group-left",
        "index-one specialization: group-type witnesses transfer across a quad",
        run_quad_group_left,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "thm-3.6-left",
        "left generalized-Drazin witnesses transfer across a quad; the "
        "resolvent bracket must be invertible and the defect nilpotent",
        run_quad_gdrazin_left,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "pi-binomial-probe",
        "binomial contraction elements satisfy (1-bd)^n == 1 - b_n d and "
        "(1-ac)^n == 1 - a c_n, and (a, b_n, c_n, d) is again a quad",
        run_binomial_probe,
        families=QUAD_FAMILIES,
    ),
    TheoremEntry(
        "prop-cline-left",
        "partial product shift: y = c x^2 a carries a left Drazin witness "
        "from ac to ca at index k + 1 when c is invertible",
        run_cline_left,
    ),
    TheoremEntry(
        "prop-cline-right",
        "right-handed partial product shift (a invertible)",
        run_cline_right,
    ),
    TheoremEntry(
        "cor-3.10",
        "1 - ac and 1 - ca have equal Drazin index, witnessed constructively",
        run_unit_defect_indices,
    ),
    TheoremEntry(
        "cor-3.11",
        "product spectral identities: shared characteristic polynomial, equal "
        "unit-defect index, group spectra agree away from zero",
        run_product_spectra,
        families=("random", "planted-jordan"),
    ),
    TheoremEntry(
        "thm-4.0-left",
        "left regularity of 1 - a transfers to 1 - b across an intertwined "
        "pair, with reverse",
        run_pair_regular_left,
        families=PAIR_FAMILIES,
    ),
    TheoremEntry(
        "thm-4.1-left",
        "left strong pi-regularity transfers across an intertwined pair at "
        "the same power",
        run_pair_strong_pi_left,
        families=PAIR_FAMILIES,
    ),
    TheoremEntry(
        "thm-4.2-left",
        "left Drazin witnesses transfer across an intertwined pair with the "
        "index preserved, and back",
        run_pair_drazin_left,
        families=PAIR_FAMILIES,
    ),
    TheoremEntry(
        "thm-4.3-left",
        "index-one specialization for intertwined pairs",
        run_pair_group_left,
        families=PAIR_FAMILIES,
    ),
    TheoremEntry(
        "thm-4.5-left",
        "left generalized-Drazin witnesses transfer across an intertwined "
        "pair; the resolvent bracket must be invertible",
        run_pair_gdrazin_left,
        families=PAIR_FAMILIES,
    ),
    TheoremEntry(
        "thm-4-exhaustive-audit",
        "every intertwined pair in a small finite matrix ring, full transfer "
        "ladder re-checked",
        run_pair_exhaustive_audit,
        whole_run=True,
        needs_finite=True,
        families=("n=*",),
    ),
    TheoremEntry(
        "cor-4.7",
        "intertwined pairs share characteristic polynomial, unit-defect "
        "index, and group spectrum away from zero",
        run_pair_spectra,
        families=PAIR_FAMILIES,
    ),
]

REGISTRY = {entry.theorem: entry for entry in _ENTRIES}


def list_theorems() -> list:
    return [(entry.theorem, entry.statement) for entry in _ENTRIES]


# -- the campaign loop -------------------------------------------------------------


def _trial_seed(seed: int, trial: int) -> str:
    return f"{seed}:{trial}"


def _execute_trial(cfg: CampaignConfig, trial: int) -> tuple:
    """Run one trial and reduce it to picklable primitives:
    (trial, passed, indices, notes, failure_doc_or_None)."""
    entry = REGISTRY[cfg.theorem]
    rng = random.Random(_trial_seed(cfg.seed, trial))
    try:
        report = entry.runner(cfg, rng)
    except (OsdrazinError, ValueError, ZeroDivisionError, OverflowError) as exc:
        report = VerificationReport(instance_id=f"{cfg.theorem}-trial-{trial}")
        report.check("no-exception", False)
        report.notes.append(f"{type(exc).__name__}: {exc}")
    passed = report.ok()
    doc = None if passed else report.to_doc(include_timings=False)
    return (trial, passed, dict(report.indices), list(report.notes), doc)


def _worker_count() -> int:
    raw = os.environ.get("OSDRAZIN_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise BadCampaignConfig(f"OSDRAZIN_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def validate_config(cfg: CampaignConfig) -> TheoremEntry:
    if cfg.theorem not in REGISTRY:
        known = ", ".join(sorted(REGISTRY))
        raise UnknownTheorem(f"unknown theorem id {cfg.theorem!r}; registered: {known}")
    if cfg.trials < 1:
        raise BadCampaignConfig("trials must be >= 1")
    if cfg.dim < 1:
        raise BadCampaignConfig("dim must be >= 1")
    if cfg.budget_seconds is not None and cfg.budget_seconds <= 0:
        raise BadCampaignConfig("budget-seconds must be positive")
    try:
        ring = cfg.ring()
    except Exception as exc:
        raise BadCampaignConfig(f"bad scalar {cfg.scalar!r}: {exc}")
    entry = REGISTRY[cfg.theorem]
    if entry.needs_finite and not isinstance(ring, IntegersMod):
        raise BadCampaignConfig(
            f"{cfg.theorem} needs a finite scalar ring; pass --scalar mod:m"
        )
    if not entry.accepts_family(cfg.family):
        allowed = ", ".join(("default", "mixed") + entry.families)
        raise BadCampaignConfig(
            f"family {cfg.family!r} is not valid for {cfg.theorem}; allowed: {allowed}"
        )
    return entry


def run_campaign(cfg: CampaignConfig) -> tuple:
    """Execute a campaign; returns (aggregate document, exit status)."""
    entry = validate_config(cfg)
    trials = 1 if entry.whole_run else cfg.trials
    deadline = (
        None if cfg.budget_seconds is None else time.monotonic() + cfg.budget_seconds
    )
    workers = _worker_count()
    results = []
    truncated = False

    if workers == 1:
        for trial in range(trials):
            if deadline is not None and time.monotonic() > deadline:
                truncated = True
                break
            results.append(_execute_trial(cfg, trial))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_execute_trial, cfg, t) for t in range(trials)]
            for fut in futures:
                if deadline is not None and time.monotonic() > deadline:
                    truncated = True
                    for other in futures:
                        other.cancel()
                    break
                results.append(fut.result())

    passes = sum(1 for r in results if r[1])
    failures = [r for r in results if not r[1]]
    histogram = {}
    for _, _, indices, _, _ in results:
        for key, value in indices.items():
            histogram.setdefault(key, {}).setdefault(str(value), 0)
            histogram[key][str(value)] += 1
    histogram = {
        key: dict(sorted(histogram[key].items())) for key in sorted(histogram)
    }
    notes = []
    for _, _, _, trial_notes, _ in results:
        for note in trial_notes:
            if note not in notes:
                notes.append(note)
    if truncated:
        notes.append(
            "budget exhausted: partial results only, trial count is not "
            "reproducible across machines"
        )

    doc = {
        "kind": "campaign-report",
        "theorem": cfg.theorem,
        "statement": entry.statement,
        "config": cfg.to_doc(),
        "trials_requested": trials,
        "trials_run": len(results),
        "passes": passes,
        "failures": len(failures),
        "indices_observed": histogram,
        "failure_details": [
            {"trial": trial, "report": doc}
            for trial, _, _, _, doc in failures
        ],
        "budget_exhausted": truncated,
        "notes": notes,
    }
    if truncated:
        status = EXIT_BUDGET
    elif failures:
        status = EXIT_FAIL
    else:
        status = EXIT_PASS
    doc["exit_status"] = status
    return doc, status
