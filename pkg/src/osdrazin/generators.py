"""Deterministic random instance generators shared by campaigns and tests.

Every generator takes an explicit random.Random so campaigns can hand each
trial its own deterministically derived stream. Entries are small integers;
all validation (quad laws, pair laws, planted indices) happens in the
constructed objects themselves, so generators cannot return invalid instances.
"""

from __future__ import annotations

import random
from typing import Optional

from .errors import PreconditionFailure
from .intertwine import IntertwinePair
from .matrix import SquareMatrix, nullspace
from .rings import QQ, GaussianRational, GaussianRationals, Ring
from .transfer import JacobsonQuad, quad_from_classical, quad_solve

DEFAULT_BOUND = 2


def random_matrix(
    rng: random.Random, ring: Ring, dim: int, bound: int = DEFAULT_BOUND
) -> SquareMatrix:
    if isinstance(ring, GaussianRationals):
        return SquareMatrix(
            ring,
            [
                [
                    GaussianRational(
                        rng.randint(-bound, bound), rng.randint(-bound, bound)
                    )
                    for _ in range(dim)
                ]
                for _ in range(dim)
            ],
        )
    return SquareMatrix(
        ring,
        [[rng.randint(-bound, bound) for _ in range(dim)] for _ in range(dim)],
    )


def random_invertible(
    rng: random.Random, ring: Ring, dim: int, bound: int = DEFAULT_BOUND
) -> SquareMatrix:
    while True:
        m = random_matrix(rng, ring, dim, bound)
        if m.try_inverse() is not None:
            return m


def nilpotent_shift(ring: Ring, dim: int) -> SquareMatrix:
    """The dim x dim upper shift block; nilpotent of index exactly dim."""
    one, zero = ring.one, ring.zero
    return SquareMatrix(
        ring,
        [[one if j == i + 1 else zero for j in range(dim)] for i in range(dim)],
    )


def planted_index_matrix(
    rng: random.Random, ring: Ring, dim: int, k: int, bound: int = DEFAULT_BOUND
) -> SquareMatrix:
    """A matrix with Drazin index exactly k, by conjugating a shift block of
    size k next to an invertible block of size dim - k."""
    if not 0 <= k <= dim:
        raise PreconditionFailure(f"need 0 <= k <= dim, got k={k}, dim={dim}")
    if k == 0:
        return random_invertible(rng, ring, dim, bound)
    blocks = [nilpotent_shift(ring, k)]
    if dim - k:
        blocks.append(random_invertible(rng, ring, dim - k, bound))
    j = SquareMatrix.block_diagonal(blocks)
    s = random_invertible(rng, ring, dim, bound)
    return s * j * s.inverse()


# -- quad families -------------------------------------------------------------


def classical_quad(
    rng: random.Random, ring: Ring, dim: int, plant: Optional[int] = None
) -> JacobsonQuad:
    """b = c, d = a. With plant = k, 1 - ac is built to have Drazin index k."""
    if plant is None:
        return quad_from_classical(
            random_matrix(rng, ring, dim), random_matrix(rng, ring, dim)
        )
    m = planted_index_matrix(rng, ring, dim, plant)
    c = random_invertible(rng, ring, dim)
    a = (SquareMatrix.identity(ring, dim) - m) * c.inverse()
    return quad_from_classical(a, c)


def case_ii_quad(
    rng: random.Random, ring: Ring, dim: int, plant: Optional[int] = None
) -> JacobsonQuad:
    """b = 1 and d = a; the quad laws collapse to aca == a^2, realized by
    c = 1 + kappa with kappa sampled from the exact nullspace of z -> aza."""
    if plant is None:
        a = random_matrix(rng, ring, dim)
    else:
        a = SquareMatrix.identity(ring, dim) - planted_index_matrix(
            rng, ring, dim, plant
        )
    rows = []
    red = ring.reduce
    for i in range(dim):
        for j in range(dim):
            rows.append(
                [
                    red(a.rows[i][p] * a.rows[q][j])
                    for p in range(dim)
                    for q in range(dim)
                ]
            )
    basis = nullspace(ring, rows)
    one = SquareMatrix.identity(ring, dim)
    if basis:
        coeffs = [rng.randint(-DEFAULT_BOUND, DEFAULT_BOUND) for _ in basis]
        flat = [
            sum(cf * vec[idx] for cf, vec in zip(coeffs, basis))
            for idx in range(dim * dim)
        ]
        kappa = SquareMatrix(
            ring, [flat[r * dim : (r + 1) * dim] for r in range(dim)]
        )
    else:
        kappa = SquareMatrix.zeros(ring, dim)
    return JacobsonQuad(a, one, one + kappa, a)


def solved_quad(
    rng: random.Random, ring: Ring, dim: int, plant: Optional[int] = None
) -> JacobsonQuad:
    """Draw a, d invertible and b, then solve the quad laws for c exactly.

    With plant = k, b is chosen so that 1 - ac has Drazin index k.
    """
    for _ in range(64):
        a = random_invertible(rng, ring, dim)
        d = random_invertible(rng, ring, dim)
        if plant is None:
            b = random_matrix(rng, ring, dim)
        else:
            m = planted_index_matrix(rng, ring, dim, plant)
            b = (SquareMatrix.identity(ring, dim) - m) * d.inverse()
        q = quad_solve(a, d, b)
        if q is not None:
            return q
    raise PreconditionFailure("could not complete a quad after 64 attempts")


def zero_product_quad(rng: random.Random, ring: Ring, dim: int) -> JacobsonQuad:
    """a = 0 and dbd == 0, so ac == 0 and the transfers degenerate to closed
    forms; exercises the empty-resolvent branch."""
    zero = SquareMatrix.zeros(ring, dim)
    c = random_matrix(rng, ring, dim)
    for _ in range(64):
        d = random_matrix(rng, ring, dim)
        rows = []
        red = ring.reduce
        for i in range(dim):
            for j in range(dim):
                rows.append(
                    [
                        red(d.rows[i][p] * d.rows[q][j])
                        for p in range(dim)
                        for q in range(dim)
                    ]
                )
        basis = nullspace(ring, rows)
        if not basis:
            continue
        coeffs = [rng.randint(-DEFAULT_BOUND, DEFAULT_BOUND) for _ in basis]
        flat = [
            sum(cf * vec[idx] for cf, vec in zip(coeffs, basis))
            for idx in range(dim * dim)
        ]
        b = SquareMatrix(ring, [flat[r * dim : (r + 1) * dim] for r in range(dim)])
        if (d * b * d).is_zero():
            return JacobsonQuad(zero, b, c, d)
    raise PreconditionFailure("could not sample dbd == 0 after 64 attempts")


# -- intertwined pair families ---------------------------------------------------


def projection_onto_columns(s: SquareMatrix, r: int) -> SquareMatrix:
    """Projection onto the span of the first r columns of s along the rest."""
    d = SquareMatrix.diagonal(
        s.ring, [s.ring.one] * r + [s.ring.zero] * (s.dim - r)
    )
    return s * d * s.inverse()


def idempotent_pair(
    rng: random.Random, ring: Ring, dim: int, n: int = 1
) -> IntertwinePair:
    """Two idempotents with the same range: ab == b and ba == a, hence an
    intertwined pair at every level n."""
    r = rng.randint(1, dim) if dim > 1 else 1
    s1 = random_invertible(rng, ring, dim)
    a = projection_onto_columns(s1, r)
    for _ in range(256):
        rows2 = [
            list(s1.rows[i][:r])
            + [rng.randint(-DEFAULT_BOUND, DEFAULT_BOUND) for _ in range(dim - r)]
            for i in range(dim)
        ]
        s2 = SquareMatrix(ring, rows2)
        if s2.try_inverse() is not None:
            return IntertwinePair(a, projection_onto_columns(s2, r), n)
    raise PreconditionFailure("could not complete an invertible column frame")


def planted_pair(
    rng: random.Random, ring: Ring, dim: int, k: int, n: int = 1
) -> IntertwinePair:
    """Pair with drazin_index(1 - a) == k >= 1: an idempotent pair on one
    block, a common 1 - (shift block) on the other, conjugated together."""
    if not 1 <= k < dim:
        raise PreconditionFailure(f"need 1 <= k < dim, got k={k}, dim={dim}")
    m1 = dim - k
    inner = idempotent_pair(rng, ring, m1, n) if m1 > 1 else _unit_pair(ring, n)
    c = SquareMatrix.identity(ring, k) - nilpotent_shift(ring, k)
    a = SquareMatrix.block_diagonal([inner.a, c])
    b = SquareMatrix.block_diagonal([inner.b, c])
    s = random_invertible(rng, ring, dim)
    return IntertwinePair(s * a * s.inverse(), s * b * s.inverse(), n)


def _unit_pair(ring: Ring, n: int) -> IntertwinePair:
    one = SquareMatrix.identity(ring, 1)
    return IntertwinePair(one, one, n)


def diagonal_pair(
    rng: random.Random, ring: Ring, dim: int, n: int = 1, plant: Optional[int] = None
) -> IntertwinePair:
    """The pair (a, a), valid at every level; with plant = k the common
    element is 1 - (index-k matrix)."""
    if plant is None:
        a = random_matrix(rng, ring, dim)
    else:
        a = SquareMatrix.identity(ring, dim) - planted_index_matrix(
            rng, ring, dim, plant
        )
    return IntertwinePair(a, a, n)


# -- similarity / polynomial instances -------------------------------------------


def similar_pair_with_bridge(rng: random.Random, ring: Ring, dim: int):
    """(a, b, z) with az == zb, built from b = z^{-1} a z."""
    a = random_matrix(rng, ring, dim)
    z = random_invertible(rng, ring, dim)
    b = z.inverse() * a * z
    return a, b, z

def polynomial_of(
    rng: random.Random, b: SquareMatrix, bound: int = DEFAULT_BOUND
) -> SquareMatrix:
    """A random polynomial in b of degree < dim (the generic double-commutant
    element for a single matrix)."""
    out = SquareMatrix.zeros(b.ring, b.dim)
    power = SquareMatrix.identity(b.ring, b.dim)
    for _ in range(b.dim):
        out = out + power.scale(rng.randint(-bound, bound))
        power = power * b
    return out
