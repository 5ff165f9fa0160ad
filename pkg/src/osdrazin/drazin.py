"""One-sided and two-sided Drazin machinery over exact matrix algebras.

Definitions realized here, for a square matrix a and candidate x:

  left Drazin at index j:   a x a == x a^2,  x^2 a == x,  x a^{j+1} == a^j
  right Drazin at index k:  a x a == a^2 x,  a x^2 == x,  a^{k+1} x == a^k
  left generalized Drazin:  a x a == x a^2,  x^2 a == x,  a x a - a nilpotent
  right generalized Drazin: a x a == a^2 x,  a x^2 == x,  a x a - a nilpotent
  left regular:             x a^2 == a
  right regular:            a^2 x == a
  left strongly pi-regular: a x a == x a^2,  x a^{p+1} == a^p
  right strongly pi-regular:a x a == a^2 x,  a^{q+1} x == a^q

Quasinilpotence is modeled by exact nilpotence, which is what it collapses to
in a finite-dimensional algebra.

Every constructor here re-checks its hypothesis before computing; hypotheses
are never trusted.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .errors import IndexTooLarge, PreconditionFailure
from .matrix import SquareMatrix, one_inverse, solve_linear
from .rings import ceil_log2, IntegersMod
from .witnesses import (
    DRAZIN,
    GENERALIZED_DRAZIN,
    GROUP,
    LEFT,
    RIGHT,
    TWO_SIDED,
    Witness,
)


# -- canonical two-sided theory ----------------------------------------------


def drazin_index(a: SquareMatrix) -> int:
    """Smallest k >= 0 with rank(a^k) == rank(a^{k+1}) (k = 0 iff invertible)."""
    n = a.dim
    prev_rank = n  # rank of a^0 = identity
    power = a
    for k in range(1, n + 2):
        r = power.rank()
        if r == prev_rank:
            return k - 1
        prev_rank = r
        power = power * a
    raise AssertionError("rank chain failed to stabilize within dim steps")


def drazin_inverse(a: SquareMatrix) -> Tuple[SquareMatrix, int]:
    """The unique two-sided Drazin inverse of a and its index.

    Computed as x = a^k g a^k with g an inner inverse of a^{2k+1}; the triple
    (commutation, x^2 a = x, a^{k+1} x = a^k) determines x uniquely, so any
    inner inverse gives the same x.
    """
    k = drazin_index(a)
    if k == 0:
        return a.inverse(), 0
    m = a.pow(2 * k + 1)
    g = one_inverse(m)
    ak = a.pow(k)
    return ak * g * ak, k


def group_inverse(a: SquareMatrix) -> SquareMatrix:
    """Drazin inverse when the index is at most 1; raises IndexTooLarge else."""
    x, k = drazin_inverse(a)
    if k > 1:
        raise IndexTooLarge(f"drazin index {k} > 1, no group inverse")
    return x


def is_drazin_inverse(a: SquareMatrix, x: SquareMatrix, j: int) -> bool:
    """Two-sided system: ax == xa, x^2 a == x, a^{j+1} x == a^j."""
    if a * x != x * a:
        return False
    if x * x * a != x:
        return False
    return a.pow(j + 1) * x == a.pow(j)


# -- one-sided predicates ------------------------------------------------------


def verify_left_regular(a: SquareMatrix, x: SquareMatrix) -> bool:
    return x * a * a == a


def verify_right_regular(a: SquareMatrix, x: SquareMatrix) -> bool:
    return a * a * x == a


def verify_left_strongly_pi(a: SquareMatrix, x: SquareMatrix, p: int) -> bool:
    if p < 0:
        return False
    if a * x * a != x * a * a:
        return False
    return x * a.pow(p + 1) == a.pow(p)


def verify_right_strongly_pi(a: SquareMatrix, y: SquareMatrix, q: int) -> bool:
    if q < 0:
        return False
    if a * y * a != a * a * y:
        return False
    return a.pow(q + 1) * y == a.pow(q)


def verify_left_drazin(a: SquareMatrix, x: SquareMatrix, j: int) -> bool:
    if j < 0:
        return False
    if a * x * a != x * a * a:
        return False
    if x * x * a != x:
        return False
    return x * a.pow(j + 1) == a.pow(j)


def verify_right_drazin(a: SquareMatrix, y: SquareMatrix, k: int) -> bool:
    if k < 0:
        return False
    if a * y * a != a * a * y:
        return False
    if a * y * y != y:
        return False
    return a.pow(k + 1) * y == a.pow(k)


def verify_left_gdrazin(a: SquareMatrix, x: SquareMatrix) -> bool:
    if a * x * a != x * a * a:
        return False
    if x * x * a != x:
        return False
    return (a * x * a - a).is_nilpotent()


def verify_right_gdrazin(a: SquareMatrix, y: SquareMatrix) -> bool:
    if a * y * a != a * a * y:
        return False
    if a * y * y != y:
        return False
    return (a * y * a - a).is_nilpotent()


def _index_scan_bound(a: SquareMatrix) -> int:
    """How far to scan for a witness's minimal index before giving up.

    Over a field the nilpotency index of any matrix is at most dim; over
    Z/m it can reach dim * ceil(log2 m) extra steps from the prime-power part.
    """
    if isinstance(a.ring, IntegersMod) and not a.ring.is_field:
        return a.dim * ceil_log2(a.ring.modulus) + a.dim
    return a.dim


def left_witness_index(a: SquareMatrix, x: SquareMatrix) -> Optional[int]:
    """Minimal j with verify_left_drazin(a, x, j), or None.

    When the first two left equations hold and the defect a x a - a is
    nilpotent, x a == (x a)^2 forces x a^{j+1} == a^j at some finite j, so the
    scan is complete within the ring's nilpotency bound.
    """
    if a * x * a != x * a * a or x * x * a != x:
        return None
    power = SquareMatrix.identity(a.ring, a.dim)
    for j in range(_index_scan_bound(a) + 1):
        if x * (power * a) == power:
            return j
        power = power * a
    return None


def right_witness_index(a: SquareMatrix, y: SquareMatrix) -> Optional[int]:
    """Minimal k with verify_right_drazin(a, y, k), or None."""
    if a * y * a != a * a * y or a * y * y != y:
        return None
    power = SquareMatrix.identity(a.ring, a.dim)
    for k in range(_index_scan_bound(a) + 1):
        if (a * power) * y == power:
            return k
        power = power * a
    return None


# -- realizations and closure properties ---------------------------------------


def azumaya_left(a: SquareMatrix, x: SquareMatrix, p: int) -> Witness:
    """From a left strongly pi-regular witness, build a left Drazin witness.

    Hypothesis: verify_left_strongly_pi(a, x, p). The element x^{p+1} a^p is
    then a left Drazin witness for a at index p.
    """
    if not verify_left_strongly_pi(a, x, p):
        raise PreconditionFailure("x is not a left strongly pi-regular witness at p")
    c = x.pow(p + 1) * a.pow(p)
    return Witness(candidate=c, side=LEFT, kind=DRAZIN, index=p)


def azumaya_right(a: SquareMatrix, y: SquareMatrix, q: int) -> Witness:
    """Right counterpart: a^q y^{q+1} is a right Drazin witness at index q."""
    if not verify_right_strongly_pi(a, y, q):
        raise PreconditionFailure("y is not a right strongly pi-regular witness at q")
    c = a.pow(q) * y.pow(q + 1)
    return Witness(candidate=c, side=RIGHT, kind=DRAZIN, index=q)


def normalize_left_gdrazin(a: SquareMatrix, x: SquareMatrix) -> SquareMatrix:
    """Strengthen a left generalized-Drazin witness: b = x a x satisfies
    a b a == b a^2, b a b == b, b^2 a == b, and a b a - a nilpotent."""
    if not verify_left_gdrazin(a, x):
        raise PreconditionFailure("x is not a left generalized-Drazin witness")
    return x * a * x


def normalize_right_gdrazin(a: SquareMatrix, y: SquareMatrix) -> SquareMatrix:
    """Right counterpart: c = y a y satisfies a c a == a^2 c, c a c == c,
    a c^2 == c, and a c a - a nilpotent."""
    if not verify_right_gdrazin(a, y):
        raise PreconditionFailure("y is not a right generalized-Drazin witness")
    return y * a * y


def intertwine_check(
    a: SquareMatrix,
    b: SquareMatrix,
    z: SquareMatrix,
    x: SquareMatrix,
    y: SquareMatrix,
) -> bool:
    """With az == zb, x a left g-Drazin witness of a and y a right g-Drazin
    witness of b, the witnesses intertwine too: returns (xz == zy)."""
    if a * z != z * b:
        raise PreconditionFailure("az != zb")
    if not verify_left_gdrazin(a, x):
        raise PreconditionFailure("x is not a left generalized-Drazin witness of a")
    if not verify_right_gdrazin(b, y):
        raise PreconditionFailure("y is not a right generalized-Drazin witness of b")
    return x * z == z * y


def is_polynomial_in(a: SquareMatrix, b: SquareMatrix) -> bool:
    """Whether a lies in the unital subalgebra generated by b.

    For a single matrix the double commutant equals the polynomials in it, so
    this realizes membership in comm^2(b). Solved exactly as a linear system
    in the coefficients of powers b^0..b^{dim-1}.
    """
    return polynomial_coefficients(a, b) is not None


def polynomial_coefficients(a: SquareMatrix, b: SquareMatrix):
    """Coefficients c with sum(c_i b^i) == a (free ones zeroed), or None."""
    a._check_compatible(b)
    n = b.dim
    powers = [SquareMatrix.identity(b.ring, n)]
    for _ in range(n - 1):
        powers.append(powers[-1] * b)
    # one equation per matrix entry, one unknown per power
    rows = []
    rhs = []
    for i in range(n):
        for j in range(n):
            rows.append([p.rows[i][j] for p in powers])
            rhs.append(a.rows[i][j])
    return solve_linear(b.ring, rows, rhs)


def reverse_order_left(
    a: SquareMatrix,
    b: SquareMatrix,
    x: SquareMatrix,
    y: SquareMatrix,
) -> Witness:
    """Left witness for a product from a two-sided inverse and a left witness.

    Hypotheses (all re-checked): a is a polynomial in b; x is the two-sided
    generalized Drazin inverse of a (commutation, x^2 a == x, nilpotent
    defect); y is a left generalized-Drazin witness of b. Then y x is a left
    generalized-Drazin witness of a b; when everything has finite index the
    witness is reported with its minimal left index.
    """
    if not is_polynomial_in(a, b):
        raise PreconditionFailure("a is not a polynomial in b")
    if a * x != x * a or x * x * a != x or not (a * x * a - a).is_nilpotent():
        raise PreconditionFailure("x is not a two-sided generalized Drazin inverse")
    if not verify_left_gdrazin(b, y):
        raise PreconditionFailure("y is not a left generalized-Drazin witness of b")
    w = y * x
    j = left_witness_index(a * b, w)
    if j is not None:
        return Witness(candidate=w, side=LEFT, kind=DRAZIN, index=j)
    return Witness(candidate=w, side=LEFT, kind=GENERALIZED_DRAZIN)


def one_sided_agreement(
    a: SquareMatrix,
    x: SquareMatrix,
    j: int,
    y: SquareMatrix,
    k: int,
) -> bool:
    """Minimal left and right Drazin witnesses agree: x == y and j == k.

    Hypotheses: x is a left Drazin witness of a whose minimal index is j, and
    y a right Drazin witness with minimal index k. Returns the agreement.
    """
    if left_witness_index(a, x) != j:
        raise PreconditionFailure("j is not the minimal left index of x")
    if right_witness_index(a, y) != k:
        raise PreconditionFailure("k is not the minimal right index of y")
    return x == y and j == k


def group_witness(a: SquareMatrix) -> Witness:
    """Two-sided group inverse packaged as a witness (index <= 1)."""
    x = group_inverse(a)
    k = drazin_index(a)
    return Witness(candidate=x, side=TWO_SIDED, kind=GROUP, index=k)
