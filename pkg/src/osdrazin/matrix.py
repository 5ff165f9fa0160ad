"""Square matrices over the exact scalar rings, with exact linear algebra.

All arithmetic is exact: no floats, no rounding, no tolerance anywhere.
Rank/solve/inverse Gaussian elimination runs in-ring and therefore requires a
field scalar; over a composite modulus only ring operations plus the
determinant-unit inverse are available (rank and solving raise UnsupportedRing).
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    FormatError,
    NotInvertible,
    ScalarMismatch,
    UnsupportedRing,
)
from .rings import (
    QQ,
    QQI,
    GaussianRational,
    IntegersMod,
    Ring,
    ceil_log2,
    ring_from_name,
)


class SquareMatrix:
    """Immutable n x n matrix over one of the exact scalar rings."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, ring: Ring, rows: Iterable[Iterable]):
        coerced = tuple(tuple(ring.coerce(v) for v in row) for row in rows)
        n = len(coerced)
        if n == 0:
            raise DimensionMismatch("matrices must have dimension >= 1")
        for row in coerced:
            if len(row) != n:
                raise DimensionMismatch(
                    f"expected a square {n}x{n} matrix, got a row of length {len(row)}"
                )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rows", coerced)

    def __setattr__(self, *_):
        raise AttributeError("SquareMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(ring: Ring, dim: int) -> "SquareMatrix":
        one, zero = ring.one, ring.zero
        return _wrap(
            ring, [[one if i == j else zero for j in range(dim)] for i in range(dim)]
        )

    @staticmethod
    def zeros(ring: Ring, dim: int) -> "SquareMatrix":
        zero = ring.zero
        return _wrap(ring, [[zero] * dim for _ in range(dim)])

    @staticmethod
    def diagonal(ring: Ring, values: Sequence) -> "SquareMatrix":
        vals = [ring.coerce(v) for v in values]
        zero = ring.zero
        n = len(vals)
        return _wrap(
            ring, [[vals[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def block_diagonal(blocks: Sequence["SquareMatrix"]) -> "SquareMatrix":
        if not blocks:
            raise DimensionMismatch("need at least one block")
        ring = blocks[0].ring
        for b in blocks:
            if b.ring != ring:
                raise ScalarMismatch("blocks live over different rings")
        n = sum(b.dim for b in blocks)
        zero = ring.zero
        out = [[zero] * n for _ in range(n)]
        at = 0
        for b in blocks:
            for i in range(b.dim):
                out[at + i][at : at + b.dim] = b.rows[i]
            at += b.dim
        return _wrap(ring, out)

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "SquareMatrix"):
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ScalarMismatch(f"{self.ring!r} vs {other.ring!r}")
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check_compatible(other)
        red = self.ring.reduce
        return _wrap(
            self.ring,
            [
                [red(x + y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        self._check_compatible(other)
        red = self.ring.reduce
        return _wrap(
            self.ring,
            [
                [red(x - y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        red = self.ring.reduce
        return _wrap(self.ring, [[red(-x) for x in row] for row in self.rows])

    def __mul__(self, other):
        self._check_compatible(other)
        red = self.ring.reduce
        cols = list(zip(*other.rows))
        return _wrap(
            self.ring,
            [
                [red(sum(x * y for x, y in zip(row, col))) for col in cols]
                for row in self.rows
            ],
        )

    def scale(self, scalar) -> "SquareMatrix":
        c = self.ring.coerce(scalar)
        red = self.ring.reduce
        return _wrap(self.ring, [[red(c * x) for x in row] for row in self.rows])

    def pow(self, k: int) -> "SquareMatrix":
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix power needs an integer exponent >= 0")
        out = SquareMatrix.identity(self.ring, self.dim)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def transpose(self) -> "SquareMatrix":
        return _wrap(self.ring, [list(col) for col in zip(*self.rows)])

    def trace(self):
        red = self.ring.reduce
        return red(sum(self.rows[i][i] for i in range(self.dim)))

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(x == zero for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self == SquareMatrix.identity(self.ring, self.dim)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    # -- equality / hashing / display --------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(self.ring.format(x) for x in row) + "]"
            for row in self.rows
        )
        return f"SquareMatrix({self.ring.name}, [{body}])"

    def __str__(self):
        width = max(
            (len(self.ring.format(x)) for row in self.rows for x in row), default=1
        )
        return "\n".join(
            "[ " + "  ".join(self.ring.format(x).rjust(width) for x in row) + " ]"
            for row in self.rows
        )

    # -- exact linear algebra ----------------------------------------------

    def rank(self) -> int:
        _require_field(self.ring, "rank")
        _, _, pivots = _rref([list(row) for row in self.rows], self.ring)
        return len(pivots)

    def det(self):
        if isinstance(self.ring, IntegersMod) and not self.ring.is_field:
            return self.ring.reduce(_int_det([list(r) for r in self.rows]))
        _require_field(self.ring, "det")
        return _field_det(self)

    def inverse(self) -> "SquareMatrix":
        inv = self.try_inverse()
        if inv is None:
            raise NotInvertible(f"matrix of dim {self.dim} over {self.ring.name}")
        return inv

    def try_inverse(self) -> Optional["SquareMatrix"]:
        """Inverse, or None. Works over fields and over composite moduli
        (where invertibility means the determinant is a unit)."""
        ring = self.ring
        if isinstance(ring, IntegersMod) and not ring.is_field:
            return _modular_inverse(self)
        _require_field(ring, "inverse")
        aug = [list(row) + list(idrow) for row, idrow in
               zip(self.rows, SquareMatrix.identity(ring, self.dim).rows)]
        echelon, _, pivots = _rref_rect(aug, ring, self.dim)
        if len(pivots) < self.dim:
            return None
        return _wrap(ring, [row[self.dim:] for row in echelon[: self.dim]])

    def is_nilpotent(self) -> bool:
        """Exact nilpotency test. Over a field, a^dim == 0 decides it; over
        Z/m the modulus contributes up to ceil(log2 m) extra halving steps
        (e.g. [2] over Z/4 vanishes only at the second power)."""
        bound = self.dim
        if isinstance(self.ring, IntegersMod) and not self.ring.is_field:
            bound = self.dim * ceil_log2(self.ring.modulus)
        return self.pow(bound).is_zero()

    def to_gaussian(self) -> "SquareMatrix":
        """Promote a rational matrix into the Gaussian rationals."""
        if self.ring == QQI:
            return self
        if self.ring != QQ:
            raise UnsupportedRing("only rational matrices promote to gaussian")
        return _wrap(
            QQI, [[GaussianRational(x, 0) for x in row] for row in self.rows]
        )

    # -- serialization ------------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "dim": self.dim,
            "scalar": self.ring.name,
            "entries": [[self.ring.format(x) for x in row] for row in self.rows],
        }

    @staticmethod
    def from_doc(doc: dict) -> "SquareMatrix":
        try:
            dim = doc["dim"]
            scalar = doc["scalar"]
            entries = doc["entries"]
        except (KeyError, TypeError):
            raise FormatError("matrix document needs dim, scalar, entries")
        ring = ring_from_name(scalar)
        if not isinstance(entries, list) or len(entries) != dim:
            raise FormatError(f"expected {dim} rows")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != dim:
                raise FormatError(f"expected rows of length {dim}")
            rows.append([ring.parse(x) if isinstance(x, str) else ring.coerce(x)
                         for x in row])
        return SquareMatrix(ring, rows)

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "SquareMatrix":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad matrix JSON: {exc}") from exc
        return SquareMatrix.from_doc(doc)


def _wrap(ring: Ring, rows) -> SquareMatrix:
    """Fast construction from already-normalized rows, skipping coercion."""
    m = object.__new__(SquareMatrix)
    object.__setattr__(m, "ring", ring)
    object.__setattr__(m, "dim", len(rows))
    object.__setattr__(m, "rows", tuple(tuple(row) for row in rows))
    return m


def _require_field(ring: Ring, op: str):
    if not ring.is_field:
        raise UnsupportedRing(f"{op} over {ring.name} needs a field scalar")


# -- elimination cores ------------------------------------------------------
#
# All cores work on lists of lists of ring values and never mutate matrices.


def _rref(rows, ring):
    """Reduced row echelon form; pivots may come from every column.

    Returns (rows, transform, pivots) where transform @ original == rows and
    pivots is the ordered list of pivot column indices.
    """
    return _rref_rect(rows, ring, len(rows[0]) if rows else 0)


def _rref_rect(rows, ring, lead_width):
    """RREF that only pivots inside the first lead_width columns.

    Used for augmented systems [A | B]: the B part is carried along but never
    chooses pivots. Returns (rows, transform, pivots).
    """
    n = len(rows)
    transform = [
        [ring.one if i == j else ring.zero for j in range(n)] for i in range(n)
    ]
    pivots = []
    zero = ring.zero
    red = ring.reduce
    row_at = 0
    for col in range(lead_width):
        pivot_row = None
        for r in range(row_at, n):
            if rows[r][col] != zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[row_at], rows[pivot_row] = rows[pivot_row], rows[row_at]
        transform[row_at], transform[pivot_row] = (
            transform[pivot_row],
            transform[row_at],
        )
        inv = ring.div(ring.one, rows[row_at][col])
        if inv != ring.one:
            rows[row_at] = [red(inv * v) for v in rows[row_at]]
            transform[row_at] = [red(inv * v) for v in transform[row_at]]
        lead = rows[row_at]
        tlead = transform[row_at]
        for r in range(n):
            if r == row_at:
                continue
            factor = rows[r][col]
            if factor != zero:
                rows[r] = [red(v - factor * w) for v, w in zip(rows[r], lead)]
                transform[r] = [
                    red(v - factor * w) for v, w in zip(transform[r], tlead)
                ]
        pivots.append(col)
        row_at += 1
        if row_at == n:
            break
    return rows, transform, pivots


def _field_det(m: SquareMatrix):
    ring = m.ring
    rows = [list(r) for r in m.rows]
    n = m.dim
    zero = ring.zero
    red = ring.reduce
    det = ring.one
    sign_flip = False
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col] != zero:
                pivot_row = r
                break
        if pivot_row is None:
            return zero
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign_flip = not sign_flip
        pivot = rows[col][col]
        det = red(det * pivot)
        inv = ring.div(ring.one, pivot)
        for r in range(col + 1, n):
            factor = red(rows[r][col] * inv)
            if factor != zero:
                rows[r] = [
                    red(v - factor * w) for v, w in zip(rows[r], rows[col])
                ]
    return red(-det) if sign_flip else det


def _int_det(rows) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    rows = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = None
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    swap = r
                    break
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _int_adjugate(rows):
    """Adjugate of an integer matrix: adj[j][i] = (-1)^{i+j} det(minor_ij)."""
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = _int_det(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def _modular_inverse(m: SquareMatrix) -> Optional[SquareMatrix]:
    ring = m.ring
    rows = [list(r) for r in m.rows]
    det = _int_det(rows) % ring.modulus
    unit = ring.inverse_unit(det)
    if unit is None:
        return None
    adj = _int_adjugate(rows)
    return _wrap(
        ring, [[(unit * v) % ring.modulus for v in row] for row in adj]
    )


# -- solvers -----------------------------------------------------------------


def solve_right(a: SquareMatrix, b: SquareMatrix) -> Optional[SquareMatrix]:
    """Least-constrained exact solution Y of A @ Y = B, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    a._check_compatible(b)
    _require_field(a.ring, "solve")
    ring = a.ring
    n = a.dim
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    echelon, _, pivots = _rref_rect(aug, ring, n)
    zero = ring.zero
    # consistency: rows with no pivot must have zero right-hand side
    for r in range(len(pivots), n):
        if any(v != zero for v in echelon[r][n:]):
            return None
    out = [[zero] * n for _ in range(n)]
    for row_idx, col in enumerate(pivots):
        out[col] = list(echelon[row_idx][n:])
    return _wrap(ring, out)


def solve_left(a: SquareMatrix, b: SquareMatrix) -> Optional[SquareMatrix]:
    """Least-constrained exact solution X of X @ A = B, or None."""
    yt = solve_right(a.transpose(), b.transpose())
    return None if yt is None else yt.transpose()


def solve_linear(ring: Ring, rows, rhs):
    """Solve a rectangular exact system rows @ x = rhs; free vars zeroed.

    rows: list of equation coefficient lists (all the same length);
    rhs: list of right-hand values. Returns a value list or None.
    """
    _require_field(ring, "solve")
    if not rows:
        return []
    width = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    echelon, _, pivots = _rref_rect(aug, ring, width)
    zero = ring.zero
    for r in range(len(pivots), len(rows)):
        if echelon[r][width] != zero:
            return None
    out = [zero] * width
    for row_idx, col in enumerate(pivots):
        out[col] = echelon[row_idx][width]
    return out


def nullspace(ring: Ring, rows):
    """Basis of the right nullspace of a rectangular exact system."""
    _require_field(ring, "nullspace")
    if not rows:
        return []
    width = len(rows[0])
    echelon, _, pivots = _rref_rect([list(r) for r in rows], ring, width)
    zero, one = ring.zero, ring.one
    red = ring.reduce
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [zero] * width
        vec[free] = one
        for row_idx, col in enumerate(pivots):
            vec[col] = red(-echelon[row_idx][free])
        basis.append(vec)
    return basis


def one_inverse(m: SquareMatrix) -> SquareMatrix:
    """Some G with M @ G @ M == M (an inner inverse), deterministic.

    Construction: row-reduce P @ M = R (reduced echelon, pivots p_1..p_r);
    G's row p_i is row i of P, all other rows zero. Then R @ G' @ R = R
    because the pivot columns of R are standard basis vectors, and the
    transform P carries this back to M.
    """
    _require_field(m.ring, "inner inverse")
    ring = m.ring
    n = m.dim
    _, transform, pivots = _rref([list(r) for r in m.rows], ring)
    zero = ring.zero
    out = [[zero] * n for _ in range(n)]
    for i, p in enumerate(pivots):
        out[p] = list(transform[i])
    return _wrap(ring, out)


def matrices_commute(a: SquareMatrix, b: SquareMatrix) -> bool:
    return a * b == b * a
