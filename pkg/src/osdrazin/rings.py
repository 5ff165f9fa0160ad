"""Exact scalar rings: rationals, Gaussian rationals, integers mod m.

Matrix code is written against the small ring-descriptor API defined here.
Entry values are plain Python objects chosen per ring so that `+`, `-`, `*`
work natively between them:

  * Rationals       -- int or gmpy2.mpq (ints survive until a division)
  * GaussianRationals -- GaussianRational instances
  * IntegersMod(m)  -- ints in [0, m); results are renormalized via ring.reduce

Every value is immutable and hashable, equality is exact, and str/parse
round-trips losslessly.
"""

from __future__ import annotations

import math
import re
from typing import Union

from gmpy2 import mpq

from .errors import FormatError, UnsupportedRing

Rat = Union[int, "mpq"]


def _as_rat(value) -> Rat:
    """Coerce an int/mpq/Fraction/decimal-string to a canonical rational."""
    if isinstance(value, int):
        return value
    if isinstance(value, type(mpq())):
        # collapse integral mpq back to int so fast paths stay integer
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return _parse_rat(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        q = mpq(value.numerator, value.denominator)
        return int(q) if q.denominator == 1 else q
    raise FormatError(f"cannot interpret {value!r} as a rational scalar")


_RAT_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def _parse_rat(text: str) -> Rat:
    m = _RAT_RE.match(text.strip())
    if not m:
        raise FormatError(f"bad rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise FormatError(f"zero denominator in {text!r}")
    q = mpq(num, den)
    return int(q) if q.denominator == 1 else q


def _format_rat(value: Rat) -> str:
    return str(value)


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_rat(re))
        object.__setattr__(self, "im", _as_rat(im))

    def __setattr__(self, *_):
        raise AttributeError("GaussianRational is immutable")

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        conj = other.conjugate()
        prod = self * conj
        return GaussianRational(_div_rat(prod.re, n), _div_rat(prod.im, n))

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussianRational(1, 0)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Rat:
        """Squared modulus re^2 + im^2 (an exact rational)."""
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gauss(self)


def _as_gauss(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, type(mpq()))):
        return GaussianRational(value, 0)
    return NotImplemented


def _div_rat(a: Rat, b: Rat) -> Rat:
    q = mpq(a) / mpq(b)
    return int(q) if q.denominator == 1 else q


_GAUSS_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)?\s*i\s*)?$"
)
_GAUSS_IM_ONLY_RE = re.compile(r"^\s*([+-]?)(\d+(?:/\d+)?)?\s*i\s*$")


def parse_gauss(text: str) -> GaussianRational:
    """Parse "p/q", "p/q+r/s i", "p/q-r/s i", or "r/s i"; a bare "i" means
    an imaginary coefficient of 1."""
    m = _GAUSS_IM_ONLY_RE.match(text)
    if m:
        mag = _parse_rat(m.group(2)) if m.group(2) else 1
        return GaussianRational(0, -mag if m.group(1) == "-" else mag)
    m = _GAUSS_RE.match(text)
    if not m:
        raise FormatError(f"bad gaussian literal {text!r}")
    re_part = _parse_rat(m.group(1))
    if m.group(2) is None:
        return GaussianRational(re_part, 0)
    im_part = _parse_rat(m.group(3)) if m.group(3) else 1
    if m.group(2) == "-":
        im_part = -im_part
    return GaussianRational(re_part, im_part)


def format_gauss(value: GaussianRational) -> str:
    if value.im == 0:
        return _format_rat(value.re)
    mag = value.im if value.im > 0 else -value.im
    unit = "i" if mag == 1 else f"{_format_rat(mag)} i"
    if value.re == 0:
        return unit if value.im > 0 else f"-{unit}"
    sign = "+" if value.im > 0 else "-"
    return f"{_format_rat(value.re)}{sign}{unit}"


class Ring:
    """Descriptor for one exact scalar ring. Concrete rings subclass this."""

    name: str  # serialization tag: "rational" | "gaussian" | "mod:<m>"
    is_field: bool

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def coerce(self, value):
        """Validate/normalize one entry value; raises FormatError if alien."""
        raise NotImplementedError

    def reduce(self, value):
        """Renormalize a raw result of native +,-,* on entry values."""
        return value

    def div(self, a, b):
        """Exact division a/b; only meaningful where is_field."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class Rationals(Ring):
    name = "rational"
    is_field = True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, k: int):
        return k

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise FormatError("gaussian value in a rational matrix")
            return value.re
        return _as_rat(value)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero rational")
        return _div_rat(a, b)

    def parse(self, text: str):
        return _parse_rat(text)

    def format(self, value) -> str:
        return _format_rat(value)


class GaussianRationals(Ring):
    name = "gaussian"
    is_field = True

    @property
    def zero(self):
        return GaussianRational(0, 0)

    @property
    def one(self):
        return GaussianRational(1, 0)

    def from_int(self, k: int):
        return GaussianRational(k, 0)

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return parse_gauss(value)
        return GaussianRational(_as_rat(value), 0)

    def div(self, a, b):
        return a / b

    def parse(self, text: str):
        return parse_gauss(text)

    def format(self, value) -> str:
        return format_gauss(value)


class IntegersMod(Ring):
    """Z/m for any modulus m >= 2; a field exactly when m is prime."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise FormatError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.name = f"mod:{modulus}"
        self.is_field = _is_prime(modulus)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.modulus

    def from_int(self, k: int):
        return k % self.modulus

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.modulus
        raise FormatError(f"entries mod {self.modulus} must be integers, got {value!r}")

    def reduce(self, value):
        return value % self.modulus

    def div(self, a, b):
        if not self.is_field:
            raise UnsupportedRing(
                f"division mod {self.modulus} (composite) is not supported"
            )
        try:
            inv = pow(b, -1, self.modulus)
        except ValueError:
            raise ZeroDivisionError(f"{b} is not invertible mod {self.modulus}")
        return (a * inv) % self.modulus

    def inverse_unit(self, value):
        """Inverse of a unit mod m, or None if value is not a unit."""
        try:
            return pow(value, -1, self.modulus)
        except ValueError:
            return None

    def parse(self, text: str):
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise FormatError(f"bad integer literal {text!r}")

    def format(self, value) -> str:
        return str(value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    i = 41
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


QQ = Rationals()
QQI = GaussianRationals()


def ring_from_name(name: str) -> Ring:
    """Inverse of Ring.name: "rational", "gaussian", or "mod:<m>"."""
    if name == "rational":
        return QQ
    if name == "gaussian":
        return QQI
    if name.startswith("mod:"):
        try:
            return IntegersMod(int(name[4:]))
        except ValueError:
            raise FormatError(f"bad modulus in scalar tag {name!r}")
    raise FormatError(f"unknown scalar tag {name!r}")


def rat_abs_cmp(a: Rat, b: Rat) -> int:
    """Compare |a| vs |b| exactly; returns -1, 0, 1."""
    aa = a if a >= 0 else -a
    bb = b if b >= 0 else -b
    if aa < bb:
        return -1
    return 0 if aa == bb else 1


def scalar_sort_key(ring: Ring, value):
    """Deterministic total order used when reports list eigenvalues."""
    if isinstance(ring, GaussianRationals):
        return (mpq(value.re), mpq(value.im))
    return (mpq(value), mpq(0))


def ceil_log2(m: int) -> int:
    return max(1, math.ceil(math.log2(m)))
