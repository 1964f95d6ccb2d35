"""Exact scalar arithmetic over the Gaussian rationals Q(i).

The rational backend is selected once at import: gmpy2's mpq when available
(about an order of magnitude faster), otherwise fractions.Fraction.  Setting
the environment variable MONOPAIR_PURE_PYTHON=1 forces the pure-Python
fallback; ``monopair.scalars.BACKEND`` reports which one is active.

All values are immutable and hashable; arithmetic is exact and equality is
decidable.
"""

import os
import re
from fractions import Fraction

if os.environ.get("MONOPAIR_PURE_PYTHON") == "1":
    _gmpy2 = None
else:
    try:
        import gmpy2 as _gmpy2
    except ImportError:  # pragma: no cover
        _gmpy2 = None

if _gmpy2 is not None:
    BACKEND = "gmpy2"
    _mpq = _gmpy2.mpq
    _isqrt = _gmpy2.isqrt

    def rational(num=0, den=1):
        """Exact rational number (backend type)."""
        return _mpq(num, den)

else:  # pragma: no cover - exercised via MONOPAIR_PURE_PYTHON
    BACKEND = "fractions"
    _mpq = Fraction
    from math import isqrt as _isqrt

    def rational(num=0, den=1):
        """Exact rational number (backend type)."""
        return Fraction(num, den)


_R_ZERO = rational(0)
_R_ONE = rational(1)


def as_rational(x):
    """Coerce an int, Fraction, backend rational, or 'a/b' string."""
    if isinstance(x, type(_R_ZERO)):
        return x
    if isinstance(x, int):
        return rational(x)
    if isinstance(x, Fraction):
        return rational(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse 'a' or 'a/b'.  Decimal literals are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return rational(num, den)


def rational_str(q):
    """Canonical 'a/b' or 'a' form, deterministic across backends."""
    q = as_rational(q)
    num, den = q.numerator, q.denominator
    return f"{num}/{den}" if den != 1 else f"{num}"


def rational_sqrt(q):
    """Exact square root of a rational, or None when not a perfect square."""
    q = as_rational(q)
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = _isqrt(num), _isqrt(den)
    if int(rn) * int(rn) == num and int(rd) * int(rd) == den:
        return rational(rn, rd)
    return None


class GaussianRational:
    """An element re + im*i of Q(i), with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self):
        return not self

    def is_real(self):
        return not self.im

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return _fast(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return _fast(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return _fast(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _fast(a * c, _R_ZERO)
        return _fast(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        if not self:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        n = self.norm()
        return _fast(self.re / n, -self.im / n)

    def conjugate(self):
        return _fast(self.re, -self.im)

    def norm(self):
        """The rational re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def sqrt(self):
        """A square root in Q(i), or None if none exists there.

        For re + im*i the real part x of a root satisfies
        x^2 = (re + sqrt(re^2+im^2))/2, so existence reduces to two
        rational square roots.
        """
        if not self:
            return ZERO
        n = rational_sqrt(self.norm())
        if n is None:
            return None
        if not self.im:
            r = rational_sqrt(self.re) if self.re > 0 else None
            if r is not None:
                return GaussianRational(r)
            r = rational_sqrt(-self.re)
            return GaussianRational(0, r) if r is not None else None
        x2 = (self.re + n) / 2
        x = rational_sqrt(x2)
        if x is None or not x:
            return None
        y = self.im / (2 * x)
        return GaussianRational(x, y)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return rational_str(re)
        im_part = "i" if im == 1 else ("-i" if im == -1 else f"{rational_str(im)}i")
        if not re:
            return im_part
        sign = "+" if im > 0 else "-"
        mag = im if im > 0 else -im
        mag_part = "i" if mag == 1 else f"{rational_str(mag)}i"
        return f"{rational_str(re)} {sign} {mag_part}"


def _fast(re, im):
    """Internal constructor: parts must already be backend rationals."""
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    return obj


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, type(_R_ZERO)):
        return GaussianRational(x)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gaussian(re=0, im=0):
    """Shorthand constructor."""
    return GaussianRational(re, im)


_GAUSSIAN_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<body>(?:\d+(?:\s*/\s*\d+)?\s*\*?\s*i?)|i)\s*"
)


def parse_gaussian(text):
    """Parse an exact Q(i) literal such as '3/4 + 1/2 i', '-i', or '2'.

    Decimal points are rejected so inexact values cannot sneak into exact
    fields.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected string, got {type(text).__name__}")
    if "." in text or "e" in text.lower().replace("i", ""):
        raise ValueError(f"decimal literal rejected in exact field: {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty Q(i) literal")
    re_part = _R_ZERO
    im_part = _R_ZERO
    pos = 0
    nterms = 0
    while pos < len(s):
        m = _GAUSSIAN_TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"not an exact Q(i) literal: {text!r}")
        pos = m.end()
        nterms += 1
        if nterms > 2:
            raise ValueError(f"too many terms in Q(i) literal: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        body = m.group("body").replace(" ", "").replace("*", "")
        if body.endswith("i"):
            coeff = body[:-1]
            value = parse_rational(coeff) if coeff else _R_ONE
            im_part += sign * value
        else:
            re_part += sign * parse_rational(body)
    return GaussianRational(re_part, im_part)
