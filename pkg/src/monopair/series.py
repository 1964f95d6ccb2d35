"""Truncated Laurent series and matrix germs at a marked point.

A LaurentSeries is a finite window of exact coefficients in a local
parameter u, together with the order ``prec`` through which the
coefficients are known (exclusive).  ``prec = None`` means the series is
exact: a genuine Laurent polynomial with all omitted coefficients zero.
Operations propagate the knowledge window; anything that would need
unknown coefficients raises InsufficientPrecisionError rather than guess.

The local parameter is u = z - center on affine charts and u = 1/z at
infinity.
"""

from .scalars import GaussianRational, ZERO, ONE
from .poly import Polynomial
from .divisors import INF, _Infinity


class InsufficientPrecisionError(ArithmeticError):
    """The requested result is not determined by the known coefficients."""


def _min_prec(*values):
    finite = [v for v in values if v is not None]
    return min(finite) if finite else None


class LaurentSeries:
    """Window of exact Laurent coefficients with explicit knowledge bound."""

    __slots__ = ("offset", "coeffs", "prec")

    def __init__(self, offset=0, coeffs=(), prec=None):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coeffs]
        if prec is not None:
            cs = cs[: max(0, prec - offset)]
        while cs and not cs[0]:
            cs.pop(0)
            offset += 1
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            offset = prec if prec is not None else 0
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @staticmethod
    def _raw(offset, cs, prec):
        """Internal: coefficients are GaussianRationals, already truncated."""
        i = 0
        n = len(cs)
        while i < n and not cs[i]:
            i += 1
        if i:
            offset += i
            cs = cs[i:]
            n -= i
        while n and not cs[n - 1]:
            n -= 1
        if n != len(cs):
            cs = cs[:n]
        if not n:
            offset = prec if prec is not None else 0
        obj = object.__new__(LaurentSeries)
        object.__setattr__(obj, "offset", offset)
        object.__setattr__(obj, "coeffs", tuple(cs))
        object.__setattr__(obj, "prec", prec)
        return obj

    @classmethod
    def zero(cls, prec=None):
        return cls(0, (), prec)

    @classmethod
    def one(cls, prec=None):
        return cls(0, (ONE,), prec)

    @classmethod
    def from_polynomial(cls, p, prec=None):
        return cls(0, p.coeffs, prec)

    @classmethod
    def monomial(cls, k, c=ONE, prec=None):
        return cls(k, (c,), prec)

    def is_exact(self):
        return self.prec is None

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k):
        """Coefficient of u^k; raises when k is beyond the knowledge bound."""
        if self.prec is not None and k >= self.prec:
            raise InsufficientPrecisionError(f"coefficient at order {k} unknown")
        if self.offset <= k < self.offset + len(self.coeffs):
            return self.coeffs[k - self.offset]
        return ZERO

    def valuation(self):
        """Order of the lowest nonzero coefficient.

        Raises ValueError for the exact zero series and
        InsufficientPrecisionError for a series that merely vanishes
        through its knowledge bound.
        """
        if self.coeffs:
            return self.offset
        if self.prec is None:
            raise ValueError("zero series has no valuation")
        raise InsufficientPrecisionError(
            f"series vanishes through order {self.prec}; valuation undetermined"
        )

    def valuation_lower_bound(self):
        if self.coeffs:
            return self.offset
        return self.prec  # None means +infinity (exact zero)

    def truncate(self, prec):
        return LaurentSeries(self.offset, self.coeffs, _min_prec(self.prec, prec))

    # -- ring structure -----------------------------------------------------

    def __add__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs and not other.coeffs:
            return LaurentSeries._raw(0, [], prec)
        lo = min(
            [s.offset for s in (self, other) if s.coeffs]
        )
        hi = max(
            [s.offset + len(s.coeffs) for s in (self, other) if s.coeffs]
        )
        out = [ZERO] * (hi - lo)
        for s in (self, other):
            base = s.offset - lo
            for k, c in enumerate(s.coeffs):
                out[base + k] = out[base + k] + c
        if prec is not None and hi > prec:
            out = out[: max(0, prec - lo)]
        return LaurentSeries._raw(lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw(self.offset, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        prec = _min_prec(
            None if self.prec is None else self.prec + other.valuation_floor(),
            None if other.prec is None else other.prec + self.valuation_floor(),
        )
        if not self.coeffs or not other.coeffs:
            return LaurentSeries._raw(0, [], prec)
        a, b = self.coeffs, other.coeffs
        lo = self.offset + other.offset
        n_out = len(a) + len(b) - 1
        if prec is not None:
            n_out = min(n_out, prec - lo)
            if n_out <= 0:
                return LaurentSeries._raw(0, [], prec)
        out = [ZERO] * n_out
        nb = len(b)
        for i, ai in enumerate(a):
            if not ai or i >= n_out:
                continue
            jmax = nb if nb <= n_out - i else n_out - i
            for j in range(jmax):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return LaurentSeries._raw(lo, out, prec)

    __rmul__ = __mul__

    def valuation_floor(self):
        """A safe lower bound used for precision propagation (0 floor at 0)."""
        if self.coeffs:
            return self.offset
        if self.prec is not None:
            return self.prec
        return 0  # exact zero: product is exactly zero anyway

    def shift(self, k):
        """Multiplication by u^k."""
        return LaurentSeries._raw(
            self.offset + k, self.coeffs, None if self.prec is None else self.prec + k
        )

    def scale(self, c):
        c = c if isinstance(c, GaussianRational) else GaussianRational(c)
        if not c:
            return LaurentSeries._raw(0, [], self.prec)
        return LaurentSeries._raw(self.offset, [a * c for a in self.coeffs], self.prec)

    def inverse(self, order=None):
        """Multiplicative inverse through the determined precision.

        For an exact series an explicit ``order`` (exclusive bound on the
        result's knowledge window) is required, because the inverse of a
        Laurent polynomial is in general an infinite series.
        """
        v = self.valuation()
        if self.prec is None and order is None:
            raise ValueError("inverse of an exact series needs an explicit order")
        out_prec = _min_prec(
            None if self.prec is None else self.prec - 2 * v,
            order,
        )
        m = out_prec + v  # unit-part coefficients needed (exclusive bound)
        if m <= 0:
            return LaurentSeries._raw(0, [], out_prec)
        unit = self.coeffs
        c0_inv = unit[0].inverse()
        inv = [ZERO] * m
        inv[0] = c0_inv
        for k in range(1, m):
            acc = ZERO
            jmax = min(k, len(unit) - 1)
            for j in range(1, jmax + 1):
                if unit[j]:
                    acc = acc + unit[j] * inv[k - j]
            inv[k] = -acc * c0_inv
        return LaurentSeries._raw(-v, inv, out_prec)

    def __truediv__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        if other.prec is None and self.prec is None:
            raise ValueError("division of exact series needs .inverse(order)")
        if other.prec is None:
            order = self.prec - self.valuation_floor() - other.valuation()
            return self * other.inverse(order=max(order, 1))
        return self * other.inverse()

    def eq_through(self, other, order):
        """Equality of coefficients at all orders < order (both must know them)."""
        other = _coerce_series(other)
        diff = self - other
        if diff.prec is not None and diff.prec < order:
            raise InsufficientPrecisionError(
                f"comparison through {order} exceeds known precision {diff.prec}"
            )
        return not diff.coeffs or diff.offset >= order

    def __eq__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return other
        return (
            self.offset == other.offset
            and self.coeffs == other.coeffs
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((self.offset, self.coeffs, self.prec))

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            o = self.offset + k
            if not c:
                continue
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if o == 0:
                parts.append(cs)
            else:
                uk = "u" if o == 1 else f"u^{o}"
                parts.append(uk if cs == "1" else f"{cs}*{uk}")
        body = " + ".join(parts) if parts else "0"
        tail = f" + O(u^{self.prec})" if self.prec is not None else ""
        return body + tail


def _coerce_series(x):
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, (GaussianRational, int)):
        return LaurentSeries(0, (x,), None)
    if isinstance(x, Polynomial):
        return LaurentSeries.from_polynomial(x)
    return NotImplemented


def expand_rational(f, center, order):
    """Laurent expansion of a RationalFunction about a point, through order.

    Returns a LaurentSeries in u = z - center (u = 1/z at INF) whose
    coefficients are exact from the valuation through ``order`` inclusive.
    """
    if not f:
        raise ValueError("cannot expand the zero function")
    num, den = f.num, f.den
    if isinstance(center, _Infinity):
        # z -> 1/u: p(z) -> u^{-deg p} * rev(p)
        dn, dd = num.degree, den.degree
        num_u, den_u = num.reverse(), den.reverse()
        shift = dd - dn  # valuation contribution
        return _expand_poly_quotient(num_u, den_u, shift, order)
    if not isinstance(center, GaussianRational):
        center = GaussianRational(center)
    return _expand_poly_quotient(num.shift(center), den.shift(center), 0, order)


def _expand_poly_quotient(num, den, extra_shift, order):
    vnum, vden = num.valuation(), den.valuation()
    val = vnum - vden + extra_shift
    prec = order + 1
    num_s = LaurentSeries(vnum - vden + extra_shift, num.coeffs[vnum:], None)
    den_unit = LaurentSeries(0, den.coeffs[vden:], None)
    inv = den_unit.inverse(order=prec - val if prec - val > 0 else 1)
    return (num_s * inv).truncate(prec)


class LaurentMatrixGerm:
    """Square matrix of Laurent series at a common center."""

    __slots__ = ("center", "n", "rows")

    def __init__(self, center, rows):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("germ must be square")
        norm_rows = tuple(
            tuple(_coerce_series(e) for e in row) for row in rows
        )
        if not isinstance(center, (_Infinity, GaussianRational)):
            center = GaussianRational(center)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", norm_rows)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrixGerm is immutable")

    @classmethod
    def from_rational_matrix(cls, entries, center, order):
        """Expand a matrix of RationalFunctions about a point."""
        rows = []
        for row in entries:
            out = []
            for e in row:
                if not e:
                    out.append(LaurentSeries.zero(order + 1))
                else:
                    out.append(expand_rational(e, center, order))
            rows.append(out)
        return cls(center, rows)

    @classmethod
    def identity(cls, n, center=ZERO, prec=None):
        return cls(
            center,
            [
                [LaurentSeries.one(prec) if i == j else LaurentSeries.zero(prec) for j in range(n)]
                for i in range(n)
            ],
        )

    def entry(self, i, j):
        return self.rows[i][j]

    def is_exact(self):
        return all(e.prec is None for row in self.rows for e in row)

    def min_prec(self):
        """Smallest knowledge bound over the entries (None when exact)."""
        return _min_prec(*(e.prec for row in self.rows for e in row))

    def __matmul__(self, other):
        if not isinstance(other, LaurentMatrixGerm):
            return NotImplemented
        if other.n != self.n or other.center != self.center:
            raise ValueError("germ centers/sizes differ")
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentSeries.zero(None)
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return LaurentMatrixGerm(self.center, rows)

    def map_entries(self, fn):
        return LaurentMatrixGerm(
            self.center, [[fn(e) for e in row] for row in self.rows]
        )

    def truncate(self, prec):
        return self.map_entries(lambda e: e.truncate(prec))

    def det(self):
        """Determinant by cofactor expansion (small ranks)."""
        return _det_series([list(r) for r in self.rows])

    def eq_through(self, other, order):
        for i in range(self.n):
            for j in range(self.n):
                if not self.rows[i][j].eq_through(other.rows[i][j], order):
                    return False
        return True

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self.rows
        )
        return f"LaurentMatrixGerm(center={self.center}, [{body}])"


def _det_series(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = LaurentSeries.zero(None)
    for j in range(n):
        if not rows[0][j] and rows[0][j].prec is None:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * _det_series(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc
