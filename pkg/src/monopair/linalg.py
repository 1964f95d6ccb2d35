"""Matrices over the rational function field Q(i)(z).

Small dense matrices; determinants use fraction-free (Bareiss) elimination
on a denominator-cleared polynomial matrix so intermediate quotients stay
exact, and inverses go through the adjugate for sizes up to 3 and
Gauss-Jordan beyond.
"""

from .scalars import GaussianRational, ZERO, ONE
from .poly import Polynomial, P_ONE
from .ratfunc import RationalFunction, RF_ZERO, RF_ONE, _coerce_rf


class SingularMatrixError(ZeroDivisionError):
    """Inverse of a matrix with identically vanishing determinant."""


class RFMatrix:
    """Immutable square or rectangular matrix of RationalFunctions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        norm = []
        for row in rows:
            norm.append(tuple(_ensure_rf(e) for e in row))
        if not norm or any(len(r) != len(norm[0]) for r in norm):
            raise ValueError("matrix rows must be nonempty and equal length")
        object.__setattr__(self, "rows", tuple(norm))
        object.__setattr__(self, "nrows", len(norm))
        object.__setattr__(self, "ncols", len(norm[0]))

    def __setattr__(self, name, value):
        raise AttributeError("RFMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[RF_ONE if i == j else RF_ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n, m=None):
        m = n if m is None else m
        return cls([[RF_ZERO] * m for _ in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = [_ensure_rf(e) for e in entries]
        n = len(entries)
        return cls(
            [[entries[i] if i == j else RF_ZERO for j in range(n)] for i in range(n)]
        )

    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        return self.rows[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return RFMatrix(
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.ncols)]
                for i in range(self.nrows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return RFMatrix([[-e for e in row] for row in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = RF_ZERO
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RFMatrix(out)

    def __mul__(self, scalar):
        s = _ensure_rf(scalar)
        return RFMatrix([[e * s for e in row] for row in self.rows])

    __rmul__ = __mul__

    def transpose(self):
        return RFMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def map_entries(self, fn):
        return RFMatrix([[fn(e) for e in row] for row in self.rows])

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = RF_ZERO
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        return _det_rf(self.rows)

    def inverse(self):
        """Exact inverse; raises SingularMatrixError when det vanishes."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        d = self.det()
        if not d:
            raise SingularMatrixError("singular")
        n = self.nrows
        if n == 1:
            return RFMatrix([[1 / self.rows[0][0]]])
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = [
                    [self.rows[r][c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
                sign = 1 if (i + j) % 2 == 0 else -1
                row.append(sign * _det_rf(minor))
            cof.append(row)
        inv_d = 1 / d
        return RFMatrix(
            [[cof[j][i] * inv_d for j in range(n)] for i in range(n)]
        )

    def eval_at(self, p):
        """Matrix of values at a point where every entry is regular."""
        return [[e(p) for e in row] for row in self.rows]

    def char_poly_coeffs(self):
        """Characteristic polynomial det(M - t*I) as coefficients of t^n..t^0.

        Coefficient of t^(n-r) is (-1)^n (-1)^r e_r with e_r the sum of the
        principal r x r minors; the leading coefficient is (-1)^n.
        """
        if not self.is_square():
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        from itertools import combinations

        sign_n = 1 if n % 2 == 0 else -1
        coeffs = []
        for r in range(n + 1):
            if r == 0:
                e_r = RF_ONE
            else:
                e_r = RF_ZERO
                for subset in combinations(range(n), r):
                    sub = [[self.rows[i][j] for j in subset] for i in subset]
                    e_r = e_r + _det_rf(sub)
            sign_r = 1 if r % 2 == 0 else -1
            coeffs.append(sign_n * sign_r * e_r)
        return coeffs

    def __eq__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"RFMatrix([{body}])"


def _ensure_rf(e):
    out = _coerce_rf(e)
    if out is NotImplemented:
        if isinstance(e, Polynomial):
            return RationalFunction(e, P_ONE)
        raise TypeError(f"cannot use {e!r} as a rational-function entry")
    return out


def _det_rf(rows):
    """Determinant of a list-of-lists of RationalFunctions."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, k = rows[2]
        return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)
    # clear denominators row by row, then fraction-free Bareiss
    cleared = []
    scale = RF_ONE
    for row in rows:
        den = P_ONE
        for e in row:
            den = den * e.den
        scale = scale * RationalFunction(P_ONE, den)
        cleared.append([e.num * den.exact_div(e.den) for e in row])
    det_poly = _bareiss(cleared)
    return RationalFunction(det_poly, P_ONE) * scale


def _bareiss(m):
    """Fraction-free determinant of a polynomial matrix (destructive copy)."""
    n = len(m)
    m = [row[:] for row in m]
    prev = P_ONE
    sign = 1
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
