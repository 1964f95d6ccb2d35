"""Rational functions over Q(i): the function field of the genus-0 model.

A RationalFunction is numerator/denominator in lowest terms with a monic
denominator; the zero function is uniquely 0/1.  Valuations, principal
divisors, and exact Laurent expansion all live here.
"""

from .scalars import GaussianRational, ZERO, ONE
from .poly import Polynomial, poly_gcd, P_ONE, P_ZERO, Z
from .divisors import Divisor, INF, _Infinity
from .roots import all_rational_roots


class SplittingFieldError(ValueError):
    """A factor has no root in Q(i); the requested point data is unavailable."""


def _coerce_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x, P_ONE, _normalized=x.degree < 1)
    if isinstance(x, (GaussianRational, int)):
        return RationalFunction(Polynomial([x]), P_ONE, _normalized=True)
    return NotImplemented


class RationalFunction:
    """Quotient of polynomials over Q(i), always in lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE, _normalized=False):
        if not isinstance(num, Polynomial):
            num = Polynomial([num]) if not isinstance(num, (list, tuple)) else Polynomial(num)
        if not isinstance(den, Polynomial):
            den = Polynomial([den]) if not isinstance(den, (list, tuple)) else Polynomial(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            if not num:
                num, den = P_ZERO, P_ONE
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lead_inv = den.leading().inverse()
                num = num.scale(lead_inv)
                den = den.scale(lead_inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def constant(cls, c):
        return cls(Polynomial([c]), P_ONE, _normalized=True)

    @classmethod
    def from_poly(cls, p):
        return cls(p, P_ONE, _normalized=True)

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (1 / self) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def inverse(self):
        return 1 / self

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    # -- evaluation ---------------------------------------------------------

    def __call__(self, p):
        """Value at an affine point or at INF; raises at a pole."""
        v = self.valuation(p)
        if v < 0:
            raise ZeroDivisionError(f"pole at {p}")
        if v > 0:
            return ZERO
        if isinstance(p, _Infinity):
            return self.num.leading() / self.den.leading()
        return self.num(p) / self.den(p)

    def valuation(self, p):
        """Order of vanishing at p (negative at poles); INF supported.

        The zero function has no valuation; raises ValueError.
        """
        if not self:
            raise ValueError("undefined valuation: zero function")
        if isinstance(p, _Infinity):
            return self.den.degree - self.num.degree
        if not isinstance(p, GaussianRational):
            p = GaussianRational(p)
        return self.num.root_multiplicity(p) - self.den.root_multiplicity(p)

    def divisor(self, candidates=()):
        """The principal divisor of the function, including INF.

        Numerator and denominator must split over Q(i); extra candidate
        roots (from context) are tried first.  Raises SplittingFieldError
        when an irreducible factor has no Q(i) root.
        """
        if not self:
            raise ValueError("zero function has no divisor")
        items = []
        for sign, poly in ((1, self.num), (-1, self.den)):
            if poly.degree == 0:
                continue
            found, remainder = all_rational_roots(poly, candidates)
            if remainder.degree > 0:
                raise SplittingFieldError(
                    f"unsupported splitting field: no Q(i) root of {remainder}"
                )
            items.extend((r, sign * m) for r, m in found)
        v_inf = self.valuation(INF)
        if v_inf:
            items.append((INF, v_inf))
        return Divisor(items)

    def zero_orders(self, candidates=()):
        """(divisor-of-zeros data, unsplit profile) for the zero locus.

        Returns (divisor, profile) where divisor lists the Q(i)-rational
        zeros (and the zero at INF, when present) and profile is a list of
        (multiplicity, degree) entries for square-free factors without Q(i)
        roots, so multiplicity data survives an unsupported splitting field.
        """
        from .poly import square_free_decomposition

        if not self:
            raise ValueError("zero function has no zero locus")
        items = []
        profile = []
        for factor, mult in square_free_decomposition(self.num):
            found, remainder = all_rational_roots(factor, candidates)
            items.extend((r, mult) for r, m in found)
            if remainder.degree > 0:
                profile.append((mult, remainder.degree))
        v_inf = self.valuation(INF)
        if v_inf > 0:
            items.append((INF, v_inf))
        return Divisor(items), sorted(profile)

    # -- structure ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == P_ONE:
            return str(self.num)
        ns = str(self.num)
        ds = str(self.den)
        if " " in ns or "+" in ns[1:]:
            ns = f"({ns})"
        if " " in ds or "+" in ds[1:]:
            ds = f"({ds})"
        return f"{ns}/{ds}"


RF_ZERO = RationalFunction(P_ZERO, P_ONE, _normalized=True)
RF_ONE = RationalFunction(P_ONE, P_ONE, _normalized=True)
RF_Z = RationalFunction(Z, P_ONE, _normalized=True)


def valuation_at(f, p):
    """Module-level form of RationalFunction.valuation."""
    return _coerce_rf(f).valuation(p)


def divisor_of(f, candidates=()):
    """Principal divisor of a nonzero rational function (degree zero)."""
    return _coerce_rf(f).divisor(candidates)


def rf(num, den=1):
    """Convenience constructor from polynomials/scalars."""
    n = num if isinstance(num, Polynomial) else Polynomial([num])
    d = den if isinstance(den, Polynomial) else Polynomial([den])
    return RationalFunction(n, d)
