"""Dense univariate polynomials over Q(i), in the variable z.

Coefficients are stored ascending: ``Polynomial([a0, a1, a2])`` is
a0 + a1 z + a2 z^2.  The zero polynomial has an empty coefficient tuple
and degree -1 by convention.
"""

from .scalars import GaussianRational, ZERO, ONE, gaussian


def _coerce_coeff(c):
    if isinstance(c, GaussianRational):
        return c
    return GaussianRational(c)


class Polynomial:
    """Polynomial over Q(i); immutable, exact."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, degree, c=ONE):
        c = _coerce_coeff(c)
        if not c:
            return cls()
        return cls([ZERO] * degree + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else ZERO

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce_coeff(c)
        return Polynomial([a * c for a in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power wants a nonnegative integer")
        result = Polynomial([ONE])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        inv_lead = other.leading().inverse()
        quot = [ZERO] * (dq + 1)
        bc = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[k + len(bc) - 1] * inv_lead
            quot[k] = c
            if c:
                for j, bj in enumerate(bc):
                    rem[k + j] = rem[k + j] - c * bj
        return Polynomial(quot), Polynomial(rem[: len(bc) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Division known to be exact; raises if a remainder appears."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- evaluation and calculus ------------------------------------------

    def __call__(self, x):
        x = _coerce_coeff(x) if not isinstance(x, GaussianRational) else x
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift(self, c):
        """The polynomial p(z + c), by Horner-style Taylor shift."""
        c = _coerce_coeff(c)
        out = []
        for a in reversed(self.coeffs):
            out = _shift_step(out, c)
            if out:
                out[0] = out[0] + a
            else:
                out = [a]
        return Polynomial(out)

    def reverse(self, degree=None):
        """Coefficients reversed relative to the given degree (default own)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reverse degree below actual degree")
        out = [ZERO] * (d + 1)
        for k, c in enumerate(self.coeffs):
            out[d - k] = c
        return Polynomial(out)

    # -- normal forms ------------------------------------------------------

    def monic(self):
        if not self:
            return self
        inv = self.leading().inverse()
        return Polynomial([c * inv for c in self.coeffs])

    def valuation(self):
        """Order of vanishing at z = 0 (raises on the zero polynomial)."""
        if not self:
            raise ValueError("zero polynomial has no valuation")
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError("unnormalized polynomial")

    def root_multiplicity(self, p):
        """Multiplicity of the root z = p (0 when p is not a root)."""
        mult = 0
        cur = self
        while cur and not cur(p):
            cur = cur.deflate(p)
            mult += 1
        return mult

    def deflate(self, p):
        """Synthetic division by (z - p); requires p to be a root."""
        p = _coerce_coeff(p)
        if not self:
            raise ValueError("cannot deflate the zero polynomial")
        out = [ZERO] * self.degree
        carry = ZERO
        for k in range(self.degree, 0, -1):
            carry = self.coeffs[k] + carry * p
            out[k - 1] = carry
        if self.coeffs[0] + carry * p:
            raise ValueError("deflation at a non-root")
        return Polynomial(out)

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            needs_parens = ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs)
            if k == 0:
                parts.append(f"({cs})" if needs_parens else cs)
            else:
                zk = "z" if k == 1 else f"z^{k}"
                if cs == "1":
                    parts.append(zk)
                elif cs == "-1":
                    parts.append(f"-{zk}")
                else:
                    parts.append(f"({cs})*{zk}" if needs_parens else f"{cs}*{zk}")
        return " + ".join(parts).replace("+ -", "- ")


def _shift_step(out, c):
    # multiply the accumulated polynomial by (z + c)
    res = [ZERO] * (len(out) + 1)
    for k, a in enumerate(out):
        if a:
            res[k + 1] = res[k + 1] + a
            res[k] = res[k] + a * c
    return res


def _coerce_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, GaussianRational) or isinstance(x, int):
        return Polynomial([x])
    return NotImplemented


Z = Polynomial([ZERO, ONE])
P_ONE = Polynomial([ONE])
P_ZERO = Polynomial()


def poly_gcd(a, b):
    """Monic gcd over the field Q(i)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = P_ONE, P_ZERO
    t0, t1 = P_ZERO, P_ONE
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = r0.leading().inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def square_free_decomposition(p):
    """Yun's algorithm: returns [(factor_1, 1), (factor_2, 2), ...].

    Factors are monic, pairwise coprime and square-free; their product with
    multiplicities recovers p up to the leading coefficient.  Characteristic
    zero only.
    """
    if not p:
        raise ValueError("zero polynomial")
    result = []
    p = p.monic()
    if p.degree == 0:
        return result
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    k = 1
    while True:
        d = c - b.derivative()
        f = poly_gcd(b, d)
        if f.degree > 0:
            result.append((f, k))
        b2 = b.exact_div(f)
        if b2.degree == 0:
            break
        c = d.exact_div(f)
        b = b2
        k += 1
    return result


def poly_from_roots(pairs, lead=ONE):
    """Product lead * prod (z - r)^m over (r, m) pairs."""
    p = Polynomial([lead])
    for r, m in pairs:
        p = p * (Polynomial([-_coerce_coeff(r), ONE]) ** m)
    return p
