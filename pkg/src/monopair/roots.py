"""Root extraction over Q(i).

Finds all Q(i) roots of a polynomial with Q(i) coefficients, exactly.  The
strategy, applied to each square-free factor:

* degree 1 and 2: solved by the linear formula / quadratic formula with the
  exact Q(i) square root,
* polynomials in z^2: recurse on the substituted polynomial and take exact
  square roots of its roots,
* otherwise: the rational-root theorem over the Gaussian integers, with
  candidate numerators and denominators enumerated from Gaussian-integer
  divisors of the trailing and leading coefficients.

Anything left after these steps has no root in Q(i) (for the divisor-based
searches) or lies beyond the supported splitting fields; callers decide
which error to raise.
"""

from .scalars import GaussianRational, ZERO, ONE, rational, as_rational
from .poly import Polynomial, square_free_decomposition, P_ONE


def _factor_int(n):
    """Prime factorization of a positive integer (trial division + rho)."""
    n = int(n)
    factors = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 100000:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += increments[i % 8]
        i += 1
    if n > 1:
        if n < 10**10 or _is_probable_prime(n):
            factors[n] = factors.get(n, 0) + 1
        else:
            for p in _pollard_split(n):
                factors[p] = factors.get(p, 0) + 1
    return factors


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_split(n):
    """Fully factor n (assumed odd, composite, large) via Pollard rho."""
    if _is_probable_prime(n):
        return [n]
    from math import gcd

    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return sorted(_pollard_split(d) + _pollard_split(n // d))
        c += 1


def gaussian_integer_divisors(a, b):
    """All Gaussian integers dividing a + bi, up to unit multiples.

    Returns a list of (re, im) integer pairs; one representative per
    associate class, always including (1, 0).
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        raise ValueError("0 has no divisor list")
    norm = a * a + b * b
    primes = []
    for p, e in sorted(_factor_int(norm).items()):
        if p == 2:
            primes.extend([(1, 1)] * e)
        elif p % 4 == 3:
            # inert prime: appears to even powers in a norm
            primes.extend([(p, 0)] * (e // 2))
        else:
            # split prime: find r with r^2 = -1 mod p, gaussian gcd
            r = _sqrt_minus_one(p)
            g1 = _ggcd((p, 0), (r, 1))
            g2 = (g1[0], -g1[1])
            # distribute e among the two conjugate primes by trial division
            rem = (a, b)
            n1 = 0
            for _ in range(e):
                q = _gdivide(rem, g1)
                if q is None:
                    break
                rem = q
                n1 += 1
            primes.extend([g1] * n1 + [g2] * (e - n1))
    divisors = {(1, 0)}
    for g in primes:
        divisors |= {_gcanon(_gmul(d, g)) for d in divisors}
    return sorted(divisors)


def _sqrt_minus_one(p):
    # p = 1 mod 4 prime; a quadratic nonresidue to the power (p-1)/4
    q = 2
    while pow(q, (p - 1) // 2, p) == 1:
        q += 1
    return pow(q, (p - 1) // 4, p)


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gdivide(x, y):
    """Exact Gaussian-integer division, or None when not divisible."""
    n = y[0] * y[0] + y[1] * y[1]
    re = x[0] * y[0] + x[1] * y[1]
    im = x[1] * y[0] - x[0] * y[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _ggcd(x, y):
    while y != (0, 0):
        n = y[0] * y[0] + y[1] * y[1]
        # nearest-integer quotient
        re = x[0] * y[0] + x[1] * y[1]
        im = x[1] * y[0] - x[0] * y[1]
        qr = (2 * re + n) // (2 * n)
        qi = (2 * im + n) // (2 * n)
        r = (x[0] - (qr * y[0] - qi * y[1]), x[1] - (qr * y[1] + qi * y[0]))
        x, y = y, r
    return x


def _gcanon(g):
    """Canonical associate: rotate by units into re > 0, im >= 0 quadrant."""
    a, b = g
    for _ in range(4):
        if a > 0 and b >= 0:
            return (a, b)
        a, b = -b, a
    return (abs(a), abs(b))


def _clear_denominators(p):
    """Scale to Gaussian-integer coefficients; returns the scaled Polynomial."""
    from math import lcm

    denoms = []
    for c in p.coeffs:
        denoms.append(int(as_rational(c.re).denominator))
        denoms.append(int(as_rational(c.im).denominator))
    m = 1
    for d in denoms:
        m = lcm(m, d)
    return p.scale(GaussianRational(m))


def _roots_squarefree(f):
    """Q(i) roots of a monic square-free polynomial (each simple)."""
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [-f.coeffs[0] / f.coeffs[1]]
    if f.degree == 2:
        a, b, c = f.coeffs[2], f.coeffs[1], f.coeffs[0]
        s = (b * b - 4 * a * c).sqrt()
        if s is None:
            return []
        inv = (2 * a).inverse()
        roots = [(-b + s) * inv]
        if s:
            roots.append((-b - s) * inv)
        return roots
    if all(not f.coeffs[k] for k in range(1, f.degree + 1, 2)):
        # polynomial in z^2: recurse and take exact square roots
        g = Polynomial(f.coeffs[::2])
        roots = []
        for y in _roots_squarefree(g):
            s = y.sqrt()
            if s is not None:
                roots.append(s)
                if s:
                    roots.append(-s)
        return roots
    roots = []
    cleared = _clear_denominators(f)
    c0 = cleared.coeffs[0]
    cl = cleared.leading()
    if not c0:
        roots.append(ZERO)
        return roots + _roots_squarefree(f.deflate(ZERO).monic())
    nums = gaussian_integer_divisors(c0.re, c0.im)
    dens = gaussian_integer_divisors(cl.re, cl.im)
    units = (ONE, -ONE, GaussianRational(0, 1), GaussianRational(0, -1))
    seen = set(roots)
    for nre, nim in nums:
        for dre, dim in dens:
            base = GaussianRational(nre, nim) / GaussianRational(dre, dim)
            for u in units:
                cand = base * u
                if cand not in seen and not f(cand):
                    roots.append(cand)
                    seen.add(cand)
    return roots


def all_rational_roots(p, candidates=()):
    """All Q(i) roots of p with multiplicities, plus the rootless cofactor.

    Candidate points are tried first by deflation (cheap and robust even if
    the divisor enumeration would miss nothing).  Returns (roots, remainder)
    with roots a list of (GaussianRational, multiplicity) and remainder the
    monic factor without Q(i) roots.
    """
    if not p:
        raise ValueError("zero polynomial has no root set")
    work = p.monic()
    roots = []
    for cand in candidates:
        if not isinstance(cand, GaussianRational):
            cand = GaussianRational(cand)
        m = work.root_multiplicity(cand)
        if m:
            roots.append((cand, m))
            for _ in range(m):
                work = work.deflate(cand)
    if work.degree <= 0:
        return roots, P_ONE
    remainder = P_ONE
    for factor, mult in square_free_decomposition(work):
        rem = factor
        for r in _roots_squarefree(factor):
            rem = rem.deflate(r)
            roots.append((r, mult))
        if rem.degree > 0:
            remainder = remainder * rem**mult
    return roots, remainder.monic()
