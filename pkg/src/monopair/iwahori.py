"""Local singularity type and constructive factorization of matrix germs.

A meromorphic matrix germ M at a marked point factors as
M = F * diag(u^{k_1}, ..., u^{k_n}) * G with F, G invertible holomorphic
germs and a unique non-increasing integer vector k.  ``local_type`` reads
the exponents off minimal minor valuations; ``factorize`` produces the unit
factors by pivoted two-sided reduction and verifies them by multiplying
back.
"""

from itertools import combinations

from .scalars import ZERO, ONE
from .series import (
    LaurentSeries,
    LaurentMatrixGerm,
    InsufficientPrecisionError,
)


class SingularGermError(ZeroDivisionError):
    """Determinant vanishes identically through the known precision."""


class WeightVector:
    """Non-increasing integer exponents of a Dirac-type singularity."""

    __slots__ = ("k",)

    def __init__(self, k):
        k = tuple(int(x) for x in k)
        if any(k[i] < k[i + 1] for i in range(len(k) - 1)):
            raise ValueError(f"ordering violated: {k} is not non-increasing")
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    @classmethod
    def from_unsorted(cls, values):
        return cls(sorted((int(v) for v in values), reverse=True))

    @property
    def n(self):
        return len(self.k)

    @property
    def trk(self):
        return sum(self.k)

    def is_zero(self):
        return all(x == 0 for x in self.k)

    def reversed_negated(self):
        """The weight vector of the inverse germ."""
        return WeightVector(tuple(sorted((-x for x in self.k), reverse=True)))

    def __iter__(self):
        return iter(self.k)

    def __len__(self):
        return len(self.k)

    def __getitem__(self, i):
        return self.k[i]

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return self.k == other.k
        if isinstance(other, tuple):
            return self.k == other
        return NotImplemented

    def __hash__(self):
        return hash(self.k)

    def __repr__(self):
        return f"WeightVector({list(self.k)})"

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.k) + ")"


def minor_valuation_profile(germ):
    """Minimal valuation of r x r minors for r = 1..n.

    Returns the list [b_1, ..., b_n].  Partial sums of the sorted exponents
    equal these numbers, which is what makes them an independent oracle for
    the reduction-based factorization.  Raises SingularGermError when all
    r-minors vanish identically for some r, and InsufficientPrecisionError
    when a truncated germ does not determine some minimum.

    Minors are built by Laplace expansion along the top row of each row
    subset, reusing the (r-1) x (r-1) table, so every determinant is
    computed exactly once.
    """
    n = germ.n
    rows = germ.rows
    # table: (row_subset, col_subset) -> determinant series, by size r
    prev = {((i,), (j,)): rows[i][j] for i in range(n) for j in range(n)}
    profile = [_profile_entry(prev.values(), 1)]
    for r in range(2, n + 1):
        table = {}
        for rsel in combinations(range(n), r):
            sub_rows = rsel[1:]
            for csel in combinations(range(n), r):
                acc = LaurentSeries.zero(None)
                for pos, j in enumerate(csel):
                    entry = rows[rsel[0]][j]
                    if not entry.coeffs and entry.prec is None:
                        continue
                    sub_cols = tuple(c for c in csel if c != j)
                    term = entry * prev[(sub_rows, sub_cols)]
                    acc = acc + (term if pos % 2 == 0 else -term)
                table[(rsel, csel)] = acc
        profile.append(_profile_entry(table.values(), r))
        prev = table
    return profile


def _profile_entry(minors, r):
    best = None
    undetermined_floor = None
    for minor in minors:
        if minor.coeffs:
            v = minor.offset
            if best is None or v < best:
                best = v
        elif minor.prec is not None:
            if undetermined_floor is None or minor.prec < undetermined_floor:
                undetermined_floor = minor.prec
    if best is None:
        if undetermined_floor is None:
            raise SingularGermError(f"singular germ: all {r}x{r} minors vanish")
        raise InsufficientPrecisionError(
            f"insufficient precision: {r}x{r} minors vanish through "
            f"order {undetermined_floor}"
        )
    if undetermined_floor is not None and undetermined_floor <= best:
        raise InsufficientPrecisionError(
            f"insufficient precision: an {r}x{r} minor is known only "
            f"through order {undetermined_floor} <= candidate minimum {best}"
        )
    return best


def local_type(germ):
    """The weight vector of a matrix germ, via minimal minor valuations.

    The sorted exponents lambda_1 <= ... <= lambda_n satisfy
    lambda_1 + ... + lambda_r = b_r, so lambda_r = b_r - b_{r-1}; the result
    is reported non-increasing.
    """
    profile = minor_valuation_profile(germ)
    ascending = []
    prev = 0
    for b in profile:
        ascending.append(b - prev)
        prev = b
    if any(ascending[i] > ascending[i + 1] for i in range(len(ascending) - 1)):
        raise AssertionError(
            f"minor valuations {profile} violate the convexity of exponents"
        )
    return WeightVector(tuple(reversed(ascending)))


class IwahoriFactorization:
    """Constructive local normal form M = F * diag(u^k) * G through order M."""

    __slots__ = ("F", "weights", "G", "order", "center")

    def __init__(self, F, weights, G, order, center):
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "center", center)

    def __setattr__(self, name, value):
        raise AttributeError("IwahoriFactorization is immutable")

    def diagonal_germ(self):
        n = len(self.weights)
        return LaurentMatrixGerm(
            self.center,
            [
                [
                    LaurentSeries.monomial(self.weights[i]) if i == j else LaurentSeries.zero(None)
                    for j in range(n)
                ]
                for i in range(n)
            ],
        )

    def product(self):
        return (self.F @ self.diagonal_germ()) @ self.G

    def verify(self, germ):
        """Residual of F*D*G against the germ is zero through the order."""
        return self.product().eq_through(germ, self.order + 1)

    def __repr__(self):
        return (
            f"IwahoriFactorization(weights={self.weights}, order={self.order})"
        )


def reduction_exponents(germ):
    """Weight vector via pivoted reduction alone (no unit factors built).

    Same pivot rule as ``factorize`` but tracking only the matrix, so it is
    cheap enough to serve as the cross-check route on large sweeps.
    """
    n = germ.n
    a = [list(row) for row in germ.rows]
    exponents = []
    for s in range(n):
        piv = _find_pivot(a, s, n)
        if piv is None:
            raise SingularGermError("singular germ: reduction found a zero block")
        pi, pj = piv
        if pi != s:
            a[s], a[pi] = a[pi], a[s]
        if pj != s:
            for r in range(n):
                a[r][s], a[r][pj] = a[r][pj], a[r][s]
        p = a[s][s]
        v = p.valuation()
        u_p = p.shift(-v)
        for i in range(s + 1, n):
            c = a[i][s]
            if not c.coeffs:
                continue
            q = c.shift(-v)
            for j in range(s, n):
                a[i][j] = u_p * a[i][j] - q * a[s][j]
        for j in range(s + 1, n):
            c = a[s][j]
            if not c.coeffs:
                continue
            q = c.shift(-v)
            for i in range(s, n):
                a[i][j] = u_p * a[i][j] - q * a[i][s]
        exponents.append(v)
    return WeightVector(tuple(sorted(exponents, reverse=True)))


def required_order(germ):
    """The refusal threshold: val(det) + n * max|entry valuation| + 2."""
    n = germ.n
    vdet = None
    det = germ.det()
    if det.coeffs:
        vdet = det.offset
    else:
        if det.prec is None:
            raise SingularGermError("singular germ: det vanishes identically")
        raise InsufficientPrecisionError(
            f"insufficient precision: det vanishes through order {det.prec}"
        )
    vmax = 0
    for row in germ.rows:
        for e in row:
            if e.coeffs:
                vmax = max(vmax, abs(e.offset))
    return vdet + n * vmax + 2


def factorize(germ, order=None):
    """Pivoted two-sided reduction to diag(u^k) with recorded unit factors.

    The pivot is the minimal-valuation entry (ties: lowest row, then lowest
    column); its row and column are cleared by unit-multiplier operations
    that never divide by a non-unit, so exact inputs stay exact throughout
    the reduction.  The returned F and G are truncated to the reporting
    order, which defaults to the refusal threshold of ``required_order``.

    Raises SingularGermError and InsufficientPrecisionError as local_type
    does.
    """
    n = germ.n
    min_prec = germ.min_prec()
    threshold = required_order(germ)
    if order is None:
        order = threshold
    if min_prec is not None and min_prec <= threshold:
        raise InsufficientPrecisionError(
            f"insufficient precision: germ known through {min_prec}, "
            f"needs > {threshold}"
        )
    vmax = 0
    for row in germ.rows:
        for e in row:
            if e.coeffs:
                vmax = max(vmax, abs(e.offset))
    # generous internal window so the reported truncation is fully determined
    internal = order + 1 + n * vmax + 4
    a = [list(row) for row in germ.rows]

    # F and G are accumulated through sparse updates of identity matrices;
    # unit-inverse series are truncated to the working order.
    f_mat = [
        [LaurentSeries.one(None) if i == j else LaurentSeries.zero(None) for j in range(n)]
        for i in range(n)
    ]
    g_mat = [
        [LaurentSeries.one(None) if i == j else LaurentSeries.zero(None) for j in range(n)]
        for i in range(n)
    ]

    for s in range(n):
        piv = _find_pivot(a, s, n)
        if piv is None:
            raise SingularGermError("singular germ: reduction found a zero block")
        pi, pj = piv
        if pi != s:
            a[s], a[pi] = a[pi], a[s]
            # M = F A G; swapping rows of A multiplies F by the transposition
            for r in range(n):
                f_mat[r][s], f_mat[r][pi] = f_mat[r][pi], f_mat[r][s]
        if pj != s:
            for r in range(n):
                a[r][s], a[r][pj] = a[r][pj], a[r][s]
            g_mat[s], g_mat[pj] = g_mat[pj], g_mat[s]
        p = a[s][s]
        v = p.valuation()
        u_p = p.shift(-v)
        u_p_inv = u_p.inverse(order=internal)
        # clear the pivot column with row operations
        for i in range(s + 1, n):
            c = a[i][s]
            if not c.coeffs:
                continue
            q = c.shift(-v)
            for j in range(s, n):
                a[i][j] = u_p * a[i][j] - q * a[s][j]
            # F <- F * E^{-1}: col i scales by u_p^{-1}, col s gains u_p^{-1} q * col i
            gain = u_p_inv * q
            for r in range(n):
                f_mat[r][s] = f_mat[r][s] + f_mat[r][i] * gain
                f_mat[r][i] = f_mat[r][i] * u_p_inv
        # clear the pivot row with column operations
        for j in range(s + 1, n):
            c = a[s][j]
            if not c.coeffs:
                continue
            q = c.shift(-v)
            for i in range(s, n):
                a[i][j] = u_p * a[i][j] - q * a[i][s]
            # G <- E^{-1} * G: row j scales by u_p^{-1}, row s gains u_p^{-1} q * row j
            gain = u_p_inv * q
            for r in range(n):
                g_mat[s][r] = g_mat[s][r] + gain * g_mat[j][r]
                g_mat[j][r] = g_mat[j][r] * u_p_inv
    # absorb the diagonal units into F, leaving pure monomials
    exponents = []
    for s in range(n):
        p = a[s][s]
        v = p.valuation()
        exponents.append(v)
        u_s = p.shift(-v)
        for r in range(n):
            f_mat[r][s] = f_mat[r][s] * u_s
        a[s][s] = LaurentSeries.monomial(v, ONE, p.prec)
    if any(exponents[i] > exponents[i + 1] for i in range(n - 1)):
        raise AssertionError("pivot valuations failed to be non-decreasing")
    # reverse to the non-increasing convention with a flip permutation
    rev = list(range(n - 1, -1, -1))
    f_mat = [[f_mat[r][rev[c]] for c in range(n)] for r in range(n)]
    g_mat = [[g_mat[rev[r]][c] for c in range(n)] for r in range(n)]
    weights = WeightVector(tuple(reversed(exponents)))

    # keep enough window that F * diag * G is still determined through order
    report = order + 1 + max(0, -min(exponents))
    F = LaurentMatrixGerm(germ.center, f_mat).truncate(report)
    G = LaurentMatrixGerm(germ.center, g_mat).truncate(report)
    fact = IwahoriFactorization(F, weights, G, order, germ.center)
    if not fact.verify(germ):
        raise AssertionError("factorization failed verification against the germ")
    return fact


def _find_pivot(a, s, n):
    """Minimal-valuation entry of the trailing block, ties row-then-column."""
    best = None
    best_pos = None
    floor = None
    for i in range(s, n):
        for j in range(s, n):
            e = a[i][j]
            if e.coeffs:
                v = e.offset
                if best is None or v < best:
                    best = v
                    best_pos = (i, j)
            elif e.prec is not None:
                floor = e.prec if floor is None else min(floor, e.prec)
    if best is None:
        if floor is not None:
            raise InsufficientPrecisionError(
                f"insufficient precision: trailing block vanishes through {floor}"
            )
        return None
    if floor is not None and floor <= best:
        raise InsufficientPrecisionError(
            f"insufficient precision: undetermined entry (known through "
            f"{floor}) could undercut pivot valuation {best}"
        )
    return best_pos
