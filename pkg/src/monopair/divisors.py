"""Divisors on the projective line over Q(i).

Points are either GaussianRational values (the affine chart) or the point
at infinity, represented by the module-level singleton ``INF``.
"""

from .scalars import GaussianRational


class _Infinity:
    """The point at infinity on P^1 (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "oo"

    def __hash__(self):
        return hash("monopair-point-at-infinity")

    def __eq__(self, other):
        return isinstance(other, _Infinity)


INF = _Infinity()


def point_sort_key(p):
    """Deterministic ordering: affine points by (re, im), then infinity."""
    if p is INF or isinstance(p, _Infinity):
        return (1, 0, 0, 0, 0)
    return (
        0,
        p.re.numerator,
        p.re.denominator,
        p.im.numerator,
        p.im.denominator,
    )


def point_str(p):
    return "oo" if isinstance(p, _Infinity) else str(p)


class Divisor:
    """Finite formal sum of points with nonzero integer multiplicities."""

    __slots__ = ("_data",)

    def __init__(self, items=()):
        data = {}
        pairs = items.items() if isinstance(items, dict) else items
        for point, mult in pairs:
            if not isinstance(mult, int):
                raise TypeError("divisor multiplicities must be integers")
            if not isinstance(point, (_Infinity, GaussianRational)):
                point = GaussianRational(point)
            if mult:
                data[point] = data.get(point, 0) + mult
                if not data[point]:
                    del data[point]
        object.__setattr__(self, "_data", dict(data))

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    def multiplicity(self, point):
        if not isinstance(point, (_Infinity, GaussianRational)):
            point = GaussianRational(point)
        return self._data.get(point, 0)

    def support(self):
        return sorted(self._data, key=point_sort_key)

    def items(self):
        return [(p, self._data[p]) for p in self.support()]

    @property
    def degree(self):
        return sum(self._data.values())

    def positive_part(self):
        return Divisor([(p, m) for p, m in self._data.items() if m > 0])

    def negative_part(self):
        """The polar part, recorded with positive multiplicities."""
        return Divisor([(p, -m) for p, m in self._data.items() if m < 0])

    def restrict_affine(self):
        return Divisor([(p, m) for p, m in self._data.items() if not isinstance(p, _Infinity)])

    def __add__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return Divisor(list(self._data.items()) + list(other._data.items()))

    def __sub__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Divisor([(p, -m) for p, m in self._data.items()])

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Divisor([(p, k * m) for p, m in self._data.items()])

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._data)

    def __len__(self):
        return len(self._data)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return f"Divisor({self.items()!r})"

    def __str__(self):
        if not self._data:
            return "0"
        parts = []
        for p, m in self.items():
            parts.append(f"{m}({point_str(p)})" if m != 1 else f"({point_str(p)})")
        return " + ".join(parts).replace("+ -", "- ")
