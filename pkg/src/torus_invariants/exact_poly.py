"""Exact univariate polynomials over the rationals.

A polynomial a_0 + a_1 t + ... + a_d t^d is stored as the tuple
(a_0, ..., a_d) of :class:`fractions.Fraction`.  The leading coefficient
a_d is nonzero, and the empty tuple is the zero polynomial.  Every
polynomial carries a variable tag, ``"n"`` for functions on odd integers
and ``"X"`` for polynomials in the first curve coordinate.  The tag is
only a label, but mixing tags in one operation is refused.

Also provided: interpolation through samples on odd integers and the
exact rank of a rational matrix.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from numbers import Rational

__all__ = [
    "NEG_INF",
    "DomainError",
    "UniPoly",
    "SampleSet",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "interpolate",
    "default_nodes",
    "sample_function",
    "rank",
    "to_fraction",
    "format_fraction",
]

#: Degree of the zero polynomial; compares below every integer and
#: absorbs addition, so deg(a*b) == deg(a) + deg(b) holds without cases.
NEG_INF = -math.inf

VARIABLES = ("n", "X")


class DomainError(ValueError):
    """A function on odd integers was asked about an even integer."""


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are refused; nothing in this package rounds.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UniPoly:
    """Immutable dense polynomial with rational coefficients."""

    __slots__ = ("_coeffs", "_var")

    def __init__(self, coeffs: Iterable = (), var: str = "n"):
        if var not in VARIABLES:
            raise ValueError(f"variable must be one of {VARIABLES}, got {var!r}")
        self._coeffs = _trim(to_fraction(c) for c in coeffs)
        self._var = var

    @classmethod
    def constant(cls, c, var: str = "n") -> UniPoly:
        return cls((c,), var)

    @classmethod
    def monomial(cls, power: int, c=1, var: str = "n") -> UniPoly:
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [c], var)

    @classmethod
    def variable(cls, var: str = "n") -> UniPoly:
        return cls.monomial(1, 1, var)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def var(self) -> str:
        return self._var

    @property
    def degree(self) -> int | float:
        """Degree, with :data:`NEG_INF` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other._var != self._var:
                raise ValueError(
                    f"variable mismatch: {self._var!r} vs {other._var!r}"
                )
            return other
        try:
            return UniPoly.constant(to_fraction(other), self._var)
        except TypeError:
            return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._var == other._var and self._coeffs == other._coeffs
        try:
            c = to_fraction(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._coeffs == _trim((c,))

    def __hash__(self) -> int:
        return hash((self._var, self._coeffs))

    def __neg__(self) -> UniPoly:
        return UniPoly((-c for c in self._coeffs), self._var)

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self._var)

    __radd__ = __add__

    def __sub__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return UniPoly((), self._var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out, self._var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UniPoly.constant(1, self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, at) -> Fraction:
        """Horner evaluation at an exact rational point."""
        x = to_fraction(at)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        """Return ``self(inner)``; the result carries ``inner``'s variable."""
        acc = UniPoly((), inner.var)
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    def with_var(self, var: str) -> UniPoly:
        return UniPoly(self._coeffs, var)

    def __repr__(self) -> str:
        return f"UniPoly({[format_fraction(c) for c in self._coeffs]!r}, var={self._var!r})"

    def __str__(self) -> str:
        return format_terms(
            ((c, p) for p, c in enumerate(self._coeffs)), self._var
        )


def _monomial_text(power: int, var: str) -> str:
    if power == 0:
        return ""
    if power == 1:
        return var
    return f"{var}^{power}"


def format_terms(terms: Iterable[tuple[Fraction, int]], var: str) -> str:
    """Render (coefficient, power) pairs in decreasing power, e.g. ``n^3 - n``."""
    parts: list[str] = []
    for c, p in sorted(terms, key=lambda t: -t[1]):
        if c == 0:
            continue
        mono = _monomial_text(p, var)
        mag = abs(c)
        if not mono:
            body = format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_fraction(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _check_same_var(a: UniPoly, b: UniPoly) -> None:
    if a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var!r} vs {b.var!r}")


def poly_add(a: UniPoly, b: UniPoly) -> UniPoly:
    _check_same_var(a, b)
    return a + b


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    _check_same_var(a, b)
    return a * b


def poly_eval(p: UniPoly, at) -> Fraction:
    return p(at)


class SampleSet(Mapping):
    """Read-only map from odd integers to exact rational values."""

    __slots__ = ("_points",)

    def __init__(self, points: Mapping | Iterable[tuple[int, object]] = ()):
        items = points.items() if isinstance(points, Mapping) else points
        data: dict[int, Fraction] = {}
        for key, value in items:
            if isinstance(key, bool) or not isinstance(key, int):
                raise TypeError(f"sample keys must be integers, got {key!r}")
            if key % 2 == 0:
                raise DomainError(f"sample keys must be odd, got {key}")
            if key in data:
                raise ValueError(f"duplicate sample key {key}")
            data[key] = to_fraction(value)
        self._points = data

    def __getitem__(self, key: int) -> Fraction:
        return self._points[key]

    def __iter__(self):
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {format_fraction(v)}" for k, v in self._points.items())
        return f"SampleSet({{{body}}})"


def default_nodes(degree: int) -> list[int]:
    """The ``degree + 1`` odd integers closest to zero: 1, -1, 3, -3, ..."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    nodes = []
    k = 1
    while len(nodes) < degree + 1:
        nodes.append(k)
        if len(nodes) < degree + 1:
            nodes.append(-k)
        k += 2
    return nodes


def sample_function(func: Callable[[int], object], degree: int) -> SampleSet:
    """Sample ``func`` on :func:`default_nodes` for a known degree bound."""
    return SampleSet((n, func(n)) for n in default_nodes(degree))


def interpolate(samples: Mapping[int, object], var: str = "n") -> UniPoly:
    """Lagrange interpolation: the unique polynomial of degree < len(samples)."""
    if not isinstance(samples, SampleSet):
        samples = SampleSet(samples)
    if not samples:
        raise ValueError("cannot interpolate an empty sample set")
    nodes = list(samples)
    t = UniPoly.variable(var)
    result = UniPoly((), var)
    for i, xi in enumerate(nodes):
        basis = UniPoly.constant(1, var)
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j != i:
                basis = basis * (t - xj)
                denom *= xi - xj
        result = result + basis * (samples[xi] / denom)
    return result


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q by Gaussian elimination.

    Short rows are padded with zeros.  The pivot in each column is the
    entry of largest absolute value, ties broken by smaller denominator.
    """
    if not rows:
        return 0
    width = max(len(r) for r in rows)
    m = [[to_fraction(x) for x in r] + [Fraction(0)] * (width - len(r)) for r in rows]
    r = 0
    for col in range(width):
        candidates = [i for i in range(r, len(m)) if m[i][col] != 0]
        if not candidates:
            continue
        piv = max(candidates, key=lambda i: (abs(m[i][col]), -m[i][col].denominator))
        m[r], m[piv] = m[piv], m[r]
        pivot_row = m[r]
        pv = pivot_row[col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                f /= pv
                row = m[i]
                for j in range(col, width):
                    row[j] -= f * pivot_row[j]
        r += 1
        if r == len(m):
            break
    return r
