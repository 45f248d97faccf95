"""Arithmetic in the coordinate ring Q[X, Y] / (Y^2 - X^3 - X^2) of the nodal cubic.

Every residue class has exactly one representative p(X) + q(X)*Y, since
the relation is monic of degree two in Y.  Sending X to n^2 - 1 and Y to
n^3 - n turns an element into a polynomial function on the odd integers.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from .exact_poly import DomainError, UniPoly, format_terms, to_fraction

__all__ = [
    "CurveElement",
    "RawBivariate",
    "DomainError",
    "normal_form",
    "add",
    "mul",
    "eval_at",
    "to_function",
    "order",
    "ZERO",
    "ONE",
    "X",
    "Y",
    "X_IMAGE",
    "Y_IMAGE",
    "CUBIC",
]


def _xpoly(coeffs) -> UniPoly:
    return UniPoly(coeffs, "X")


#: X^3 + X^2, the value of Y^2 in normal form.
CUBIC = _xpoly([0, 0, 1, 1])
#: n -> n^2 - 1 and n -> n^3 - n, the functions defined by X and Y.
X_IMAGE = UniPoly([-1, 0, 1], "n")
Y_IMAGE = UniPoly([0, -1, 0, 1], "n")


def check_odd(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")
    return n


class CurveElement:
    """The residue class of ``p(X) + q(X)*Y``."""

    __slots__ = ("_p", "_q")

    def __init__(self, p=None, q=None):
        self._p = self._as_xpoly(p)
        self._q = self._as_xpoly(q)

    @staticmethod
    def _as_xpoly(value) -> UniPoly:
        if value is None:
            return _xpoly(())
        if isinstance(value, UniPoly):
            if value.var != "X":
                raise ValueError("CurveElement parts must be polynomials in X")
            return value
        if isinstance(value, (list, tuple)):
            return _xpoly(value)
        return _xpoly((to_fraction(value),))

    @classmethod
    def constant(cls, c) -> CurveElement:
        return cls(c)

    @property
    def p(self) -> UniPoly:
        return self._p

    @property
    def q(self) -> UniPoly:
        return self._q

    def is_zero(self) -> bool:
        return self._p.is_zero() and self._q.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, CurveElement):
            return other
        try:
            return CurveElement(to_fraction(other))
        except TypeError:
            return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._p == other._p and self._q == other._q

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def __neg__(self) -> CurveElement:
        return CurveElement(-self._p, -self._q)

    def __add__(self, other) -> CurveElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CurveElement(self._p + other._p, self._q + other._q)

    __radd__ = __add__

    def __sub__(self, other) -> CurveElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CurveElement(self._p - other._p, self._q - other._q)

    def __rsub__(self, other) -> CurveElement:
        return (-self) + other

    def __mul__(self, other) -> CurveElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        pa, qa, pb, qb = self._p, self._q, other._p, other._q
        return CurveElement(pa * pb + qa * qb * CUBIC, pa * qb + pb * qa)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CurveElement:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def eval_at(self, n: int) -> Fraction:
        """Value on the torus knot of type (n, 2)."""
        n = check_odd(n)
        x = Fraction(n * n - 1)
        y = Fraction(n * n * n - n)
        return self._p(x) + self._q(x) * y

    def to_function(self) -> UniPoly:
        """The polynomial in n given by X -> n^2 - 1, Y -> n^3 - n."""
        return self._p.compose(X_IMAGE) + self._q.compose(X_IMAGE) * Y_IMAGE

    def order(self) -> int:
        """Filtration order: 2*deg p or 2*deg q + 3, whichever is larger.

        The zero element has no order; asking for it raises ValueError.
        """
        if self.is_zero():
            raise ValueError("the zero element has no filtration order")
        return int(max(2 * self._p.degree, 3 + 2 * self._q.degree))

    def __repr__(self) -> str:
        return f"CurveElement({self})"

    def __str__(self) -> str:
        p_text = str(self._p) if self._p else ""
        q_terms = [(c, k) for k, c in enumerate(self._q.coeffs) if c]
        if not q_terms:
            return p_text or "0"
        if len(q_terms) == 1:
            c, k = q_terms[0]
            mono = format_terms([(abs(c), k)], "X")
            if mono == "1":
                y_text = "Y"
            else:
                y_text = f"{mono}*Y"
            sign = "-" if c < 0 else "+"
        else:
            y_text = f"({self._q})*Y"
            sign = "+"
        if not p_text:
            return y_text if sign == "+" else f"-{y_text}"
        return f"{p_text} {sign} {y_text}"


ZERO = CurveElement()
ONE = CurveElement(1)
X = CurveElement(_xpoly([0, 1]))
Y = CurveElement(None, 1)


class RawBivariate(Mapping):
    """Unreduced polynomial in X and Y: a map (i, j) -> coefficient of X^i Y^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = to_fraction(c)
            total = data.get((i, j), Fraction(0)) + c
            if total:
                data[(i, j)] = total
            else:
                data.pop((i, j), None)
        self._terms = data

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"RawBivariate({self._terms!r})"


def normal_form(raw: RawBivariate | Mapping) -> CurveElement:
    """Reduce modulo Y^2 = X^3 + X^2.

    Y-powers are folded from the highest down: the X-coefficient of Y^j
    is multiplied by X^3 + X^2 and moved onto Y^(j-2), once per j.
    """
    if not isinstance(raw, RawBivariate):
        raw = RawBivariate(raw)
    if not raw:
        return ZERO
    top = max(j for _, j in raw)
    buckets: list[list[Fraction]] = [[] for _ in range(top + 1)]
    for (i, j), c in raw.items():
        b = buckets[j]
        if len(b) <= i:
            b.extend([Fraction(0)] * (i + 1 - len(b)))
        b[i] += c
    polys = [_xpoly(b) for b in buckets]
    for j in range(top, 1, -1):
        if polys[j]:
            polys[j - 2] = polys[j - 2] + polys[j] * CUBIC
    return CurveElement(polys[0], polys[1] if top >= 1 else None)


def add(a: CurveElement, b: CurveElement) -> CurveElement:
    return a + b


def mul(a: CurveElement, b: CurveElement) -> CurveElement:
    return a * b


def eval_at(a: CurveElement, n: int) -> Fraction:
    return a.eval_at(n)


def to_function(a: CurveElement) -> UniPoly:
    return a.to_function()


def order(a: CurveElement) -> int:
    return a.order()
