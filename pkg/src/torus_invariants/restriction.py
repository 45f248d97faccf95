"""From functions on odd integers back to the curve ring.

A polynomial f in n is the restriction of a finite-order invariant
exactly when f(1) == f(-1).  Such an f is a unique combination of 1 and
the monomials X^l (order 2l) and X^(l-1)*Y (order 2l+1).  This module
finds that combination and checks the resulting dimension counts of the
filtration.
"""

from __future__ import annotations

import enum
import functools
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .curve_ring import ONE, CurveElement, X, Y
from .exact_poly import SampleSet, UniPoly, format_fraction, interpolate, rank

__all__ = [
    "AdmissibilityError",
    "InsufficientSamples",
    "InconsistentSamples",
    "MonomialKind",
    "BasisMonomial",
    "Decomposition",
    "is_admissible",
    "decompose",
    "from_samples",
    "basis_up_to",
    "filtration_dimension",
    "expected_dimension",
    "OrderReport",
    "verify_theorem",
]


class AdmissibilityError(ValueError):
    """The polynomial takes different values at n = 1 and n = -1."""

    def __init__(self, at_one: Fraction, at_minus_one: Fraction):
        self.at_one = at_one
        self.at_minus_one = at_minus_one
        super().__init__(
            f"not admissible: f(1) = {format_fraction(at_one)} "
            f"but f(-1) = {format_fraction(at_minus_one)}"
        )


class InsufficientSamples(ValueError):
    """Samples do not pin down a polynomial of the requested degree."""


class InconsistentSamples(ValueError):
    """Samples are not values of any polynomial within the degree bound."""


class MonomialKind(enum.Enum):
    POWER_OF_X = "X^l"
    POWER_OF_X_TIMES_Y = "X^(l-1)*Y"


@dataclass(frozen=True)
class BasisMonomial:
    kind: MonomialKind
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("monomial parameter l must be >= 1")

    @classmethod
    def of_order(cls, order: int) -> BasisMonomial:
        if order < 2:
            raise ValueError(f"no basis monomial has order {order}")
        if order % 2 == 0:
            return cls(MonomialKind.POWER_OF_X, order // 2)
        return cls(MonomialKind.POWER_OF_X_TIMES_Y, (order - 1) // 2)

    @property
    def order(self) -> int:
        return 2 * self.l if self.kind is MonomialKind.POWER_OF_X else 2 * self.l + 1

    def element(self) -> CurveElement:
        return _element(self.kind, self.l)

    def image(self) -> UniPoly:
        return _image(self.kind, self.l)

    def __str__(self) -> str:
        return str(self.element())


# Values are immutable, so sharing cached instances is safe.
@functools.lru_cache(maxsize=None)
def _element(kind: MonomialKind, l: int) -> CurveElement:
    if kind is MonomialKind.POWER_OF_X:
        return X**l
    return X ** (l - 1) * Y


@functools.lru_cache(maxsize=None)
def _image(kind: MonomialKind, l: int) -> UniPoly:
    return _element(kind, l).to_function()


@dataclass(frozen=True)
class Decomposition:
    """``constant + sum(coefficient * monomial)`` over basis monomials."""

    constant: Fraction = Fraction(0)
    terms: Mapping[BasisMonomial, Fraction] = field(default_factory=dict)

    def reassemble(self) -> CurveElement:
        total = ONE * self.constant
        for mono, c in self.terms.items():
            total = total + mono.element() * c
        return total

    def coefficient(self, mono: BasisMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __str__(self) -> str:
        parts = []
        for mono in sorted(self.terms, key=lambda m: -m.order):
            parts.append((self.terms[mono], str(mono)))
        if self.constant:
            parts.append((self.constant, ""))
        if not parts:
            return "0"
        out = []
        for c, mono in parts:
            mag = abs(c)
            if not mono:
                body = format_fraction(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_fraction(mag)}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)


def _as_n_poly(f: UniPoly) -> UniPoly:
    if f.var != "n":
        raise ValueError("expected a polynomial in n")
    return f


def is_admissible(f: UniPoly) -> bool:
    return f(1) == f(-1)


def decompose(f: UniPoly) -> Decomposition:
    """Write an admissible polynomial in n in the monomial basis.

    The image of the order-d monomial is monic of degree d in n, so
    subtracting leading coefficient times that image lowers the degree.
    Both images vanish at n = +-1, so the remainder stays admissible and
    ends as a constant.
    """
    f = _as_n_poly(f)
    at_one, at_minus_one = f(1), f(-1)
    if at_one != at_minus_one:
        raise AdmissibilityError(at_one, at_minus_one)
    terms: dict[BasisMonomial, Fraction] = {}
    rest = f
    while rest.degree >= 2:
        mono = BasisMonomial.of_order(int(rest.degree))
        c = rest.leading_coefficient
        terms[mono] = c
        rest = rest - mono.image() * c
    if rest.degree == 1:  # unreachable for admissible input
        raise AssertionError("admissible remainder has a linear term")
    return Decomposition(rest[0], terms)


def from_samples(samples: Mapping[int, object], degree: int | None = None) -> Decomposition:
    """Interpolate samples under an explicit degree bound, then decompose.

    ``degree`` is required: inferring it from the number of samples
    would silently absorb extraneous points into higher-order terms.
    """
    if not isinstance(samples, SampleSet):
        samples = SampleSet(samples)
    if degree is None:
        raise InsufficientSamples("a degree bound is required to interpret samples")
    if degree < 0:
        raise ValueError("degree bound must be nonnegative")
    if len(samples) < degree + 1:
        raise InsufficientSamples(
            f"{len(samples)} samples cannot determine a polynomial of degree {degree}"
        )
    f = interpolate(samples)
    if f.degree > degree:
        raise InconsistentSamples(
            f"samples require degree {int(f.degree)}, above the bound {degree}"
        )
    return decompose(f)


def basis_up_to(k: int) -> list[CurveElement]:
    """1 together with every basis monomial of order <= k."""
    return [ONE] + [BasisMonomial.of_order(d).element() for d in range(2, k + 1)]


def _rows(polys: list[UniPoly]) -> list[list[Fraction]]:
    return [list(p.coeffs) for p in polys]


def filtration_dimension(k: int) -> int:
    """Dimension of the order <= k part, as an exact rank in powers of n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return rank(_rows([b.to_function() for b in basis_up_to(k)]))


def expected_dimension(k: int) -> int:
    """1, 1, 2, 3, 4, ...: one new generator at every order from 2 on."""
    if k < 0:
        return 0
    return 1 if k <= 1 else k


def _admissible_space(k: int) -> list[UniPoly]:
    # 1, n^j for even j, n^j - n for odd j: spans {f : deg f <= k, f(1) = f(-1)}
    n = UniPoly.variable("n")
    out = [UniPoly.constant(1)]
    for j in range(2, k + 1):
        out.append(n**j if j % 2 == 0 else n**j - n)
    return out


@dataclass(frozen=True)
class OrderReport:
    k: int
    dim: int
    quotient_dim: int
    expected_dim: int
    spans_admissible: bool
    generator_new: bool

    @property
    def passed(self) -> bool:
        return self.dim == self.expected_dim and self.spans_admissible and self.generator_new

    def as_record(self) -> dict:
        return {"k": self.k, "dim": self.dim, "quotient_dim": self.quotient_dim, "pass": self.passed}


def _check_order(k: int) -> OrderReport:
    basis = [b.to_function() for b in basis_up_to(k)]
    lower = [b.to_function() for b in basis_up_to(k - 1)] if k >= 1 else []
    dim = rank(_rows(basis))
    prev = rank(_rows(lower))
    admissible = _admissible_space(k)
    target = len(admissible)
    spans = (
        rank(_rows(admissible)) == target
        and dim == target
        and rank(_rows(basis + admissible)) == target
    )
    if k == 1:
        generator_new = True  # no monomial has order 1
    else:
        # the order-k monomial (or 1, at k = 0) is the last basis entry
        generator_new = rank(_rows(lower + basis[-1:])) == prev + 1
    return OrderReport(
        k=k,
        dim=dim,
        quotient_dim=dim - prev,
        expected_dim=expected_dimension(k),
        spans_admissible=spans,
        generator_new=generator_new,
    )


def verify_theorem(k_max: int) -> list[OrderReport]:
    """Check dimension counts, spanning and new generators for each k <= k_max.

    Failures are reported per k rather than raised.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    return [_check_order(k) for k in range(k_max + 1)]
