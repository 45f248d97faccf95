"""Torus knot invariants of low order, computed exactly in the ring Q[X,Y]/(Y^2 - X^3 - X^2)."""

from .curve_ring import (
    ONE,
    ZERO,
    CurveElement,
    DomainError,
    RawBivariate,
    X,
    Y,
    eval_at,
    normal_form,
    order,
    to_function,
)
from .exact_poly import SampleSet, UniPoly, interpolate, rank
from .gauss_knots import GaussDiagram, mirror, parse_gauss_code, torus_diagram, v2, v3, x_invariant, y_invariant
from .restriction import (
    AdmissibilityError,
    BasisMonomial,
    Decomposition,
    InsufficientSamples,
    decompose,
    filtration_dimension,
    from_samples,
    is_admissible,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "ZERO",
    "X",
    "Y",
    "CurveElement",
    "RawBivariate",
    "DomainError",
    "eval_at",
    "normal_form",
    "order",
    "to_function",
    "SampleSet",
    "UniPoly",
    "interpolate",
    "rank",
    "GaussDiagram",
    "mirror",
    "parse_gauss_code",
    "torus_diagram",
    "v2",
    "v3",
    "x_invariant",
    "y_invariant",
    "AdmissibilityError",
    "BasisMonomial",
    "Decomposition",
    "InsufficientSamples",
    "decompose",
    "filtration_dimension",
    "from_samples",
    "is_admissible",
    "verify_theorem",
]
