"""scikit-learn style wrappers.

``CurvePointTransformer`` maps odd n to the curve point (X(n), Y(n)).
``AdmissibleInvariantRegressor`` fits a finite-order invariant of bounded
order to its values on torus knots and predicts it elsewhere.  All
values are exact: inputs and outputs are object arrays of Fraction.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .curve_ring import X, Y, check_odd
from .exact_poly import to_fraction
from .restriction import from_samples

__all__ = ["check_odd_integers", "check_exact_targets", "CurvePointTransformer", "AdmissibleInvariantRegressor"]


def check_odd_integers(n) -> list[int]:
    """Validate a 1-d array-like (or single column) of odd integers."""
    arr = np.asarray(n, dtype=object)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column of n values, got shape {arr.shape}")
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected 1-d input, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("found an empty array of n values")
    out = []
    for v in arr:
        if isinstance(v, np.integer):
            v = int(v)
        out.append(check_odd(v))
    return out


def check_exact_targets(y, length: int) -> list[Fraction]:
    arr = np.asarray(y, dtype=object).ravel()
    if arr.size != length:
        raise ValueError(f"found {arr.size} targets for {length} samples")
    return [to_fraction(int(v) if isinstance(v, np.integer) else v) for v in arr]


class CurvePointTransformer(TransformerMixin, BaseEstimator):
    """Stateless: ``transform`` returns an (m, 2) object array of (x, y)."""

    def fit(self, n, y=None):
        check_odd_integers(n)
        self.n_features_in_ = 1
        return self

    def transform(self, n):
        check_is_fitted(self, "n_features_in_")
        ns = check_odd_integers(n)
        out = np.empty((len(ns), 2), dtype=object)
        for i, k in enumerate(ns):
            out[i, 0] = X.eval_at(k)
            out[i, 1] = Y.eval_at(k)
        return out


class AdmissibleInvariantRegressor(RegressorMixin, BaseEstimator):
    """Recover an invariant of order <= ``degree`` from its torus-knot values.

    Parameters
    ----------
    degree : int
        Bound on the filtration order, which is also the degree bound of
        the interpolating polynomial in n.

    Attributes
    ----------
    decomposition_ : Decomposition
        Coefficients in the basis 1, X^l, X^(l-1)*Y.
    element_ : CurveElement
        The fitted element of the curve ring.
    order_ : int or None
        Its filtration order (None when the fit is zero).
    """

    def __init__(self, degree: int = 3):
        self.degree = degree

    def fit(self, n, y):
        ns = check_odd_integers(n)
        values = check_exact_targets(y, len(ns))
        samples: dict[int, Fraction] = {}
        for k, v in zip(ns, values):
            if k in samples and samples[k] != v:
                raise ValueError(f"conflicting targets for n = {k}")
            samples[k] = v
        self.decomposition_ = from_samples(samples, self.degree)
        self.element_ = self.decomposition_.reassemble()
        self.order_ = self.element_.order() if self.element_ else None
        self.n_features_in_ = 1
        return self

    def predict(self, n):
        check_is_fitted(self, "element_")
        ns = check_odd_integers(n)
        return np.array([self.element_.eval_at(k) for k in ns], dtype=object)
