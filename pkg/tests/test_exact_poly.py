from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_invariants.curve_ring import DomainError
from torus_invariants.exact_poly import (
    NEG_INF,
    SampleSet,
    UniPoly,
    default_nodes,
    interpolate,
    poly_add,
    poly_eval,
    poly_mul,
    rank,
    sample_function,
)

from .conftest import nonzero_rationals, polys, rationals

N = UniPoly.variable("n")
N2_MINUS_1 = UniPoly([-1, 0, 1])
N3_MINUS_N = UniPoly([0, -1, 0, 1])


def test_add_examples():
    assert poly_add(N2_MINUS_1, UniPoly([1])) == UniPoly([0, 0, 1])
    assert poly_add(N3_MINUS_N, UniPoly(())) == N3_MINUS_N
    total = poly_add(N3_MINUS_N, UniPoly([0, 1, 0, -1]))
    assert total.is_zero() and total.coeffs == ()
    assert total.degree == NEG_INF


def test_mul_examples():
    # sympy: expand((n**2 - 1)**2) == n**4 - 2*n**2 + 1
    assert poly_mul(N2_MINUS_1, N2_MINUS_1) == UniPoly([1, 0, -2, 0, 1])
    assert poly_mul(N3_MINUS_N, UniPoly([1])) == N3_MINUS_N
    assert poly_mul(N3_MINUS_N, UniPoly(())).is_zero()


def test_eval_examples():
    assert poly_eval(N2_MINUS_1, 3) == 8
    assert poly_eval(N3_MINUS_N, -3) == -24
    assert poly_eval(UniPoly(()), 17) == 0


def test_variable_mismatch_refused():
    with pytest.raises(ValueError):
        poly_add(N, UniPoly.variable("X"))
    with pytest.raises(ValueError):
        poly_mul(N, UniPoly.variable("X"))


def test_floats_refused():
    with pytest.raises(TypeError):
        UniPoly([0.5])


def test_zero_degree_sentinel_is_below_integers():
    assert UniPoly(()).degree < -1
    assert UniPoly([0, 0, 0]).degree == NEG_INF
    assert UniPoly([5]).degree == 0


@pytest.mark.parametrize(
    "samples, expected",
    [
        ({1: 0, -1: 0, 3: 8, -3: 8, 5: 24}, N2_MINUS_1),
        ({7: Fraction(5, 3)}, UniPoly([Fraction(5, 3)])),
        ({1: 0, -1: 0, 3: 24, -3: -24}, N3_MINUS_N),
    ],
)
def test_interpolate_examples(samples, expected):
    assert interpolate(samples) == expected


def test_interpolate_empty_rejected():
    with pytest.raises(ValueError):
        interpolate({})


def test_sample_set_rejects_even_keys():
    with pytest.raises(DomainError):
        SampleSet({2: 1})


def test_default_nodes():
    assert default_nodes(0) == [1]
    assert default_nodes(4) == [1, -1, 3, -3, 5]


def test_sample_function_then_interpolate():
    assert interpolate(sample_function(lambda n: n**3 - n, 3)) == N3_MINUS_N


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1], [-1, 0, 1], [0, -1, 0, 1]], 3),
        ([], 0),
        ([[1, 2, 3], [1, 2, 3]], 1),
        ([[0, 0], [0]], 0),
    ],
)
def test_rank_examples(rows, expected):
    assert rank(rows) == expected


def test_str_format():
    assert str(N3_MINUS_N) == "n^3 - n"
    assert str(UniPoly([3, 0, Fraction(1, 2)])) == "1/2*n^2 + 3"
    assert str(UniPoly([1, 0, -1])) == "-n^2 + 1"
    assert str(UniPoly(())) == "0"
    assert str(UniPoly([0, Fraction(-2, 3)], "X")) == "-2/3*X"


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@given(polys(), polys())
def test_degree_of_product(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(polys(), polys(), st.integers(-20, 20))
def test_evaluation_is_a_ring_map(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys(max_degree=8), st.data())
def test_interpolate_recovers_polynomial(p, data):
    d = int(max(p.degree, 0))
    nodes = data.draw(
        st.lists(st.integers(-40, 40).map(lambda k: 2 * k + 1), min_size=d + 1, max_size=d + 1, unique=True)
    )
    s = SampleSet((k, p(k)) for k in nodes)
    q = interpolate(s)
    assert q == p
    assert all(q(k) == s[k] for k in s)


@settings(max_examples=50)
@given(st.dictionaries(st.integers(-30, 30).map(lambda k: 2 * k + 1), rationals, min_size=1, max_size=7))
def test_interpolate_matches_sympy(points):
    n = sympy.Symbol("n")
    oracle = sympy.Poly(sympy.interpolate([(k, sympy.Rational(v.numerator, v.denominator)) for k, v in points.items()], n), n)
    ours = interpolate(points)
    expected = [Fraction(int(c.p), int(c.q)) for c in reversed(oracle.all_coeffs())]
    assert ours.coeffs == UniPoly(expected).coeffs


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), max_size=5)


@settings(max_examples=60)
@given(matrices)
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(rows) == expected


@given(matrices, st.randoms(use_true_random=False), st.lists(nonzero_rationals, min_size=5, max_size=5))
def test_rank_invariant_under_permutation_and_scaling(rows, rnd, scales):
    shuffled = [list(r) for r in rows]
    rnd.shuffle(shuffled)
    scaled = [[s * x for x in r] for r, s in zip(shuffled, scales)]
    assert rank(scaled) == rank(rows)
