from fractions import Fraction

import pytest
from hypothesis import given

from torus_invariants.curve_ring import ONE, X, Y, CurveElement
from torus_invariants.exact_poly import UniPoly
from torus_invariants.expressions import (
    Add,
    Const,
    ExpressionSyntaxError,
    MixedVariableError,
    Neg,
    Pow,
    Var,
    parse_expression,
    to_curve,
    to_poly,
    variables,
)

from .conftest import curve_elements, polys


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Y^2", X**3 + X**2),
        ("X*Y + 1", X * Y + 1),
        ("(1 + Y)*(1 - Y)", ONE - X**3 - X**2),
        ("3/4*X", Fraction(3, 4) * X),
        ("-Y", -Y),
        ("  X ^ 2  ", X**2),
        ("7", CurveElement(7)),
    ],
)
def test_to_curve_examples(text, expected):
    assert to_curve(text) == expected


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("n^3 - n", (0, -1, 0, 1)),
        ("(n^2 - 1)^2", (1, 0, -2, 0, 1)),
        ("-n^2", (0, 0, -1)),
        ("2*-n", (0, -2)),
        ("n - -n", (0, 2)),
        ("1/2*n^2 + 3", (3, 0, Fraction(1, 2))),
    ],
)
def test_to_poly_examples(text, coeffs):
    assert to_poly(text) == UniPoly(coeffs)


def test_power_binds_tighter_than_negation():
    assert parse_expression("-n^2") == Neg(Pow(Var("n"), 2))
    assert parse_expression("(-n)^2") == Pow(Neg(Var("n")), 2)


def test_ast_shape():
    assert parse_expression("X + 1") == Add(Var("X"), Const(Fraction(1)))
    assert variables(parse_expression("X*Y + 2")) == {"X", "Y"}
    assert variables(parse_expression("5")) == set()


@pytest.mark.parametrize(
    "text, column",
    [
        ("X ++", 4),
        ("", 1),
        ("X +", 4),
        ("(X", 3),
        ("X ^ Y", 5),
        ("1/0", 3),
        ("Z", 1),
        ("X Y", 3),
    ],
)
def test_syntax_errors_report_column(text, column):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(text)
    assert info.value.column == column
    assert str(info.value).startswith(f"column {column}: ")


def test_mixed_variables():
    with pytest.raises(MixedVariableError):
        parse_expression("X + n")
    with pytest.raises(MixedVariableError):
        to_curve("n^2")
    with pytest.raises(MixedVariableError):
        to_poly("Y")


@given(curve_elements(max_degree=5))
def test_curve_element_print_parse_round_trip(a):
    assert to_curve(str(a)) == a


@given(polys("n", max_degree=8))
def test_poly_print_parse_round_trip(p):
    assert to_poly(str(p)) == p
