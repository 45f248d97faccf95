"""Recursive-descent parser for polynomial expressions in X, Y or n.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | atom ('^' uint)?
    atom     := rational | 'X' | 'Y' | 'n' | '(' expr ')'
    rational := uint ('/' uint)?

Unary minus binds looser than ``^``, so ``-n^2`` is ``-(n^2)``.  One
expression may use X and Y, or n, but not both families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curve_ring import CurveElement, X, Y
from .exact_poly import UniPoly

__all__ = [
    "ExpressionSyntaxError",
    "MixedVariableError",
    "Const",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Pow",
    "Neg",
    "Expression",
    "parse_expression",
    "variables",
    "to_curve",
    "to_poly",
]


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"column {column}: {message}")


class MixedVariableError(ValueError):
    pass


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Sub:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Mul:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


Expression = Union[Const, Var, Add, Sub, Mul, Pow, Neg]

_VARIABLES = {"X", "Y", "n"}


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def _error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.pos + 1)

    def _uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self._error("expected an integer")
        return int(self.src[start:self.pos])

    def parse(self) -> Expression:
        if not self.src.strip():
            raise ExpressionSyntaxError("empty expression", 1)
        node = self.expr()
        if self._peek():
            raise self._error(f"unexpected {self._peek()!r}")
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self._peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expression:
        node = self.factor()
        while self._peek() == "*":
            self.pos += 1
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expression:
        if self._peek() == "-":
            self.pos += 1
            return Neg(self.factor())
        node = self.atom()
        if self._peek() == "^":
            self.pos += 1
            node = Pow(node, self._uint())
        return node

    def atom(self) -> Expression:
        ch = self._peek()
        if not ch:
            raise self._error("unexpected end of input")
        if ch.isdigit():
            num = self._uint()
            if self._peek() == "/":
                self.pos += 1
                self._skip()
                column = self.pos + 1
                den = self._uint()
                if den == 0:
                    raise ExpressionSyntaxError("zero denominator", column)
                return Const(Fraction(num, den))
            return Const(Fraction(num))
        if ch in _VARIABLES:
            self.pos += 1
            return Var(ch)
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self._peek() != ")":
                raise self._error("expected ')'")
            self.pos += 1
            return node
        raise self._error(f"unexpected {ch!r}")


def variables(node: Expression) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Const):
        return set()
    if isinstance(node, (Add, Sub, Mul)):
        return variables(node.left) | variables(node.right)
    if isinstance(node, Pow):
        return variables(node.base)
    return variables(node.operand)


def parse_expression(src: str) -> Expression:
    """Parse ``src``; raises ExpressionSyntaxError or MixedVariableError."""
    node = _Parser(src).parse()
    names = variables(node)
    if "n" in names and names & {"X", "Y"}:
        raise MixedVariableError("an expression uses either X and Y or n, not both")
    return node


def _evaluate(node: Expression, leaf):
    if isinstance(node, Const):
        return leaf(None, node.value)
    if isinstance(node, Var):
        return leaf(node.name, None)
    if isinstance(node, Add):
        return _evaluate(node.left, leaf) + _evaluate(node.right, leaf)
    if isinstance(node, Sub):
        return _evaluate(node.left, leaf) - _evaluate(node.right, leaf)
    if isinstance(node, Mul):
        return _evaluate(node.left, leaf) * _evaluate(node.right, leaf)
    if isinstance(node, Pow):
        return _evaluate(node.base, leaf) ** node.exponent
    return -_evaluate(node.operand, leaf)


def to_curve(node: Expression | str) -> CurveElement:
    """Evaluate an X, Y expression to its normal form."""
    if isinstance(node, str):
        node = parse_expression(node)
    if "n" in variables(node):
        raise MixedVariableError("expected an expression in X and Y, got one in n")

    def leaf(name, value):
        if name is None:
            return CurveElement(value)
        return X if name == "X" else Y

    return _evaluate(node, leaf)


def to_poly(node: Expression | str) -> UniPoly:
    """Evaluate an expression in n to a polynomial."""
    if isinstance(node, str):
        node = parse_expression(node)
    if variables(node) & {"X", "Y"}:
        raise MixedVariableError("expected an expression in n, got one in X and Y")

    def leaf(name, value):
        if name is None:
            return UniPoly.constant(value)
        return UniPoly.variable("n")

    return _evaluate(node, leaf)
