import pytest

from colorlie.errors import ParseError
from colorlie.liealg import builtin_algebra
from colorlie.parsing import parse_expression, parse_scalar
from colorlie.scalars import Scalar
from colorlie.uea import AlgebraPresentation

P = AlgebraPresentation(builtin_algebra("abelian_plus", 2))


def test_single_word():
    assert parse_expression("y*x", P) == [(Scalar(1), [("y", 1), ("x", 1)])]


def test_square_expands_in_free_algebra():
    words = [w for _, w in parse_expression("(x + y)^2", P)]
    assert words == [[("x", 2)], [("x", 1), ("y", 1)], [("y", 1), ("x", 1)], [("y", 2)]]


def test_scalar_prefix():
    [(c, w)] = parse_expression("-1/2*q^-1*x*y", P)
    assert c == Scalar(-1) / Scalar(2) * Scalar.q(-1)
    assert w == [("x", 1), ("y", 1)]


@pytest.mark.parametrize("text, line, column", [
    ("x +", 1, 4),
    ("(x + y", 1, 7),
    ("x * w", 1, 5),
    ("x\n  + ) ", 2, 5),
    ("x^-1", 1, 4),
    ("x / y", 1, 3),
])
def test_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_expression(text, P)
    assert err.value.line == line
    assert err.value.column == column


def test_malformed_scalar():
    with pytest.raises(ParseError):
        parse_scalar("1/0")
    with pytest.raises(ParseError):
        parse_scalar("3 q")
