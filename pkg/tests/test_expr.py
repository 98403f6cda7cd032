from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from riordancf.errors import EvalError, ExprSyntaxError, ParseError
from riordancf.expr import BinOp, Num, Var, parse_expr, parse_fps, parse_ypoly
from riordancf.series import Y


def q(text, order):
    return parse_fps(text, order).tolist()


def test_ast():
    assert parse_expr("1-x") == BinOp("-", Num(Fraction(1)), Var("x"))


def test_geometric():
    assert q("1/(1-x)", 5) == [1] * 5


def test_precedence_and_power():
    assert q("1+2*x^2", 4) == [1, 0, 2, 0]
    assert q("-x^2", 3) == [0, 0, -1]


def test_fraction_literal():
    assert q("3/4", 2) == [Fraction(3, 4), 0]


def test_schroeder_with_cancelled_x():
    assert q("(1 - x - sqrt(1 - 6*x + x^2))/(2*x)", 6) == [1, 2, 6, 22, 90, 394]


def test_exp():
    assert q("exp(x)", 4) == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_y_in_series():
    assert parse_fps("1/(1-x*y)", 3).tolist() == [1, Y, Y * Y]


def test_ypoly():
    assert parse_ypoly("(y+1)^2 - 2*y") == Y * Y + 1
    assert parse_ypoly("6/3") == 2


@pytest.mark.parametrize("text,offset", [("1+", 2), ("(1-x", 4), ("2**x", 2), ("1 $ x", 2)])
def test_syntax_error_offsets(text, offset):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr(text)
    assert exc.value.offset == offset


def test_unknown_name():
    with pytest.raises(ParseError):
        parse_expr("sin(x)")


def test_eval_errors():
    with pytest.raises(EvalError):
        parse_fps("1/x", 4)
    with pytest.raises(EvalError):
        parse_ypoly("sqrt(y)")
    with pytest.raises(EvalError):
        parse_ypoly("x + 1")
    with pytest.raises(EvalError):
        parse_ypoly("1/y")


_ALPHABET = "0123456789xy+-*/^() sqrtexp"


@given(st.text(alphabet=_ALPHABET, max_size=20))
def test_fuzz_only_structured_errors(text):
    try:
        parse_fps(text, 4)
    except (ParseError, EvalError):
        pass


@given(st.sampled_from(["1/(1-x)", "(1-x)^3", "sqrt(1-4*x)", "exp(2*x)"]),
       st.integers(0, 12), st.sampled_from(list("+-*/^()$x")))
def test_fuzz_mutations(base, pos, ch):
    text = base[:pos] + ch + base[pos:]
    try:
        parse_fps(text, 4)
    except ParseError as exc:
        assert exc.offset is None or 0 <= exc.offset <= len(text)
    except EvalError:
        pass


def test_exponent_cap():
    with pytest.raises(ExprSyntaxError):
        parse_ypoly("(1+y)^99999999")
    assert parse_fps("(1+x)^256", 3).tolist() == [1, 256, 32640]
