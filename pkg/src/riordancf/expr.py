"""Arithmetic expressions in x and y, evaluated as truncated series.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' uint)?
    atom   := number | 'x' | 'y' | '(' expr ')' | 'sqrt' '(' expr ')' | 'exp' '(' expr ')'

Numbers are non-negative integers; write 3/4 for a fraction.  Exponents
are capped at MAX_EXPONENT.  Division by
a series that vanishes at 0 is allowed when the numerator vanishes to at
least the same order, as in (1 - x - sqrt(1 - 6*x + x^2))/(2*x).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import EvalError, ExprSyntaxError, PreconditionError
from .series import FPS, Y, YPoly, as_ypoly

__all__ = ["Num", "Var", "BinOp", "Neg", "Pow", "Call", "parse_expr",
           "eval_fps", "eval_ypoly", "parse_fps", "parse_ypoly"]

MAX_EXPONENT = 256

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace is left
            break
        start = m.start(m.lastindex)
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", num, start))
        elif name is not None:
            if name not in ("x", "y", "sqrt", "exp"):
                raise ExprSyntaxError(f"unknown name {name!r}", start)
            tokens.append(("name", name, start))
        elif sym in "+-*/^()":
            tokens.append(("sym", sym, start))
        else:
            raise ExprSyntaxError(f"unexpected character {sym!r}", start)
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val, pos = self.take()
        if kind != "sym" or val != sym:
            raise ExprSyntaxError(f"expected {sym!r}, found {val or 'end of input'!r}", pos)

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[:2] in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            inner = self.factor()
            return Neg(inner) if val == "-" else inner
        node = self.atom()
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ExprSyntaxError("exponent must be a non-negative integer", pos)
            if int(val) > MAX_EXPONENT:
                raise ExprSyntaxError(f"exponent larger than {MAX_EXPONENT}", pos)
            node = Pow(node, int(val))
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(Fraction(int(val)))
        if kind == "name":
            if val in ("x", "y"):
                return Var(val)
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Call(val, arg)
        if kind == "sym" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text):
    """Parse text into an AST; raises ExprSyntaxError with the offset."""
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {val!r}", pos)
    return node


def _eval(node, order, exp_fn):
    if isinstance(node, Num):
        return FPS.constant(node.value, order)
    if isinstance(node, Var):
        return FPS.x(order) if node.name == "x" else FPS.constant(Y, order)
    if isinstance(node, Neg):
        return -_eval(node.operand, order, exp_fn)
    if isinstance(node, Pow):
        return _eval(node.base, order, exp_fn) ** node.exponent
    if isinstance(node, Call):
        arg = _eval(node.arg, order, exp_fn)
        return arg.sqrt() if node.func == "sqrt" else exp_fn(arg)
    left = _eval(node.left, order, exp_fn)
    right = _eval(node.right, order, exp_fn)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    v = right.valuation()
    if v >= right.order:
        raise EvalError("division by a series that is zero to the working order")
    if v:
        if left.valuation() < v:
            raise EvalError(f"numerator is not divisible by x^{v}")
        left, right = left.shift_down(v), right.shift_down(v)
    return left / right


def eval_fps(node, order):
    """Evaluate to a series known exactly below x**order."""
    from .eriordan import fps_exp

    work = order
    for _ in range(8):
        try:
            result = _eval(node, work, fps_exp)
        except EvalError:
            raise
        except PreconditionError as exc:
            raise EvalError(str(exc)) from exc
        if result.order >= order:
            return result.truncate(order)
        # each division by x^v costs v orders; retry with that much slack
        work += order - result.order
    raise EvalError("could not reach the requested order")


def eval_ypoly(node):
    """Evaluate an expression in y alone to a polynomial."""
    if isinstance(node, Num):
        return as_ypoly(node.value)
    if isinstance(node, Var):
        if node.name != "y":
            raise EvalError("coefficient expressions may only use y")
        return Y
    if isinstance(node, Neg):
        return -eval_ypoly(node.operand)
    if isinstance(node, Pow):
        return eval_ypoly(node.base) ** node.exponent
    if isinstance(node, Call):
        raise EvalError(f"{node.func}() is not allowed in a coefficient")
    left, right = eval_ypoly(node.left), eval_ypoly(node.right)
    if node.op == "/":
        try:
            return left / right
        except PreconditionError as exc:
            raise EvalError(str(exc)) from exc
    return {"+": YPoly.__add__, "-": YPoly.__sub__, "*": YPoly.__mul__}[node.op](left, right)


def parse_fps(text, order):
    return eval_fps(parse_expr(text), order)


def parse_ypoly(text):
    return eval_ypoly(parse_expr(text))
