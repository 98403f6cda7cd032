"""Exact coefficient arithmetic.

``YPoly`` is a dense polynomial in the marker variable ``y`` with
``Fraction`` coefficients.  ``FPS`` is a truncated power series in ``x``
whose coefficients are ``YPoly`` values (a rational number is just a
constant ``YPoly``).  An ``FPS`` of order N knows its coefficients of
x^0 .. x^(N-1) exactly and nothing beyond; every operation returns the
largest order it can justify.

Both types are immutable.
"""

from fractions import Fraction
from numbers import Rational

from .errors import (
    BadConstantTerm,
    DivisionByNonUnit,
    InsufficientOrder,
    NonzeroConstantInner,
    NotReversible,
)

__all__ = ["YPoly", "FPS", "Y", "as_ypoly", "fps_arith", "fps_compose",
           "fps_reversion", "fps_sqrt", "fps_derivative", "ypoly_substitute"]

_ZERO = Fraction(0)


def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class YPoly:
    """Polynomial in y over the rationals; ``coeffs[i]`` multiplies y**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Rational)):
            coeffs = (coeffs,)
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    # -- predicates and accessors -----------------------------------------
    @property
    def degree(self):
        """Degree in y; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else _ZERO

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        """Evaluate at ``value`` (a number, YPoly or FPS) by Horner's rule."""
        if not self.coeffs:
            return _ZERO
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} depends on y")
        return self.constant_term()

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return YPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return YPOLY_ZERO
            return YPoly._raw([c * other for c in self.coeffs])
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return YPOLY_ZERO
        if len(a) == 1:
            return YPoly._raw([a[0] * c for c in b])
        if len(b) == 1:
            return YPoly._raw([c * b[0] for c in a])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return YPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational (or constant YPoly) only."""
        if isinstance(other, YPoly):
            if not other.is_constant():
                raise DivisionByNonUnit(f"cannot divide by non-constant {other}")
            other = other.constant_term()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        if other == 0:
            raise DivisionByNonUnit("division by zero")
        inv = 1 / Fraction(other)
        return YPoly._raw([c * inv for c in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = YPOLY_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(self.coeffs)

    # -- text --------------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if i == 0:
                body = str(mag)
            else:
                mono = "y" if i == 1 else f"y^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"YPoly('{self}')"


YPOLY_ZERO = YPoly._raw(())
YPOLY_ONE = YPoly._raw((Fraction(1),))
Y = YPoly._raw((_ZERO, Fraction(1)))


def _coerce(v):
    if isinstance(v, YPoly):
        return v
    if isinstance(v, (int, Rational)):
        return YPoly._raw((Fraction(v),))
    return NotImplemented


def as_ypoly(v):
    """Convert an int, Fraction or YPoly to a YPoly."""
    p = _coerce(v)
    if p is NotImplemented:
        raise TypeError(f"cannot use {type(v).__name__} as a coefficient")
    return p


def _unit_inverse(c, what="series"):
    """Inverse of a coefficient that must be a nonzero rational constant."""
    if not c.is_constant() or not c:
        raise DivisionByNonUnit(
            f"constant term {c} of the {what} is not a nonzero rational")
    return 1 / c.constant_term()


class FPS:
    """Truncated power series in x with YPoly coefficients.

    ``FPS([1, 2, 3])`` has order 3; ``FPS([1, 1], order=5)`` is the
    polynomial 1 + x known to order 5.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(), order=None):
        cs = [as_ypoly(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[:order] + [YPOLY_ZERO] * (order - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        s = object.__new__(cls)
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def constant(cls, c, order):
        return cls([c], order=order)

    @classmethod
    def one(cls, order):
        return cls([1], order=order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order=order)

    @classmethod
    def polynomial(cls, coeffs, order):
        """Exact polynomial, trusted to the requested order."""
        return cls(coeffs, order=order)

    # -- accessors ---------------------------------------------------------
    @property
    def order(self):
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return list(self.coeffs[n])
        if not 0 <= n < len(self.coeffs):
            raise InsufficientOrder(f"x^{n} is beyond order {self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def tolist(self):
        return list(self.coeffs)

    def rationals(self):
        """Coefficients as Fractions; fails if any depends on y."""
        return [c.to_fraction() for c in self.coeffs]

    def is_rational(self):
        return all(c.is_constant() for c in self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient (order if none)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order

    def truncate(self, n):
        return FPS._raw(self.coeffs[:n])

    def _pad(self, n):
        # internal: claim order n by appending zeros
        return FPS._raw(self.coeffs + (YPOLY_ZERO,) * (n - self.order))

    def shift_down(self, v):
        """Divide by x**v; the first v coefficients must vanish."""
        if any(self.coeffs[:v]) or v > self.order:
            raise DivisionByNonUnit(f"series is not divisible by x^{v}")
        return FPS._raw(self.coeffs[v:])

    def shift_up(self, v):
        """Multiply by x**v (raises the order by v)."""
        return FPS._raw((YPOLY_ZERO,) * v + self.coeffs)

    def equals(self, other, n=None):
        """Coefficientwise equality below x**n (default: common order)."""
        m = min(self.order, other.order) if n is None else n
        if n is not None and (self.order < n or other.order < n):
            raise InsufficientOrder(f"cannot compare to order {n}")
        return self.coeffs[:m] == other.coeffs[:m]

    def __eq__(self, other):
        if not isinstance(other, FPS):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, FPS):
            n = min(self.order, other.order)
            return FPS._raw([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])
        other = _coerce(other)
        if other is NotImplemented or self.order == 0:
            return other if other is NotImplemented else self
        return FPS._raw((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return FPS._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, FPS):
            return self + (-other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FPS):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = [YPOLY_ZERO] * n
            for i in range(n):
                ai = a[i]
                if not ai:
                    continue
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
            return FPS._raw(out)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return FPS._raw([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FPS):
            return _divide(self, other)
        if isinstance(other, (int, Rational, YPoly)):
            inv = _unit_inverse(as_ypoly(other), "divisor")
            return FPS._raw([c * inv for c in self.coeffs])
        return NotImplemented

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _divide(FPS._raw([other]).pad_to(self.order), self)

    def pad_to(self, n):
        """Exact polynomial (this series) extended with zeros to order n."""
        return self._pad(n) if n > self.order else self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = FPS.one(self.order), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- analytic operations ----------------------------------------------
    def compose(self, inner):
        """self(inner(x)); inner must have zero constant term."""
        if inner.order and inner.coeffs[0]:
            raise NonzeroConstantInner(
                f"inner series has constant term {inner.coeffs[0]}")
        n = min(self.order, inner.order)
        if n == 0:
            return FPS._raw(())
        inner = inner.truncate(n)
        acc = FPS([self.coeffs[n - 1]], order=n)
        for c in reversed(self.coeffs[:n - 1]):
            acc = acc * inner + c
        return acc

    def derivative(self):
        """Termwise derivative; order drops by one."""
        return FPS._raw([c * k for k, c in enumerate(self.coeffs) if k > 0])

    def reversion(self):
        """Compositional inverse by Newton iteration, same order."""
        n = self.order
        if n < 2 or self.coeffs[0]:
            raise NotReversible("need f(0) = 0 and a known x^1 coefficient")
        f1 = self.coeffs[1]
        if not f1 or not f1.is_constant():
            raise NotReversible(f"x^1 coefficient {f1} is not a nonzero rational")
        g = FPS._raw([YPOLY_ZERO, YPoly._raw([1 / f1.constant_term()])])
        df = self.derivative()
        p = 2
        while p < n:
            q = min(2 * p, n)
            gq = g._pad(q)
            err = self.truncate(q).compose(gq) - FPS.x(q)
            slope = df.truncate(q - p).compose(gq.truncate(q - p))
            g = gq - (err.shift_down(p) / slope).shift_up(p)
            p = q
        return g.truncate(n)

    def sqrt(self):
        """Square root with constant term 1; requires self(0) == 1."""
        n = self.order
        if n == 0:
            return self
        if self.coeffs[0] != 1:
            raise BadConstantTerm(f"sqrt needs constant term 1, got {self.coeffs[0]}")
        a = self.coeffs
        s = [YPOLY_ONE]
        half = Fraction(1, 2)
        for m in range(1, n):
            acc = a[m]
            for k in range(1, m):
                if s[k] and s[m - k]:
                    acc = acc - s[k] * s[m - k]
            s.append(acc * half)
        return FPS._raw(s)

    def subs_y(self, value):
        """Evaluate every coefficient at y = value (a rational)."""
        return FPS._raw([as_ypoly(c(value)) for c in self.coeffs])

    def y_as_x(self):
        """G(x, x): fold the y-degree into the x-degree (same order)."""
        n = self.order
        out = [_ZERO] * n
        for i, c in enumerate(self.coeffs):
            for k, ck in enumerate(c.coeffs):
                if i + k < n:
                    out[i + k] += ck
        return FPS._raw([YPoly._raw([c]) for c in out])

    def coefficient(self, n, k=0):
        """[x^n][y^k]."""
        return self[n][k]

    def __repr__(self):
        body = ", ".join(str(c) if c.is_constant() else f"({c})" for c in self.coeffs)
        return f"FPS([{body}])"


def _divide(a, b):
    n = min(a.order, b.order)
    if n == 0:
        return FPS._raw(())
    inv = _unit_inverse(b.coeffs[0], "divisor")
    bc, ac = b.coeffs, a.coeffs
    q = []
    for m in range(n):
        acc = ac[m]
        for k in range(1, m + 1):
            if bc[k] and q[m - k]:
                acc = acc - bc[k] * q[m - k]
        q.append(acc * inv)
    return FPS._raw(q)


# Functional spellings of the operations above.

def fps_arith(op, a, b):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two series."""
    try:
        fn = {"add": FPS.__add__, "sub": FPS.__sub__,
              "mul": FPS.__mul__, "div": FPS.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def fps_compose(a, b):
    return a.compose(b)


def fps_reversion(f):
    return f.reversion()


def fps_sqrt(a):
    return a.sqrt()


def fps_derivative(a):
    return a.derivative()


def ypoly_substitute(a, value):
    return a.subs_y(value)
