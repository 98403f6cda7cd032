"""Stieltjes, Jacobi and Thron continued fractions.

Notation used throughout (coefficients are YPoly values)::

    stieltjes  S(al1, al2, ...)        1/(1 - al1 x/(1 - al2 x/(1 - ...)))
    jacobi     J(a0, a1, ...; b1, b2, ...)
                                       1/(1 - a0 x - b1 x^2/(1 - a1 x - ...))
    thron      T(a0, a1, ...; b1, b2, ...)
                                       1/(1 - a0 x - b1 x/(1 - a1 x - ...))

A coefficient sequence is a finite prefix followed by a periodic tail
(``CoeffSeq``), or a prefix followed by an index rule for the growing
families of exponential arrays.  In a ``CFrac`` the field ``alpha`` holds
the Stieltjes numerators or the Jacobi/Thron linear coefficients, and
``beta`` the Jacobi/Thron numerators, both indexed from 0.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional

from .errors import NotRiordan, WrongKind
from .riordan import riordan_from_bivariate
from .series import FPS, Y, as_ypoly, YPOLY_ZERO

__all__ = ["CoeffSeq", "seq", "CFrac", "stieltjes", "jacobi", "thron",
           "cf_expand", "stieltjes_to_jacobi", "thron_level0",
           "thron_to_jacobi_level0", "jacobi_level0", "jfrac_level0_to_riordan",
           "cfrac_to_riordan", "predicted_inverse_jfrac",
           "rational_riordan_inverse_jfrac", "involution_cfrac", "involution_gf"]

KINDS = ("stieltjes", "jacobi", "thron")


def _canonical(prefix, period):
    p = len(period)
    for d in range(1, p + 1):
        if p % d == 0 and all(period[i] == period[i % d] for i in range(p)):
            period = period[:d]
            break
    while prefix and prefix[-1] == period[-1]:
        period = (prefix[-1],) + period[:-1]
        prefix = prefix[:-1]
    return prefix, period


@dataclass(frozen=True)
class CoeffSeq:
    """Prefix plus periodic tail, or prefix plus ``rule(i)`` beyond it."""

    prefix: tuple = ()
    period: tuple = (YPOLY_ZERO,)
    rule: Optional[Callable] = field(default=None, compare=False)
    label: Optional[str] = None

    def __post_init__(self):
        prefix = tuple(as_ypoly(c) for c in self.prefix)
        period = tuple(as_ypoly(c) for c in self.period)
        if not period:
            raise ValueError("period must be non-empty")
        if self.rule is None:
            prefix, period = _canonical(prefix, period)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    def __getitem__(self, i):
        if i < 0:
            raise IndexError(i)
        if i < len(self.prefix):
            return self.prefix[i]
        if self.rule is not None:
            return as_ypoly(self.rule(i))
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def head(self, n):
        return [self[i] for i in range(n)]

    @property
    def is_periodic(self):
        return self.rule is None

    def map(self, fn):
        if self.rule is not None:
            rule = self.rule
            return CoeffSeq(tuple(fn(c) for c in self.prefix), rule=lambda i: fn(as_ypoly(rule(i))),
                            label=self.label)
        return CoeffSeq(tuple(fn(c) for c in self.prefix), tuple(fn(c) for c in self.period))

    def __str__(self):
        items = [str(c) for c in self.prefix]
        if self.rule is not None:
            items.append(self.label or "<rule>")
        else:
            items += [str(c) for c in self.period] + ["..."]
        return ", ".join(items)


def seq(*prefix, tail=0):
    """``seq(Y + 2, tail=3)`` is y+2, 3, 3, ...; a tuple tail repeats."""
    period = tuple(tail) if isinstance(tail, (tuple, list)) else (tail,)
    return CoeffSeq(tuple(prefix), period)


def _as_seq(v):
    if isinstance(v, CoeffSeq):
        return v
    if isinstance(v, (tuple, list)):
        return seq(*v[:-1], tail=v[-1]) if v else seq()
    return seq(tail=v)


@dataclass(frozen=True)
class CFrac:
    kind: str
    alpha: CoeffSeq
    beta: Optional[CoeffSeq] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown continued fraction kind {self.kind!r}")
        if (self.kind == "stieltjes") != (self.beta is None):
            raise ValueError(f"{self.kind} fraction takes {'one' if self.kind == 'stieltjes' else 'two'} sequences")

    def map(self, fn):
        return CFrac(self.kind, self.alpha.map(fn),
                     None if self.beta is None else self.beta.map(fn))

    def subs_y(self, value):
        return self.map(lambda c: as_ypoly(c(value)))

    def max_y_degree(self, depth):
        seqs = [self.alpha] + ([self.beta] if self.beta is not None else [])
        return max(c.degree for s in seqs for c in s.head(depth))

    def is_affine_in_y(self, depth=16):
        return self.max_y_degree(depth) <= 1

    def __str__(self):
        tag = self.kind[0].upper()
        if self.beta is None:
            return f"{tag}({self.alpha})"
        return f"{tag}({self.alpha}; {self.beta})"


def stieltjes(alpha):
    return CFrac("stieltjes", _as_seq(alpha))


def jacobi(a, b):
    return CFrac("jacobi", _as_seq(a), _as_seq(b))


def thron(a, b):
    return CFrac("thron", _as_seq(a), _as_seq(b))


def cf_expand(c, order, depth=None, y_value=None, y_as_x=False):
    """Series of the continued fraction, exact below x**order.

    The fraction is cut off after ``depth`` levels (default ``order``);
    every level contributes at least one factor x, so deeper levels
    cannot reach the returned coefficients.  With ``y_as_x`` each
    coefficient c(y) is read as the polynomial c(x) before expanding,
    which gives G(x, x).
    """
    depth = order if depth is None else depth
    x = FPS.x(order)

    def coef(p):
        if y_as_x:
            return FPS(p.coeffs, order=order)
        if y_value is not None:
            return as_ypoly(p(y_value))
        return p

    step = x * x if c.kind == "jacobi" else x
    inner = FPS.one(order)
    for level in reversed(range(depth)):
        if c.kind == "stieltjes":
            denom = 1 - coef(c.alpha[level]) * x * inner
        else:
            denom = 1 - coef(c.alpha[level]) * x - coef(c.beta[level]) * step * inner
        inner = 1 / denom
    return inner


def stieltjes_to_jacobi(c):
    """Even contraction: a0 = al1, a_i = al_2i + al_2i+1, b_i = al_2i-1 al_2i."""
    if c.kind != "stieltjes":
        raise WrongKind(f"expected a stieltjes fraction, got {c.kind}")
    al = c.alpha

    def a_at(i):
        return al[0] if i == 0 else al[2 * i - 1] + al[2 * i]

    def b_at(i):
        return al[2 * i] * al[2 * i + 1]

    if not al.is_periodic:
        return jacobi(CoeffSeq((), rule=a_at, label="contracted"),
                      CoeffSeq((), rule=b_at, label="contracted"))
    # periodic in i once 2i passes the prefix; period halves when even
    p = len(al.period)
    t = p // gcd(p, 2)
    start = len(al.prefix) // 2 + 1
    a = CoeffSeq(tuple(a_at(i) for i in range(start)),
                 tuple(a_at(i) for i in range(start, start + t)))
    b = CoeffSeq(tuple(b_at(i) for i in range(start)),
                 tuple(b_at(i) for i in range(start, start + t)))
    return CFrac("jacobi", a, b)


def thron_level0(a, b, c, d, u, v):
    """T(a y + b, u, u, ...; c y + d, v, v, ...)."""
    return thron(seq(a * Y + b, tail=u), seq(c * Y + d, tail=v))


def thron_to_jacobi_level0(a, b, c, d, u, v):
    """Jacobi fraction with the same expansion as ``thron_level0``."""
    return jacobi(seq(b + d + (a + c) * Y, tail=u + 2 * v),
                  seq((u + v) * (d + c * Y), tail=v * (u + v)))


def jacobi_level0(a0, b1, u, v):
    """J(a0, u, u, ...; b1, v, v, ...) with YPoly level-0 coefficients."""
    return jacobi(seq(as_ypoly(a0), tail=u), seq(as_ypoly(b1), tail=v))


def cfrac_to_riordan(c, order=16):
    """Expand and read off (g, f); raises NotRiordan if the check fails."""
    fit = riordan_from_bivariate(cf_expand(c, order))
    if not fit.is_riordan:
        raise NotRiordan(f"{c} is not the generating function of a Riordan array "
                         f"(checked to order {order})")
    return fit.pair


def jfrac_level0_to_riordan(a0, b1, u, v, order=16):
    """Riordan pair whose bivariate GF is J(a0, u, ...; b1, v, ...).

    ``jfrac_level0_to_riordan(Y + a, Y + b, c, d)`` is the one-parameter
    family; ``a0 = a + b*Y, b1 = c + d*Y`` the affine generalisation.
    """
    return cfrac_to_riordan(jacobi_level0(a0, b1, u, v), order)


def predicted_inverse_jfrac(a, b, c, d):
    """Fraction claimed for the inverse of the array of J(y+a, c..; y+b, d..)."""
    return jacobi(seq(Y - a, tail=c - a - 2), seq(a - b - Y, tail=1 + a - b - c + d))


def rational_riordan_inverse_jfrac(a, b, c):
    """Fraction claimed for ((1+cx)/(1+ax+bx^2), x/(1+ax+bx^2))^-1."""
    return jacobi(seq(Y + a - c, tail=a), seq(c * Y + b, tail=b))


def involution_cfrac(a, b):
    """J(2a - 2 - y, a, ...; a - 1 - y, b, ...)."""
    return jacobi(seq(2 * a - 2 - Y, tail=a), seq(a - 1 - Y, tail=b))


def involution_gf(a, b, order=16):
    c = involution_cfrac(a, b)
    return cfrac_to_riordan(c, order), c
