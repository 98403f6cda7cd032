"""Exponential Riordan arrays [g, f] and Jacobi fractions with growing
coefficients that generate them.

g and f are stored as ordinary series of the functions themselves, so
``fps_exp(FPS.x(8))`` is e^x with coefficients 1/n!.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cfrac import CoeffSeq, CFrac
from .errors import InsufficientOrder, InvalidF, InvalidG, NonzeroConstantInner
from .riordan import Triangle
from .series import FPS, Y, as_ypoly, YPOLY_ONE

__all__ = ["fps_exp", "ExpRiordanPair", "eriordan_matrix", "eriordan_bivariate_egf",
           "MultiplierFamily", "multiplier_jacobi", "MULTIPLIERS", "exp_revert_transform"]


def fps_exp(h):
    """exp(h) for h(0) = 0, from E' = h' E:  n E_n = sum_k k h_k E_(n-k)."""
    n = h.order
    if n == 0:
        return h
    if h[0]:
        raise NonzeroConstantInner("exp needs a series with zero constant term")
    e = [YPOLY_ONE]
    for m in range(1, n):
        acc = as_ypoly(0)
        for k in range(1, m + 1):
            if h[k] and e[m - k]:
                acc = acc + (h[k] * k) * e[m - k]
        e.append(acc / m)
    return FPS._raw(e)


@dataclass(frozen=True)
class ExpRiordanPair:
    g: FPS
    f: FPS

    def __post_init__(self):
        if self.g.order < 1 or not self.g[0]:
            raise InvalidG("g must have a nonzero constant term")
        if self.f.order < 2 or self.f[0] or not self.f[1]:
            raise InvalidF("f needs f(0) = 0 and a nonzero x^1 coefficient")

    @property
    def order(self):
        return min(self.g.order, self.f.order)


def eriordan_matrix(e, order):
    """Entry (n, k) = n!/k! [x^n] g f^k."""
    if e.order < order:
        raise InsufficientOrder(f"pair is only known to order {e.order}")
    g, f = e.g.truncate(order), e.f.truncate(order)
    rows = [[] for _ in range(order)]
    col = g
    for k in range(order):
        for n in range(k, order):
            rows[n].append(col[n] * Fraction(factorial(n), factorial(k)))
        col = col * f
    return Triangle(tuple(tuple(r) for r in rows))


def eriordan_bivariate_egf(e, order=None):
    """g(x) e^(y f(x)); entry (n, k) of the array is n! [x^n][y^k] of this."""
    n = e.order if order is None else order
    return e.g.truncate(n) * fps_exp(Y * e.f.truncate(n))


MULTIPLIERS = {
    "squares": lambda n: n * n,
    "triangulars": lambda n: n * (n + 1) // 2,
    "naturals": lambda n: n,
}


@dataclass(frozen=True)
class MultiplierFamily:
    """J(a0, a0 + s, a0 + 2s, ...; base*m(1), base*m(2), ...)."""

    a0: object = Y + 2
    a_step: Fraction = Fraction(3)
    b_base: Fraction = Fraction(2)
    mults: object = "squares"

    def multiplier(self, n):
        if isinstance(self.mults, str):
            return MULTIPLIERS[self.mults](n)
        if n - 1 >= len(self.mults):
            raise IndexError(f"only {len(self.mults)} explicit multipliers given")
        return self.mults[n - 1]


def multiplier_jacobi(m):
    a0 = as_ypoly(m.a0)
    label = m.mults if isinstance(m.mults, str) else "explicit"
    alpha = CoeffSeq((), rule=lambda i: a0 + i * m.a_step, label=f"{a0} + {m.a_step}*i")
    beta = CoeffSeq((), rule=lambda i: m.b_base * m.multiplier(i + 1),
                    label=f"{m.b_base}*{label}(i+1)")
    return CFrac("jacobi", alpha, beta)


def exp_revert_transform(terms):
    """b with EGF B such that the antiderivative of B reverts that of A.

    Applying it twice gives back the input.  Needs terms[0] != 0.
    """
    n = len(terms)
    integral = FPS([0] + [Fraction(t) / factorial(i + 1) for i, t in enumerate(terms)],
                   order=n + 1)
    rev = integral.reversion()
    return [rev[i + 1].to_fraction() * factorial(i + 1) for i in range(n)]
