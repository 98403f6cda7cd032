"""Coefficient arrays of polynomial families and their moment sequences.

Two kinds of family are supported:

* orthogonal: P_n = (x - a) P_(n-1) - b P_(n-2), with the numerator
  perturbation 1 + alpha x + beta x^2 fixing P_1 and P_2.  The coefficient
  array is ((1 + alpha x + beta x^2)/(1 + a x + b x^2), x/(1 + a x + b x^2)).
* Laurent biorthogonal: P_n = (x + s) P_(n-1) - t x P_(n-2) with
  P_1 = x + s + alpha.  The array is ((1 + alpha x)/(1 - s x),
  x (1 - t x)/(1 - s x)).  ``alpha`` defaults to -2s, which makes
  P_1 = x - s.

The moments are the first column of the inverse array.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cfrac import seq, stieltjes, stieltjes_to_jacobi, thron, cf_expand
from .errors import UnsupportedParameters
from .riordan import RiordanPair, riordan_matrix
from .series import FPS, as_ypoly

__all__ = ["RecurrenceSpec", "orthogonal", "laurent_biorthogonal",
           "coefficient_array", "recurrence_polynomials", "moments",
           "lbp_moment_cfs", "lbp_moment_report"]


@dataclass(frozen=True)
class RecurrenceSpec:
    kind: str = "orthogonal"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    t: Fraction = Fraction(0)
    alpha: object = Fraction(0)
    beta: object = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("orthogonal", "laurent_biorthogonal"):
            raise ValueError(f"unknown family kind {self.kind!r}")


def orthogonal(a, b, alpha=0, beta=0):
    return RecurrenceSpec("orthogonal", a=a, b=b, alpha=alpha, beta=beta)


def laurent_biorthogonal(s, t, alpha=None):
    return RecurrenceSpec("laurent_biorthogonal", s=s, t=t,
                          alpha=-2 * s if alpha is None else alpha)


def coefficient_array(spec, order=16):
    """Riordan pair whose row n lists the coefficients of P_n."""
    if spec.kind == "orthogonal":
        den = FPS([1, spec.a, spec.b], order=order)
        return RiordanPair(FPS([1, spec.alpha, spec.beta], order=order) / den,
                           FPS.x(order) / den)
    den = FPS([1, -spec.s], order=order)
    return RiordanPair(FPS([1, spec.alpha], order=order) / den,
                       FPS([0, 1, -spec.t], order=order) / den)


def recurrence_polynomials(spec, count):
    """P_0 .. P_(count-1) by iterating the recurrence directly.

    Each polynomial is a list of coefficients, constant term first.
    """
    def add(p, q):
        n = max(len(p), len(q))
        return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]

    def scale(p, c):
        return [c * v for v in p]

    def times_x(p):
        return [0] + p

    polys = []
    for n in range(count):
        if spec.kind == "orthogonal":
            p = [as_ypoly(1)] if n == 0 else add(times_x(polys[-1]), scale(polys[-1], -spec.a))
            if n >= 2:
                p = add(p, scale(polys[-2], -spec.b))
            if n == 1:
                p = add(p, [as_ypoly(spec.alpha)])
            if n == 2:
                p = add(p, [as_ypoly(spec.beta)])
        else:
            p = [as_ypoly(1)] if n == 0 else add(times_x(polys[-1]), scale(polys[-1], spec.s))
            if n >= 2:
                p = add(p, scale(times_x(polys[-2]), -spec.t))
            if n == 1:
                p = add(p, [as_ypoly(spec.alpha)])
        polys.append([as_ypoly(c) for c in p] + [as_ypoly(0)] * (n + 1 - len(p)))
    return polys


def moments(spec, order):
    """First column of the inverse coefficient array (exact inversion)."""
    inv = riordan_matrix(coefficient_array(spec, order), order).inverse()
    return inv.column(0)


def _lbp_guesses(s, t):
    th = thron(seq(0, tail=s), seq(1, tail=t - s))
    st = stieltjes(seq(1, tail=(t, t - s)))
    return th, st, stieltjes_to_jacobi(st)


def lbp_moment_cfs(s, t, experimental=False):
    """Thron, Stieltjes and Jacobi fractions for the moments of the
    Laurent biorthogonal family (s, t) with the default alpha.

    Only (s, t) = (1, 3) is established:
    T(0, 1, 1, ...; 1, 2, 2, ...), S(1, 3, 2, 3, 2, ...) and
    J(1, 5, 5, ...; 3, 6, 6, ...).  Other parameters use the same pattern
    and require ``experimental=True``; check them with
    ``lbp_moment_report``.
    """
    if (Fraction(s), Fraction(t)) != (1, 3) and not experimental:
        raise UnsupportedParameters(
            f"moment fractions are only established for (s, t) = (1, 3), not ({s}, {t})")
    return _lbp_guesses(s, t)


def lbp_moment_report(s, t, order=10):
    """Which of the three pattern fractions reproduce the exact moments."""
    target = moments(laurent_biorthogonal(s, t), order)
    names = ("thron", "stieltjes", "jacobi")
    return {name: cf_expand(cf, order).tolist() == target
            for name, cf in zip(names, _lbp_guesses(s, t))}
