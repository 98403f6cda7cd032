"""Named number triangles (mostly non-Riordan) and sequence transforms.

The Narayana family is built from the binomial closed form; continued
fractions appear here only as descriptions to be checked against it.
"""

from math import comb
from typing import NamedTuple

from .cfrac import jacobi, seq, stieltjes, thron
from .errors import UnknownName
from .riordan import RiordanPair, Triangle, riordan_matrix
from .series import FPS, Y

__all__ = ["TRIANGLE_NAMES", "named_triangle", "triangle_mul", "triangle_inv",
           "narayana", "NarayanaSuite", "narayana_cf_suite", "narayana_thron_variants",
           "binomial_transform", "large_schroeder", "schroeder_alternating_transform"]

MAX_TRIANGLE_ORDER = 64


def narayana(n, k):
    """N(n, k) = C(n, k) C(n + 1, k) / (k + 1)."""
    return comb(n, k) * comb(n + 1, k) // (k + 1)


def _pair_triangle(g_num, g_den, f_num, f_den, order, inverse=False):
    x = lambda cs: FPS(cs, order=order)  # noqa: E731
    pair = RiordanPair(x(g_num) / x(g_den), x(f_num) / x(f_den))
    return riordan_matrix(pair.inverse() if inverse else pair, order)


def _binomial(order):
    return Triangle.from_function(order, comb)


def _narayana(order):
    return Triangle.from_function(order, narayana)


def _named(name, order):
    if name == "binomial":
        return _binomial(order)
    if name == "narayana":
        return _narayana(order)
    if name == "narayana_shifted":
        return Triangle.from_function(
            order, lambda n, k: int(n == 0) if k == 0 else narayana(n - 1, k - 1))
    if name == "nb_product":
        return _narayana(order) @ _binomial(order)
    if name == "nb_conjugate":
        b = _binomial(order)
        return b.inverse() @ (_narayana(order) @ b)
    if name == "little_q_schroeder":
        nb = _named("nb_product", order)
        return Triangle.from_function(
            order, lambda n, k: int(k == 0) if n == 0 else nb[n - 1, k])
    if name == "delannoy_signed":
        return _pair_triangle([1], [1, 1], [0, 1, -1], [1, 1], order)
    if name == "schroeder_peaks":
        return _pair_triangle([1, -2], [1, -1], [0, 1, -2], [1, -1], order, inverse=True)
    raise UnknownName(f"unknown triangle {name!r}; choose from {', '.join(TRIANGLE_NAMES)}")


TRIANGLE_NAMES = ("binomial", "narayana", "narayana_shifted", "nb_product",
                  "nb_conjugate", "little_q_schroeder", "delannoy_signed",
                  "schroeder_peaks")


def named_triangle(name, order):
    if not 0 <= order <= MAX_TRIANGLE_ORDER:
        raise ValueError(f"order must be between 0 and {MAX_TRIANGLE_ORDER}")
    t = _named(name, order)
    return Triangle(t.rows, name)


def triangle_mul(t1, t2):
    return t1 @ t2


def triangle_inv(t):
    return t.inverse()


class NarayanaSuite(NamedTuple):
    jacobi: object
    thron: object
    shifted: object
    nb_jacobi: object
    nb_thron: object
    little_q: tuple
    conjugate_jacobi: object


def narayana_cf_suite():
    """Continued fractions for the Narayana triangle and its relatives.

    ``little_q`` holds the Stieltjes, Thron and Jacobi forms of the little
    q-Schroeder triangle.
    """
    return NarayanaSuite(
        jacobi=jacobi(seq(tail=Y + 1), seq(tail=Y)),
        thron=narayana_thron_variants()["constant_y_minus_1"],
        shifted=thron(seq(0, tail=1 - Y), seq(tail=Y)),
        nb_jacobi=jacobi(seq(tail=Y + 2), seq(tail=Y + 1)),
        nb_thron=thron(seq(1, tail=-Y), seq(tail=Y + 1)),
        little_q=(stieltjes(seq(tail=(1, Y + 1))),
                  thron(seq(0, tail=Y), seq(tail=1)),
                  jacobi(seq(1, tail=Y + 2), seq(tail=Y + 1))),
        conjugate_jacobi=jacobi(seq(tail=Y + 1), seq(tail=Y + 1)),
    )


def narayana_thron_variants():
    """Readings of the Narayana Thron fraction's horizontal coefficients.

    The fraction is 1/(1 - x - yx/(1 + c1 x - yx/(1 + c2 x - ...))) and the
    levels beyond 0 can be read as y - 1 throughout, y + 1 throughout, or
    y - 1 twice and then y + 1.  Only the first equals N(x, y).
    """
    return {
        "constant_y_minus_1": thron(seq(1, tail=1 - Y), seq(tail=Y)),
        "constant_y_plus_1": thron(seq(1, tail=-1 - Y), seq(tail=Y)),
        "switch_to_y_plus_1": thron(seq(1, 1 - Y, 1 - Y, tail=-1 - Y), seq(tail=Y)),
    }


def binomial_transform(terms, direction="forward"):
    """b_n = sum_k C(n, k) a_k, or with signs (-1)^(n-k) for the inverse."""
    if direction not in ("forward", "inverse"):
        raise ValueError("direction must be 'forward' or 'inverse'")
    sign = 1 if direction == "forward" else -1
    return [sum(comb(n, k) * sign ** (n - k) * terms[k] for k in range(n + 1))
            for n in range(len(terms))]


def large_schroeder(count):
    """S_n = sum_k C(n + k, 2k) C_k."""
    return [sum(comb(n + k, 2 * k) * comb(2 * k, k) // (k + 1) for k in range(n + 1))
            for n in range(count)]


def schroeder_alternating_transform(count):
    """sum_k C(n + k, 2k) (-1)^(n-k) S_k."""
    s = large_schroeder(count)
    return [sum(comb(n + k, 2 * k) * (-1) ** (n - k) * s[k] for k in range(n + 1))
            for n in range(count)]

