"""Concrete continued fractions and arrays used by the verification suites.

Every fraction here has coefficients that are polynomials in y (or
growing index rules), so each one can be checked against the lattice-path
oracle.
"""

from fractions import Fraction

from .cfrac import (involution_cfrac, jacobi, predicted_inverse_jfrac,
                    seq, stieltjes, thron, thron_level0, thron_to_jacobi_level0)
from .eriordan import ExpRiordanPair, MultiplierFamily, fps_exp, multiplier_jacobi
from .riordan import RiordanPair
from .series import FPS, Y
from .triangles import narayana_cf_suite

__all__ = ["cfracs", "pairs", "exp_pairs"]

THIRD = Fraction(1, 3)


def cfracs():
    """Name -> CFrac for every concrete fraction the suites expand."""
    nar = narayana_cf_suite()
    out = {
        # basic path counts
        "catalan": stieltjes(seq(tail=1)),
        "motzkin": jacobi(1, 1),
        "large_schroeder": thron(seq(tail=1), seq(tail=1)),
        "schroeder_level0_rise_y": thron(seq(tail=1), seq(Y, tail=1)),
        # one-parameter Jacobi family and its inverse, (a, b, c, d) = (2, 3, 1, 4)
        "level0_jacobi_2314": jacobi(seq(Y + 2, tail=1), seq(Y + 3, tail=4)),
        "level0_jacobi_2314_inverse": predicted_inverse_jfrac(2, 3, 1, 4),
        "colored_thron": thron_level0(2, 3, -1, 4, 1, 5),
        "colored_thron_as_jacobi": thron_to_jacobi_level0(2, 3, -1, 4, 1, 5),
        # (1, x(1-x)/(1+x))^-1 in three forms, and its inverse
        "bell_schroeder_stieltjes": stieltjes(seq(Y, tail=(2, 1))),
        "bell_schroeder_jacobi": jacobi(seq(Y, tail=3), seq(2 * Y, tail=2)),
        "bell_schroeder_thron": thron(seq(0, tail=1), seq(Y, tail=1)),
        "bell_schroeder_inverse_jacobi": jacobi(seq(Y, -1, tail=0), seq(-2 * Y, tail=0)),
        # (1 + xS, xS) with S the shifted large Schroeder series, and its inverse
        "schroeder_plus_one_jacobi": jacobi(seq(Y + 1, tail=3), seq(Y + 1, tail=2)),
        "delannoy_signed_jacobi": jacobi(seq(Y - 1, tail=0), seq(-Y, tail=0)),
        "delannoy_signed_thron": thron(seq(-1, 0, 1, tail=0), seq(Y, -1, tail=0)),
        # ((1-x)/(1+x), x(1-x)/(1+x))^-1 and its inverse
        "schroeder_pair_jacobi": jacobi(seq(Y + 2, tail=3), seq(tail=2)),
        "schroeder_pair_thron": thron(seq(Y + 1, tail=1), seq(tail=1)),
        "schroeder_pair_inverse_jacobi": jacobi(seq(Y - 2, 1, tail=0), seq(-2, tail=0)),
        "schroeder_pair_inverse_jacobi_as_printed": jacobi(seq(2 - Y, 1, tail=0), seq(-2, tail=0)),
        "schroeder_pair_inverse_thron": thron(seq(Y, 1, tail=0), seq(-2, tail=0)),
        # Schroeder paths with no level-1 horizontal, and the inverse array
        "no_level1_horizontal_jacobi": jacobi(seq(Y + 1, tail=3), seq(1, tail=2)),
        "no_level1_horizontal_thron": thron(seq(Y, 0, tail=1), seq(tail=1)),
        "no_level1_horizontal_inverse_jacobi": jacobi(seq(Y - 1, tail=2), seq(-1, tail=1)),
        # involutions
        "involution_11": involution_cfrac(1, 1),
        "involution_22": involution_cfrac(2, 2),
        "involution_11_at_y_minus_2": jacobi(seq(2, tail=1), seq(2, tail=1)),
        "involution_22_alternating": jacobi(seq(3, tail=2), seq(tail=2)),
        # Laurent biorthogonal moments, (s, t) = (1, 3)
        "lbp_thron": thron(seq(0, tail=1), seq(1, tail=2)),
        "lbp_stieltjes": stieltjes(seq(1, tail=(3, 2))),
        "lbp_jacobi": jacobi(seq(1, tail=5), seq(3, tail=6)),
        "lbp_bivariate_jacobi": jacobi(seq(Y + 1, tail=5), seq(Y + 3, tail=6)),
        "lbp_bivariate_thron": thron(seq(2 * THIRD * Y, tail=1), seq((Y + 3) * THIRD, tail=2)),
        # ordinary to exponential
        "schroeder_pair_ordinary": jacobi(seq(Y + 2, tail=3), seq(tail=2)),
        "multiplier_squares": multiplier_jacobi(MultiplierFamily(mults="squares")),
        "multiplier_triangulars": multiplier_jacobi(MultiplierFamily(mults="triangulars")),
        "multiplier_naturals": multiplier_jacobi(MultiplierFamily(mults="naturals")),
        # Narayana and relatives
        "narayana_jacobi": nar.jacobi,
        "narayana_thron": nar.thron,
        "narayana_shifted_thron": nar.shifted,
        "nb_jacobi": nar.nb_jacobi,
        "nb_thron": nar.nb_thron,
        "little_q_stieltjes": nar.little_q[0],
        "little_q_thron": nar.little_q[1],
        "little_q_jacobi": nar.little_q[2],
        "nb_conjugate_jacobi": nar.conjugate_jacobi,
        "alternating_schroeder_thron": thron(seq(tail=-1), seq(tail=(2, 1))),
    }
    return out


def pairs(order=16):
    """Name -> RiordanPair for arrays given by explicit (g, f)."""
    x = FPS.x(order)
    one = FPS.one(order)
    root = (1 - 6 * x + x * x).sqrt()
    xs = (1 - x - root) / 2  # x S(x), S the large Schroeder series
    return {
        "pascal": RiordanPair(one / (1 - x), x / (1 - x)),
        "schroeder_level0": RiordanPair(one / (1 - x), xs / (1 - x)),
        "schroeder_peaks_inverse": RiordanPair((1 - 2 * x) / (1 - x), x * (1 - 2 * x) / (1 - x)),
        "bell_schroeder": RiordanPair(one, xs),
        "bell_schroeder_inverse": RiordanPair(one, x * (1 - x) / (1 + x)),
        "schroeder_plus_one": RiordanPair(1 + xs, xs),
        "delannoy_signed": RiordanPair(one / (1 + x), x * (1 - x) / (1 + x)),
        "schroeder_pair": RiordanPair(_schroeder(order), xs),
        "no_level1_horizontal": RiordanPair(1 + xs, x * (1 + xs)),
        "schroeder_pair_inverse": RiordanPair((1 - x) / (1 + x), x * (1 - x) / (1 + x)),
        "lbp_13": RiordanPair((1 - 2 * x) / (1 - x), x * (1 - 3 * x) / (1 - x)),
        "involution_x_over_1_minus_x": RiordanPair(one, -x / (1 - x)),
        "involution_x_over_1_plus_x": RiordanPair(one, -x / (1 + x)),
    }


def _schroeder(order):
    # S(x) = (1 - x - sqrt(1 - 6x + x^2)) / (2x), computed one order deeper
    x = FPS.x(order + 1)
    return ((1 - x - (1 - 6 * x + x * x).sqrt()).shift_down(1) / 2)


def exp_pairs(order=12):
    """Name -> ExpRiordanPair."""
    x = FPS.x(order)
    ex = fps_exp(x)
    e3 = fps_exp(3 * x)
    return {
        "binomial": ExpRiordanPair(ex, x),
        "identity": ExpRiordanPair(FPS.one(order), x),
        "fubini_binomial": ExpRiordanPair(ex / (2 - ex), x),
        "naturals_moment": ExpRiordanPair(fps_exp(2 * (e3 - 1) / 9 + (Y + 4 * THIRD) * x),
                                          (e3 - 1) / 3),
        "naturals_column": ExpRiordanPair(fps_exp(2 * (e3 - 1) / 9 + 4 * THIRD * x), x),
    }
