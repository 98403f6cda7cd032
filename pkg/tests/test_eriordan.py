from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from conftest import series
from riordancf.cfrac import cf_expand
from riordancf.eriordan import (ExpRiordanPair, MultiplierFamily, eriordan_bivariate_egf,
                                eriordan_matrix, exp_revert_transform, fps_exp,
                                multiplier_jacobi)
from riordancf.errors import InvalidF, InvalidG, NonzeroConstantInner
from riordancf.series import FPS, Y


def test_exp_coefficients():
    assert fps_exp(FPS.x(6)).tolist() == [Fraction(1, factorial(n)) for n in range(6)]


def test_exp_needs_zero_constant():
    with pytest.raises(NonzeroConstantInner):
        fps_exp(FPS.one(4))


@given(series(8, valuation=1), series(8, valuation=1))
def test_exp_of_sum_is_product(a, b):
    assert fps_exp(a + b) == fps_exp(a) * fps_exp(b)


def test_binomial_array():
    x = FPS.x(7)
    m = eriordan_matrix(ExpRiordanPair(fps_exp(x), x), 7)
    assert m.tolist() == [[comb(n, k) for k in range(n + 1)] for n in range(7)]


def test_stirling_array():
    x = FPS.x(6)
    m = eriordan_matrix(ExpRiordanPair(FPS.one(6), fps_exp(x) - 1), 6)
    assert m.tolist()[4] == [0, 1, 7, 6, 1]


def test_bivariate_egf_matches_matrix():
    x = FPS.x(6)
    pair = ExpRiordanPair(fps_exp(x), fps_exp(x) - 1)
    m = eriordan_matrix(pair, 6)
    egf = eriordan_bivariate_egf(pair)
    for n in range(6):
        assert [egf[n].coeffs[k] * factorial(n) if k < len(egf[n].coeffs) else 0
                for k in range(n + 1)] == m.tolist()[n]


def test_invalid_pairs():
    with pytest.raises(InvalidG):
        ExpRiordanPair(FPS.x(4), FPS.x(4))
    with pytest.raises(InvalidF):
        ExpRiordanPair(FPS.one(4), FPS.one(4))


def test_multiplier_jacobi_coefficients():
    cf = multiplier_jacobi(MultiplierFamily(mults="naturals"))
    assert [cf.alpha[i] for i in range(3)] == [Y + 2, Y + 5, Y + 8]
    assert [cf.beta[i] for i in range(3)] == [2, 4, 6]


def test_explicit_multipliers_run_out():
    cf = multiplier_jacobi(MultiplierFamily(mults=(1, 2)))
    with pytest.raises(IndexError):
        cf.beta[2]


def test_multiplier_expansion_starts_with_y():
    g = cf_expand(multiplier_jacobi(MultiplierFamily()), 3)
    assert g[1] == Y + 2


def test_revert_transform_example():
    assert exp_revert_transform([1, 3, 11, 51, 295, 2055]) == [1, -3, 16, -126, 1320, -17280]


@given(st.integers(1, 4).flatmap(
    lambda c: st.lists(st.integers(-5, 5), min_size=5, max_size=7).map(lambda t: [c] + t)))
def test_revert_transform_is_involution(terms):
    assert exp_revert_transform(exp_revert_transform(terms)) == terms
