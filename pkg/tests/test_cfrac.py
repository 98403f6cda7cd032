import pytest
from hypothesis import given, strategies as st

from conftest import small_ints
from riordancf.cfrac import (cf_expand, cfrac_to_riordan, jacobi, jfrac_level0_to_riordan,
                             predicted_inverse_jfrac, rational_riordan_inverse_jfrac, seq,
                             stieltjes, stieltjes_to_jacobi, thron, thron_level0,
                             thron_to_jacobi_level0)
from riordancf.errors import NotRiordan, WrongKind
from riordancf.riordan import RiordanPair, bivariate_gf, riordan_matrix
from riordancf.series import FPS, Y


def ints(s):
    return [int(v.to_fraction()) for v in s.tolist()]


def rows(pair, n):
    return [[int(v.to_fraction()) for v in row] for row in riordan_matrix(pair, n).tolist()]


class TestCoeffSeq:
    def test_prefix_then_tail(self):
        s = seq(Y, 2, tail=(1, 3))
        assert [s[i] for i in range(6)] == [Y, 2, 1, 3, 1, 3]
        assert s.is_periodic

    def test_redundant_prefix_is_absorbed(self):
        assert seq(3, 3, tail=3) == seq(tail=3)


class TestExpand:
    def test_catalan(self):
        assert ints(cf_expand(stieltjes(1), 6)) == [1, 1, 2, 5, 14, 42]

    def test_motzkin(self):
        assert ints(cf_expand(jacobi(1, 1), 6)) == [1, 1, 2, 4, 9, 21]

    def test_schroeder(self):
        assert ints(cf_expand(thron(1, 1), 5)) == [1, 2, 6, 22, 90]

    def test_thron_level0_rise_y(self):
        g = cf_expand(thron(1, seq(Y, tail=1)), 5)
        assert [[int(c) for c in p.coeffs] for p in g.tolist()] == [
            [1], [1, 1], [1, 4, 1], [1, 13, 7, 1], [1, 44, 34, 10, 1]]

    def test_y_substitution(self):
        assert ints(cf_expand(thron(1, seq(Y, tail=1)), 5, y_value=1)) == [1, 2, 6, 22, 90]

    def test_shallow_depth_truncates(self):
        assert ints(cf_expand(stieltjes(1), 6, depth=1)) == [1] * 6


class TestContraction:
    def test_catalan(self):
        j = stieltjes_to_jacobi(stieltjes(1))
        assert j == jacobi(seq(1, tail=2), 1)
        assert cf_expand(j, 12) == cf_expand(stieltjes(1), 12)

    def test_periodic_alpha(self):
        j = stieltjes_to_jacobi(stieltjes(seq(1, tail=(3, 2))))
        assert j == jacobi(seq(1, tail=5), seq(3, tail=6))

    def test_level0_y(self):
        j = stieltjes_to_jacobi(stieltjes(seq(Y, tail=(2, 1))))
        assert j == jacobi(seq(Y, tail=3), seq(2 * Y, tail=2))

    def test_wrong_kind(self):
        with pytest.raises(WrongKind):
            stieltjes_to_jacobi(jacobi(1, 1))

    @given(st.lists(small_ints, min_size=1, max_size=4), st.lists(small_ints, min_size=1, max_size=3))
    def test_expansions_agree(self, prefix, period):
        s = stieltjes(seq(*prefix, tail=tuple(period)))
        assert cf_expand(stieltjes_to_jacobi(s), 10) == cf_expand(s, 10)


class TestLevel0:
    def test_thron_to_jacobi_example(self):
        # the level-0 coefficient is b + d + (a + c) y
        j = thron_to_jacobi_level0(2, 3, -1, 4, 1, 5)
        assert j.alpha[0] == 7 + Y
        assert j.beta[0] == 6 * (4 - Y)
        assert (j.alpha[1], j.beta[1]) == (11, 30)

    def test_plain_schroeder(self):
        j = thron_to_jacobi_level0(0, 1, 0, 1, 1, 1)
        assert j == jacobi(seq(2, tail=3), 2)
        assert ints(cf_expand(j, 5)) == [1, 2, 6, 22, 90]

    def test_empty_paths(self):
        assert ints(cf_expand(thron_to_jacobi_level0(0, 0, 0, 0, 0, 0), 5)) == [1, 0, 0, 0, 0]

    @given(*[st.integers(-5, 5)] * 6)
    def test_thron_and_jacobi_agree(self, a, b, c, d, u, v):
        assert (cf_expand(thron_level0(a, b, c, d, u, v), 12)
                == cf_expand(thron_to_jacobi_level0(a, b, c, d, u, v), 12))

    def test_riordan_example(self):
        pair = jfrac_level0_to_riordan(Y + 2, Y + 3, 1, 4, order=8)
        assert rows(pair, 5) == [[1], [2, 1], [7, 5, 1], [23, 23, 8, 1], [88, 101, 48, 11, 1]]

    def test_first_column(self):
        pair = jfrac_level0_to_riordan(Y + 2, Y + 1, 2, 2, order=8)
        assert ints(pair.g.truncate(5)) == [1, 2, 5, 14, 43]

    def test_not_riordan(self):
        # a y^2 coefficient breaks the Riordan shape
        with pytest.raises(NotRiordan):
            cfrac_to_riordan(jacobi(seq(Y * Y, tail=1), 1), 8)


class TestInverseFractions:
    def test_predicted_example(self):
        j = predicted_inverse_jfrac(2, 3, 1, 4)
        assert (j.alpha[0], j.beta[0], j.alpha[1], j.beta[1]) == (Y - 2, -1 - Y, -3, 3)

    @given(*[st.integers(-3, 3)] * 4)
    def test_predicted_inverse_matches(self, a, b, c, d):
        pair = jfrac_level0_to_riordan(Y + a, Y + b, c, d, order=11)
        assert bivariate_gf(pair.inverse(), 10) == cf_expand(predicted_inverse_jfrac(a, b, c, d), 10)

    @given(*[st.integers(-3, 3)] * 3)
    def test_rational_inverse_matches(self, a, b, c):
        x = FPS.x(11)
        den = 1 + a * x + b * x * x
        pair = RiordanPair((1 + c * x) / den, x / den).inverse()
        assert bivariate_gf(pair, 10) == cf_expand(rational_riordan_inverse_jfrac(a, b, c), 10)

    def test_trivial_rational(self):
        assert cf_expand(rational_riordan_inverse_jfrac(0, 0, 0), 6) == 1 / (1 - Y * FPS.x(6))
