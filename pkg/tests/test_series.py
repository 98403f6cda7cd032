from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_rationals, series, ypolys
from riordancf.errors import (BadConstantTerm, DivisionByNonUnit, InsufficientOrder,
                              NonzeroConstantInner, NotReversible)
from riordancf.series import (FPS, Y, YPoly, fps_arith, fps_compose, fps_reversion, fps_sqrt,
                              ypoly_substitute)


def q(series_):
    return series_.rationals()


class TestYPoly:
    def test_str_and_trim(self):
        assert str(YPoly([3, -2, 1, 0, 0])) == "3 - 2*y + y^2"
        assert str(YPoly([])) == "0"
        assert YPoly([Fraction(2, 3)]).degree == 0

    def test_compares_with_numbers(self):
        assert YPoly([5]) == 5
        assert YPoly([Fraction(1, 2)]) == Fraction(1, 2)
        assert hash(YPoly([5])) == hash(5)
        assert Y != 1

    def test_evaluation(self):
        p = (Y + 1) ** 3
        assert p(2) == 27
        assert p(Y - 1) == Y ** 3

    def test_division_only_by_constants(self):
        assert (Y * 4) / 2 == Y * 2
        with pytest.raises(DivisionByNonUnit):
            Y / Y

    @given(ypolys, ypolys, ypolys)
    def test_ring_laws(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == 0

    @given(ypolys, nonzero_rationals)
    def test_substitution(self, p, v):
        assert ypoly_substitute(FPS([p], order=1), v)[0] == p(v)


class TestArithmetic:
    def test_catalan_from_quadratic(self):
        x = FPS.x(8)
        c = (1 - (1 - 4 * x).sqrt())
        assert [int(v) for v in q(c.shift_down(1) / 2)] == [1, 1, 2, 5, 14, 42, 132]

    def test_long_division(self):
        x = FPS.x(6)
        assert q((1 - 2 * x) / (1 - x)) == [1, -1, -1, -1, -1, -1]

    def test_order_is_minimum(self):
        assert (FPS([1, 2], order=5) + FPS([1], order=3)).order == 3

    def test_division_needs_unit(self):
        with pytest.raises(DivisionByNonUnit):
            FPS.one(4) / FPS.x(4)
        with pytest.raises(DivisionByNonUnit):
            FPS.one(4) / FPS([Y, 1], order=4)

    def test_index_beyond_order(self):
        with pytest.raises(InsufficientOrder):
            FPS.one(3)[3]

    def test_functional_forms(self):
        a, b = FPS([1, 1], order=4), FPS([1, -1], order=4)
        assert fps_arith("mul", a, b) == a * b
        assert fps_arith("div", a, b) == a / b
        with pytest.raises(ValueError):
            fps_arith("pow", a, b)

    @given(series(12), series(12), series(12))
    def test_ring_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a

    @given(series(12, unit=True))
    def test_reciprocal(self, a):
        assert a * (1 / a) == FPS.one(12)

    @given(series(12), series(12, unit=True))
    def test_division_is_exact(self, a, b):
        assert (a / b) * b == a


class TestAnalytic:
    def test_compose_needs_zero_constant(self):
        with pytest.raises(NonzeroConstantInner):
            FPS.one(4).compose(FPS.one(4))

    def test_geometric_of_x_over_1_minus_x(self):
        x = FPS.x(7)
        assert q((1 / (1 - x)).compose(x / (1 - x))) == [1, 1, 2, 4, 8, 16, 32]

    def test_reversion_of_catalan(self):
        x = FPS.x(8)
        assert q((x - x * x).reversion()) == [0, 1, 1, 2, 5, 14, 42, 132]

    def test_reversion_errors(self):
        with pytest.raises(NotReversible):
            FPS([1, 1], order=4).reversion()
        with pytest.raises(NotReversible):
            FPS([0, 0, 1], order=4).reversion()

    def test_sqrt_needs_unit_constant(self):
        with pytest.raises(BadConstantTerm):
            FPS([4, 1], order=4).sqrt()

    def test_y_as_x(self):
        g = FPS([1, Y, Y * Y], order=3)
        assert q(g.y_as_x()) == [1, 0, 1]

    @given(series(12, unit=True, valuation=1))
    def test_compose_with_reversion_is_identity(self, f):
        fbar = fps_reversion(f)
        assert fps_compose(f, fbar) == FPS.x(12)
        assert fps_compose(fbar, f) == FPS.x(12)

    @given(series(10))
    def test_sqrt_squares_back(self, a):
        a = 1 + a.shift_up(1).truncate(10)
        s = fps_sqrt(a)
        assert s * s == a

    @given(series(10), series(10, valuation=1))
    def test_chain_rule(self, g, f):
        lhs = g.compose(f).derivative()
        rhs = g.derivative().compose(f.truncate(9)) * f.derivative()
        assert lhs == rhs
