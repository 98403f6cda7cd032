from fractions import Fraction

from hypothesis import settings, strategies as st

from riordancf.riordan import RiordanPair
from riordancf.series import FPS, YPoly

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-5, max_value=5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)
ypolys = st.lists(small_ints, max_size=3).map(YPoly)


def series(order, coeffs=rationals, unit=False, valuation=0):
    """Strategy for FPS of the given order."""
    head = [st.just(0)] * valuation
    if unit:
        head.append(nonzero_rationals)
    return st.tuples(*head, st.lists(coeffs, min_size=order, max_size=order)).map(
        lambda t: FPS(list(t[:-1]) + t[-1], order=order))


def riordan_pairs(order):
    """Random (g, f) with g(0) != 0, f(0) = 0, f'(0) != 0."""
    return st.tuples(series(order, small_ints, unit=True),
                     series(order, small_ints, unit=True, valuation=1)).map(
        lambda gf: RiordanPair(*gf))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
