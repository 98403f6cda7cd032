"""Verification suites: printed arrays, sequences and continued-fraction
identities, each recomputed from first principles.

Suites are keyed s1..s8:

s1  Thron fractions for Riordan arrays and the orthogonal production template
s2  lattice-path counts and the Schroeder-peaks array
s3  Jacobi fractions with a distinguished level 0
s4  one array, several continued fractions
s5  Riordan involutions
s6  Laurent biorthogonal moments
s7  ordinary to exponential arrays
s8  the Narayana triangle and relatives

Every check is pure and seeded, so a report is identical across runs.
"""

import random
from typing import NamedTuple

from . import catalog
from .cfrac import (cf_expand, involution_cfrac, involution_gf, jfrac_level0_to_riordan,
                    predicted_inverse_jfrac, rational_riordan_inverse_jfrac, thron_level0,
                    thron_to_jacobi_level0)
from .eriordan import eriordan_matrix
from .errors import RiordanError
from .expr import parse_fps
from .golden import SEQUENCES as GOLDEN_SEQ, golden_rows
from .lattice import count_weighted_paths, path_kind_for, weights_for_cfrac
from .orthopoly import (coefficient_array, laurent_biorthogonal, moments, orthogonal,
                        recurrence_polynomials)
from .production import exp_production_za, production_matrix, tridiagonal_to_jacobi
from .riordan import (RiordanPair, bivariate_gf, ftra_apply, is_involution, riordan_matrix,
                      triangle_from_bivariate, triangle_sums)
from .seqtable import SEQUENCES as TABLE
from .series import FPS, Y
from .triangles import (named_triangle, narayana, narayana_thron_variants,
                        schroeder_alternating_transform)

__all__ = ["Check", "SUITES", "run_suite", "run", "oracle_agrees"]


class Check(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str


# helpers

def _rows(t, n):
    return [list(t.rows[i][:i + 1]) for i in range(n)]


def _prod_rows(t, n):
    p = production_matrix(t)
    return [[p[i, j] for j in range(min(n, i + 2))] for i in range(n)]


def _golden_triangle(name, t):
    want = golden_rows(name)
    got = _rows(t, len(want))
    return got == want, f"{len(want)} rows"


def _golden_production(name, t):
    want = golden_rows(name)
    got = _prod_rows(t, len(want))
    return got == want, f"{len(want)}x{len(want)}"


def _same(a, b, n):
    return a.truncate(n).tolist() == b.truncate(n).tolist()


def _cf_equals_pair(name, pair, n=10):
    ok = _same(cf_expand(catalog.cfracs()[name], n), bivariate_gf(pair, n), n)
    return ok, f"order {n}"


def _ints(series, n):
    return [int(c.to_fraction()) for c in series.truncate(n).tolist()]


def _geometric(r, n):
    return FPS([r ** k for k in range(n)], order=n)


def oracle_agrees(cf, n_max=8, y_value=None):
    """cf_expand against weighted path counting for sizes 0..n_max."""
    if y_value is not None:
        cf = cf.subs_y(y_value)
    series = cf_expand(cf, n_max + 1)
    weights = weights_for_cfrac(cf, n_max + 1)
    kind = path_kind_for(cf)
    return all(series[n] == count_weighted_paths(kind, n, weights) for n in range(n_max + 1))


def _sequence(name, got):
    want = GOLDEN_SEQ[name]
    return list(got[:len(want)]) == want, ", ".join(map(str, want))


def _rand_tuples(seed, count, width, lo=-3, hi=3):
    rng = random.Random(seed)
    return [tuple(rng.randint(lo, hi) for _ in range(width)) for _ in range(count)]


# suite bodies: each yields (name, thunk) where thunk returns (passed, detail)

def _s1():
    p = catalog.pairs(10)
    pair = p["schroeder_level0"]
    yield "schroeder_level0 array", lambda: _golden_triangle(
        "schroeder_level0", riordan_matrix(pair, 5))
    yield "schroeder_level0 thron fraction", lambda: _cf_equals_pair(
        "schroeder_level0_rise_y", pair)
    yield "array times powers of 3", lambda: _sequence(
        "schroeder_level0_on_powers_of_3", _ints(ftra_apply(pair, _geometric(3, 10)), 10))

    def template():
        # production of the inverse coefficient array: first column (a - alpha, b - beta),
        # then the constant tridiagonal band (1, a, b)
        for a, b, al, be in _rand_tuples(11, 6, 4):
            inv = riordan_matrix(coefficient_array(orthogonal(a, b, al, be), 9), 9).inverse()
            pm = production_matrix(inv)
            if [pm[0, 0], pm[1, 0]] != [a - al, b - be] or not pm.is_tridiagonal():
                return False, f"(a, b, alpha, beta) = {(a, b, al, be)}"
            if pm.band(1) != [1] * 7 or pm.band(0)[1:] != [a] * 7 or pm.band(-1)[1:] != [b] * 6:
                return False, f"(a, b, alpha, beta) = {(a, b, al, be)}"
        return True, "6 random tuples"
    yield "orthogonal inverse production template", template

    def round_trip():
        n = 9
        for a, b, al, be in _rand_tuples(12, 6, 4):
            inv = riordan_matrix(coefficient_array(orthogonal(a, b, al, be), n), n).inverse()
            cf = tridiagonal_to_jacobi(production_matrix(inv))
            if cf_expand(cf, n - 1).tolist() != inv.column(0)[:n - 1]:
                return False, f"(a, b, alpha, beta) = {(a, b, al, be)}"
        return True, "jacobi fraction from the production matrix gives the first column"
    yield "tridiagonal extraction round trip", round_trip


def _s2():
    c = catalog.cfracs()
    expect = {"catalan": "A000108", "motzkin": None, "large_schroeder": "A006318"}
    motz = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    for name, anum in expect.items():
        def run(name=name, anum=anum):
            got = _ints(cf_expand(c[name], 10), 10)
            want = list(TABLE[anum].terms[:10]) if anum else motz
            return got == want and oracle_agrees(c[name]), ", ".join(map(str, got[:6]))
        yield f"{name} fraction and paths", run

    def motzkin_identity():
        from math import comb
        ours = [sum(comb(n, 2 * k) * comb(2 * k, k) // (k + 1) for k in range(n // 2 + 1))
                for n in range(11)]
        return ours[:10] == motz, "M_n = sum C(n, 2k) C_k"
    yield "motzkin binomial-catalan identity", motzkin_identity
    yield "large schroeder closed form", lambda: (
        _ints(parse_fps("(1-x-sqrt(1-6*x+x^2))/(2*x)", 5), 5) == [1, 2, 6, 22, 90], "5 terms")
    yield "schroeder_peaks array", lambda: _golden_triangle(
        "schroeder_peaks", named_triangle("schroeder_peaks", 6))
    yield "schroeder_peaks production", lambda: _golden_production(
        "schroeder_peaks_production", named_triangle("schroeder_peaks", 7))


def _s3():
    c = catalog.cfracs()

    def example_array():
        return _golden_triangle("level0_jacobi_2314",
                                triangle_from_bivariate(cf_expand(c["level0_jacobi_2314"], 5)))
    yield "level0 jacobi example array", example_array

    def on_powers_of_2():
        pair = jfrac_level0_to_riordan(Y + 2, Y + 3, 1, 4, order=10)
        return _sequence("level0_jacobi_2314_on_powers_of_2",
                         _ints(ftra_apply(pair, _geometric(2, 10)), 10))
    yield "example array times powers of 2", on_powers_of_2

    def inverse_family(tuples, n):
        for a, b, cc, d in tuples:
            inv = jfrac_level0_to_riordan(Y + a, Y + b, cc, d, order=n).inverse()
            if not _same(bivariate_gf(inv, n), cf_expand(predicted_inverse_jfrac(a, b, cc, d), n), n):
                return False, f"(a, b, c, d) = {(a, b, cc, d)}"
        return True, f"{len(tuples)} tuples at order {n}"
    yield "inverse fraction, example", lambda: inverse_family([(2, 3, 1, 4)], 10)
    yield "inverse fraction, random", lambda: inverse_family(_rand_tuples(21, 20, 4), 10)

    def thron_vs_jacobi(tuples, n):
        for t in tuples:
            if not _same(cf_expand(thron_level0(*t), n), cf_expand(thron_to_jacobi_level0(*t), n), n):
                return False, f"(a, b, c, d, u, v) = {t}"
        return True, f"{len(tuples)} tuples at order {n}"
    yield "thron to jacobi, example", lambda: thron_vs_jacobi([(2, 3, -1, 4, 1, 5)], 12)
    yield "thron to jacobi, random", lambda: thron_vs_jacobi(_rand_tuples(31, 30, 6), 12)

    def rational_inverse():
        n = 10
        for a, b, cc in _rand_tuples(41, 10, 3):
            den = FPS([1, a, b], order=n)
            pair = RiordanPair(FPS([1, cc], order=n) / den, FPS.x(n) / den).inverse()
            if not _same(bivariate_gf(pair, n), cf_expand(rational_riordan_inverse_jfrac(a, b, cc), n), n):
                return False, f"(a, b, c) = {(a, b, cc)}"
        return True, f"10 tuples at order {n}"
    yield "rational array inverse fraction, random", rational_inverse


def _s4():
    c = catalog.cfracs()
    p = catalog.pairs(12)

    def all_equal(names, pair, n=12):
        target = bivariate_gf(pair, n)
        bad = [m for m in names if not _same(cf_expand(c[m], n), target, n)]
        return not bad, "mismatch: " + ", ".join(bad) if bad else f"{len(names)} forms at order {n}"

    bell = p["bell_schroeder"]
    yield "bell_schroeder array", lambda: _golden_triangle("bell_schroeder", riordan_matrix(bell, 6))
    yield "bell_schroeder production", lambda: _golden_production(
        "bell_schroeder_production", riordan_matrix(bell, 7))
    yield "bell_schroeder three fractions", lambda: all_equal(
        ["bell_schroeder_stieltjes", "bell_schroeder_jacobi", "bell_schroeder_thron"], bell)
    yield "bell_schroeder inverse fraction", lambda: all_equal(
        ["bell_schroeder_inverse_jacobi"], p["bell_schroeder_inverse"])
    yield "bell_schroeder inverse pair", lambda: (
        riordan_matrix(bell.inverse(), 10) == riordan_matrix(p["bell_schroeder_inverse"], 10), "order 10")

    plus = p["schroeder_plus_one"]
    yield "schroeder_plus_one production", lambda: _golden_production(
        "schroeder_plus_one_production", riordan_matrix(plus, 7))
    yield "schroeder_plus_one array", lambda: _golden_triangle(
        "schroeder_plus_one", riordan_matrix(plus, 6))
    yield "schroeder_plus_one fraction", lambda: all_equal(["schroeder_plus_one_jacobi"], plus)
    yield "delannoy_signed array", lambda: _golden_triangle(
        "delannoy_signed", riordan_matrix(p["delannoy_signed"], 6))
    yield "delannoy_signed is the inverse", lambda: (
        riordan_matrix(plus.inverse(), 10) == riordan_matrix(p["delannoy_signed"], 10), "order 10")
    yield "delannoy_signed fractions", lambda: all_equal(
        ["delannoy_signed_jacobi", "delannoy_signed_thron"], p["delannoy_signed"])

    pair = p["schroeder_pair"]
    yield "schroeder_pair production", lambda: _golden_production(
        "schroeder_pair_production", riordan_matrix(pair, 7))
    yield "schroeder_pair inverse pair", lambda: (
        riordan_matrix(pair.inverse(), 10) == riordan_matrix(p["schroeder_pair_inverse"], 10), "order 10")
    yield "schroeder_pair fractions", lambda: all_equal(
        ["schroeder_pair_jacobi", "schroeder_pair_thron"], pair)
    yield "schroeder_pair inverse fractions", lambda: all_equal(
        ["schroeder_pair_inverse_jacobi", "schroeder_pair_inverse_thron"], p["schroeder_pair_inverse"])

    def printed_sign_differs():
        n = 8
        got = cf_expand(c["schroeder_pair_inverse_jacobi_as_printed"], n)
        return not _same(got, bivariate_gf(p["schroeder_pair_inverse"], n), n), \
            "level-0 coefficient must be y - 2, the opposite sign fails"
    yield "schroeder_pair inverse, opposite level-0 sign rejected", printed_sign_differs

    nl1 = p["no_level1_horizontal"]
    yield "no_level1_horizontal array", lambda: _golden_triangle(
        "no_level1_horizontal", riordan_matrix(nl1, 6))
    yield "no_level1_horizontal fractions", lambda: all_equal(
        ["no_level1_horizontal_jacobi", "no_level1_horizontal_thron"], nl1)

    def nl1_inverse():
        n = 12
        x = FPS.x(n)
        cat = cf_expand(c["catalan"], n)
        inv = RiordanPair(1 / (1 + x * cat), x / (1 + x * cat))
        same = riordan_matrix(nl1.inverse(), n) == riordan_matrix(inv, n)
        ok, detail = all_equal(["no_level1_horizontal_inverse_jacobi"], inv)
        return same and ok, detail
    yield "no_level1_horizontal inverse", nl1_inverse


def _s5():
    c = catalog.cfracs()
    yield "involution (1, 1) array", lambda: _golden_triangle(
        "involution_11", riordan_matrix(involution_gf(1, 1, 8)[0], 6))
    yield "involution (2, 2) array", lambda: _golden_triangle(
        "involution_22", riordan_matrix(involution_gf(2, 2, 8)[0], 6))

    def random_involutions():
        for a, b in _rand_tuples(51, 10, 2, -4, 4):
            if not is_involution(involution_gf(a, b, 8)[0], 8):
                return False, f"(a, b) = {(a, b)}"
        return True, "10 random (a, b) at order 8"
    yield "involutions square to the identity", random_involutions

    def simple_involutions():
        p = catalog.pairs(8)
        return all(is_involution(p[k], 8) for k in
                   ("involution_x_over_1_minus_x", "involution_x_over_1_plus_x")), "order 8"
    yield "(1, -x/(1-x)) and (1, -x/(1+x))", simple_involutions

    def moment_arrays():
        n = 8
        for a, b in [(1, 1), (2, 2)] + _rand_tuples(52, 4, 2, -3, 3):
            spec = orthogonal(a, b, 2 - a + Y, -a + b + 1 + Y)
            if moments(spec, n) != cf_expand(involution_cfrac(a, b), n).tolist():
                return False, f"(a, b) = {(a, b)}"
        return True, "moments with y equal the involution fraction"
    yield "involutions are parametrized moment arrays", moment_arrays

    yield "orthogonal production with y", lambda: _golden_production(
        "involution_11_coefficients_production",
        riordan_matrix(coefficient_array(orthogonal(1, 1, 1 + Y, 1 + Y), 8), 8).inverse())

    def y_specializations():
        n = 10
        base = cf_expand(c["involution_11"], n)
        motz = _ints(base.subs_y(-1), n) == _ints(cf_expand(c["motzkin"], n), n)
        closed = parse_fps("1/(sqrt(1-2*x-3*x^2)-x)", n)
        m2 = _same(base.subs_y(-2), closed, n) and _same(cf_expand(c["involution_11_at_y_minus_2"], n), closed, n)
        head = _ints(closed, 7) == [1, 2, 6, 18, 56, 176, 558]
        return motz and m2 and head, "y = -1 Motzkin; y = -2 gives 1, 2, 6, 18, 56, 176, 558"
    yield "involution (1, 1) at y = -1 and y = -2", y_specializations

    def alternating():
        n = 10
        pair = involution_gf(2, 2, n)[0]
        got = _ints(ftra_apply(pair, _geometric(-1, n)), n)
        ok, detail = _sequence("involution_22_on_alternating_signs", got)
        cf = _ints(cf_expand(c["involution_22_alternating"], n), n) == got
        return ok and cf and got == list(TABLE["A151090"].terms[:n]), detail
    yield "involution (2, 2) times alternating signs", alternating



def _s6():
    spec = laurent_biorthogonal(1, 3)
    c = catalog.cfracs()
    arr = riordan_matrix(coefficient_array(spec, 10), 10)
    yield "coefficient array", lambda: _golden_triangle("lbp_13_coefficients", arr)
    yield "moment array", lambda: _golden_triangle("lbp_13_moments", arr.inverse())

    def recurrence():
        polys = recurrence_polynomials(spec, 10)
        return all(polys[n] == list(arr.rows[n]) for n in range(10)), "P_0 .. P_9"
    yield "coefficient array rows are the polynomials", recurrence

    mom = moments(spec, 12)
    yield "moment sequence", lambda: _sequence(
        "lbp_13_moment_sequence", [int(m.to_fraction()) for m in mom])

    def three_fractions():
        n = 12
        bad = [k for k in ("lbp_thron", "lbp_stieltjes", "lbp_jacobi")
               if cf_expand(c[k], n).tolist() != mom]
        g = parse_fps("4/(3+x+sqrt(1-10*x+x^2))", n)
        return not bad and g.tolist() == mom, "thron, stieltjes, jacobi and closed form"
    yield "moment fractions", three_fractions

    def bivariate():
        n = 10
        inv = riordan_matrix(coefficient_array(spec, n), n).inverse()
        target = inv.bivariate()
        closed = parse_fps("12/(9-y+(3-7*y)*x+(y+3)*sqrt(1-10*x+x^2))", n)
        bad = [k for k in ("lbp_bivariate_jacobi", "lbp_bivariate_thron")
               if not _same(cf_expand(c[k], n), target, n)]
        return not bad and _same(closed, target, n), "jacobi, thron and closed form"
    yield "moment array fractions", bivariate


def _s7():
    c = catalog.cfracs()
    e = catalog.exp_pairs(10)
    yield "[e^x, x] is Pascal", lambda: (
        eriordan_matrix(e["binomial"], 10) == named_triangle("binomial", 10), "order 10")

    def cf_triangle(name, n):
        return triangle_from_bivariate(cf_expand(c[name], n))
    for name in ("multiplier_squares", "multiplier_triangulars", "multiplier_naturals"):
        yield f"{name} array", lambda name=name: _golden_triangle(
            name, cf_triangle(name, len(golden_rows(name))))

    yield "squares array is [e^x/(2-e^x), x]", lambda: (
        cf_triangle("multiplier_squares", 10) == eriordan_matrix(e["fubini_binomial"], 10), "order 10")
    yield "naturals array is exponential", lambda: (
        cf_triangle("multiplier_naturals", 10) == eriordan_matrix(e["naturals_column"], 10), "order 10")

    def moment_column():
        n = 10
        col = eriordan_matrix(e["naturals_moment"], n).column(0)
        return col == cf_expand(c["multiplier_naturals"], n).tolist(), "first column, with y"
    yield "naturals fraction is the first column of [g(y), f]", moment_column

    def production():
        ok, detail = _golden_production("multiplier_naturals_production",
                                        eriordan_matrix(e["naturals_moment"], 7))
        _, _, za = exp_production_za(e["naturals_moment"].g.truncate(7), e["naturals_moment"].f.truncate(8))
        rows = golden_rows("multiplier_naturals_production")
        za_ok = [[za[i, j] for j in range(min(6, i + 2))] for i in range(6)] == rows
        return ok and za_ok, detail + ", numeric and Z/A"
    yield "naturals production matrix", production

    def sums():
        sq = triangle_sums(cf_triangle("multiplier_squares", 10))
        tri = triangle_sums(cf_triangle("multiplier_triangulars", 10))
        col = cf_triangle("multiplier_squares", 10).column(0)
        ok = ([int(v.to_fraction()) for v in sq.row] == list(TABLE["A007047"].terms[:10])
              and [int(v.to_fraction()) for v in col] == list(TABLE["A000629"].terms[:10]))
        ok2, detail = _sequence("multiplier_triangulars_row_sums",
                                [int(v.to_fraction()) for v in tri.row])
        return ok and ok2, detail
    yield "row sums and first columns", sums

    yield "ordinary schroeder_pair fraction", lambda: _cf_equals_pair(
        "schroeder_pair_ordinary", catalog.pairs(10)["schroeder_pair"])


def _s8():
    c = catalog.cfracs()
    n = 8
    for name in ("narayana", "narayana_shifted", "nb_product", "little_q_schroeder", "nb_conjugate"):
        yield f"{name} triangle", lambda name=name: _golden_triangle(name, named_triangle(name, 6))

    def cf_is(name, tri):
        return triangle_from_bivariate(cf_expand(c[name], n)) == named_triangle(tri, n)

    yield "narayana jacobi fraction", lambda: (cf_is("narayana_jacobi", "narayana"), f"order {n}")
    yield "narayana closed form", lambda: (
        named_triangle("narayana", n).rows == tuple(tuple(narayana(i, k) for k in range(i + 1))
                                                    for i in range(n)), "C(n,k) C(n+1,k)/(k+1)")

    def thron_variants():
        target = named_triangle("narayana", n).bivariate()
        res = {k: _same(cf_expand(v, n), target, n) for k, v in narayana_thron_variants().items()}
        ok = res == {"constant_y_minus_1": True, "constant_y_plus_1": False,
                     "switch_to_y_plus_1": False}
        return ok, "only the constant y - 1 reading matches"
    yield "narayana thron reading", thron_variants
    yield "narayana thron fraction", lambda: (cf_is("narayana_thron", "narayana"), f"order {n}")
    yield "shifted narayana thron fraction", lambda: (
        cf_is("narayana_shifted_thron", "narayana_shifted"), f"order {n}")
    yield "N B fractions", lambda: (
        cf_is("nb_jacobi", "nb_product") and cf_is("nb_thron", "nb_product"), f"order {n}")

    def little_q():
        forms = [cf_expand(c[k], n) for k in ("little_q_stieltjes", "little_q_thron", "little_q_jacobi")]
        target = named_triangle("little_q_schroeder", n).bivariate()
        return all(_same(f, target, n) for f in forms), "stieltjes, thron and jacobi agree"
    yield "little q-schroeder triple", little_q
    yield "B^-1 N B fraction", lambda: (cf_is("nb_conjugate_jacobi", "nb_conjugate"), f"order {n}")

    def conjugate_sums():
        s = triangle_sums(named_triangle("nb_conjugate", 10))
        rows = [int(v.to_fraction()) for v in s.row]
        diag = [int(v.to_fraction()) for v in s.diagonal]
        ok, detail = _sequence("nb_conjugate_diagonal_sums", diag)
        return ok and rows == list(TABLE["A071356"].terms[:10]), detail
    yield "B^-1 N B row and diagonal sums", conjugate_sums

    def alternating_transform():
        s = triangle_sums(named_triangle("nb_conjugate", 12))
        diag = [int(v.to_fraction()) for v in s.diagonal]
        t = schroeder_alternating_transform(13)
        cf = _ints(cf_expand(c["alternating_schroeder_thron"], 12), 12)
        return diag == t[1:13] and cf == t[:12], "d_n = t_(n+1); thron fraction gives t_n"
    yield "diagonal sums vs alternating schroeder transform", alternating_transform


SUITES = {
    "s1": ("thron fractions for Riordan arrays", _s1),
    "s2": ("lattice paths and schroeder peaks", _s2),
    "s3": ("jacobi fractions with a distinguished level 0", _s3),
    "s4": ("one array, several fractions", _s4),
    "s5": ("riordan involutions", _s5),
    "s6": ("laurent biorthogonal moments", _s6),
    "s7": ("ordinary to exponential arrays", _s7),
    "s8": ("narayana triangle and relatives", _s8),
}


def run_suite(suite):
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    out = []
    for name, thunk in SUITES[suite][1]():
        try:
            passed, detail = thunk()
        except (RiordanError, ArithmeticError, IndexError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(Check(suite, name, bool(passed), str(detail)))
    return out


def run(suite="all"):
    """Machine-readable report for one suite or all of them."""
    ids = sorted(SUITES) if suite == "all" else [suite]
    report = {"suites": {}, "passed": True}
    for sid in ids:
        checks = run_suite(sid)
        report["suites"][sid] = {
            "title": SUITES[sid][0],
            "passed": all(ch.passed for ch in checks),
            "checks": [{"name": ch.name, "passed": ch.passed, "detail": ch.detail}
                       for ch in checks],
        }
        report["passed"] &= report["suites"][sid]["passed"]
    return report
