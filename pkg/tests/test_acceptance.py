"""Acceptance gate: eight criteria, each checked exactly.

Every criterion prints one PASS/FAIL line.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest, where the lines
are repeated in the terminal summary.
"""

import random

import pytest

from riordancf import catalog
from riordancf.cfrac import (cf_expand, involution_gf, jfrac_level0_to_riordan,
                             predicted_inverse_jfrac, rational_riordan_inverse_jfrac,
                             thron_level0, thron_to_jacobi_level0)
from riordancf.eriordan import eriordan_matrix
from riordancf.golden import MATRICES, SEQUENCES, golden_rows
from riordancf.lattice import count_weighted_paths, path_kind_for, weights_for_cfrac
from riordancf.orthopoly import coefficient_array, laurent_biorthogonal, moments, orthogonal
from riordancf.production import exp_production_za, production_matrix, tridiagonal_to_jacobi
from riordancf.riordan import (RiordanPair, Triangle, bivariate_gf, ftra_apply, is_involution,
                               riordan_from_bivariate, riordan_matrix, triangle_from_bivariate,
                               triangle_sums)
from riordancf.series import FPS, Y, fps_compose, fps_reversion
from riordancf.triangles import (named_triangle, narayana_thron_variants,
                                 schroeder_alternating_transform)

RESULTS = {}


def report(number, title, passed, detail):
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    return passed


# 1. printed matrices

def _square(p, n):
    return [[p[i, j] for j in range(min(n, i + 2))] for i in range(n)]


def _builders():
    p = catalog.pairs(10)
    e = catalog.exp_pairs(10)
    c = catalog.cfracs()

    def cf_tri(name, n):
        return triangle_from_bivariate(cf_expand(c[name], n))

    lbp = riordan_matrix(coefficient_array(laurent_biorthogonal(1, 3), 10), 10)
    involution_11_coeffs = riordan_matrix(
        coefficient_array(orthogonal(1, 1, 1 + Y, 1 + Y), 9), 9)
    tri = {
        "schroeder_level0": lambda n: riordan_matrix(p["schroeder_level0"], n),
        "schroeder_peaks": lambda n: named_triangle("schroeder_peaks", n),
        "level0_jacobi_2314": lambda n: cf_tri("level0_jacobi_2314", n),
        "bell_schroeder": lambda n: riordan_matrix(p["bell_schroeder"], n),
        "schroeder_plus_one": lambda n: riordan_matrix(p["schroeder_plus_one"], n),
        "delannoy_signed": lambda n: riordan_matrix(p["delannoy_signed"], n),
        "no_level1_horizontal": lambda n: riordan_matrix(p["no_level1_horizontal"], n),
        "involution_11": lambda n: riordan_matrix(involution_gf(1, 1, 10)[0], n),
        "involution_22": lambda n: riordan_matrix(involution_gf(2, 2, 10)[0], n),
        "lbp_13_coefficients": lambda n: lbp.truncate(n),
        "lbp_13_moments": lambda n: lbp.inverse().truncate(n),
        "multiplier_squares": lambda n: cf_tri("multiplier_squares", n),
        "multiplier_triangulars": lambda n: cf_tri("multiplier_triangulars", n),
        "multiplier_naturals": lambda n: cf_tri("multiplier_naturals", n),
    }
    for name in ("narayana", "narayana_shifted", "nb_product", "little_q_schroeder",
                 "nb_conjugate"):
        tri[name] = lambda n, name=name: named_triangle(name, n)
    # production matrices: the array they come from, one row larger than printed
    prod = {
        "schroeder_peaks_production": lambda n: named_triangle("schroeder_peaks", n),
        "bell_schroeder_production": lambda n: riordan_matrix(p["bell_schroeder"], n),
        "schroeder_plus_one_production": lambda n: riordan_matrix(p["schroeder_plus_one"], n),
        "schroeder_pair_production": lambda n: riordan_matrix(p["schroeder_pair"], n),
        "involution_11_coefficients_production":
            lambda n: involution_11_coeffs.truncate(n).inverse(),
        "multiplier_naturals_production": lambda n: eriordan_matrix(e["naturals_moment"], n),
    }
    return tri, prod


def criterion_1():
    tri, prod = _builders()
    missing = set(MATRICES) - set(tri) - set(prod)
    bad = []
    for name, build in tri.items():
        want = golden_rows(name)
        got = build(len(want)).tolist()
        if got != want:
            bad.append(name)
    for name, build in prod.items():
        want = golden_rows(name)
        if _square(production_matrix(build(len(want) + 1)), len(want)) != want:
            bad.append(name)
    detail = f"{len(tri) + len(prod)} printed matrices"
    if missing or bad:
        detail = f"uncovered {sorted(missing)}, mismatched {bad}"
    return report(1, "golden matrices", not missing and not bad, detail)


# 2. printed sequences

def _ints(values):
    return [int(v.to_fraction()) if hasattr(v, "to_fraction") else int(v) for v in values]


def _geometric(r, n):
    return FPS([r ** k for k in range(n)], order=n)


def _sequences():
    p = catalog.pairs(12)
    n = 12
    nb_conj = triangle_sums(named_triangle("nb_conjugate", 10)).diagonal
    return {
        "schroeder_level0_on_powers_of_3": ftra_apply(p["schroeder_level0"], _geometric(3, n)).tolist(),
        "level0_jacobi_2314_on_powers_of_2": ftra_apply(
            jfrac_level0_to_riordan(Y + 2, Y + 3, 1, 4, order=n), _geometric(2, n)).tolist(),
        "involution_22_on_alternating_signs": ftra_apply(
            involution_gf(2, 2, n)[0], _geometric(-1, n)).tolist(),
        "lbp_13_moment_sequence": moments(laurent_biorthogonal(1, 3), n),
        "multiplier_triangulars_row_sums": triangle_sums(triangle_from_bivariate(
            cf_expand(catalog.cfracs()["multiplier_triangulars"], 8))).row,
        "nb_conjugate_diagonal_sums": nb_conj,
    }


def criterion_2():
    got = _sequences()
    bad = [k for k, want in SEQUENCES.items() if _ints(got[k][:len(want)]) != want]
    missing = set(SEQUENCES) - set(got)
    return report(2, "printed sequences", not bad and not missing,
                  f"{len(SEQUENCES)} sequences" if not bad else f"mismatched {bad}")


# 3. continued fractions against weighted path counts

ORACLE_Y = 2


def _oracle_fractions():
    cfs = dict(catalog.cfracs())
    cfs["thron_to_jacobi_example"] = thron_to_jacobi_level0(2, 3, -1, 4, 1, 5)
    cfs["thron_level0_example"] = thron_level0(2, 3, -1, 4, 1, 5)
    cfs["predicted_inverse_example"] = predicted_inverse_jfrac(2, 3, 1, 4)
    cfs["rational_inverse_example"] = rational_riordan_inverse_jfrac(2, 3, 1)
    return cfs


def criterion_3():
    n_max = 8
    bad = []
    cfs = _oracle_fractions()
    for name, cf in cfs.items():
        cf = cf.subs_y(ORACLE_Y)
        series = cf_expand(cf, n_max + 1)
        weights = weights_for_cfrac(cf, n_max + 1)
        kind = path_kind_for(cf)
        if any(series[n] != count_weighted_paths(kind, n, weights) for n in range(n_max + 1)):
            bad.append(name)
    return report(3, "oracle equivalence", not bad,
                  f"{len(cfs)} fractions at y = {ORACLE_Y}, n <= {n_max}" if not bad
                  else f"disagree: {bad}")


# 4. fraction identities on random parameters

def _tuples(seed, count, width, bound):
    rng = random.Random(seed)
    return [tuple(rng.randint(-bound, bound) for _ in range(width)) for _ in range(count)]


def _same(a, b, n):
    return a.truncate(n).tolist() == b.truncate(n).tolist()


def criterion_4():
    bad = []
    for a, b, c, d in _tuples(2, 20, 4, 5):
        n = 10
        inv = jfrac_level0_to_riordan(Y + a, Y + b, c, d, order=n).inverse()
        if not _same(bivariate_gf(inv, n), cf_expand(predicted_inverse_jfrac(a, b, c, d), n), n):
            bad.append(("inverse fraction", (a, b, c, d)))
    for t in _tuples(3, 30, 6, 5):
        if not _same(cf_expand(thron_level0(*t), 12), cf_expand(thron_to_jacobi_level0(*t), 12), 12):
            bad.append(("thron to jacobi", t))
    for a, b, c in _tuples(4, 10, 3, 5):
        n = 10
        den = FPS([1, a, b], order=n)
        pair = RiordanPair(FPS([1, c], order=n) / den, FPS.x(n) / den).inverse()
        if not _same(bivariate_gf(pair, n), cf_expand(rational_riordan_inverse_jfrac(a, b, c), n), n):
            bad.append(("rational inverse", (a, b, c)))
    for a, b in _tuples(5, 10, 2, 5):
        if not is_involution(involution_gf(a, b, 8)[0], 8):
            bad.append(("involution", (a, b)))
    return report(4, "fraction identities on random parameters", not bad,
                  "20 + 30 + 10 tuples, 10 involutions" if not bad else f"failed {bad[:3]}")


# 5. round trips

def _random_pair(rng, n):
    g = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-4, 4) for _ in range(n - 1)]
    f = [0, rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-4, 4) for _ in range(n - 2)]
    return RiordanPair(FPS(g, order=n), FPS(f, order=n))


def criterion_5():
    rng = random.Random(5)
    n = 10
    bad = 0
    for _ in range(50):
        r = _random_pair(rng, n)
        fit = riordan_from_bivariate(bivariate_gf(r, n))
        if not (fit.is_riordan and fit.pair == r):
            bad += 1
        if riordan_matrix(r * r.inverse(), n) != Triangle.identity(n):
            bad += 1
        if fps_compose(r.f, fps_reversion(r.f)) != FPS.x(n):
            bad += 1
    return report(5, "round-trip laws", not bad,
                  f"50 random pairs at order {n}" if not bad else f"{bad} failures")


# 6. production matrices

def criterion_6():
    n = 8
    e = catalog.exp_pairs(n + 1)
    bad = []
    names = ("fubini_binomial", "naturals_moment", "naturals_column")
    for name in names:
        pair = e[name]
        numeric = production_matrix(eriordan_matrix(pair, n + 1))
        _, _, za = exp_production_za(pair.g, pair.f)
        size = min(numeric.size, za.size)
        if size < n or any(numeric[i, j] != za[i, j] for i in range(n) for j in range(n)):
            bad.append(name)
    for seed_tuple in _tuples(6, 5, 4, 3):
        inv = riordan_matrix(coefficient_array(orthogonal(*seed_tuple), n + 1), n + 1).inverse()
        cf = tridiagonal_to_jacobi(production_matrix(inv))
        if cf_expand(cf, n).tolist() != inv.column(0)[:n]:
            bad.append(("round trip", seed_tuple))
    return report(6, "production-matrix consistency", not bad,
                  "3 exponential pairs, 5 tridiagonal round trips at order 8" if not bad
                  else f"failed {bad}")


# 7. one array, several fractions

MULTI = {
    "bell_schroeder": ("bell_schroeder_stieltjes", "bell_schroeder_jacobi", "bell_schroeder_thron"),
    "delannoy_signed": ("delannoy_signed_jacobi", "delannoy_signed_thron"),
    "schroeder_pair": ("schroeder_pair_jacobi", "schroeder_pair_thron"),
    "schroeder_pair_inverse": ("schroeder_pair_inverse_jacobi", "schroeder_pair_inverse_thron"),
    "no_level1_horizontal": ("no_level1_horizontal_jacobi", "no_level1_horizontal_thron"),
}


def criterion_7():
    n = 12
    p, c = catalog.pairs(n), catalog.cfracs()
    bad = [cf for array, names in MULTI.items() for cf in names
           if not _same(cf_expand(c[cf], n), bivariate_gf(p[array], n), n)]
    return report(7, "multi-representation", not bad,
                  f"{sum(map(len, MULTI.values()))} fractions for {len(MULTI)} arrays at order {n}"
                  if not bad else f"mismatched {bad}")


# 8. Narayana family

def criterion_8():
    n = 8
    c = catalog.cfracs()

    def is_triangle(cf, name):
        return triangle_from_bivariate(cf_expand(c[cf], n)) == named_triangle(name, n)

    checks = {
        "jacobi": is_triangle("narayana_jacobi", "narayana"),
        "thron": is_triangle("narayana_thron", "narayana"),
    }
    target = named_triangle("narayana", n).bivariate()
    variants = {k: _same(cf_expand(v, n), target, n) for k, v in narayana_thron_variants().items()}
    checks["thron reading"] = variants == {"constant_y_minus_1": True, "constant_y_plus_1": False,
                                           "switch_to_y_plus_1": False}
    little_q = named_triangle("little_q_schroeder", n).bivariate()
    checks["little q"] = all(_same(cf_expand(c[k], n), little_q, n)
                             for k in ("little_q_stieltjes", "little_q_thron", "little_q_jacobi"))
    diag = _ints(triangle_sums(named_triangle("nb_conjugate", n)).diagonal)
    checks["diagonal sums"] = diag == schroeder_alternating_transform(n + 1)[1:]
    bad = [k for k, ok in checks.items() if not ok]
    return report(8, "narayana suite", not bad,
                  "jacobi, thron (y - 1 reading), little q triple, diagonal sums at order 8"
                  if not bad else f"failed {bad}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [criterion() for criterion in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
