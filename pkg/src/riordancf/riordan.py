"""Ordinary Riordan arrays (g, f) and the number triangles they generate."""

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import InsufficientOrder, InvalidF, InvalidG, SingularDiagonal, ZeroConstant
from .series import FPS, Y, YPoly, as_ypoly, YPOLY_ZERO

__all__ = ["Triangle", "RiordanPair", "RiordanFit", "TriangleSums",
           "riordan_new", "riordan_matrix", "riordan_mul", "riordan_inv",
           "ftra_apply", "bivariate_gf", "riordan_from_bivariate",
           "triangle_sums", "is_involution", "triangle_from_bivariate"]


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular matrix; row n holds entries (n, 0) .. (n, n).

    Entries are YPoly values, so plain integer rows compare equal:
    ``Triangle.from_rows([[1], [1, 1]]).tolist() == [[1], [1, 1]]``.
    """

    rows: tuple
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @classmethod
    def from_rows(cls, rows, name=None):
        """Build from ragged rows; trailing zeros of short rows may be omitted
        and zeros above the diagonal are dropped."""
        out = []
        for n, row in enumerate(rows):
            row = list(row)
            if any(as_ypoly(c) for c in row[n + 1:]):
                raise ValueError(f"row {n} has a nonzero entry above the diagonal")
            row = row[:n + 1] + [0] * (n + 1 - len(row))
            out.append(tuple(as_ypoly(c) for c in row))
        return cls(tuple(out), name)

    @classmethod
    def from_function(cls, order, fn, name=None):
        return cls.from_rows([[fn(n, k) for k in range(n + 1)] for n in range(order)], name)

    @classmethod
    def identity(cls, order):
        return cls.from_function(order, lambda n, k: int(n == k), "identity")

    @property
    def order(self):
        return len(self.rows)

    def __getitem__(self, nk):
        n, k = nk
        if not 0 <= n < self.order:
            raise InsufficientOrder(f"row {n} is beyond order {self.order}")
        if k < 0 or k > n:
            return YPOLY_ZERO
        return self.rows[n][k]

    def tolist(self):
        return [list(r) for r in self.rows]

    def column(self, k):
        return [self.rows[n][k] for n in range(k, self.order)]

    def truncate(self, order):
        return Triangle(self.rows[:order], self.name)

    def is_rational(self):
        return all(c.is_constant() for row in self.rows for c in row)

    def subs_y(self, value):
        return Triangle(tuple(tuple(as_ypoly(c(value)) for c in row) for row in self.rows),
                        self.name)

    def __matmul__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        n = min(self.order, other.order)
        rows = []
        for i in range(n):
            a = self.rows[i]
            row = []
            for k in range(i + 1):
                acc = YPOLY_ZERO
                for j in range(k, i + 1):
                    if a[j]:
                        acc = acc + a[j] * other.rows[j][k]
                row.append(acc)
            rows.append(tuple(row))
        return Triangle(tuple(rows))

    def inverse(self):
        """Exact inverse by forward substitution."""
        n = self.order
        inv_diag = []
        for i in range(n):
            d = self.rows[i][i]
            if not d or not d.is_constant():
                raise SingularDiagonal(f"diagonal entry ({i},{i}) = {d} is not a unit")
            inv_diag.append(1 / d.constant_term())
        x = [[YPOLY_ZERO] * (i + 1) for i in range(n)]
        for k in range(n):
            x[k][k] = YPoly._raw([inv_diag[k]])
            for i in range(k + 1, n):
                acc = YPOLY_ZERO
                row = self.rows[i]
                for j in range(k, i):
                    if row[j]:
                        acc = acc + row[j] * x[j][k]
                x[i][k] = -acc * inv_diag[i]
        return Triangle(tuple(tuple(r) for r in x))

    def bivariate(self):
        """Row polynomials sum_k T(n, k) y^k as a series in x."""
        return FPS._raw([YPoly._raw(list(_fractions(row))) for row in self.rows])

    def __str__(self):
        cells = [[str(c) for c in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _fractions(row):
    for c in row:
        if not c.is_constant():
            raise ValueError("bivariate form needs rational entries")
        yield c.constant_term()


@dataclass(frozen=True)
class RiordanPair:
    """A validated pair (g, f): g(0) != 0, f(0) = 0, f'(0) != 0."""

    g: FPS
    f: FPS

    def __post_init__(self):
        if self.g.order < 1 or not self.g[0]:
            raise InvalidG("g must have a nonzero constant term")
        if self.f.order < 2:
            raise InvalidF("f must be known at least to order 2")
        if self.f[0]:
            raise InvalidF("f must have zero constant term")
        if not self.f[1]:
            raise InvalidF("f must have a nonzero x^1 coefficient")

    @property
    def order(self):
        return min(self.g.order, self.f.order)

    def __mul__(self, other):
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return riordan_mul(self, other)

    def inverse(self):
        return riordan_inv(self)

    def matrix(self, order=None):
        return riordan_matrix(self, self.order if order is None else order)

    def is_bell(self):
        """True when f = x*g to the common order."""
        n = min(self.g.order + 1, self.f.order)
        return self.f.truncate(n) == self.g.shift_up(1).truncate(n)


def riordan_new(g, f):
    return RiordanPair(g, f)


def riordan_matrix(r, order):
    """Entry (n, k) = [x^n] g f^k."""
    if r.g.order < order or r.f.order < order:
        raise InsufficientOrder(f"pair is only known to order {r.order}, asked {order}")
    g, f = r.g.truncate(order), r.f.truncate(order)
    rows = [[] for _ in range(order)]
    col = g
    for k in range(order):
        for n in range(k, order):
            rows[n].append(col[n])
        col = col * f
    return Triangle(tuple(tuple(r) for r in rows))


def riordan_mul(r1, r2):
    """(g, f) * (u, v) = (g u(f), v(f))."""
    return RiordanPair(r1.g * r2.g.compose(r1.f), r2.f.compose(r1.f))


def riordan_inv(r):
    """(g, f)^-1 = (1 / g(fbar), fbar)."""
    fbar = r.f.reversion()
    return RiordanPair(1 / r.g.compose(fbar), fbar)


def ftra_apply(r, h):
    """The fundamental theorem action g(x) h(f(x))."""
    return r.g * h.compose(r.f)


def bivariate_gf(r, order=None):
    """G(x, y) = g / (1 - y f), computed by series division."""
    n = r.order if order is None else order
    if r.order < n:
        raise InsufficientOrder(f"pair is only known to order {r.order}")
    g, f = r.g.truncate(n), r.f.truncate(n)
    return g / (1 - Y * f)


class RiordanFit(NamedTuple):
    pair: Optional[RiordanPair]
    is_riordan: bool
    order: int


def riordan_from_bivariate(G):
    """Recover (g, f) from a bivariate generating function.

    The candidates are g = G(x, 0) and f = 1 - G(x, 0) / G(x, 1); the flag
    says whether g / (1 - y f) reproduces G up to its order.  (Substituting
    y = 1 for g, as one sometimes sees written, would give the row sums,
    not the first column.)
    """
    g = G.subs_y(0)
    if not g.order or not g[0]:
        raise ZeroConstant("G(0, 0) must be nonzero")
    g1 = G.subs_y(1)
    if not g1[0]:
        raise ZeroConstant("G(0, 1) must be nonzero")
    f = 1 - g / g1
    try:
        pair = RiordanPair(g, f)
    except (InvalidG, InvalidF):
        return RiordanFit(None, False, G.order)
    return RiordanFit(pair, bivariate_gf(pair, G.order) == G, G.order)


def triangle_from_bivariate(G, name=None):
    """Read the triangle [x^n][y^k] G off a bivariate series."""
    return Triangle.from_function(G.order, lambda n, k: G[n][k], name)


class TriangleSums(NamedTuple):
    row: list
    diagonal: list
    alternating: list


def triangle_sums(t):
    n = t.order
    row = [sum(t.rows[i], YPOLY_ZERO) for i in range(n)]
    diag = [sum((t[i - k, k] for k in range(i // 2 + 1)), YPOLY_ZERO) for i in range(n)]
    alt = [sum((c if k % 2 == 0 else -c for k, c in enumerate(t.rows[i])), YPOLY_ZERO)
           for i in range(n)]
    return TriangleSums(row, diag, alt)


def is_involution(r, order):
    m = riordan_matrix(r, order)
    return m @ m == Triangle.identity(order)
