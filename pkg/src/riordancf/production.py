"""Production matrices M^-1 * Mbar, where Mbar is M with its top row removed."""

from dataclasses import dataclass
from math import factorial

from .cfrac import CoeffSeq, CFrac
from .errors import BadSuperdiagonal, InsufficientOrder, NotTridiagonal
from .series import as_ypoly, YPOLY_ZERO

__all__ = ["ProductionMatrix", "production_matrix", "tridiagonal_to_jacobi",
           "exp_production_za"]


@dataclass(frozen=True)
class ProductionMatrix:
    """Square matrix of YPoly entries (lower Hessenberg for triangles)."""

    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        n = len(rows)
        out = []
        for row in rows:
            row = list(row) + [0] * (n - len(row))
            out.append(tuple(as_ypoly(c) for c in row[:n]))
        return cls(tuple(out))

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self):
        return [list(r) for r in self.entries]

    def band(self, offset):
        """Entries (i, i + offset) down the matrix."""
        n = self.size
        return [self.entries[i][i + offset] for i in range(max(0, -offset), min(n, n - offset))]

    def is_tridiagonal(self):
        return all(not c for i, row in enumerate(self.entries)
                   for j, c in enumerate(row) if abs(i - j) > 1)

    def __str__(self):
        cells = [[str(c) for c in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def production_matrix(t):
    """P = T^-1 Tbar, valid on rows and columns below t.order - 1."""
    n = t.order
    if n < 2:
        raise InsufficientOrder("need a triangle of order at least 2")
    m = n - 1
    inv = t.truncate(m).inverse()
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = YPOLY_ZERO
            for k in range(j - 1 if j else 0, i + 1):
                c = inv[i, k]
                if c:
                    acc = acc + c * t[k + 1, j]
            row.append(acc)
        rows.append(tuple(row))
    return ProductionMatrix(tuple(rows))


def tridiagonal_to_jacobi(p):
    """J(diagonal; subdiagonal) for a tridiagonal P with unit superdiagonal.

    The last diagonal and subdiagonal entries are repeated as the tail.
    """
    if not p.is_tridiagonal():
        raise NotTridiagonal("production matrix has entries outside the band")
    if any(c != 1 for c in p.band(1)):
        raise BadSuperdiagonal("superdiagonal is not all ones")
    diag, sub = p.band(0), p.band(-1)
    a = CoeffSeq(tuple(diag[:-1]), (diag[-1],))
    b = CoeffSeq(tuple(sub[:-1]), (sub[-1],)) if sub else CoeffSeq()
    return CFrac("jacobi", a, b)


def exp_production_za(g, f):
    """Z = g'(fbar)/g(fbar), A = f'(fbar) and the production matrix of [g, f].

    The matrix is read off e^(xz) (Z(x) + z A(x)):
    p(n, k) = n!/k! [x^(n-k)] Z + n!/(k-1)! [x^(n-k+1)] A.
    """
    fbar = f.reversion()
    z = g.derivative().compose(fbar) / g.compose(fbar)
    a = f.derivative().compose(fbar)
    m = min(z.order, a.order)
    rows = []
    for i in range(m):
        row = []
        for k in range(m):
            acc = YPOLY_ZERO
            if k <= i:
                acc = acc + z[i - k] * (factorial(i) // factorial(k))
            if k >= 1 and i - k + 1 >= 0:
                acc = acc + a[i - k + 1] * (factorial(i) // factorial(k - 1))
            row.append(acc)
        rows.append(tuple(row))
    return z, a, ProductionMatrix(tuple(rows))
