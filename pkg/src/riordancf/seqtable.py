"""Offline table of the integer sequences that appear in this package.

Each entry carries where its terms came from.  Triangles are stored read
by rows.  ``identify`` does exact prefix matching only.
"""

from typing import NamedTuple

__all__ = ["SequenceEntry", "SEQUENCES", "identify", "MIN_MATCH_TERMS"]

MIN_MATCH_TERMS = 5


class SequenceEntry(NamedTuple):
    name: str
    description: str
    terms: tuple
    provenance: str


_ENTRIES = [
    SequenceEntry(
        "A000045", "Fibonacci numbers F(n)",
        (0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233),
        "standard initial values (F(0) = 0); diagonal sums of Pascal give F(n+1)"),
    SequenceEntry(
        "A000108", "Catalan numbers",
        (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786),
        "standard initial values, C(2n, n)/(n + 1)"),
    SequenceEntry(
        "A000629", "necklaces of partitions of n+1 labeled beads; EGF e^x/(2 - e^x)",
        (1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522, 204495126),
        "first six terms as printed (first column of [e^x/(2-e^x), x]); rest from the EGF"),
    SequenceEntry(
        "A000670", "Fubini numbers (ordered set partitions); EGF 1/(2 - e^x)",
        (1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563),
        "standard initial values, from the EGF"),
    SequenceEntry(
        "A001263", "Narayana triangle read by rows",
        (1, 1, 1, 1, 3, 1, 1, 6, 6, 1, 1, 10, 20, 10, 1),
        "printed triangle; C(n, k) C(n+1, k)/(k+1)"),
    SequenceEntry(
        "A006318", "large Schroeder numbers",
        (1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718),
        "standard initial values, sum_k C(n+k, 2k) C_k"),
    SequenceEntry(
        "A007047", "chains in the power set of an n-set; EGF e^(2x)/(2 - e^x)",
        (1, 3, 11, 51, 299, 2163, 18731, 189171, 2183339, 28349043, 408990251),
        "row sums of the printed [e^x/(2-e^x), x] triangle; rest from the EGF"),
    SequenceEntry(
        "A071356", "Motzkin paths with 2-colored rises and horizontals",
        (1, 2, 6, 20, 72, 272, 1064, 4272, 17504, 72896, 307648),
        "first ten terms as printed (row sums of B^-1 N B); rest from that triangle"),
    SequenceEntry(
        "A078481", "diagonal sums of B^-1 N B",
        (1, 1, 3, 7, 19, 53, 153, 453, 1367, 4191, 13015),
        "as printed"),
    SequenceEntry(
        "A126216", "Schroeder paths by peaks, none at level one (N B) read by rows",
        (1, 2, 1, 5, 5, 1, 14, 21, 9, 1, 42, 84, 56, 14, 1),
        "printed N B triangle"),
    SequenceEntry(
        "A151090", "GF J(3, 2, 2, ...; 2, 2, ...)",
        (1, 3, 11, 43, 175, 731, 3111, 13427, 58591, 257947, 1143943),
        "first six terms as printed; rest from the printed Jacobi fraction"),
    SequenceEntry(
        "A155862", "Schroeder paths with 3-colored level-0 rises",
        (1, 4, 22, 130, 790, 4870, 30274, 189202, 1186702, 7461982, 47007034),
        "first five terms as printed; rest from the same Riordan array action"),
    SequenceEntry(
        "A177896", "binomial conjugate B^-1 N B of the Narayana triangle, by rows",
        (1, 1, 1, 2, 3, 1, 4, 9, 6, 1, 9, 26, 26, 10, 1),
        "printed triangle"),
    SequenceEntry(
        "A230008", "row sums of the 1, 3, 6, 10 multiplier triangle (essentially A230008)",
        (1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255, 18868575, 241112675),
        "first six terms as printed; rest from the triangular-multiplier Jacobi fraction; "
        "the OEIS offset may differ"),
]

SEQUENCES = {e.name: e for e in _ENTRIES}


def identify(terms, min_terms=MIN_MATCH_TERMS):
    """Names of table entries that start with exactly these terms."""
    terms = tuple(int(t) for t in terms)
    if len(terms) < min_terms:
        raise ValueError(f"need at least {min_terms} terms to identify a sequence")
    return [e.name for e in _ENTRIES if e.terms[:len(terms)] == terms]
