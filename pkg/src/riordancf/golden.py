"""Printed reference matrices and sequences, transcribed verbatim.

Entries are ints, or strings in y for the parametrized production
matrices.  Use ``golden_rows`` to get them as YPoly rows.
"""

from .expr import parse_ypoly

__all__ = ["MATRICES", "SEQUENCES", "golden_rows"]

MATRICES = {
    "schroeder_level0": [
        [1], [1, 1], [1, 4, 1], [1, 13, 7, 1], [1, 44, 34, 10, 1]],
    "schroeder_peaks": [
        [1], [1, 1], [3, 2, 1], [11, 7, 3, 1], [45, 28, 12, 4, 1],
        [197, 121, 52, 18, 5, 1]],
    "schroeder_peaks_production": [
        [1, 1], [2, 1, 1], [4, 2, 1, 1], [8, 4, 2, 1, 1], [16, 8, 4, 2, 1, 1],
        [32, 16, 8, 4, 2, 1]],
    "level0_jacobi_2314": [
        [1], [2, 1], [7, 5, 1], [23, 23, 8, 1], [88, 101, 48, 11, 1]],
    "bell_schroeder": [
        [1], [0, 1], [0, 2, 1], [0, 6, 4, 1], [0, 22, 16, 6, 1], [0, 90, 68, 30, 8, 1]],
    "bell_schroeder_production": [
        [0, 1], [0, 2, 1], [0, 2, 2, 1], [0, 2, 2, 2, 1], [0, 2, 2, 2, 2, 1],
        [0, 2, 2, 2, 2, 2]],
    "schroeder_plus_one_production": [
        [1, 1], [1, 2, 1], [1, 2, 2, 1], [1, 2, 2, 2, 1], [1, 2, 2, 2, 2, 1],
        [1, 2, 2, 2, 2, 2]],
    "schroeder_plus_one": [
        [1], [1, 1], [2, 3, 1], [6, 10, 5, 1], [22, 38, 22, 7, 1],
        [90, 158, 98, 38, 9, 1]],
    "delannoy_signed": [
        [1], [-1, 1], [1, -3, 1], [-1, 5, -5, 1], [1, -7, 13, -7, 1],
        [-1, 9, -25, 25, -9, 1]],
    "schroeder_pair_production": [
        [2, 1], [2, 2, 1], [2, 2, 2, 1], [2, 2, 2, 2, 1], [2, 2, 2, 2, 2, 1],
        [2, 2, 2, 2, 2, 2]],
    "no_level1_horizontal": [
        [1], [1, 1], [2, 2, 1], [6, 5, 3, 1], [22, 16, 9, 4, 1], [90, 60, 31, 14, 5, 1]],
    "involution_11": [
        [1], [0, -1], [0, -1, 1], [0, -1, 2, -1], [0, -2, 3, -3, 1], [0, -4, 6, -6, 4, -1]],
    "involution_11_coefficients_production": [
        ["-y", 1], ["-y", 1, 1], [0, 1, 1, 1], [0, 0, 1, 1, 1], [0, 0, 0, 1, 1]],
    "involution_22": [
        [1], [2, -1], [5, -5, 1], [14, -20, 8, -1], [43, -76, 44, -11, 1],
        [142, -287, 210, -77, 14, -1]],
    "lbp_13_coefficients": [
        [1], [-1, 1], [-1, -3, 1], [-1, -1, -5, 1], [-1, 1, 3, -7, 1],
        [-1, 3, 7, 11, -9, 1]],
    "lbp_13_moments": [
        [1], [1, 1], [4, 3, 1], [22, 16, 5, 1], [142, 102, 32, 7, 1],
        [1006, 718, 226, 52, 9, 1]],
    "multiplier_squares": [
        [1], [2, 1], [6, 4, 1], [26, 18, 6, 1], [150, 104, 36, 8, 1],
        [1082, 750, 260, 60, 10, 1], [9366, 6492, 2250, 520, 90, 12, 1]],
    "multiplier_triangulars": [
        [1], [2, 1], [6, 4, 1], [26, 18, 6, 1], [146, 104, 36, 8, 1],
        [994, 730, 260, 60, 10, 1]],
    "multiplier_naturals": [
        [1], [2, 1], [6, 4, 1], [26, 18, 6, 1], [142, 104, 36, 8, 1],
        [906, 710, 260, 60, 10, 1]],
    "multiplier_naturals_production": [
        ["y+2", 1], [2, "y+5", 1], [0, 4, "y+8", 1], [0, 0, 6, "y+11", 1],
        [0, 0, 0, 8, "y+14", 1], [0, 0, 0, 0, 10, "y+17"]],
    "narayana": [
        [1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1], [1, 15, 50, 50, 15, 1]],
    "narayana_shifted": [
        [1], [0, 1], [0, 1, 1], [0, 1, 3, 1], [0, 1, 6, 6, 1], [0, 1, 10, 20, 10, 1]],
    "nb_product": [
        [1], [2, 1], [5, 5, 1], [14, 21, 9, 1], [42, 84, 56, 14, 1],
        [132, 330, 300, 120, 20, 1]],
    "little_q_schroeder": [
        [1], [1, 0], [2, 1, 0], [5, 5, 1, 0], [14, 21, 9, 1, 0], [42, 84, 56, 14, 1, 0]],
    "nb_conjugate": [
        [1], [1, 1], [2, 3, 1], [4, 9, 6, 1], [9, 26, 26, 10, 1], [21, 75, 100, 60, 15, 1]],
}

SEQUENCES = {
    "schroeder_level0_on_powers_of_3": [1, 4, 22, 130, 790],
    "level0_jacobi_2314_on_powers_of_2": [1, 4, 21, 109, 586],
    "involution_22_on_alternating_signs": [1, 3, 11, 43, 175, 731],
    "lbp_13_moment_sequence": [1, 1, 4, 22, 142, 1006, 7570, 59410, 480910],
    "multiplier_triangulars_row_sums": [1, 3, 11, 51, 295, 2055],
    "nb_conjugate_diagonal_sums": [1, 1, 3, 7, 19, 53, 153, 453, 1367],
}


def golden_rows(name):
    """Rows of a printed matrix as lists of YPoly."""
    return [[parse_ypoly(str(c)) for c in row] for row in MATRICES[name]]
