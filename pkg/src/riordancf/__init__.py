"""Exact Riordan arrays, continued fractions and weighted lattice paths."""

from .cfrac import CFrac, CoeffSeq, cf_expand, jacobi, seq, stieltjes, stieltjes_to_jacobi, thron
from .eriordan import ExpRiordanPair, eriordan_matrix, fps_exp
from .errors import ParseError, PreconditionError, RiordanError, VerificationError
from .expr import parse_expr, parse_fps, parse_ypoly
from .lattice import WeightScheme, LevelWeights, count_weighted_paths
from .production import production_matrix, tridiagonal_to_jacobi
from .riordan import (RiordanPair, Triangle, bivariate_gf, ftra_apply, riordan_from_bivariate,
                      riordan_matrix)
from .series import FPS, Y, YPoly

__all__ = [
    "CFrac", "CoeffSeq", "cf_expand", "jacobi", "seq", "stieltjes", "stieltjes_to_jacobi", "thron",
    "ExpRiordanPair", "eriordan_matrix", "fps_exp",
    "ParseError", "PreconditionError", "RiordanError", "VerificationError",
    "parse_expr", "parse_fps", "parse_ypoly",
    "WeightScheme", "LevelWeights", "count_weighted_paths",
    "production_matrix", "tridiagonal_to_jacobi",
    "RiordanPair", "Triangle", "bivariate_gf", "ftra_apply", "riordan_from_bivariate",
    "riordan_matrix",
    "FPS", "Y", "YPoly",
]

__version__ = "0.1.0"
