"""Brute-force weighted lattice paths.

This is the independent check for continued-fraction expansions, so it
enumerates every path explicitly and multiplies step weights; there is no
memoisation or transfer-matrix shortcut.

Steps are ``"U"`` (rise), ``"D"`` (fall), ``"H"`` (horizontal; unit
width for Motzkin paths, width two for Schroeder paths).  A rise is
weighted by the height it starts from, a fall by the height it starts
from, a horizontal by its height.
"""

from collections import Counter
from dataclasses import dataclass, field

from .errors import TooLarge
from .series import YPoly, as_ypoly, YPOLY_ONE, YPOLY_ZERO

__all__ = ["LevelWeights", "WeightScheme", "iter_paths", "path_weight",
           "count_weighted_paths", "weights_for_cfrac", "path_kind_for",
           "MAX_SIZE"]

MAX_SIZE = 14
PATH_KINDS = ("dyck", "motzkin", "schroeder")


@dataclass(frozen=True)
class LevelWeights:
    """Weight per level: ``values[i]`` at level i, ``default`` above."""

    values: tuple = ()
    default: YPoly = YPOLY_ONE

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_ypoly(v) for v in self.values))
        object.__setattr__(self, "default", as_ypoly(self.default))

    def __call__(self, level):
        return self.values[level] if level < len(self.values) else self.default


@dataclass(frozen=True)
class WeightScheme:
    rise: LevelWeights = field(default_factory=LevelWeights)
    fall: LevelWeights = field(default_factory=LevelWeights)
    horizontal: LevelWeights = field(default_factory=LevelWeights)


def iter_paths(kind, n):
    """Yield every path of the given kind and size as a string of steps.

    Size is the length for Motzkin paths and the semi-length for Dyck and
    Schroeder paths.
    """
    if kind not in PATH_KINDS:
        raise ValueError(f"unknown path kind {kind!r}")
    width = n if kind == "motzkin" else 2 * n

    def walk(prefix, remaining, height):
        if remaining == 0:
            if height == 0:
                yield prefix
            return
        if height > remaining:
            return
        yield from walk(prefix + "U", remaining - 1, height + 1)
        if height > 0:
            yield from walk(prefix + "D", remaining - 1, height - 1)
        if kind == "motzkin":
            yield from walk(prefix + "H", remaining - 1, height)
        elif kind == "schroeder" and remaining >= 2:
            yield from walk(prefix + "H", remaining - 2, height)

    yield from walk("", width, 0)


def path_weight(path, weights):
    w = YPOLY_ONE
    h = 0
    for step in path:
        if step == "U":
            w = w * weights.rise(h)
            h += 1
        elif step == "D":
            w = w * weights.fall(h)
            h -= 1
        else:
            w = w * weights.horizontal(h)
    return w


def count_weighted_paths(kind, n, weights=None):
    """Sum of path weights over all paths of the kind and size."""
    if n < 0:
        raise ValueError("size must be non-negative")
    if n > MAX_SIZE:
        raise TooLarge(f"size {n} exceeds the enumeration limit {MAX_SIZE}")
    weights = weights or WeightScheme()
    # paths with the same steps at the same heights have the same weight
    groups = Counter(_signature(p) for p in iter_paths(kind, n))
    total = YPOLY_ZERO
    for sig, count in groups.items():
        total = total + _signature_weight(sig, weights) * count
    return total


def _signature(path):
    steps = []
    h = 0
    for step in path:
        if step == "D":
            h -= 1
        steps.append((step, h))
        if step == "U":
            h += 1
    return tuple(sorted(Counter(steps).items()))


def _signature_weight(sig, weights):
    table = {"U": weights.rise, "D": weights.fall, "H": weights.horizontal}
    w = YPOLY_ONE
    for (step, h), mult in sig:
        # a fall ending at h starts at h + 1
        c = table[step](h + 1 if step == "D" else h)
        if c != 1:
            w = w * c ** mult
    return w


def path_kind_for(cf):
    return {"stieltjes": "dyck", "jacobi": "motzkin", "thron": "schroeder"}[cf.kind]


def weights_for_cfrac(cf, max_level):
    """Weights under which the fraction counts paths up to height max_level.

    Rises carry weight 1 and the numerator of level i sits on the fall
    starting at height i + 1.
    """
    levels = range(max_level + 1)
    falls = [YPOLY_ZERO] + [(cf.alpha if cf.kind == "stieltjes" else cf.beta)[i]
                            for i in range(max_level)]
    if cf.kind == "stieltjes":
        horizontal = LevelWeights((), YPOLY_ZERO)
    else:
        horizontal = LevelWeights(tuple(cf.alpha[i] for i in levels), YPOLY_ZERO)
    return WeightScheme(LevelWeights(), LevelWeights(tuple(falls), YPOLY_ZERO), horizontal)
