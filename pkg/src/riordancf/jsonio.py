"""JSON forms of triangles, sequences, continued fractions and path weights.

Entries are strings: "p/q" (or "p" for integers) for rationals and
"3 - 2*y + y^2" for polynomials in y.  Writing then reading a triangle
gives back exactly the same entries.
"""

import json
import sys

from .cfrac import CFrac, CoeffSeq
from .errors import ParseError
from .expr import parse_ypoly
from .lattice import LevelWeights, WeightScheme
from .riordan import Triangle
from .series import as_ypoly

__all__ = ["entry_to_str", "entry_from_str", "triangle_to_json", "triangle_from_json",
           "sequence_to_json", "cfrac_from_json", "cfrac_to_json", "weights_from_json",
           "load_json"]


def entry_to_str(c):
    c = as_ypoly(c)
    return str(c.to_fraction()) if c.is_constant() else str(c)


def entry_from_str(text):
    if not isinstance(text, (str, int)):
        raise ParseError(f"entry must be a string or integer, not {type(text).__name__}")
    return parse_ypoly(str(text))


def triangle_to_json(t, name=None):
    return {
        "name": name if name is not None else t.name,
        "order": t.order,
        "ring": "Q" if t.is_rational() else "Q[y]",
        "rows": [[entry_to_str(c) for c in row] for row in t.rows],
    }


def triangle_from_json(obj):
    try:
        rows = obj["rows"]
    except (KeyError, TypeError) as exc:
        raise ParseError("triangle JSON needs a 'rows' list") from exc
    try:
        t = Triangle.from_rows([[entry_from_str(c) for c in row] for row in rows], obj.get("name"))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    if "order" in obj and obj["order"] != t.order:
        raise ParseError(f"'order' is {obj['order']} but there are {t.order} rows")
    return t


def sequence_to_json(terms, name=None):
    return {"name": name, "order": len(terms), "terms": [entry_to_str(c) for c in terms]}


def _seq_from_json(obj, key):
    if isinstance(obj, (str, int)):
        return CoeffSeq((), (entry_from_str(obj),))
    if not isinstance(obj, dict):
        raise ParseError(f"'{key}' must be a string or an object with prefix and tail")
    prefix = obj.get("prefix", [])
    tail = obj.get("tail", "0")
    if not isinstance(prefix, list):
        raise ParseError(f"'{key}.prefix' must be a list")
    period = tail if isinstance(tail, list) else [tail]
    if not period:
        raise ParseError(f"'{key}.tail' must not be empty")
    return CoeffSeq(tuple(entry_from_str(c) for c in prefix),
                    tuple(entry_from_str(c) for c in period))


def cfrac_from_json(obj):
    """{"kind": "jacobi", "a": {"prefix": ["y+2"], "tail": "3"}, "b": ...}.

    "alpha"/"beta" are accepted for "a"/"b"; a Stieltjes fraction takes
    only "a".  A list tail repeats periodically.
    """
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("continued fraction JSON needs a 'kind'")
    kind = obj["kind"]
    if kind not in ("stieltjes", "jacobi", "thron"):
        raise ParseError(f"unknown kind {kind!r}")
    a = obj.get("a", obj.get("alpha"))
    b = obj.get("b", obj.get("beta"))
    if a is None:
        raise ParseError("missing 'a'")
    if kind == "stieltjes":
        if b is not None:
            raise ParseError("a stieltjes fraction takes only 'a'")
        return CFrac(kind, _seq_from_json(a, "a"))
    if b is None:
        raise ParseError("missing 'b'")
    return CFrac(kind, _seq_from_json(a, "a"), _seq_from_json(b, "b"))


def cfrac_to_json(cf):
    """Inverse of ``cfrac_from_json`` for periodic fractions."""
    def one(s):
        if not s.is_periodic:
            raise ValueError("only periodic coefficient sequences have a JSON form")
        period = [entry_to_str(c) for c in s.period]
        return {"prefix": [entry_to_str(c) for c in s.prefix],
                "tail": period[0] if len(period) == 1 else period}
    out = {"kind": cf.kind, "a": one(cf.alpha)}
    if cf.beta is not None:
        out["b"] = one(cf.beta)
    return out


def _level_weights(obj, key):
    if obj is None:
        return LevelWeights()
    if isinstance(obj, (str, int)):
        return LevelWeights((), entry_from_str(obj))
    if isinstance(obj, list):
        return LevelWeights(tuple(entry_from_str(c) for c in obj), 1)
    if isinstance(obj, dict):
        return LevelWeights(tuple(entry_from_str(c) for c in obj.get("values", [])),
                            entry_from_str(obj.get("default", 1)))
    raise ParseError(f"'{key}' must be a value, a list or an object")


def weights_from_json(obj):
    """{"rise": ..., "fall": ..., "horizontal": ...}; each level weight is a
    single value, a list by level (1 above), or {"values": [...], "default": v}.
    Missing entries default to 1."""
    if not isinstance(obj, dict):
        raise ParseError("weights JSON must be an object")
    unknown = set(obj) - {"rise", "fall", "horizontal"}
    if unknown:
        raise ParseError(f"unknown weight keys: {', '.join(sorted(unknown))}")
    return WeightScheme(*(_level_weights(obj.get(k), k) for k in ("rise", "fall", "horizontal")))


def load_json(text_or_path):
    """Inline JSON (starting with '{'), '-' for stdin, or a file path."""
    text = text_or_path
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[")):
        try:
            with open(text, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {text_or_path!r}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
