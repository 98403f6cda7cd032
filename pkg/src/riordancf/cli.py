"""Command-line interface.

Every subcommand prints one JSON document on stdout.  Errors go to stderr
as {"error": ..., "message": ...} with exit code 2 for malformed input,
3 for a violated precondition and 4 for a failed verification.
"""

import argparse
import json
import sys

from .cfrac import cf_expand
from .eriordan import ExpRiordanPair, eriordan_matrix, exp_revert_transform
from .errors import ParseError, PreconditionError, RiordanError, TooLarge, VerificationError
from .expr import parse_fps, parse_ypoly
from .jsonio import (cfrac_from_json, cfrac_to_json, entry_to_str, load_json,
                     sequence_to_json, triangle_to_json, weights_from_json)
from .lattice import MAX_SIZE as MAX_PATH_SIZE, count_weighted_paths, path_kind_for, weights_for_cfrac
from .production import exp_production_za, production_matrix, tridiagonal_to_jacobi
from .riordan import RiordanPair, Triangle, ftra_apply, riordan_matrix
from .seqtable import SEQUENCES, identify
from .series import YPOLY_ZERO
from . import verify as verify_mod

DEFAULT_ORDER = 16
MAX_ORDER = 64

EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFICATION = 2, 3, 4


def _order(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {value!r}")
    if not 1 <= n <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be between 1 and {MAX_ORDER}")
    return n


def _int_list(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise ParseError(f"terms must be comma-separated integers, got {text!r}")


def _pair(args, order):
    # evaluate one order deeper so that f/x keeps the requested precision
    g = parse_fps(args.g, order + 1)
    f = parse_fps(args.f, order + 1)
    return (ExpRiordanPair if args.exp else RiordanPair)(g, f)


def _matrix(pair, order):
    if isinstance(pair, ExpRiordanPair):
        return eriordan_matrix(pair, order)
    return riordan_matrix(pair, order)


def cmd_expand(args):
    cf = cfrac_from_json(load_json(args.cf))
    y_value = None if args.y_sub is None else parse_ypoly(args.y_sub)
    if y_value is not None and not y_value.is_constant():
        raise ParseError("--y-sub must be a rational number")
    series = cf_expand(cf, args.order, depth=args.depth,
                       y_value=None if y_value is None else y_value.to_fraction())
    if series.is_rational():
        return sequence_to_json(series.tolist(), name=str(cf))
    try:
        t = Triangle.from_rows([list(c.coeffs) for c in series.tolist()], name=str(cf))
    except ValueError:
        raise PreconditionError(
            "the expansion is not triangular in y; pass --y-sub to get a sequence") from None
    return triangle_to_json(t)


def cmd_riordan(args):
    pair = _pair(args, args.order)
    if args.inverse and not args.exp:
        pair = pair.inverse()
    t = _matrix(pair, args.order)
    if args.inverse and args.exp:
        t = t.inverse()
    return triangle_to_json(t)


def cmd_apply(args):
    pair = _pair(args, args.order)
    h = parse_fps(args.h, args.order)
    if args.exp:
        t = eriordan_matrix(pair, args.order)
        terms = [sum((t[n, k] * h[k] for k in range(n + 1)), YPOLY_ZERO)
                 for n in range(args.order)]
    else:
        terms = ftra_apply(pair, h).truncate(args.order).tolist()
    return sequence_to_json(terms)


def cmd_production(args):
    pair = _pair(args, args.order + 1)
    m = _matrix(pair, args.order + 1)
    p = production_matrix(m.inverse() if args.inverse else m)
    out = {"size": p.size, "matrix": [[entry_to_str(c) for c in row] for row in p.entries],
           "tridiagonal": p.is_tridiagonal(), "jacobi": None}
    if p.is_tridiagonal():
        try:
            out["jacobi"] = cfrac_to_json(tridiagonal_to_jacobi(p))
        except PreconditionError as exc:
            out["jacobi_error"] = str(exc)
    if args.exp and not args.inverse:
        z, a, za = exp_production_za(pair.g, pair.f)
        n = min(za.size, p.size)
        out["Z"] = [entry_to_str(c) for c in z.tolist()]
        out["A"] = [entry_to_str(c) for c in a.tolist()]
        out["za_agrees"] = all(za[i, j] == p[i, j] for i in range(n) for j in range(n))
    return out


def cmd_verify(args):
    report = verify_mod.run(args.suite)
    if not report["passed"]:
        raise VerificationError(json.dumps(report, indent=2))
    return report


def cmd_identify(args):
    terms = _int_list(args.terms)
    try:
        names = identify(terms)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    return {"terms": terms,
            "matches": [{"name": n, "description": SEQUENCES[n].description} for n in names]}


def cmd_oracle(args):
    if args.n > MAX_PATH_SIZE:
        raise TooLarge(f"size {args.n} exceeds the enumeration limit {MAX_PATH_SIZE}")
    if args.cf is not None:
        cf = cfrac_from_json(load_json(args.cf))
        if args.kind is not None and args.kind != path_kind_for(cf):
            raise PreconditionError(f"a {cf.kind} fraction counts {path_kind_for(cf)} paths")
        kind, weights = path_kind_for(cf), weights_for_cfrac(cf, args.n + 1)
    else:
        kind = args.kind or "dyck"
        weights = weights_from_json(load_json(args.weights)) if args.weights else None
    counts = [count_weighted_paths(kind, n, weights) for n in range(args.n + 1)]
    return {"kind": kind, "n": args.n, "counts": [entry_to_str(c) for c in counts]}


def cmd_revert_transform(args):
    terms = _int_list(args.terms)
    if not terms:
        raise ParseError("no terms given")
    return {"terms": terms, "transform": [entry_to_str(c) for c in exp_revert_transform(terms)],
            "exploratory": True}


def build_parser():
    p = argparse.ArgumentParser(
        prog="riordancf",
        description="Riordan arrays, continued fractions and lattice paths in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_order(sp):
        sp.add_argument("--order", type=_order, default=DEFAULT_ORDER,
                        help=f"number of terms or rows (default {DEFAULT_ORDER}, max {MAX_ORDER})")

    def with_pair(sp):
        sp.add_argument("--g", required=True, help="expression in x, e.g. '1/(1-x)'")
        sp.add_argument("--f", required=True, help="expression in x with f(0) = 0")
        sp.add_argument("--exp", action="store_true", help="exponential array [g, f]")

    sp = sub.add_parser("expand", help="expand a continued fraction")
    sp.add_argument("--cf", required=True, help="fraction JSON: inline, a file, or '-'")
    sp.add_argument("--y-sub", help="substitute a rational value for y")
    sp.add_argument("--depth", type=int, help="levels kept before truncation (default: order)")
    with_order(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("riordan", help="matrix of a Riordan pair")
    with_pair(sp)
    sp.add_argument("--inverse", action="store_true")
    with_order(sp)
    sp.set_defaults(func=cmd_riordan)

    sp = sub.add_parser("apply", help="apply a Riordan array to a sequence, g h(f)")
    with_pair(sp)
    sp.add_argument("--h", required=True, help="generating function of the input sequence")
    with_order(sp)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("production", help="production matrix and tridiagonal report")
    with_pair(sp)
    sp.add_argument("--inverse", action="store_true", help="use the inverse array")
    with_order(sp)
    sp.set_defaults(func=cmd_production)

    sp = sub.add_parser("verify", help="run the verification suites")
    sp.add_argument("--suite", default="all", choices=["all"] + sorted(verify_mod.SUITES))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("identify", help="look terms up in the bundled sequence table")
    sp.add_argument("--terms", required=True, help="comma-separated integers")
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("oracle", help="count weighted lattice paths by brute force")
    sp.add_argument("--kind", choices=["dyck", "motzkin", "schroeder"])
    sp.add_argument("--n", type=int, required=True, help="largest size to count")
    sp.add_argument("--weights", help="weight JSON: inline, a file, or '-'")
    sp.add_argument("--cf", help="take kind and weights from a fraction JSON instead")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser(
        "revert-transform",
        help="exploratory: b whose EGF antiderivative reverts that of the input")
    sp.add_argument("--terms", required=True, help="comma-separated integers, first nonzero")
    sp.set_defaults(func=cmd_revert_transform)
    return p


def _fail(exc, code):
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 0:
        return _fail(ParseError("--n must be non-negative"), EXIT_PARSE)
    try:
        out = args.func(args)
    except ParseError as exc:
        return _fail(exc, EXIT_PARSE)
    except VerificationError as exc:
        print(str(exc))
        return _fail(VerificationError("verification failed"), EXIT_VERIFICATION)
    except RiordanError as exc:
        return _fail(exc, EXIT_PRECONDITION)
    print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
