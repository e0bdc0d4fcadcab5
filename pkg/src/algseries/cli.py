"""Command-line frontend.

    algseries expand "T^2 + T - x" --prec 6
    algseries census --d 1 --h 1 --q 2,3,5 --json

Global flags (``--field``, ``--json``, ``--budget``) may appear before or
after the subcommand.  Exit status is 0 on success, 1 on a domain error
(whose machine-readable code is printed) and 2 on a usage error, which
includes input that does not parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census
from .errors import AlgSeriesError, ParseError
from .exact_algebra import FieldDescriptor, SeriesTrunc, UniPoly, parse_bipoly
from .exact_algebra.text import format_series
from .hensel import hensel_lift
from .stratification import (AlgSeries, branch_root, minpoly_reconstruct, phi_compose,
                             phi_decompose, signature)

SCALAR_SCHEMA = {"type": "string"}

POLY_SCHEMA = {
    "type": "object",
    "required": ["field", "poly"],
    "properties": {"field": {"type": "string"}, "poly": {"type": ["string", "null"]}},
}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["field", "series", "coeffs", "precision"],
    "properties": {
        "field": {"type": "string"},
        "series": {"type": "string"},
        "coeffs": {"type": "array", "items": SCALAR_SCHEMA},
        "precision": {"type": "integer", "minimum": 0},
    },
}

SIGNATURE_SCHEMA = {
    "type": "object",
    "required": ["deg", "height", "e"],
    "properties": {k: {"type": "integer"} for k in ("deg", "height", "e")},
}

DECOMPOSITION_SCHEMA = {
    "type": "object",
    "required": ["field", "constant", "head", "e", "tail_poly"],
    "properties": {
        "field": {"type": "string"},
        "constant": SCALAR_SCHEMA,
        "head": {"type": "string"},
        "e": {"type": "integer", "minimum": 0},
        "tail_poly": {"type": "string"},
    },
}

COMPOSITION_SCHEMA = {
    "type": "object",
    "required": ["field", "transformed", "content", "minpoly"],
    "properties": {k: {"type": "string"} for k in ("field", "transformed", "content", "minpoly")},
}

ERROR_SCHEMA = {
    "type": "object",
    "required": ["error", "message"],
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _scalar(c) -> str:
    return str(c)


def _coeff_list(text: str, F: FieldDescriptor) -> list:
    try:
        return [F.coerce(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficient list {text!r}") from exc


def _branch(args, F: FieldDescriptor) -> SeriesTrunc:
    """--branch c1,c2,... (coefficients from x^1) plus --const c0."""
    coeffs = _coeff_list(args.branch, F) if args.branch else []
    c0 = F.coerce(args.const) if args.const else 0
    return SeriesTrunc(F, [c0] + coeffs)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _series_payload(f: SeriesTrunc, F) -> dict:
    return {"field": str(F), "series": format_series(f),
            "coeffs": [_scalar(c) for c in f.coeffs], "precision": f.precision}


# -- subcommands ---------------------------------------------------------------

def cmd_expand(args, F):
    P = parse_bipoly(args.poly, F)
    if args.branch or args.const:
        f = branch_root(P, _branch(args, F), args.prec)
    else:
        f = hensel_lift(P, args.prec)
    return _series_payload(f, F), format_series(f)


def cmd_minpoly(args, F):
    f = _branch(argparse.Namespace(branch=args.series, const=args.const), F)
    M = minpoly_reconstruct(f, args.dmax, args.hmax)
    text = str(M) if M is not None else "none"
    return {"field": str(F), "poly": None if M is None else str(M)}, text


def cmd_signature(args, F):
    P = parse_bipoly(args.poly, F)
    sig = signature(P, _branch(args, F))
    payload = {"deg": sig.deg, "height": sig.height, "e": sig.e}
    return payload, f"deg={sig.deg} height={sig.height} e={sig.e}"


def _decomposition(s: AlgSeries, F):
    payload = {"field": str(F), "constant": _scalar(s.constant), "head": str(s.head),
               "e": s.e, "tail_poly": str(s.tail_poly)}
    text = "\n".join(f"{k}: {payload[k]}" for k in ("constant", "head", "e", "tail_poly"))
    return payload, text


def cmd_decompose(args, F):
    P = parse_bipoly(args.poly, F)
    return _decomposition(phi_decompose(P, _branch(args, F)), F)


def cmd_compose(args, F):
    head = UniPoly(F, [0] + (_coeff_list(args.head, F) if args.head else []))
    tail = parse_bipoly(args.tail, F)
    c = F.coerce(args.const) if args.const else 0
    try:
        s = AlgSeries(F, c, head, args.e, tail)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    Pp, a, _ = phi_compose(s)
    payload = {"field": str(F), "transformed": str(Pp), "content": str(a), "minpoly": str(s.minpoly)}
    text = "\n".join(f"{k}: {payload[k]}" for k in ("transformed", "content", "minpoly"))
    return payload, text


def _report_text(r: census.CensusReport) -> str:
    d = r.to_dict()
    return "\n".join(f"{k}: {json.dumps(d[k])}" for k in sorted(d))


def cmd_census(args, F):
    r = census.census_over(args.d, args.h, _int_list(args.q), args.budget, args.workers)
    return r.to_dict(), _report_text(r)


def cmd_strata(args, F):
    r = census.strata_over(args.d, args.h, _int_list(args.q), args.budget, args.workers)
    return r.to_dict(), _report_text(r)


def cmd_variety(args, F):
    try:
        text = Path(args.system).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.system}: {exc.strerror}") from exc
    r = census.variety_over(text, args.d, args.h, _int_list(args.q), args.budget, args.dim)
    return r.to_dict(), _report_text(r)


# -- parser --------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    """Subparsers repeat the global flags with suppressed defaults so a flag
    given after the subcommand overrides one given before it."""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--field", default=default("q"), help="q (rationals) or fp:<p>")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="machine-readable output")
    parser.add_argument("--budget", type=int, default=default(census.DEFAULT_BUDGET),
                        help="largest enumeration the census may attempt")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="algseries", description="Exact algebraic power series.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    def branch_flags(p, required):
        p.add_argument("--branch", required=required, help="coefficients of x^1, x^2, ...")
        p.add_argument("--const", help="constant term of the branch")

    p = add("expand", cmd_expand, "power-series root of P")
    p.add_argument("poly")
    p.add_argument("--prec", type=int, required=True)
    branch_flags(p, required=False)

    p = add("minpoly", cmd_minpoly, "minimal polynomial from a truncation")
    p.add_argument("--series", required=True, help="coefficients of x^1, x^2, ...")
    p.add_argument("--const")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)

    p = add("signature", cmd_signature, "(Deg, H, e) of a branch")
    p.add_argument("poly")
    branch_flags(p, required=True)

    p = add("decompose", cmd_decompose, "canonical coordinates of a branch")
    p.add_argument("poly")
    branch_flags(p, required=True)

    p = add("compose", cmd_compose, "polynomial from canonical coordinates")
    p.add_argument("--head", default="", help="coefficients of x^1..x^e")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--tail", required=True, help="tail polynomial")
    p.add_argument("--const")

    for name, fn, help in (("census", cmd_census, "count C_{d,h}(F_q)"),
                           ("strata", cmd_strata, "count the strata A(d,h,e)(F_q)")):
        p = add(name, fn, help)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--h", type=int, required=True)
        p.add_argument("--q", required=True, help="prime or comma-separated primes")
        p.add_argument("--workers", type=int, default=1)

    p = add("variety", cmd_variety, "count series solutions of a polynomial system")
    p.add_argument("--system", required=True, help="file with one polynomial per line")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--dim", type=int, help="dimension m used for the bound")
    return parser


def _emit(stream, text: str):
    stream.write(text + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    want_json = "--json" in (argv if argv is not None else sys.argv[1:])
    try:
        args = build_parser().parse_args(argv)
        try:
            F = FieldDescriptor.parse(args.field)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        payload, text = args.func(args, F)
    except UsageError as exc:
        _emit(stderr, f"usage error: {exc}")
        return 2
    except ParseError as exc:
        _emit(stderr, f"usage error: {exc.code}: {exc}")
        return 2
    except AlgSeriesError as exc:
        if want_json:
            _emit(stdout, json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        else:
            _emit(stderr, f"error: {exc.code}: {exc}")
        return 1
    except ValueError as exc:
        _emit(stderr, f"usage error: {exc}")
        return 2
    _emit(stdout, json.dumps(payload, sort_keys=True) if args.json else text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
