"""Command-line interface: ``rittkit <command> ...``.

Exit status: 0 success, 1 usage error, 2 bound violation or failed
recomposition, 3 no decomposition / no normal form found, 4 enumeration
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import VIOLATION, census
from .counting import CountQuery, applicable_bounds, count_formula
from .decompose import decompose
from .dickson import dickson
from .errors import CapExceeded, RecompositionError
from .poly import Poly
from .ritt import (
    FirstCaseForm,
    RittForm,
    SecondCaseForm,
    Unclassified,
    build_first_case,
    build_second_case,
    classify,
    extract_first_case,
    extract_second_case,
)
from .textio import element_to_json, format_poly, parse_element, parse_field, parse_poly, poly_to_json

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_NONE, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field_arg(text: str):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _poly(F, text: str, flag: str) -> Poly:
    try:
        return parse_poly(F, text)
    except ValueError as exc:
        raise UsageError(f"argument {flag}: {exc}") from None


def _elem(F, text: str, flag: str):
    try:
        return parse_element(F, text)
    except ValueError as exc:
        raise UsageError(f"argument {flag}: {exc}") from None


def _collision_dict(c) -> dict:
    g, h, gs, hs = c.components
    return {name: poly_to_json(p) for name, p in zip(("f", "g", "h", "g_star", "h_star"), (c.f, g, h, gs, hs))}


def _form_dict(form) -> dict:
    F = form.field
    if isinstance(form, FirstCaseForm):
        return {
            "kind": "first",
            "l": form.l,
            "m": form.m,
            "k": form.k,
            "s": form.s,
            "w": poly_to_json(form.w),
            "a": element_to_json(F, form.a.value),
        }
    return {
        "kind": "second",
        "l": form.l,
        "m": form.m,
        "z": element_to_json(F, form.z.value),
        "a": element_to_json(F, form.a.value),
    }


def _ritt_dict(r: RittForm) -> dict:
    return {"field": str(r.form.field), **_form_dict(r.form), **_collision_dict(r.collision)}


def _text_value(v) -> str:
    if isinstance(v, list):
        return ",".join(_text_value(x) if not isinstance(x, list) else "[" + _text_value(x) + "]" for x in v)
    return str(v)


def _flatten(d: dict, prefix: str = ""):
    for key, value in d.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                yield from _flatten(item, f"{name}[{i}].")
        else:
            yield name, _text_value(value)


def _emit(data: dict, as_json: bool, out):
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for key, value in _flatten(data):
            out.write(f"{key}: {value}\n")


def _cmd_dickson(args, out) -> int:
    F = args.field
    z = _elem(F, args.z, "z")
    t = dickson(args.m, z)
    if args.json:
        out.write(json.dumps({"field": str(F), "m": args.m, "z": element_to_json(F, z.value), "coeffs": poly_to_json(t)}) + "\n")
    else:
        out.write(format_poly(t) + "\n")
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    F = args.field
    f = _poly(F, args.f, "f")
    if not f.is_monic_original():
        raise UsageError("argument f: polynomial must be monic original")
    if f.degree % args.left_degree:
        raise UsageError(f"argument --left-degree: {args.left_degree} does not divide {f.degree}")
    try:
        d = decompose(f, args.left_degree, args.cap)
    except CapExceeded as exc:
        _emit({"field": str(F), "status": "cap_exceeded", "message": str(exc)}, args.json, out)
        return EXIT_CAP
    if d is None:
        _emit({"field": str(F), "status": "indecomposable"}, args.json, out)
        return EXIT_NONE
    _emit({"field": str(F), "status": "decomposable", "g": poly_to_json(d.g), "h": poly_to_json(d.h)}, args.json, out)
    return EXIT_OK


def _cmd_build(args, out) -> int:
    F = args.field
    a = _elem(F, args.a, "--a")
    try:
        if args.case == "first":
            w = _poly(F, args.w, "--w")
            form = FirstCaseForm.make(args.l, args.m, w, a)
            c = build_first_case(form)
        else:
            form = SecondCaseForm(args.l, args.m, _elem(F, args.z, "--z"), a)
            c = build_second_case(form)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(_ritt_dict(RittForm(form, c)), args.json, out)
    return EXIT_OK


def _tame_input(F, text: str, l: int) -> Poly:
    f = _poly(F, text, "f")
    if not f.is_monic_original():
        raise UsageError("argument f: polynomial must be monic original")
    if f.degree % l:
        raise UsageError(f"argument --l: {l} does not divide {f.degree}")
    return f


def _cmd_extract(args, out) -> int:
    F = args.field
    f = _tame_input(F, args.f, args.l)
    try:
        form = extract_first_case(f, args.l) or extract_second_case(f, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if form is None:
        _emit({"field": str(F), "kind": "none"}, args.json, out)
        return EXIT_NONE
    build = build_first_case if isinstance(form, FirstCaseForm) else build_second_case
    _emit(_ritt_dict(RittForm(form, build(form))), args.json, out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    F = args.field
    f = _tame_input(F, args.f, args.l)
    if f.degree != args.l * args.m:
        raise UsageError(f"argument --m: deg f = {f.degree} is not {args.l}*{args.m}")
    try:
        result = classify(f, args.l, args.m, args.cap)
    except CapExceeded as exc:
        _emit({"field": str(F), "kind": "cap_exceeded", "message": str(exc)}, args.json, out)
        return EXIT_CAP
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if isinstance(result, Unclassified):
        _emit({"field": str(F), "kind": result.value, "l": args.l, "m": args.m}, args.json, out)
    else:
        _emit(_ritt_dict(result), args.json, out)
    return EXIT_OK


def _query(args) -> CountQuery:
    try:
        return CountQuery(args.q, args.l, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_census(args, out) -> int:
    query = _query(args)
    try:
        report = census(query, args.cap)
    except CapExceeded as exc:
        _emit({"status": "cap_exceeded", "message": str(exc)}, args.json, out)
        return EXIT_CAP
    _emit(report.to_dict(), args.json, out)
    return EXIT_VIOLATION if report.verdict == VIOLATION else EXIT_OK


def _cmd_count(args, out) -> int:
    query = _query(args)
    data = {
        "field": {"p": query.p, "e": query.e, "q": query.q},
        "l": query.l,
        "m": query.m,
        "n": query.n,
        "formula": count_formula(query).to_dict(),
        "bounds": [b.to_dict() for b in applicable_bounds(query)],
    }
    _emit(data, args.json, out)
    return EXIT_OK


def _output_flags(p: argparse.ArgumentParser, default_json: bool):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="json", action="store_true", default=default_json, help="JSON output")
    group.add_argument("--text", dest="json", action="store_false", help="key: value text output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rittkit", description="Distinct-degree polynomial collisions over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dickson", help="print the Dickson polynomial T_m(x, z)")
    p.add_argument("m", type=int)
    p.add_argument("z")
    p.add_argument("--field", type=_field_arg, required=True)
    _output_flags(p, False)
    p.set_defaults(run=_cmd_dickson)

    p = sub.add_parser("decompose", help="decompose f with a given left degree")
    p.add_argument("f")
    p.add_argument("--left-degree", type=_positive, required=True)
    p.add_argument("--field", type=_field_arg, required=True)
    p.add_argument("--cap", type=_positive, default=None)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_decompose)

    p = sub.add_parser("build", help="build a collision from normal-form parameters")
    p.add_argument("case", choices=("first", "second"))
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--w", help="first case: monic w, coefficients low-to-high")
    p.add_argument("--z", help="second case: nonzero z")
    p.add_argument("--a", default="0")
    p.add_argument("--field", type=_field_arg, required=True)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_build)

    p = sub.add_parser("extract", help="recover normal-form parameters from f")
    p.add_argument("f")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--field", type=_field_arg, required=True)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_extract)

    p = sub.add_parser("classify", help="classify f as first case, second case or neither")
    p.add_argument("f")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", type=_field_arg, required=True)
    p.add_argument("--cap", type=_positive, default=None)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("census", help="count the collision set exhaustively")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=_positive, default=None)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_census)

    p = sub.add_parser("count", help="closed-form count or bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _output_flags(p, True)
    p.set_defaults(run=_cmd_count)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "build":
        needed = "--w" if args.case == "first" else "--z"
        if getattr(args, needed[2:]) is None:
            parser.error(f"build {args.case} requires {needed}")
    try:
        return args.run(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"rittkit: error: {exc}\n")
        return EXIT_USAGE
    except RecompositionError as exc:
        sys.stderr.write(f"rittkit: recomposition failed: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
