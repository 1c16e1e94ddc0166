"""Command-line interface: ``affschur {multiply,normal-form,verify,closed-form-check}``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import formula, pbw, relations
from .element import Element, format_coeff, parse_generator, serialize
from .formula import evaluate_word
from .lattice import AffineMatrix

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3

FAULT_ENV = "AFFSCHUR_INJECT_FAULT"


class InputError(Exception):
    pass


class MismatchError(Exception):
    pass


def reset_caches():
    formula.clear_caches()
    pbw.clear_caches()
    relations.fi.cache_clear()


def set_fault(flag: bool):
    formula.FAULT = bool(flag)
    reset_caches()


def _load_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("[", "{")) and Path(text).is_file():
        text = Path(text).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON at line %d, column %d (char %d): %s"
                         % (exc.lineno, exc.colno, exc.pos, exc.msg)) from exc


def _element(obj) -> Element:
    if not isinstance(obj, dict):
        raise InputError("expected an element or matrix object, got %s" % type(obj).__name__)
    try:
        if "terms" in obj:
            return Element.from_json(obj)
        if "entries" in obj:
            return Element.basis(AffineMatrix.from_json(obj))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    raise InputError("object is neither an element nor a matrix: keys %s" % sorted(obj))


def _check_nr(x: Element, args):
    if args.n is not None and x.n != args.n:
        raise MismatchError("element has n=%d but --n %d" % (x.n, args.n))
    if args.r is not None and x.r != args.r:
        raise MismatchError("element has r=%d but --r %d" % (x.r, args.r))


def _need_nr(args):
    if args.n is None or args.r is None:
        raise InputError("--n and --r are required")
    if args.n < 2 or args.r < 0:
        raise InputError("need n >= 2 and r >= 0")
    if args.mmax < 0 or args.tmax < 0 or (args.band is not None and args.band < 0):
        raise InputError("sweep bounds must be nonnegative")


# -- text rendering --------------------------------------------------------------

def _render_element(obj) -> str:
    x = Element.from_json(obj)
    return "S(%d, %d): %s" % (x.n, x.r, serialize(x))


def _render_coords(obj) -> str:
    lines = ["S(%d, %d) PBW coordinates (round trip %s):" % (obj["n"], obj["r"], obj["round_trip"])]
    for c in obj["coordinates"]:
        up = AffineMatrix.from_json(c["Aplus"])
        lo = AffineMatrix.from_json(c["Aminus"])
        lines.append("  %s  A+=%s  lambda=%s  A-=%s" % (c["coeff"], up, tuple(c["lambda"]), lo))
    return "\n".join(lines)


def _render_report(obj) -> str:
    lines = ["n=%d r=%d bounds=%s: %s" % (obj["n"], obj["r"], obj["bounds"], "PASS" if obj["passed"] else "FAIL")]
    for rel in obj.get("relations", []):
        lines.append("  %-5s %6d instances  %d failures%s" % (
            rel["id"], rel["instances"], len(rel["failures"]),
            "  (%d flagged)" % len(rel["flagged"]) if rel.get("flagged") else ""))
    if "checked" in obj:
        lines.append("  %d lists checked, %d failures" % (obj["checked"], len(obj["failures"])))
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------------

def cmd_multiply(args):
    data = _load_json(args.input)
    if isinstance(data, list) and all(isinstance(t, str) for t in data):
        _need_nr(args)
        try:
            word = tuple(parse_generator(t, args.n) for t in data)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        result = evaluate_word(word, args.n, args.r)
    else:
        if isinstance(data, dict) and {"left", "right"} <= set(data):
            pair = [data["left"], data["right"]]
        elif isinstance(data, list) and len(data) == 2:
            pair = data
        else:
            raise InputError("expected a generator word or a pair of elements")
        x, y = _element(pair[0]), _element(pair[1])
        if (x.n, x.r) != (y.n, y.r):
            raise MismatchError("factors live in S%r and S%r" % ((x.n, x.r), (y.n, y.r)))
        _check_nr(x, args)
        result = pbw.general_product(x, y)
    return result.to_json(), _render_element, EXIT_OK


def cmd_normal_form(args):
    x = _element(_load_json(args.input))
    _check_nr(x, args)
    coords = pbw.normal_form(x)
    back = pbw.expand(coords, x.n, x.r)
    out = {
        "n": x.n,
        "r": x.r,
        "coordinates": [dict(M.to_json(), coeff=format_coeff(c)) for M, c in sorted(coords.items())],
        "round_trip": back == x,
    }
    return out, _render_coords, EXIT_OK if out["round_trip"] else EXIT_FAILED


def cmd_verify(args):
    _need_nr(args)
    band = args.band if args.band is not None else 2 * args.n
    rep = relations.verify_presentation(args.n, args.r, args.mmax, args.tmax, band)
    return rep, _render_report, EXIT_OK if rep["passed"] else EXIT_FAILED


def cmd_closed_form(args):
    _need_nr(args)
    rows = [args.i] if args.i is not None else None
    rep = relations.closed_form_check(args.n, args.r, args.mmax, args.tmax, rows)
    return rep, _render_report, EXIT_OK if rep["passed"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="period n >= 2")
    common.add_argument("--r", type=int, help="degree r >= 0")
    common.add_argument("--mmax", type=int, default=2, help="largest |m| in sweeps (default 2)")
    common.add_argument("--tmax", type=int, default=3, help="longest m-list in sweeps (default 3)")
    common.add_argument("--band", type=int, default=None, help="band width W (default 2n)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="affschur", description="Exact computations in rational affine Schur algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    m = sub.add_parser("multiply", parents=[common], help="evaluate a generator word or a product of two elements")
    m.add_argument("input", help="inline JSON, a file path, or - for stdin")
    m.set_defaults(func=cmd_multiply)
    nf = sub.add_parser("normal-form", parents=[common], help="PBW coordinates of an element")
    nf.add_argument("input", help="inline JSON, a file path, or - for stdin")
    nf.set_defaults(func=cmd_normal_form)
    v = sub.add_parser("verify", parents=[common], help="check the defining relations")
    v.set_defaults(func=cmd_verify)
    c = sub.add_parser("closed-form-check", parents=[common], help="compare f_i recursion with its closed form")
    c.add_argument("--i", type=int, default=None, help="restrict to one row index")
    c.set_defaults(func=cmd_closed_form)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if os.environ.get(FAULT_ENV):
        set_fault(True)
    try:
        out, render, code = args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except MismatchError as exc:
        print("error: (n, r) mismatch: %s" % exc, file=sys.stderr)
        return EXIT_MISMATCH
    if args.format == "json":
        print(json.dumps(out, sort_keys=True))
    else:
        print(render(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
