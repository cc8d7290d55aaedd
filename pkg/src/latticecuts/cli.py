"""Command-line entry point.

Every rational is read as ``"p/q"`` (or a bare integer); points are
``"x,y"`` and ray lists separate points with spaces or semicolons.  Exit
status is 0 on success, 1 on malformed input and 2 on a domain error, in
which case the library error name is printed to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from ._rational import format_rational, parse_rational
from .cuts import Instance, cut_row
from .errors import LatticeCutError
from .facets import is_facet, ray_condition_report
from .geometry import Quadrilateral, Split, Triangle, body_from_dict, body_to_dict, classify
from .strength import (
    bad_example,
    grid_to_csv,
    level_curve_grid,
    pseudo_split_closure_value,
    quad_vs_triangle_bound,
    type1_split_strength,
    type3_vs_type2_bound,
)
from .verify import run_all

OUTPUT_DIR_ENV = "LATTICECUTS_OUTPUT_DIR"


class UsageError(Exception):
    """Malformed command line or input file."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


# -- argument types ----------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    return _rational(parts[0]), _rational(parts[1])


def _points(text: str) -> list[tuple[Fraction, Fraction]]:
    items = text.replace(";", " ").split()
    if not items:
        raise argparse.ArgumentTypeError("empty point list")
    return [_point(t) for t in items]


def _split_arg(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers 'a,b,c', got {text!r}") from None
    return a, b, c


# -- parser ------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "csv", "human"], default=None)
    p.add_argument("--output", default=None, help="write here instead of stdout")
    p.add_argument("--config", default=None, help="JSON file of default option values")
    return p


def _body_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--triangle", type=_points, help='three vertices, e.g. "0,0 2,0 0,2"')
    g.add_argument("--quadrilateral", type=_points, help="four vertices in cyclic order")
    g.add_argument("--split", type=_split_arg, help='"a,b,c" for c <= a x1 + b x2 <= c+1')
    p.add_argument("--input", default=None, help="JSON file with 'body' and optionally 'f', 'rays'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latticecuts", description="Intersection cuts from lattice-free bodies.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()

    p = sub.add_parser("classify", parents=[common], help="classify a lattice-free body")
    _body_args(p)

    for name, text in (("cut", "cut row of a body"), ("facet-check", "facet test and ray condition")):
        p = sub.add_parser(name, parents=[common], help=text)
        _body_args(p)
        p.add_argument("--f", type=_point)
        p.add_argument("--rays", type=_points)

    p = sub.add_parser("strength-type1", parents=[common], help="split strength of the Type 1 facet")
    p.add_argument("--f", type=_point)

    p = sub.add_parser("level-curves", parents=[common], help="Type 1 strength on a grid")
    p.add_argument("--resolution", type=int)

    p = sub.add_parser("quad-bound", parents=[common], help="quadrilateral against two triangles")
    p.add_argument("--t", type=_rational)
    p.add_argument("--f", type=_point)

    p = sub.add_parser("type3-bound", parents=[common], help="Type 3 triangle against Type 2 triangles")
    for n in ("--t1", "--t2", "--t3"):
        p.add_argument(n, type=_rational)
    p.add_argument("--f", type=_point)
    p.add_argument("--case", choices=["CaseI", "CaseII", "I", "II", "1", "2"])

    p = sub.add_parser("pseudo-split", parents=[common], help="pseudo-split closure of a triangle facet")
    for n in ("--t1", "--t2", "--t3", "--mu1", "--mu2", "--mu3", "--f2"):
        p.add_argument(n, type=_rational)

    p = sub.add_parser("bad-example", parents=[common], help="facet with split strength at most 1/M")
    p.add_argument("--family", type=str.lower, choices=["type2", "type3", "quadrilateral"])
    p.add_argument("--m", type=int)
    p.add_argument("--f2", type=_rational)

    p = sub.add_parser("verify-all", parents=[common], help="run every self-check suite")
    p.add_argument("--seed", type=int)
    return parser


_DEFAULTS = {
    "resolution": 50,
    "t2": Fraction(0),
    "mu1": Fraction(1),
    "mu2": Fraction(1),
    "mu3": Fraction(1),
    "f2": Fraction(1, 2),
    "seed": 0,
}


def _apply_config(args: argparse.Namespace) -> None:
    config = {}
    if args.config:
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(config, dict):
            raise UsageError("config must be a JSON object")
    converters = {
        "f": _point,
        "rays": _points,
        "triangle": _points,
        "quadrilateral": _points,
        "split": _split_arg,
        "resolution": int,
        "m": int,
        "seed": int,
        "format": str,
        "output": str,
        "case": str,
        "family": str.lower,
    }
    for key, val in vars(args).items():
        if val is not None or key in ("command", "config"):
            continue
        if key in config:
            conv = converters.get(key, _rational)
            try:
                setattr(args, key, conv(_cfg_text(config[key])))
            except (argparse.ArgumentTypeError, ValueError) as exc:
                raise UsageError(f"config value for {key!r}: {exc}") from None
        elif key in _DEFAULTS:
            setattr(args, key, _DEFAULTS[key])


def _cfg_text(value) -> str:
    """Config values may be JSON lists: ``["1/2", "1/3"]`` or ``[["0", "0"], ...]``."""
    if not isinstance(value, list):
        return str(value)
    if any(isinstance(v, list) for v in value):
        return " ".join(",".join(str(x) for x in v) for v in value)
    return ",".join(str(v) for v in value)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


# -- commands ----------------------------------------------------------------


def _load_input(args) -> dict:
    if not getattr(args, "input", None):
        return {}
    try:
        data = json.loads(Path(args.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read input {args.input}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("input must be a JSON object")
    return data


def _body(args, data):
    if args.triangle is not None:
        return Triangle(args.triangle)
    if args.quadrilateral is not None:
        return Quadrilateral(args.quadrilateral)
    if args.split is not None:
        return Split(*args.split)
    if "body" in data:
        try:
            return body_from_dict(data["body"])
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed body: {exc}") from None
    raise UsageError("give a body with --triangle, --quadrilateral, --split or --input")


def _instance(args, data) -> Instance:
    f = args.f
    rays = args.rays
    try:
        if f is None and "f" in data:
            f = _point(",".join(str(v) for v in data["f"]))
        if rays is None and "rays" in data:
            rays = [_point(",".join(str(v) for v in r)) for r in data["rays"]]
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc)) from None
    if f is None or rays is None:
        raise UsageError("an instance needs --f and --rays")
    return Instance(f, rays)


def _cmd_classify(args):
    data = _load_input(args)
    body = _body(args, data)
    cls = classify(body)
    return {"classification": str(cls), "maximal": cls.is_maximal, "body": body_to_dict(body)}, str(cls)


def _cmd_cut(args):
    data = _load_input(args)
    body, inst = _body(args, data), _instance(args, data)
    row = cut_row(body, inst)
    out = {"instance": inst.to_dict(), **row.to_dict()}
    human = " + ".join(f"{format_rational(c)} s{j + 1}" for j, c in enumerate(row.coeffs)) + " >= 1"
    return out, human


def _cmd_facet(args):
    data = _load_input(args)
    body, inst = _body(args, data), _instance(args, data)
    status = is_facet(body, inst)
    report = ray_condition_report(body, inst)
    out = {
        "status": str(status),
        "classification": str(classify(body)),
        "coeffs": [format_rational(c) for c in cut_row(body, inst).coeffs],
        "ray_condition": report.to_dict(),
    }
    lines = [f"status: {status}", f"ray condition: {'holds' if report.holds else 'fails'}"]
    lines += [f"  step {s.step}: remove ray {s.ray} ({s.reason})" for s in report.steps]
    return out, "\n".join(lines)


def _report_out(rep):
    d = rep.to_dict()
    human = "\n".join(f"{k}: {d[k]}" for k in ("value", "value_decimal", "lp_value", "region"))
    return d, human


def _cmd_type1(args):
    _require(args, "f")
    return _report_out(type1_split_strength(args.f))


def _cmd_levels(args):
    cells = level_curve_grid(args.resolution)
    rows = [
        {"f1": format_rational(c.f.x1), "f2": format_rational(c.f.x2), "value": format_rational(c.value), "region": c.region}
        for c in cells
    ]
    return rows, grid_to_csv(cells)


def _cmd_quad(args):
    _require(args, "t", "f")
    return _report_out(quad_vs_triangle_bound(args.t, args.f))


def _cmd_type3(args):
    _require(args, "t1", "t2", "t3", "f", "case")
    return _report_out(type3_vs_type2_bound(args.t1, args.t2, args.t3, args.f, args.case))


def _cmd_pseudo(args):
    _require(args, "t1", "t3")
    return _report_out(pseudo_split_closure_value(args.t1, args.t2, args.t3, args.mu1, args.mu2, args.mu3, args.f2))


def _cmd_bad(args):
    _require(args, "family", "m")
    ex = bad_example(args.family, args.m, args.f2)
    out = {
        "family": ex.family_tag,
        "claimed_bound": format_rational(ex.claimed_bound),
        "bound": format_rational(ex.bound),
        "lp_value": format_rational(ex.lp_value),
        "body": body_to_dict(ex.body),
        "classification": str(classify(ex.body)),
        "instance": ex.inst.to_dict(),
        "facet_coeffs": [format_rational(c) for c in ex.facet_row().coeffs],
    }
    human = "\n".join(f"{k}: {out[k]}" for k in ("family", "claimed_bound", "bound", "lp_value", "classification"))
    return out, human


def _cmd_verify(args):
    results = run_all(args.seed)
    out = [{"suite": n, "passed": ok, "detail": d} for n, ok, d in results]
    width = max(len(n) for n, _, _ in results)
    human = "\n".join(f"{n:<{width}}  {'PASS' if ok else 'FAIL'}  {d}" for n, ok, d in results)
    return out, human


COMMANDS = {
    "classify": _cmd_classify,
    "cut": _cmd_cut,
    "facet-check": _cmd_facet,
    "strength-type1": _cmd_type1,
    "level-curves": _cmd_levels,
    "quad-bound": _cmd_quad,
    "type3-bound": _cmd_type3,
    "pseudo-split": _cmd_pseudo,
    "bad-example": _cmd_bad,
    "verify-all": _cmd_verify,
}

_DEFAULT_FORMAT = {"level-curves": "csv", "verify-all": "human"}


# -- output ------------------------------------------------------------------


def _to_csv(payload) -> str:
    rows = payload if isinstance(payload, list) else [payload]
    keys = [k for k, v in rows[0].items() if not isinstance(v, (dict, list))]
    lines = [",".join(keys)]
    for r in rows:
        lines.append(",".join(str(r[k]) for k in keys))
    return "\n".join(lines) + "\n"


def render(command: str, payload, human: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return human if command == "level-curves" else _to_csv(payload)
    if command == "level-curves":
        return "\n".join(f"({r['f1']}, {r['f2']})  {r['value']}  {r['region']}" for r in payload) + "\n"
    return human.rstrip("\n") + "\n"


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _apply_config(args)
        payload, human = COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"latticecuts: error: {exc}\n")
        return 1
    except LatticeCutError as exc:
        sys.stderr.write(f"latticecuts: {type(exc).__name__}: {exc}\n")
        return 2
    fmt = args.format or _DEFAULT_FORMAT.get(args.command, "json")
    _write(render(args.command, payload, human, fmt), args.output)
    if args.command == "verify-all" and not all(r["passed"] for r in payload):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
