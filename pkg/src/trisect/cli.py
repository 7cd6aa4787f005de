"""``trisect`` command line.

Every invocation prints exactly one JSON document on stdout with keys
``command``, ``result`` and, on failure, ``error``.  Exit status is 0 on
success, 1 for a mathematical/domain error, 2 for usage, parse or
configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from .config import CurveConfig, load_config, parse_field
from .curve import MWPoint, add_all, negate, scalar_mul
from .errors import ConfigError, PolySyntaxError, TrisectError
from .lattice import (
    intersection_from_pairing,
    lattice_pairing,
    pairing_from_geometry,
    self_pairing,
    splitting_type,
    trisection_height,
)
from .mumford import MumfordPair, SemiReducedDivisor, class_point, mumford_from_points, trisection_construct
from .parser import parse_poly, parse_rfunc, parse_value, render_ast, render_poly
from .scenarios import verify_scenario


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _names(text: str) -> list[str]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise UsageError("expected a comma-separated list of names")
    return names


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def point_json(P: MWPoint) -> dict[str, Any]:
    if P.is_infinity:
        return {"infinity": True}
    return {"x": render_poly(P.x), "y": render_poly(P.y)}


def mumford_json(m: MumfordPair) -> dict[str, Any]:
    return {
        "u": render_poly(m.u),
        "v": render_poly(m.v),
        "u_coeffs": [render_poly(c) for c in m.u.coeffs],
    }


# subcommands; each takes (args, cfg) and returns the "result" value


def cmd_check(args, cfg: CurveConfig) -> Any:
    out: dict[str, Any] = {
        "field": str(cfg.field),
        "f": render_poly(cfg.curve.f),
        "discriminant": render_poly(cfg.curve.discriminant()),
        "points": sorted(cfg.points),
    }
    if cfg.fibers is not None:
        heights = {}
        for name, D in sorted(cfg.divisors.items()):
            if name in cfg.vectors and D.self_int is not None:
                lat = lattice_pairing(cfg.vectors[name], cfg.vectors[name])
                geo = self_pairing(D, cfg.fibers)
                heights[name] = {"lattice": str(lat), "geometric": str(geo), "agree": lat == geo}
        out["heights"] = heights
        out["fibers"] = sorted(cfg.fibers.fibers)
    return out


def cmd_add(args, cfg: CurveConfig) -> Any:
    return point_json(add_all(cfg.curve, [cfg.point(n) for n in _names(args.points)]))


def cmd_mul(args, cfg: CurveConfig) -> Any:
    return point_json(scalar_mul(cfg.curve, args.n, cfg.point(args.point)))


def cmd_negate(args, cfg: CurveConfig) -> Any:
    return point_json(negate(cfg.point(args.point)))


def cmd_mumford(args, cfg: CurveConfig) -> Any:
    d = SemiReducedDivisor.of(*(cfg.point(n) for n in _names(args.points)))
    return mumford_json(mumford_from_points(d, cfg.curve))


def cmd_class_point(args, cfg: CurveConfig) -> Any:
    m = MumfordPair(parse_value(args.u, cfg.field), parse_value(args.v, cfg.field), cfg.curve.f)
    return point_json(class_point(m, cfg.curve))


def cmd_trisection(args, cfg: CurveConfig) -> Any:
    b0 = parse_rfunc(args.b0, cfg.field)
    b1 = parse_rfunc(args.b1, cfg.field)
    return mumford_json(trisection_construct(cfg.curve, cfg.point(args.point), b0, b1))


def _require_fibers(cfg: CurveConfig):
    if cfg.fibers is None:
        raise ConfigError("the configuration declares no fibers")
    return cfg.fibers


def cmd_height(args, cfg: CurveConfig | None) -> Any:
    if args.r is not None:
        return str(trisection_height(args.r))
    if cfg is None:
        raise UsageError("height needs --curve unless --r is given")
    if args.point:
        v = cfg.vector(args.point)
        return str(lattice_pairing(v, v))
    if args.divisor:
        return str(self_pairing(cfg.divisor(args.divisor), _require_fibers(cfg)))
    raise UsageError("height needs one of --point, --divisor, --r")


def cmd_pairing(args, cfg: CurveConfig) -> Any:
    if args.intersection is not None:
        D1, D2 = cfg.divisor(args.a), cfg.divisor(args.b)
        return str(pairing_from_geometry(D1, D2, _rational(args.intersection), _require_fibers(cfg)))
    return str(lattice_pairing(cfg.vector(args.a), cfg.vector(args.b)))


def cmd_intersection(args, cfg: CurveConfig) -> Any:
    pairing = _rational(args.pairing) if args.pairing is not None else lattice_pairing(cfg.vector(args.a), cfg.vector(args.b))
    a = args.a.lstrip("-")
    b = args.b.lstrip("-")
    return str(intersection_from_pairing(cfg.divisor(a), cfg.divisor(b), pairing, _require_fibers(cfg)))


def cmd_splitting_type(args, cfg: CurveConfig) -> Any:
    st = splitting_type(
        cfg.vector(args.cubic),
        cfg.vector(args.line),
        cfg.divisor(args.cubic),
        cfg.divisor(args.line),
        _require_fibers(cfg),
    )
    return [st.m1, st.m2]


def cmd_verify(args, cfg: None) -> Any:
    params = [_rational(p) for p in args.params.split(",") if p.strip()] if args.params else []
    return verify_scenario(args.scenario, params).to_json()


def cmd_parse(args, cfg: None) -> Any:
    field = "auto" if args.field == "auto" else parse_field(args.field)
    ast = parse_poly(args.expr)
    value = parse_value(args.expr, field)
    return {"canonical": render_poly(value), "ast": render_ast(ast), "field": str(value.field)}


_NO_CURVE = {"verify", "parse", "height"}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trisect", description="Exact computations on elliptic curves over Q(t) and Q(sqrt d)(t).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name: str, func: Callable, help: str, curve: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        if curve:
            sp.add_argument("--curve", required=name not in _NO_CURVE, help="config file or shipped fixture name")
        return sp

    cmd("check", cmd_check, "validate a configuration")
    cmd("add", cmd_add, "sum of named points").add_argument("--points", required=True, help="e.g. P12,P13,P23 or =-P12,P13")
    sp = cmd("mul", cmd_mul, "[n]P")
    sp.add_argument("--point", required=True)
    sp.add_argument("--n", type=int, required=True)
    cmd("negate", cmd_negate, "-P").add_argument("--point", required=True)
    cmd("mumford", cmd_mumford, "Mumford pair of distinct points").add_argument("--points", required=True)
    sp = cmd("class-point", cmd_class_point, "point represented by (u, v)")
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp = cmd("trisection", cmd_trisection, "D(P0, b0, b1)")
    sp.add_argument("--point", required=True)
    sp.add_argument("--b0", required=True)
    sp.add_argument("--b1", required=True)
    sp = cmd("height", cmd_height, "height of a point, a divisor, or a trisection through r nodes")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--point")
    g.add_argument("--divisor")
    g.add_argument("--r", type=int)
    sp = cmd("pairing", cmd_pairing, "height pairing (lattice, or geometric with --intersection)")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--intersection", help="D1.D2; selects the geometric formula")
    sp = cmd("intersection", cmd_intersection, "D1.D2 from the pairing")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--pairing", help="defaults to the lattice pairing of the same names")
    sp = cmd("splitting-type", cmd_splitting_type, "splitting type of a trisection and a splitting curve")
    sp.add_argument("--cubic", required=True)
    sp.add_argument("--line", required=True)
    sp = cmd("verify", cmd_verify, "run a scenario checklist", curve=False)
    sp.add_argument("--scenario", required=True)
    sp.add_argument("--params", default="", help="comma-separated rationals, e.g. --params=1,-3,7/2")
    sp.add_argument("--strict", action="store_true", help="exit 1 if any item fails")
    sp = cmd("parse", cmd_parse, "echo the canonical form of a polynomial", curve=False)
    sp.add_argument("--expr", required=True)
    sp.add_argument("--field", default="auto", help="auto, plain or sqrt-<d>")
    return p


def _error(kind: str, exc: BaseException) -> dict[str, Any]:
    err: dict[str, Any] = {"type": kind, "message": str(exc)}
    if isinstance(exc, PolySyntaxError):
        err["offset"] = exc.offset
    return err


def run_command(argv: Sequence[str]) -> tuple[int, dict[str, Any]]:
    """Execute ``argv`` and return ``(exit_code, document)`` without printing."""
    command = argv[0] if argv else None
    try:
        args = build_parser().parse_args(list(argv))
        command = args.command
        cfg = load_config(args.curve) if getattr(args, "curve", None) else None
        result = args.func(args, cfg)
    except UsageError as exc:
        return 2, {"command": command, "result": None, "error": _error("UsageError", exc)}
    except (PolySyntaxError, ConfigError) as exc:
        return 2, {"command": command, "result": None, "error": _error(type(exc).__name__, exc)}
    except (TrisectError, ValueError, ArithmeticError) as exc:
        return 1, {"command": command, "result": None, "error": _error(type(exc).__name__, exc)}
    code = 0
    if command == "verify" and args.strict and not result["passed"]:
        code = 1
    return code, {"command": command, "result": result}


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=True)


def main(argv: Sequence[str] | None = None) -> int:
    code, doc = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(dumps(doc) + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
