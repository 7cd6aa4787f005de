"""Curve configuration files.

A configuration is a JSON object::

    base_field   "plain" or "sqrt-<d>"
    f            monic cubic in x (polynomial text)
    points       name -> [x, y], both free of x
    chi          chi(O_S), default 1
    fibers       [{label, matrix, contacts: divisor name -> vector}]
    divisors     name -> {d, d_dot_o, self_int}
    mw_basis     {names, gram, coords: name -> vector, torsion: name -> tag}
    curves       name -> {poly, degree}    plane curves, optional
    nodes        name -> [t, x]            affine points, optional
    comment      free text, ignored (the only place non-ASCII text may appear)

Shipped fixtures can be named by file name alone (``case1.json``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .curve import MWPoint, WCurve
from .errors import ConfigError, NotOnCurve
from .lattice import DivisorData, FiberConfig, MWVector
from .parser import parse_rfunc, parse_value
from .planecurves import ProjCurve
from .scalars import QQ, QuadField, QuadScalar

_KEYS = {"comment", "base_field", "f", "points", "chi", "fibers", "divisors", "mw_basis", "curves", "nodes"}


@dataclass
class CurveConfig:
    field: QuadField
    curve: WCurve
    points: dict[str, MWPoint]
    fibers: FiberConfig | None = None
    divisors: dict[str, DivisorData] = field(default_factory=dict)
    vectors: dict[str, MWVector] = field(default_factory=dict)
    curves: dict[str, ProjCurve] = field(default_factory=dict)
    nodes: dict[str, tuple[QuadScalar, QuadScalar]] = field(default_factory=dict)

    def point(self, name: str) -> MWPoint:
        """Named point; a leading '-' negates it."""
        if name.startswith("-"):
            return -self.point(name[1:])
        try:
            return self.points[name]
        except KeyError:
            raise ConfigError(f"unknown point {name!r}") from None

    def vector(self, name: str) -> MWVector:
        if name.startswith("-"):
            return -self.vector(name[1:])
        try:
            return self.vectors[name]
        except KeyError:
            raise ConfigError(f"no Mordell-Weil coordinates for {name!r}") from None

    def divisor(self, name: str) -> DivisorData:
        try:
            return self.divisors[name]
        except KeyError:
            raise ConfigError(f"unknown divisor {name!r}") from None

    def plane_curve(self, name: str) -> ProjCurve:
        try:
            return self.curves[name]
        except KeyError:
            raise ConfigError(f"unknown plane curve {name!r}") from None


def parse_field(spec: str) -> QuadField:
    if spec == "plain":
        return QQ
    if spec.startswith("sqrt-"):
        try:
            d = int(spec[5:])
        except ValueError:
            raise ConfigError(f"bad base_field {spec!r}") from None
        try:
            return QuadField(d)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    raise ConfigError(f"base_field must be 'plain' or 'sqrt-<d>', got {spec!r}")


def _require(obj: dict, key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise ConfigError(f"{where}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise ConfigError(f"{where}.{key}: expected {kind.__name__}")
    return value


def _ints(v: Any, where: str) -> tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        raise ConfigError(f"{where}: expected a list of integers")
    return tuple(v)


def _rational(v: Any, where: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ConfigError(f"{where}: expected an integer or a string like '1/2'")
    try:
        return Fraction(v)
    except ValueError:
        raise ConfigError(f"{where}: bad rational {v!r}") from None


def build_config(doc: dict) -> CurveConfig:
    if not isinstance(doc, dict):
        raise ConfigError("a configuration must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)}")
    K = parse_field(_require(doc, "base_field", str, "config"))
    curve = WCurve(parse_value(_require(doc, "f", str, "config"), K))

    points: dict[str, MWPoint] = {}
    for name, xy in doc.get("points", {}).items():
        if not (isinstance(xy, list) and len(xy) == 2 and all(isinstance(s, str) for s in xy)):
            raise ConfigError(f"points.{name}: expected [x, y] strings")
        p = MWPoint(parse_rfunc(xy[0], K), parse_rfunc(xy[1], K))
        if not p.y * p.y == curve.rhs(p.x):
            raise NotOnCurve(f"point {name} is not on the curve")
        points[name] = p

    cfg = CurveConfig(K, curve, points)

    contacts: dict[str, dict[str, tuple[int, ...]]] = {}
    if "fibers" in doc:
        matrices = {}
        for i, fib in enumerate(doc["fibers"]):
            where = f"fibers[{i}]"
            if not isinstance(fib, dict):
                raise ConfigError(f"{where}: expected an object")
            label = _require(fib, "label", str, where)
            rows = _require(fib, "matrix", list, where)
            matrices[label] = tuple(_ints(r, f"{where}.matrix") for r in rows)
            for dname, vec in fib.get("contacts", {}).items():
                c = _ints(vec, f"{where}.contacts.{dname}")
                if len(c) != len(rows):
                    raise ConfigError(f"{where}.contacts.{dname}: length {len(c)}, expected {len(rows)}")
                contacts.setdefault(dname, {})[label] = c
        chi = doc.get("chi", 1)
        if not isinstance(chi, int) or chi < 1:
            raise ConfigError("chi must be a positive integer")
        cfg.fibers = FiberConfig(matrices, chi)

    for name, spec in doc.get("divisors", {}).items():
        where = f"divisors.{name}"
        if not isinstance(spec, dict):
            raise ConfigError(f"{where}: expected an object")
        d = _require(spec, "d", int, where)
        cfg.divisors[name] = DivisorData(d, spec.get("d_dot_o", 0), contacts.get(name, {}), spec.get("self_int"))
    stray = set(contacts) - set(cfg.divisors)
    if stray:
        raise ConfigError(f"contacts given for undeclared divisors {sorted(stray)}")

    if "mw_basis" in doc:
        mw = doc["mw_basis"]
        names = tuple(_require(mw, "names", list, "mw_basis"))
        gram = tuple(tuple(_rational(c, "mw_basis.gram") for c in row) for row in _require(mw, "gram", list, "mw_basis"))
        tags = mw.get("torsion", {})
        for name, vec in mw.get("coords", {}).items():
            cfg.vectors[name] = MWVector(_ints(vec, f"mw_basis.coords.{name}"), gram, names, tags.get(name))

    for name, spec in doc.get("curves", {}).items():
        where = f"curves.{name}"
        cfg.curves[name] = ProjCurve(parse_value(_require(spec, "poly", str, where), K), _require(spec, "degree", int, where))

    for name, tx in doc.get("nodes", {}).items():
        if not (isinstance(tx, list) and len(tx) == 2 and all(isinstance(s, str) for s in tx)):
            raise ConfigError(f"nodes.{name}: expected [t, x] strings")
        coords = [parse_rfunc(v, K) for v in tx]
        if not all(c.is_constant() for c in coords):
            raise ConfigError(f"nodes.{name}: coordinates must be constants")
        cfg.nodes[name] = (coords[0](0), coords[1](0))
    return cfg


def read_config_text(ref: str) -> str:
    """Contents of ``ref``: a path, or the name of a shipped fixture."""
    path = Path(ref)
    if path.is_file():
        raw = path.read_bytes()
    else:
        res = resources.files("trisect") / "data" / path.name
        if path.parent != Path(".") or not res.is_file():
            raise ConfigError(f"no such configuration file: {ref}")
        raw = res.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{ref}: not valid UTF-8 (byte {exc.start})") from None


def _check_ascii(node: Any, where: str) -> None:
    if isinstance(node, str):
        if not node.isascii():
            raise ConfigError(f"{where}: non-ASCII text is only allowed in the comment")
    elif isinstance(node, list):
        for i, item in enumerate(node):
            _check_ascii(item, f"{where}[{i}]")
    elif isinstance(node, dict):
        for k, v in node.items():
            _check_ascii(k, where)
            if not (where == "config" and k == "comment"):
                _check_ascii(v, f"{where}.{k}")


def load_config(ref: str) -> CurveConfig:
    text = read_config_text(ref)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{ref}: invalid JSON: {exc}") from None
    _check_ascii(doc, "config")
    return build_config(doc)
