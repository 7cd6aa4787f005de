from __future__ import annotations

import json

import pytest

from trisect.config import build_config, load_config, parse_field
from trisect.errors import ConfigError, NotOnCurve, ShapeMismatch
from trisect.lattice import lattice_pairing, self_pairing
from trisect.scalars import QQ, QuadField

MINIMAL = {
    "base_field": "plain",
    "f": "(x - t^2)*(x^2 - 10*t*x + 25*x - 36)",
    "points": {"P12": ["5*t - 6", "-5*(t - 2)*(t - 3)"]},
}


def write(tmp_path, doc, raw: str | None = None):
    p = tmp_path / "curve.json"
    p.write_text(raw if raw is not None else json.dumps(doc), encoding="utf-8")
    return str(p)


@pytest.mark.parametrize("name", ["case1.json", "case2.json"])
def test_fixtures_are_self_consistent(name):
    cfg = load_config(name)
    assert cfg.curve.f.is_monic() and cfg.curve.f.degree() == 3
    for dname, D in cfg.divisors.items():
        if dname in cfg.vectors and D.self_int is not None:
            v = cfg.vectors[dname]
            assert lattice_pairing(v, v) == self_pairing(D, cfg.fibers), dname


def test_fields():
    assert load_config("case1.json").field == QuadField(2)
    assert load_config("case2.json").field == QQ
    assert parse_field("sqrt-3") == QuadField(3)
    for bad in ("sqrt-4", "sqrt-x", "complex"):
        with pytest.raises(ConfigError):
            parse_field(bad)


def test_load_from_path(tmp_path):
    cfg = load_config(write(tmp_path, MINIMAL))
    assert set(cfg.points) == {"P12"} and cfg.fibers is None


def test_missing_file():
    with pytest.raises(ConfigError):
        load_config("no-such-curve.json")
    with pytest.raises(ConfigError):
        load_config("data/case1.json")


def test_invalid_json(tmp_path):
    with pytest.raises(ConfigError):
        load_config(write(tmp_path, None, "{not json"))


def test_unknown_keys():
    with pytest.raises(ConfigError):
        build_config(MINIMAL | {"extra": 1})


def test_off_curve_point():
    with pytest.raises(NotOnCurve):
        build_config(MINIMAL | {"points": {"bad": ["0", "1"]}})


def test_unknown_names(case2):
    for lookup in (case2.point, case2.vector, case2.divisor, case2.plane_curve):
        with pytest.raises(ConfigError):
            lookup("nope")


def test_negated_names(case2):
    assert case2.point("-P12") == -case2.point("P12")
    assert case2.vector("-Q1").coords == (-1, -1, -1)


def test_contact_length_must_match():
    doc = MINIMAL | {
        "fibers": [{"label": "inf", "matrix": [[-2]], "contacts": {"P12": [1, 0]}}],
        "divisors": {"P12": {"d": 1}},
    }
    with pytest.raises(ConfigError):
        build_config(doc)


def test_contacts_for_unknown_fibers_are_rejected_at_use():
    from trisect.lattice import DivisorData, FiberConfig, pairing_from_geometry

    cfg = FiberConfig.all_i2(["inf"])
    with pytest.raises(ShapeMismatch):
        pairing_from_geometry(DivisorData(1, 0, {"p9": (1,)}), DivisorData(1), 0, cfg)


def test_stray_contacts():
    doc = MINIMAL | {"fibers": [{"label": "inf", "matrix": [[-2]], "contacts": {"ghost": [1]}}]}
    with pytest.raises(ConfigError):
        build_config(doc)


def test_unicode_only_in_comment(tmp_path):
    ok = load_config(write(tmp_path, MINIMAL | {"comment": "y² = f(x), Q₁ ∈ E(ℚ(t))"}))
    assert "P12" in ok.points
    with pytest.raises(ConfigError):
        load_config(write(tmp_path, MINIMAL | {"points": {"P₁₂": ["5*t - 6", "-5*(t - 2)*(t - 3)"]}}))
    with pytest.raises(ConfigError):
        load_config(write(tmp_path, MINIMAL | {"f": "(x − t^2)*(x^2 - 10*t*x + 25*x - 36)"}))


def test_not_utf8(tmp_path):
    p = tmp_path / "bad.json"
    p.write_bytes(b'{"comment": "\xff"}')
    with pytest.raises(ConfigError):
        load_config(str(p))


def test_nodes_must_be_constants():
    with pytest.raises(ConfigError):
        build_config(MINIMAL | {"nodes": {"p": ["t", "1"]}})


def test_bad_gram_entries():
    doc = MINIMAL | {"mw_basis": {"names": ["P12"], "gram": [[0.5]], "coords": {"P12": [1]}}}
    with pytest.raises(ConfigError):
        build_config(doc)
