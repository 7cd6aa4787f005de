from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import small_fracs
from trisect.config import load_config
from trisect.curve import O, MWPoint, add, add_all, negate
from trisect.errors import (
    InvalidMumford,
    MultiplicityUnsupported,
    NonMonicF,
    NonSquarefreeF,
    NotOnCurve,
    NotSemiReduced,
    PointAtInfinity,
    RepeatedX,
    ZeroB0,
)
from trisect.mumford import (
    MumfordPair,
    SemiReducedDivisor,
    class_point,
    mumford_from_points,
    trisection_construct,
    validate_mumford,
)
from trisect.parser import parse_rfunc, parse_value
from trisect.polyring import RFunc, XPoly
from trisect.scenarios import printed_u_case_i, printed_u_case_ii

CASES = {name: load_config(name) for name in ("case1.json", "case2.json")}
C2 = CASES["case2.json"]

U10 = "(x - 5*t + 6)*(x - 9*t + 18)*(x - 8*t + 12)"
V10 = "1/6*x*(x - (11*t - 36)) - 6*t"


def xp(src: str, cfg=C2) -> XPoly:
    return parse_value(src, cfg.field)


def linear(P: MWPoint, cfg=C2) -> tuple[XPoly, XPoly]:
    x = XPoly.var(cfg.field)
    return x - XPoly((P.x,), cfg.field), XPoly((P.y,), cfg.field)


# validation


def test_validate_examples(case2):
    f = case2.curve.f
    assert validate_mumford(xp(U10), xp(V10), f)
    u, v = linear(case2.point("P12"))
    assert validate_mumford(u, v, f)
    assert not validate_mumford(u, v + 1, f)


def test_validate_shape_conditions(case2):
    f = case2.curve.f
    u, v = xp(U10), xp(V10)
    assert not validate_mumford(u * 2, v * 2, f)  # not monic
    assert not validate_mumford(u, v + u, f)  # deg v >= deg u


def test_validate_rejects_bad_f():
    u, v = xp("x"), xp("t")
    with pytest.raises(NonMonicF):
        validate_mumford(u, v, xp("2*x^3 + t"))
    with pytest.raises(NonSquarefreeF):
        validate_mumford(u, v, xp("x^2*(x - t)"))
    with pytest.raises(ValueError):
        validate_mumford(u, v, xp("x^4 + t"))


def test_validate_is_generic_in_the_genus():
    # genus 2: y^2 = x^5 + t^2 has the point (0, t)
    f = xp("x^5 + t^2")
    assert validate_mumford(xp("x"), xp("t"), f)
    assert not validate_mumford(xp("x"), xp("t + 1"), f)


# interpolation


def test_triangle_divisor_gives_printed_u_and_corrected_v(case2):
    d = SemiReducedDivisor.of(*(case2.point(n) for n in ("P12", "P13", "P23")))
    m = mumford_from_points(d, case2.curve)
    assert m.u == xp(U10)
    # printed with "+6t"; the sign consistent with the chord-tangent law is -6t
    assert m.v == xp(V10)
    assert validate_mumford(m.u, m.v, m.f)


def test_single_point_divisor(case2):
    P = case2.point("P13")
    m = mumford_from_points(SemiReducedDivisor.of(P), case2.curve)
    assert (m.u, m.v) == linear(P)


def test_two_point_divisor(case2):
    m = mumford_from_points(SemiReducedDivisor.of(case2.point("P12"), case2.point("P13")), case2.curve)
    assert m.u.degree() == 2 and m.v.degree() <= 1
    assert validate_mumford(m.u, m.v, m.f)


def test_semi_reduced_invariants(case2):
    P, T = case2.point("P12"), case2.point("T")
    with pytest.raises(NotSemiReduced):
        SemiReducedDivisor.of(P, negate(P))
    with pytest.raises(NotSemiReduced):
        SemiReducedDivisor(((T, 2),))
    with pytest.raises(NotSemiReduced):
        SemiReducedDivisor(((P, 0),))
    with pytest.raises(NotSemiReduced):
        SemiReducedDivisor.of(O)
    assert SemiReducedDivisor(((P, 2),)).degree() == 2


def test_interpolation_errors(case2):
    C = case2.curve
    P = case2.point("P12")
    with pytest.raises(MultiplicityUnsupported):
        mumford_from_points(SemiReducedDivisor(((P, 2),)), C)
    with pytest.raises(RepeatedX):
        mumford_from_points(SemiReducedDivisor.of(P, P), C)
    off = MWPoint(parse_rfunc("0"), parse_rfunc("1"))
    with pytest.raises(NotOnCurve):
        mumford_from_points(SemiReducedDivisor.of(off), C)


# class points


def test_class_point_of_triangle(case2):
    m = MumfordPair(xp(U10), xp(V10), case2.curve.f)
    assert class_point(m, case2.curve) == case2.point("Q1")


def test_class_point_of_single_point(case2):
    P = case2.point("P23")
    assert class_point(MumfordPair(*linear(P), case2.curve.f), case2.curve) == P


def test_class_point_of_collinear_triple(case2):
    C = case2.curve
    P, Q = case2.point("P12"), case2.point("P13")
    R = negate(add(C, P, Q))
    m = mumford_from_points(SemiReducedDivisor.of(P, Q, R), C)
    assert m.v.degree() <= 1
    assert class_point(m, C) == O


def test_class_point_of_bisection(case2):
    C = case2.curve
    P, Q = case2.point("P12"), case2.point("P23")
    m = mumford_from_points(SemiReducedDivisor.of(P, Q), C)
    assert class_point(m, C) == add(C, P, Q)


def test_class_point_rejects_invalid_pairs(case2):
    C = case2.curve
    u, v = linear(case2.point("P12"))
    with pytest.raises(InvalidMumford):
        class_point(MumfordPair(u, v + 1, C.f), C)
    with pytest.raises(InvalidMumford):
        class_point(MumfordPair(u**4, v, C.f), C)
    with pytest.raises(InvalidMumford):
        class_point(MumfordPair(XPoly((1,)), XPoly(()), C.f), C)


# trisections


def test_trisection_case_ii_at_s1(case2):
    m = trisection_construct(case2.curve, case2.point("Q1"), Fraction(1, 6), parse_rfunc("11*t - 36 + 1"))
    assert m.u[2] == parse_rfunc("-22*t + 34")
    assert m.u == printed_u_case_ii(1, Fraction(1), case2)
    assert validate_mumford(m.u, m.v, m.f)
    assert class_point(m, case2.curve) == case2.point("Q1")


def test_trisection_case_i_at_c0(case1):
    m = trisection_construct(case1.curve, case1.point("P13"), 1, 0)
    assert m.u == parse_value("x^3 - 2*x^2 + (7*t^2 - 11)*x + 14*t^2 - 9", case1.field)
    assert m.u == printed_u_case_i("P13", Fraction(0), case1)


@pytest.mark.parametrize("j", [1, 2])
def test_degenerate_trisection_is_the_triangle(case2, j):
    P0, b0 = ("Q1", Fraction(1, 6)) if j == 1 else ("Q2", 1)
    b1 = parse_rfunc("11*t - 36" if j == 1 else "6*t - 6")
    u = trisection_construct(case2.curve, case2.point(P0), b0, b1).u
    assert u == xp(U10)
    for line in ("x - 5*t + 6", "x - 9*t + 18", "x - 8*t + 12"):
        assert u % xp(line) == XPoly()


def test_trisection_errors(case2):
    C = case2.curve
    with pytest.raises(ZeroB0):
        trisection_construct(C, case2.point("Q1"), 0, 1)
    with pytest.raises(PointAtInfinity):
        trisection_construct(C, O, 1, 1)
    with pytest.raises(NotOnCurve):
        trisection_construct(C, MWPoint(parse_rfunc("0"), parse_rfunc("1")), 1, 1)


def _named(cfg):
    return st.sampled_from(sorted(cfg.points)).flatmap(lambda n: st.sampled_from([cfg.point(n), -cfg.point(n)]))


@pytest.mark.parametrize("name", sorted(CASES))
@given(data=st.data(), b0=small_fracs.filter(bool), b1a=small_fracs, b1b=small_fracs)
def test_trisection_round_trip(name, data, b0, b1a, b1b):
    cfg = CASES[name]
    P = data.draw(_named(cfg))
    b1 = RFunc.var(cfg.field) * b1a + b1b
    m = trisection_construct(cfg.curve, P, b0, b1)
    assert m.u.degree() == 3 and m.u.is_monic()
    assert validate_mumford(m.u, m.v, m.f)
    assert class_point(m, cfg.curve) == P


def _triples(cfg):
    pts = [cfg.point(n) for n in sorted(cfg.points)]
    pts += [negate(p) for p in pts if p.y]
    out = []
    for trip in combinations(pts, 3):
        xs = [p.x for p in trip]
        if len(set(map(repr, xs))) == 3:
            out.append(trip)
    return out


@pytest.mark.parametrize("name", sorted(CASES))
@given(data=st.data())
def test_class_point_agrees_with_group_law(name, data):
    cfg = CASES[name]
    trip = data.draw(st.sampled_from(_triples(cfg)))
    m = mumford_from_points(SemiReducedDivisor.of(*trip), cfg.curve)
    assert class_point(m, cfg.curve) == add_all(cfg.curve, trip)


@given(c=small_fracs.filter(bool), k=st.integers(0, 2))
def test_mumford_pair_is_unique(c, k):
    C = C2.curve
    m = mumford_from_points(SemiReducedDivisor.of(*(C2.point(n) for n in ("P12", "P13", "P23"))), C)
    # any nonzero change of v of degree < deg u breaks divisibility
    x = XPoly.var()
    assert not validate_mumford(m.u, m.v + x**k * c, C.f)
    assert not validate_mumford(m.u, m.v + x**k * RFunc.var() * c, C.f)
