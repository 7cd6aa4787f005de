from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import small_fracs
from trisect.errors import CommonComponent, NonSquarefreeModulus, NotPolynomial, ZeroCurve
from trisect.parser import parse_rfunc, parse_value
from trisect.planecurves import (
    INDETERMINATE,
    ProjCurve,
    even_contact,
    fiber_gcd_degree,
    fiber_point_count,
    homogeneous_resultant_profile,
    intersection_point_count,
    passes_through,
    smoothness_check,
)
from trisect.polyring import UPoly, XPoly, resultant_x, squarefree_decomposition
from trisect.scalars import QQ
from trisect.scenarios import printed_u_case_ii

C1, C2 = "x - t^2", "x^2 - 10*t*x + 25*x - 36"
QUARTIC = f"({C1})*({C2})"
TRIANGLE = "(x - 5*t + 6)*(x - 9*t + 18)*(x - 8*t + 12)"


def xp(src: str, field=QQ) -> XPoly:
    return parse_value(src, field)


def curve(src: str, degree: int | None = None, field=QQ) -> ProjCurve:
    g = xp(src, field)
    return ProjCurve(g, g.total_degree() if degree is None else degree)


def up(src: str) -> UPoly:
    return parse_rfunc(src).as_poly()


# profiles


def test_bitangent_profile():
    assert homogeneous_resultant_profile(curve("x"), curve(QUARTIC)) == [2, 2]


def test_two_lines_profile():
    assert homogeneous_resultant_profile(curve("x - t"), curve("x + 2*t - 1")) == [1]


def test_conic_pair_profile():
    assert homogeneous_resultant_profile(curve(C1), curve(C2)) == [1, 1, 1, 1]


def test_profile_with_both_curves_through_the_center(case1):
    g, h = case1.plane_curve("C2P13"), case1.plane_curve("Q")
    assert g.contains_projection_center() and h.contains_projection_center()
    prof = homogeneous_resultant_profile(g, h)
    assert sum(prof) == 8 and all(e % 2 == 0 for e in prof)


def test_common_component():
    with pytest.raises(CommonComponent):
        homogeneous_resultant_profile(curve(C1), curve(QUARTIC))


def test_curve_construction_errors():
    with pytest.raises(ZeroCurve):
        ProjCurve(XPoly(()), 1)
    with pytest.raises(NotPolynomial):
        ProjCurve(xp("x") * XPoly((parse_rfunc("1/t"),)), 2)
    with pytest.raises(ValueError):
        ProjCurve(xp("x^3"), 2)


# contact


def test_even_contact_examples(case2):
    u = printed_u_case_ii(1, Fraction(1), case2)
    E = ProjCurve(u, 3)
    Q = curve(QUARTIC)
    assert even_contact(E, Q) is True
    assert even_contact(curve("x"), Q) is True
    assert even_contact(curve("x - 1"), curve(C1)) is False


def test_even_contact_two_transverse_points_on_one_line():
    # both points (0, 1) and (0, -1) lie on t = 0 and are transverse: entry 2, two points
    g, h = curve("x^2 - 1 - t"), curve("x^2 - 1 + t")
    assert homogeneous_resultant_profile(g, h) == [2, 2]
    assert even_contact(g, h) is False


def test_even_contact_is_conservative():
    # two tangencies on the same line t = 0; certifying them needs more than the profile
    g, h = curve("x^2 + t^2 - 1"), curve("x^2 + 2*t^2 - 1")
    assert homogeneous_resultant_profile(g, h) == [4]
    assert intersection_point_count(g, h) == 2
    assert even_contact(g, h) is INDETERMINATE


def test_indeterminate_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(INDETERMINATE)
    assert repr(INDETERMINATE)


# fibers


def test_fiber_gcd_on_nodal_fibers():
    g, h = xp(C1), xp(C2)
    r = resultant_x(g, h)
    _, factors = squarefree_decomposition(r)
    (quartic, e), = factors
    assert quartic.degree() == 4 and e == 1
    assert fiber_gcd_degree(g, h, quartic) == 1
    for node in ("t - 3", "t - 2", "t - 6", "t + 1"):
        assert fiber_gcd_degree(g, h, up(node)) == 1


def test_fiber_gcd_coprime_fiber():
    assert fiber_gcd_degree(xp(C1), xp(C2), up("t")) == 0


def test_fiber_gcd_tangency_at_origin():
    assert fiber_gcd_degree(xp("x"), xp(C1), up("t")) == 1


def test_fiber_gcd_reducible_modulus_with_branching():
    # at t = 1 the lines meet, at t = -1 they do not
    assert fiber_gcd_degree(xp("x - t"), xp("x - 1"), up("t^2 - 1")) is INDETERMINATE
    assert fiber_point_count(xp("x - t"), xp("x - 1"), up("t^2 - 1")) is INDETERMINATE


def test_fiber_gcd_needs_squarefree_modulus():
    with pytest.raises(NonSquarefreeModulus):
        fiber_gcd_degree(xp("x"), xp(C1), up("t^2"))


def test_intersection_point_counts(case2):
    assert intersection_point_count(curve(C1), curve(C2)) == 4
    assert intersection_point_count(curve("x"), curve(QUARTIC)) == 2
    u = printed_u_case_ii(1, Fraction(1), case2)
    assert intersection_point_count(ProjCurve(u, 3), curve("x")) == 3


# smoothness


def test_smoothness_examples(case2):
    assert smoothness_check(ProjCurve(printed_u_case_ii(1, Fraction(1), case2), 3))
    assert not smoothness_check(curve(TRIANGLE))
    assert smoothness_check(curve(C1))


def test_smoothness_sees_points_at_infinity():
    # x t^2 = 1 is smooth in the (t, x) chart but singular at [0 : 1 : 0]
    assert not smoothness_check(curve("x*t^2 - 1"))
    # x^3 = t Z^2 has a cusp at [1 : 0 : 0]
    assert not smoothness_check(curve("x^3 - t"))
    assert smoothness_check(curve("x^3 + t^3 + 1"))


def test_smoothness_of_constants():
    with pytest.raises(ZeroCurve):
        smoothness_check(ProjCurve(xp("1"), 2))


# membership


def test_passes_through_examples():
    assert passes_through(curve(TRIANGLE), (3, 9))
    assert passes_through(curve(C1), (2, 4))
    assert not passes_through(curve(C1), (0, 1))
    assert passes_through(curve(C1), "infinity")
    assert not passes_through(curve("x - t"), "infinity")
    assert passes_through(curve("x - t"), (1, 1, 0))


# properties

low_degree = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), small_fracs), min_size=1, max_size=5
).map(lambda ts: {(i, j): c for i, j, c in ts if i + j <= 2})


def _poly(terms):
    return XPoly.from_terms(terms, QQ)


@given(low_degree, low_degree, st.integers(0, 1), st.integers(0, 1))
def test_bezout_sum_rule(a, b, extra_a, extra_b):
    g, h = _poly(a), _poly(b)
    assume(g.total_degree() >= 1 and h.total_degree() >= 1)
    G = ProjCurve(g, g.total_degree() + extra_a)
    H = ProjCurve(h, h.total_degree() + extra_b)
    try:
        prof = homogeneous_resultant_profile(G, H)
    except CommonComponent:
        assume(False)
    assert sum(prof) == G.total_degree * H.total_degree


@given(low_degree, low_degree)
def test_even_contact_is_symmetric(a, b):
    g, h = _poly(a), _poly(b)
    assume(g.total_degree() >= 1 and h.total_degree() >= 1)
    G, H = ProjCurve.of(g), ProjCurve.of(h)
    try:
        one = even_contact(G, H)
    except CommonComponent:
        assume(False)
    assert even_contact(H, G) is one


@given(low_degree)
def test_squares_touch_everything_evenly(a):
    # h^2 meets any curve with even multiplicities
    g = _poly(a)
    assume(g.total_degree() >= 1)
    line = ProjCurve(xp("x - 3*t + 1"), 1)
    try:
        prof = homogeneous_resultant_profile(line, ProjCurve.of(g * g))
    except CommonComponent:
        assume(False)
    assert all(e % 2 == 0 for e in prof)
