"""Semi-reduced divisors on y^2 = f(x) and their Mumford representations.

A semi-reduced divisor of degree n is encoded by ``(u, v)`` with ``u`` monic
of degree n vanishing at the x-coordinates, ``deg v < deg u`` and
``u | v^2 - f``.  For genus one, a degree-3 pair ``(u, v)`` with
``v = b0 (x - x0)(x - b1) - y0`` sums to the point ``(x0, y0)``; reading
``v`` backwards gives the trisection constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curve import O, MWPoint, WCurve, on_curve
from .errors import (
    InvalidMumford,
    MultiplicityUnsupported,
    NonMonicF,
    NonSquarefreeF,
    NotOnCurve,
    NotSemiReduced,
    PointAtInfinity,
    RepeatedX,
    UnexpectedQuotientDegree,
    ZeroB0,
)
from .polyring import Coeff, XPoly, as_rfunc, eval_at_x, xpoly_divrem, xpoly_gcd


@dataclass(frozen=True)
class SemiReducedDivisor:
    """``sum n_i P_i`` over affine points, no point together with its involute."""

    points: tuple[tuple[MWPoint, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple((p, int(n)) for p, n in self.points))
        for i, (p, n) in enumerate(self.points):
            if p.is_infinity:
                raise NotSemiReduced("the point at infinity is not in an affine divisor")
            if n < 1:
                raise NotSemiReduced("multiplicities must be positive")
            if not p.y and n > 1:
                raise NotSemiReduced("a ramification point can only appear once")
            for q, _ in self.points[i + 1 :]:
                if q.x == p.x and q.y == -p.y and p.y:
                    raise NotSemiReduced("divisor contains a point and its involute")

    @classmethod
    def of(cls, *points: MWPoint) -> SemiReducedDivisor:
        return cls(tuple((p, 1) for p in points))

    def degree(self) -> int:
        return sum(n for _, n in self.points)


@dataclass(frozen=True)
class MumfordPair:
    u: XPoly
    v: XPoly
    f: XPoly

    def degree(self) -> int:
        return self.u.degree()


@lru_cache(maxsize=32)
def _check_f(f: XPoly) -> None:
    if not f.is_monic():
        raise NonMonicF("f must be monic in x")
    if f.degree() < 3 or f.degree() % 2 == 0:
        raise ValueError(f"f must have odd degree >= 3, got {f.degree()}")
    if xpoly_gcd(f, f.derivative_x()).degree() > 0:
        raise NonSquarefreeF("f has a repeated factor over K(t)")


def _quotient(u: XPoly, v: XPoly, f: XPoly) -> XPoly | None:
    """``(v^2 - f) / u`` when (u, v) is a Mumford pair for f, else None."""
    _check_f(f)
    if not u.is_monic() or v.degree() >= u.degree():
        return None
    q, r = xpoly_divrem(v * v - f, u)
    return None if r else q


def validate_mumford(u: XPoly, v: XPoly, f: XPoly) -> bool:
    """Check ``u`` monic, ``deg v < deg u`` and ``u | v^2 - f``; genus is read off ``deg f``."""
    return _quotient(u, v, f) is not None


def mumford_from_points(d: SemiReducedDivisor, C: WCurve) -> MumfordPair:
    """``u = prod (x - x_i)``, ``v`` the Lagrange interpolant through the points."""
    pts = []
    for p, n in d.points:
        if n > 1:
            raise MultiplicityUnsupported("only reduced (multiplicity one) divisors are interpolated")
        if not on_curve(C, p):
            raise NotOnCurve(f"{p!r} is not on the curve")
        pts.append(p)
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if p.x == q.x:
                raise RepeatedX("two points share an x-coordinate")
    field = C.field
    x = XPoly.var(field)
    u = XPoly((1,), field)
    for p in pts:
        u = u * (x - XPoly((p.x,), field))
    v = XPoly((), field)
    for i, p in enumerate(pts):
        basis = XPoly((p.y,), field)
        for j, q in enumerate(pts):
            if j != i:
                basis = basis * (x - XPoly((q.x,), field)) * XPoly(((p.x - q.x).inverse(),), field)
        v = v + basis
    return MumfordPair(u, v, C.f)


def class_point(m: MumfordPair, C: WCurve) -> MWPoint:
    """The point ``P_1 + ... + P_n`` represented by a pair with ``deg u`` in 1..3.

    Degree 2 is handled by the same quotient rule as degree 3.
    """
    u, v = m.u, m.v
    if not 1 <= u.degree() <= 3:
        raise InvalidMumford(f"class_point handles deg u in 1..3, got {u.degree()}")
    q = _quotient(u, v, C.f)
    if q is None:
        raise InvalidMumford("(u, v) is not a Mumford pair for this curve")
    if u.degree() == 1:
        return MWPoint(-u[0], v[0])
    if q.degree() == 0:
        return O
    if q.degree() == 1:
        x0 = -q[0] / q[1]
        return MWPoint(x0, -eval_at_x(v, x0))
    raise UnexpectedQuotientDegree(f"(v^2 - f)/u has degree {q.degree()} in x")


def trisection_construct(C: WCurve, P0: MWPoint, b0: Coeff, b1: Coeff) -> MumfordPair:
    """Degree-3 pair with ``v = b0 (x - x0)(x - b1) - y0``; its class point is ``P0``.

    ``u = (v^2 - f) / (b0^2 (x - x0))`` is exact because ``v(x0)^2 = y0^2 = f(x0)``.
    Smoothness of the plane cubic ``u = 0`` is not checked here.
    """
    if P0.is_infinity:
        raise PointAtInfinity("the trisection needs an affine point")
    if not on_curve(C, P0):
        raise NotOnCurve(f"{P0!r} is not on the curve")
    field = C.field
    b0 = as_rfunc(b0, field)
    b1 = as_rfunc(b1, field)
    if not b0:
        raise ZeroB0("b0 must be nonzero")
    x = XPoly.var(field)
    lin = x - XPoly((P0.x,), field)
    v = XPoly((b0,), field) * lin * (x - XPoly((b1,), field)) - XPoly((P0.y,), field)
    u, r = xpoly_divrem(v * v - C.f, XPoly((b0 * b0,), field) * lin)
    assert not r, "v(x0)^2 = f(x0) guarantees exact division"
    return MumfordPair(u, v, C.f)

