"""Weierstrass curves y^2 = x^3 + a1 x^2 + a2 x + a3 over K(t) and their group law."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import NonMonicF, NotOnCurve, SingularCurve
from .polyring import Coeff, RFunc, XPoly, as_rfunc
from .scalars import QuadField


def _debug() -> bool:
    return os.environ.get("MW_TRISECT_DEBUG") == "1"


@dataclass(frozen=True)
class MWPoint:
    """A K(t)-point; ``MWPoint()`` is the point at infinity O."""

    x: RFunc | None = None
    y: RFunc | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("an affine point needs both coordinates")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> MWPoint:
        return negate(self)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "MWPoint(O)"
        return f"MWPoint({self.x!r}, {self.y!r})"


O = MWPoint()


def affine(x: Coeff, y: Coeff, field: QuadField) -> MWPoint:
    return MWPoint(as_rfunc(x, field), as_rfunc(y, field))


class WCurve:
    """``y^2 = f(x)`` with ``f`` a monic cubic in x over K(t) and nonzero discriminant."""

    def __init__(self, f: XPoly) -> None:
        if f.degree() != 3:
            raise ValueError(f"expected a cubic in x, got degree {f.degree()}")
        if not f.is_monic():
            raise NonMonicF("the Weierstrass cubic must be monic in x")
        self.f = f
        self.field = f.field
        self.a1, self.a2, self.a3 = f[2], f[1], f[0]
        if not self.discriminant():
            raise SingularCurve("the cubic has a repeated root over K(t)")

    @classmethod
    def from_coeffs(cls, a1: Coeff, a2: Coeff, a3: Coeff, field: QuadField) -> WCurve:
        return cls(XPoly((a3, a2, a1, 1), field))

    def discriminant(self) -> RFunc:
        a, b, c = self.a1, self.a2, self.a3
        return a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c

    def rhs(self, x: RFunc) -> RFunc:
        return ((x + self.a1) * x + self.a2) * x + self.a3

    def point(self, x: Coeff, y: Coeff) -> MWPoint:
        """Affine point, checked against the equation."""
        p = affine(x, y, self.field)
        if not on_curve(self, p):
            raise NotOnCurve(f"{p!r} does not satisfy y^2 = f(x)")
        return p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WCurve) and self.f == other.f

    def __hash__(self) -> int:
        return hash(self.f)

    def __repr__(self) -> str:
        return f"WCurve({self.f!r})"


def on_curve(C: WCurve, P: MWPoint) -> bool:
    if P.is_infinity:
        return True
    return P.y * P.y == C.rhs(P.x)


def negate(P: MWPoint) -> MWPoint:
    if P.is_infinity:
        return P
    return MWPoint(P.x, -P.y)


def _check(C: WCurve, *points: MWPoint) -> None:
    for pt in points:
        if not on_curve(C, pt):
            raise NotOnCurve(f"{pt!r} is not on the curve")


def _chord(C: WCurve, P: MWPoint, Q: MWPoint) -> MWPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return O
        lam = (3 * P.x * P.x + 2 * C.a1 * P.x + C.a2) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - C.a1 - P.x - Q.x
    R = MWPoint(x3, -(P.y + lam * (x3 - P.x)))
    if _debug() and not on_curve(C, R):
        raise AssertionError("group law left the curve")
    return R


def add(C: WCurve, P: MWPoint, Q: MWPoint) -> MWPoint:
    """Chord-tangent sum with O as the identity.

    The a1 x^2 term of the cubic enters through the tangent slope and through
    ``x3 = lambda^2 - a1 - x1 - x2``.
    """
    _check(C, P, Q)
    return _chord(C, P, Q)


def add_all(C: WCurve, points) -> MWPoint:
    points = list(points)
    _check(C, *points)
    acc = O
    for p in points:
        acc = _chord(C, acc, p)
    return acc


def scalar_mul(C: WCurve, n: int, P: MWPoint) -> MWPoint:
    _check(C, P)
    if n < 0:
        n, P = -n, negate(P)
    result = O
    base = P
    while n:
        if n & 1:
            result = _chord(C, result, base)
        n >>= 1
        if n:
            base = _chord(C, base, base)
    return result
