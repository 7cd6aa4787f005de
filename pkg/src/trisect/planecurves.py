"""Plane curves in P^2 with coordinates [T : X : Z], given by affine equations g(t, x).

Intersections are studied through the pencil of lines through [0 : 1 : 0]:
eliminating X between two homogenized equations leaves a binary form in
(T, Z) whose roots are the lines t = const (and Z = 0) that carry common
points.  Smoothness is certified chart by chart with resultants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    BothZero,
    CommonComponent,
    FieldMismatch,
    NonSquarefreeModulus,
    NotPolynomial,
    ZeroCurve,
)
from .polyring import RFunc, UPoly, XPoly, resultant_x, squarefree_decomposition, upoly_ext_gcd, upoly_gcd
from .scalars import QuadScalar


class _Indeterminate:
    """Result of a check that could not be decided.

    It deliberately has no truth value, so it cannot be mistaken for False.
    """

    _instance: _Indeterminate | None = None

    def __new__(cls) -> _Indeterminate:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        raise TypeError("INDETERMINATE has no truth value")

    def __repr__(self) -> str:
        return "INDETERMINATE"


INDETERMINATE = _Indeterminate()


@dataclass(frozen=True)
class ProjCurve:
    """Projective closure of ``g(t, x) = 0`` as a curve of degree ``total_degree``."""

    g: XPoly
    total_degree: int

    def __post_init__(self) -> None:
        if not self.g.is_polynomial():
            raise NotPolynomial("plane curve equations must lie in K[t, x]")
        deg = self.g.total_degree()
        if deg < 0:
            raise ZeroCurve("the zero polynomial does not define a curve")
        if deg > self.total_degree:
            raise ValueError(f"affine degree {deg} exceeds declared degree {self.total_degree}")

    @classmethod
    def of(cls, g: XPoly) -> ProjCurve:
        return cls(g, g.total_degree())

    @property
    def field(self):
        return self.g.field

    def homogeneous_terms(self) -> dict[tuple[int, int, int], QuadScalar]:
        """``{(i, j, k): c}`` for the monomials ``c T^i X^j Z^k``."""
        n = self.total_degree
        return {(i, j, n - i - j): c for (i, j), c in self.g.terms().items()}

    def contains_projection_center(self) -> bool:
        """Whether [0 : 1 : 0] lies on the curve, i.e. the x-degree drops."""
        return self.g.degree() < self.total_degree


Point = Union[tuple, str]


def _evaluate(curve: ProjCurve, T, X, Z):
    field = curve.field
    acc = field.zero
    for (i, j, k), c in curve.homogeneous_terms().items():
        acc = acc + c * field(T) ** i * field(X) ** j * field(Z) ** k
    return acc


def passes_through(g: ProjCurve, point: Point) -> bool:
    """``point`` is an affine pair ``(t, x)``, a triple ``(T, X, Z)`` or ``"infinity"`` for [0:1:0]."""
    if isinstance(point, str):
        if point != "infinity":
            raise ValueError(f"unknown point marker {point!r}")
        point = (0, 1, 0)
    if len(point) == 2:
        point = (point[0], point[1], 1)
    if len(point) != 3 or not any(point):
        raise ValueError("expected (t, x) or a nonzero triple (T, X, Z)")
    return not _evaluate(g, *point)


def _shear(c: ProjCurve, lam: int) -> ProjCurve:
    """The same curve after the coordinate change T = T' - lam*X."""
    field = c.field
    t_new = XPoly((RFunc.var(field),), field) - XPoly((0, lam), field)
    acc = XPoly((), field)
    for (i, j), a in c.g.terms().items():
        acc = acc + XPoly((a,), field) * t_new**i * XPoly.var(field) ** j
    return ProjCurve(acc, c.total_degree)


def _separating_pair(g: ProjCurve, h: ProjCurve) -> tuple[ProjCurve, ProjCurve]:
    """Move the projection center off one of the curves if it lies on both.

    After shearing by ``lam`` the pencil consists of the lines through the old
    point [-lam : 1 : 0]; intersection multiplicities are unchanged.
    """
    if g.field != h.field:
        raise FieldMismatch(f"{g.field} vs {h.field}")
    if not (g.contains_projection_center() and h.contains_projection_center()):
        return g, h
    for lam in range(1, g.total_degree + h.total_degree + 2):
        if not (passes_through(g, (-lam, 1, 0)) and passes_through(h, (-lam, 1, 0))):
            return _shear(g, lam), _shear(h, lam)
    # more common points on Z = 0 than Bezout allows
    raise CommonComponent("both curves contain the line at infinity")


def _projection_resultant(g: ProjCurve, h: ProjCurve) -> UPoly:
    r = resultant_x(g.g, h.g)
    if not r:
        raise CommonComponent("the curves share a component")
    return r


def homogeneous_resultant_profile(g: ProjCurve, h: ProjCurve) -> list[int]:
    """Multiplicities of the roots of the eliminant binary form, sorted.

    A squarefree factor of degree k and multiplicity e contributes k copies of
    e; the degree drop of the dehomogenized eliminant is the multiplicity of
    the line Z = 0.  When at most one curve contains [0:1:0] each entry is the
    total intersection multiplicity along its line, so the entries sum to
    ``deg g * deg h``.  If both curves contain [0:1:0] the pencil is taken
    through the first point [-lam : 1 : 0], lam = 1, 2, ..., that is not on both.
    """
    g, h = _separating_pair(g, h)
    r = _projection_resultant(g, h)
    _, factors = squarefree_decomposition(r)
    profile = [e for f, e in factors for _ in range(f.degree())]
    drop = g.total_degree * h.total_degree - r.degree()
    if drop:
        profile.append(drop)
    return sorted(profile)


class _ZeroDivisor(Exception):
    pass


class _QuotientRing:
    """K[t]/(m) for squarefree m; inversion fails on zero divisors."""

    def __init__(self, modulus: UPoly) -> None:
        self.m = modulus

    def reduce(self, a: UPoly) -> UPoly:
        return a % self.m

    def inverse(self, a: UPoly) -> UPoly:
        g, s, _ = upoly_ext_gcd(a, self.m)
        if g.degree() > 0:
            raise _ZeroDivisor
        return self.reduce(s)

    def poly(self, p: XPoly) -> list[UPoly]:
        cs = [self.reduce(c.as_poly()) for c in p.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return cs

    def rem(self, a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
        a = list(a)
        inv = self.inverse(b[-1])
        while len(a) >= len(b):
            c = self.reduce(a[-1] * inv)
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] = self.reduce(a[shift + i] - c * bc)
            a.pop()
            while a and not a[-1]:
                a.pop()
        return a

    def gcd(self, a: list[UPoly], b: list[UPoly]) -> list[UPoly]:
        while b:
            a, b = b, self.rem(a, b)
        return a

    def derivative(self, a: list[UPoly]) -> list[UPoly]:
        out = [self.reduce(c.scale(i)) for i, c in enumerate(a)][1:]
        while out and not out[-1]:
            out.pop()
        return out


def _quotient_ring(modulus: UPoly) -> _QuotientRing:
    if modulus.degree() < 1:
        raise ValueError("the modulus must be nonconstant")
    if upoly_gcd(modulus, modulus.derivative()).degree() > 0:
        raise NonSquarefreeModulus("the modulus has a repeated factor")
    return _QuotientRing(modulus.monic())


def fiber_gcd_degree(g: XPoly, h: XPoly, modulus: UPoly) -> int | _Indeterminate:
    """Degree in x of ``gcd(g, h)`` over K[t]/(modulus), or INDETERMINATE on a zero divisor."""
    ring = _quotient_ring(modulus)
    a, b = ring.poly(g), ring.poly(h)
    if not a and not b:
        return INDETERMINATE
    try:
        return len(ring.gcd(a, b)) - 1
    except _ZeroDivisor:
        return INDETERMINATE


def fiber_point_count(g: XPoly, h: XPoly, modulus: UPoly) -> int | _Indeterminate:
    """Distinct common affine points over each root of ``modulus``: deg d - deg gcd(d, d')."""
    ring = _quotient_ring(modulus)
    a, b = ring.poly(g), ring.poly(h)
    if not a and not b:
        return INDETERMINATE
    try:
        d = ring.gcd(a, b)
        if len(d) <= 1:
            return 0
        return (len(d) - 1) - (len(ring.gcd(d, ring.derivative(d))) - 1)
    except _ZeroDivisor:
        return INDETERMINATE


def _top_form(c: ProjCurve) -> UPoly:
    """``G(1, x, 0)``: the points of the curve on Z = 0 other than [0:1:0]."""
    n = c.total_degree
    cs = [c.field.zero] * (n + 1)
    for (i, j, k), a in c.homogeneous_terms().items():
        if k == 0:
            cs[j] = a
    return UPoly(cs, c.field)


def _points_at_infinity(g: ProjCurve, h: ProjCurve) -> int:
    """Distinct common points on the line Z = 0."""
    a, b = _top_form(g), _top_form(h)
    count = 0
    if a or b:
        d = upoly_gcd(a, b)
        if d.degree() > 0:
            count += d.degree() - upoly_gcd(d, d.derivative()).degree()
    else:
        raise CommonComponent("both curves contain the line at infinity")
    if passes_through(g, "infinity") and passes_through(h, "infinity"):
        count += 1
    return count


def intersection_point_count(g: ProjCurve, h: ProjCurve) -> int | _Indeterminate:
    """Number of distinct points of ``g cap h`` (over the algebraic closure)."""
    g, h = _separating_pair(g, h)
    r = _projection_resultant(g, h)
    _, factors = squarefree_decomposition(r)
    total = 0
    for f, _ in factors:
        n = fiber_point_count(g.g, h.g, f)
        if n is INDETERMINATE:
            return INDETERMINATE
        total += n * f.degree()
    if g.total_degree * h.total_degree > r.degree():
        total += _points_at_infinity(g, h)
    return total


def even_contact(g: ProjCurve, h: ProjCurve) -> bool | _Indeterminate:
    """Every intersection multiplicity is even.

    Certified when every line of the pencil carrying intersections has an even
    profile entry and meets ``g cap h`` in a single point.  An odd entry, or
    more common points on a line than half its entry, is conclusive the other
    way; anything else is INDETERMINATE.
    """
    g, h = _separating_pair(g, h)
    r = _projection_resultant(g, h)
    _, factors = squarefree_decomposition(r)
    drop = g.total_degree * h.total_degree - r.degree()
    if any(e % 2 for _, e in factors) or drop % 2:
        return False
    undecided = False
    lines = [(fiber_point_count(g.g, h.g, f), e) for f, e in factors]
    if drop:
        lines.append((_points_at_infinity(g, h), drop))
    for n, e in lines:
        if n is INDETERMINATE:
            undecided = True
        elif 2 * n > e:
            # more points than pairs: one of them is a simple intersection
            return False
        elif n != 1:
            undecided = True
    return INDETERMINATE if undecided else True


def _swap(p: XPoly) -> XPoly:
    return XPoly.from_terms({(j, i): c for (i, j), c in p.terms().items()}, p.field)


def _no_common_zero_by_x(polys: Sequence[XPoly]) -> bool:
    """Affine common zeros of ``polys`` are excluded if the projected eliminants are coprime."""
    G, rest = polys[0], [q for q in polys[1:] if q]
    if not rest:
        return G.total_degree() == 0
    acc: UPoly | None = None
    for Q in rest:
        if G.degree() <= 0 and Q.degree() <= 0:
            r = upoly_gcd(G[0].as_poly(), Q[0].as_poly())
        else:
            r = resultant_x(G, Q)
        try:
            acc = r if acc is None else upoly_gcd(acc, r)
        except BothZero:
            acc = UPoly((), G.field)
    return bool(acc) and acc.degree() == 0


def _chart_is_smooth(G: XPoly) -> bool:
    polys = [G, G.derivative_x(), G.derivative_t()]
    if _no_common_zero_by_x(polys):
        return True
    return _no_common_zero_by_x([_swap(p) for p in polys])


def smoothness_check(g: ProjCurve) -> bool:
    """True when each of the charts Z = 1, T = 1, X = 1 is certified nonsingular.

    A False answer means some chart could not be certified: both elimination
    orders left a common root of the eliminants.
    """
    if g.total_degree < 1 or g.g.total_degree() < 1:
        raise ZeroCurve("a constant does not define a curve")
    terms = g.homogeneous_terms()
    field = g.field
    charts = [
        {(i, j): c for (i, j, k), c in terms.items()},  # Z = 1: (t, x)
        {(k, j): c for (i, j, k), c in terms.items()},  # T = 1: (z, x)
        {(i, k): c for (i, j, k), c in terms.items()},  # X = 1: (t, z)
    ]
    return all(_chart_is_smooth(XPoly.from_terms(ch, field)) for ch in charts)
