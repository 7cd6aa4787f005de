"""Polynomials in t over K, rational functions K(t), and polynomials in x over K(t).

``UPoly`` is dense and univariate; it is also reused for polynomials in x
with constant coefficients (fibers of a plane curve).  ``XPoly`` carries
``RFunc`` coefficients; an ``XPoly`` whose coefficients all have
denominator 1 is an element of K[t, x] (a "BiPoly").
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BothConstantInX,
    BothZero,
    FieldMismatch,
    NotPolynomial,
    ZeroPolynomial,
)
from .scalars import QQ, QuadField, QuadScalar

Scalar = QuadScalar | int | Fraction


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class UPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var^i``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[Scalar] = (), field: QuadField = QQ) -> None:
        self.field = field
        self.coeffs = tuple(_strip([field(c) for c in coeffs]))

    @classmethod
    def _make(cls, field: QuadField, cs: list) -> UPoly:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(_strip(cs))
        return obj

    @classmethod
    def constant(cls, c: Scalar, field: QuadField = QQ) -> UPoly:
        return cls((c,), field)

    @classmethod
    def var(cls, field: QuadField = QQ) -> UPoly:
        return cls((0, 1), field)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], field: QuadField = QQ) -> UPoly:
        p = cls.constant(1, field)
        for r in roots:
            p = p * cls((-field(r), 1), field)
        return p

    # -- basic queries -------------------------------------------------
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> QuadScalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> QuadScalar:
        return self.coeffs[0] if self.coeffs else self.field.zero

    def __getitem__(self, i: int) -> QuadScalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _lift(self, other: object) -> UPoly | None:
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, QuadScalar)):
            return UPoly._make(self.field, [self.field(other)])
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadScalar)):
            try:
                return self.coeffs == UPoly._make(self.field, [self.field(other)]).coeffs
            except FieldMismatch:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations -----------------------------------------------
    def __add__(self, other: object) -> UPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return UPoly._make(self.field, cs)

    __radd__ = __add__

    def __neg__(self) -> UPoly:
        return UPoly._make(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: object) -> UPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> UPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> UPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UPoly._make(self.field, [])
        cs = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                cs[i + j] = cs[i + j] + ai * bj
        return UPoly._make(self.field, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly._make(self.field, [self.field.one])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> UPoly:
        c = self.field(c)
        return UPoly._make(self.field, [c * a for a in self.coeffs])

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        o = self._lift(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = o.degree()
        inv = o.lc().inverse()
        q = [self.field.zero] * max(len(r) - db, 0)
        bc = o.coeffs
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            c = r[-1] * inv
            q[shift] = c
            for i in range(db):
                r[shift + i] = r[shift + i] - c * bc[i]
            r.pop()
            _strip(r)
        return UPoly._make(self.field, q), UPoly._make(self.field, r)

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UPoly | Scalar) -> UPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> UPoly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = lc.inverse()
        return UPoly._make(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> UPoly:
        return UPoly._make(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or any ring element."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        return f"UPoly({[str(c) for c in self.coeffs]})"


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = a.monic(), b.monic()
    if a.degree() < b.degree():
        a, b = b, a
    while b:
        a, b = b, (a % b).monic()
    return a


def upoly_ext_gcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return ``(g, s, u)`` with ``s*a + u*b = g`` and ``g`` monic."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    one = UPoly.constant(1, a.field)
    zero = UPoly((), a.field)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lc().inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_decomposition(p: UPoly) -> tuple[QuadScalar, list[tuple[UPoly, int]]]:
    """Yun's algorithm: ``p = content * prod(f_i ** e_i)``, ``e_i`` increasing."""
    if not p:
        raise ZeroPolynomial("squarefree decomposition of 0")
    content = p.lc()
    if p.degree() == 0:
        return content, []
    p = p.monic()
    dp = p.derivative()
    a0 = upoly_gcd(p, dp)
    b = p.exact_div(a0)
    c = dp.exact_div(a0)
    d = c - b.derivative()
    out: list[tuple[UPoly, int]] = []
    i = 1
    while b.degree() > 0:
        a = upoly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree() > 0:
            out.append((a, i))
        i += 1
    return content, out


class RFunc:
    """Reduced quotient ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly | Scalar, den: UPoly | Scalar | None = None, field: QuadField | None = None) -> None:
        if not isinstance(num, UPoly):
            if field is None:
                field = den.field if isinstance(den, UPoly) else QQ
            num = UPoly.constant(num, field)
        field = num.field
        if den is None:
            den = UPoly._make(field, [field.one])
        elif not isinstance(den, UPoly):
            den = UPoly.constant(den, field)
        if den.field != field:
            raise FieldMismatch(f"{num.field} vs {den.field}")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num: UPoly, den: UPoly) -> RFunc:
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def constant(cls, c: Scalar, field: QuadField = QQ) -> RFunc:
        f = field
        return cls._raw(UPoly._make(f, [f(c)]), UPoly._make(f, [f.one]))

    @classmethod
    def var(cls, field: QuadField = QQ) -> RFunc:
        return cls._raw(UPoly.var(field), UPoly.constant(1, field))

    @property
    def field(self) -> QuadField:
        return self.num.field

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def _lift(self, other: object) -> RFunc | None:
        if isinstance(other, RFunc):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, UPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return RFunc._raw(other, UPoly._make(other.field, [other.field.one]))
        if isinstance(other, (int, Fraction, QuadScalar)):
            return RFunc.constant(other, self.field)
        return None

    def __eq__(self, other: object) -> bool:
        try:
            o = self._lift(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RFunc._raw(self.num + o.num, self.den)
        if self.den == o.den:
            return RFunc._from_unreduced(self.num + o.num, self.den)
        g = upoly_gcd(self.den, o.den)
        if g.degree() == 0:
            # coprime denominators: the sum is already reduced
            return RFunc._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RFunc._from_unreduced(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self) -> RFunc:
        return RFunc._raw(-self.num, self.den)

    def __sub__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RFunc._raw(self.num * o.num, self.den)
        if not self.num or not o.num:
            return RFunc.constant(0, self.field)
        # cross-cancel so the product needs no further reduction
        a, b, c, d = self.num, self.den, o.num, o.den
        g1 = upoly_gcd(a, d) if d.degree() > 0 else None
        if g1 is not None and g1.degree() > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        g2 = upoly_gcd(c, b) if b.degree() > 0 else None
        if g2 is not None and g2.degree() > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RFunc._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of the zero function")
        lc = self.num.lc()
        return RFunc._raw(self.den.scale(lc.inverse()), self.num.monic())

    def __truediv__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> RFunc:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RFunc._raw(self.num**n, self.den**n)

    @classmethod
    def _from_unreduced(cls, num: UPoly, den: UPoly) -> RFunc:
        n, d = _reduce(num, den)
        return cls._raw(n, d)

    def derivative(self) -> RFunc:
        return RFunc._from_unreduced(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def __call__(self, value: Scalar) -> QuadScalar:
        d = self.den(value)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    def as_poly(self) -> UPoly:
        if self.den.degree() != 0:
            raise NotPolynomial("rational function has a nontrivial denominator")
        return self.num

    def __repr__(self) -> str:
        return f"RFunc({self.num!r}, {self.den!r})"


def _reduce(num: UPoly, den: UPoly) -> tuple[UPoly, UPoly]:
    if not num:
        return num, UPoly._make(num.field, [num.field.one])
    if den.degree() > 0:
        g = upoly_gcd(num, den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lc = den.lc()
    if lc != 1:
        inv = lc.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


Coeff = RFunc | UPoly | Scalar


def as_rfunc(c: Coeff, field: QuadField) -> RFunc:
    if isinstance(c, RFunc):
        if c.field != field:
            raise FieldMismatch(f"{c.field} value used in {field}")
        return c
    if isinstance(c, UPoly):
        if c.field != field:
            raise FieldMismatch(f"{c.field} value used in {field}")
        return RFunc._raw(c, UPoly._make(field, [field.one]))
    return RFunc.constant(c, field)


class XPoly:
    """Polynomial in x whose coefficients are rational functions of t."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[Coeff] = (), field: QuadField = QQ) -> None:
        self.field = field
        self.coeffs = tuple(_strip([as_rfunc(c, field) for c in coeffs]))

    @classmethod
    def _make(cls, field: QuadField, cs: list) -> XPoly:
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(_strip(cs))
        return obj

    @classmethod
    def var(cls, field: QuadField = QQ) -> XPoly:
        return cls((0, 1), field)

    @classmethod
    def constant(cls, c: Coeff, field: QuadField = QQ) -> XPoly:
        return cls((c,), field)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], Scalar], field: QuadField = QQ) -> XPoly:
        """Build from ``{(t_exponent, x_exponent): coefficient}``."""
        if not terms:
            return cls((), field)
        dx = max(j for (_, j) in terms)
        cols: list[list] = [[] for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            col = cols[j]
            while len(col) <= i:
                col.append(field.zero)
            col[i] = col[i] + field(c)
        return cls([UPoly._make(field, col) for col in cols], field)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> RFunc:
        return self.coeffs[-1] if self.coeffs else RFunc.constant(0, self.field)

    def __getitem__(self, i: int) -> RFunc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RFunc.constant(0, self.field)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def _lift(self, other: object) -> XPoly | None:
        if isinstance(other, XPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (RFunc, UPoly, int, Fraction, QuadScalar)):
            return XPoly((other,), self.field)
        return None

    def __eq__(self, other: object) -> bool:
        try:
            o = self._lift(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: object) -> XPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return XPoly._make(self.field, cs)

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly._make(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: object) -> XPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> XPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> XPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return XPoly._make(self.field, [])
        zero = RFunc.constant(0, self.field)
        cs = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    cs[i + j] = cs[i + j] + ai * bj
        return XPoly._make(self.field, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> XPoly:
        result = XPoly((1,), self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: XPoly) -> tuple[XPoly, XPoly]:
        return xpoly_divrem(self, other)

    def __mod__(self, other: XPoly) -> XPoly:
        return xpoly_divrem(self, other)[1]

    def __floordiv__(self, other: XPoly) -> XPoly:
        return xpoly_divrem(self, other)[0]

    def monic(self) -> XPoly:
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return XPoly._make(self.field, [c * inv for c in self.coeffs])

    def derivative_x(self) -> XPoly:
        return XPoly._make(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def derivative_t(self) -> XPoly:
        return XPoly._make(self.field, [c.derivative() for c in self.coeffs])

    def __call__(self, xi: RFunc | Coeff) -> RFunc:
        return eval_at_x(self, xi)

    def at_t(self, t0: Scalar) -> UPoly:
        """Specialize t := t0; the result is a polynomial in x."""
        return UPoly._make(self.field, [c(t0) for c in self.coeffs])

    def clear_denominators(self) -> tuple[XPoly, UPoly]:
        """Return ``(N, L)`` with ``self = N / L``, ``N`` in K[t, x], ``L`` monic."""
        L = UPoly.constant(1, self.field)
        for c in self.coeffs:
            L = L * c.den.exact_div(upoly_gcd(L, c.den))
        return XPoly._make(self.field, [c * L for c in self.coeffs]), L

    def terms(self) -> dict[tuple[int, int], QuadScalar]:
        """``{(t_exponent, x_exponent): coefficient}`` of a polynomial in K[t, x]."""
        out = {}
        for j, c in enumerate(self.coeffs):
            for i, a in enumerate(c.as_poly().coeffs):
                if a:
                    out[(i, j)] = a
        return out

    def total_degree(self) -> int:
        ts = self.terms()
        return max((i + j for i, j in ts), default=-1)

    def t_degree(self) -> int:
        return max((c.as_poly().degree() for c in self.coeffs), default=-1)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"


def xpoly_divrem(num: XPoly, den: XPoly) -> tuple[XPoly, XPoly]:
    """Euclidean division in K(t)[x]: ``num = q*den + r``, ``deg r < deg den``."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial in x")
    field = num.field
    if den.field != field:
        raise FieldMismatch(f"{num.field} vs {den.field}")
    r = list(num.coeffs)
    db = den.degree()
    inv = den.coeffs[-1].inverse()
    zero = RFunc.constant(0, field)
    q = [zero] * max(len(r) - db, 0)
    bc = den.coeffs
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = r[-1] * inv
        q[shift] = c
        for i in range(db):
            if bc[i]:
                r[shift + i] = r[shift + i] - c * bc[i]
        r.pop()
        _strip(r)
    return XPoly._make(field, q), XPoly._make(field, r)


def eval_at_x(p: XPoly, xi: Coeff) -> RFunc:
    """Substitute ``x := xi`` (Horner over K(t))."""
    xi = as_rfunc(xi, p.field)
    acc = RFunc.constant(0, p.field)
    for c in reversed(p.coeffs):
        acc = acc * xi + c
    return acc


def xpoly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic gcd in K(t)[x]."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, xpoly_divrem(a, b)[1]
    return a.monic()


def _poly_coeffs(p: XPoly) -> list[UPoly]:
    try:
        return [c.as_poly() for c in p.coeffs]
    except NotPolynomial:
        raise NotPolynomial("resultant_x expects coefficients in K[t]") from None


def _prem(A: Sequence[UPoly], B: Sequence[UPoly]) -> list[UPoly]:
    """Pseudo-remainder: ``lc(B)^(deg A - deg B + 1) * A = Q*B + R``."""
    R = list(A)
    dB = len(B) - 1
    lb = B[-1]
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lr = R[-1]
        shift = len(R) - 1 - dB
        R = [c * lb for c in R]
        for i, bc in enumerate(B):
            R[i + shift] = R[i + shift] - lr * bc
        R.pop()
        _strip(R)
        e -= 1
    if e:
        m = lb**e
        R = [c * m for c in R]
    return R


def resultant_x(g: XPoly, h: XPoly) -> UPoly:
    """Sylvester resultant with respect to x of two elements of K[t, x].

    Computed by the subresultant pseudo-remainder sequence.  Convention:
    ``Res(x - a, x - b) = a - b``.
    """
    field = g.field
    if h.field != field:
        raise FieldMismatch(f"{g.field} vs {h.field}")
    A = _poly_coeffs(g)
    B = _poly_coeffs(h)
    if len(A) <= 1 and len(B) <= 1:
        raise BothConstantInX("both polynomials are constant in x")
    zero = UPoly((), field)
    if not A or not B:
        return zero
    if len(A) == 1:
        return A[0] ** (len(B) - 1)
    if len(B) == 1:
        return B[0] ** (len(A) - 1)
    return _subresultant(A, B)


def _subresultant(A: list[UPoly], B: list[UPoly]) -> UPoly:
    field = A[0].field
    one = UPoly.constant(1, field)
    s = 1
    if len(A) < len(B):
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
        A, B = B, A
    g = h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return UPoly((), field)
        div = g * h**delta
        B = [c.exact_div(div) for c in R]
        g = A[-1]
        if delta:
            h = (g**delta).exact_div(h ** (delta - 1))
        if len(B) == 1:
            dA = len(A) - 1
            h = (B[0] ** dA).exact_div(h ** (dA - 1))
            return h if s == 1 else -h
