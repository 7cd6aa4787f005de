"""Exact base fields: the rationals and real quadratic extensions Q(sqrt d).

Rationals are :class:`fractions.Fraction`.  A :class:`QuadScalar` is
``a + b*sqrt(d)`` with rational ``a``, ``b``; the plain-Q instance has
``d = None`` and ``b == 0``.  Values from different field instances never
mix; plain ``int``/``Fraction`` operands are lifted into the field of the
other operand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import FieldMismatch

Rat = Fraction


@lru_cache(maxsize=None)
def _check_discriminant(d: int) -> int:
    if d in (0, 1):
        raise ValueError(f"sqrt({d}) does not define a quadratic extension")
    n = abs(d)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            raise ValueError(f"{d} is not squarefree")
        k += 1
    return d


class QuadScalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, d: int | None = None) -> None:
        a = Fraction(a)
        b = Fraction(b)
        if d is None:
            if b:
                raise FieldMismatch("irrational part given for the plain rational field")
        else:
            _check_discriminant(d)
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int | None) -> QuadScalar:
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.d = d
        return obj

    def _coerce(self, other: object) -> QuadScalar | None:
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise FieldMismatch(f"cannot combine values from Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadScalar._raw(Fraction(other), Fraction(0), self.d)
        return None

    def __add__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> QuadScalar:
        return QuadScalar._raw(-self.a, -self.b, self.d)

    def __mul__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.b and not o.b:
            return QuadScalar._raw(self.a * o.a, self.b, self.d)
        return QuadScalar._raw(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """``s * conj(s) = a^2 - d b^2``."""
        if not self.b:
            return self.a * self.a
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> QuadScalar:
        return QuadScalar._raw(self.a, -self.b, self.d)

    def inverse(self) -> QuadScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if not self.b:
            return QuadScalar._raw(1 / self.a, self.b, self.d)
        n = self.norm()
        return QuadScalar._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("division by zero")
            return QuadScalar._raw(self.a / o.a, self.b / o.a, self.d)
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> QuadScalar:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadScalar._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def is_rational(self) -> bool:
        return not self.b

    def __repr__(self) -> str:
        if self.d is None:
            return f"QuadScalar({self.a})"
        return f"QuadScalar({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt({self.d})"


def quad_conjugate(s: QuadScalar) -> QuadScalar:
    return s.conjugate()


def scalar_arith(op: str, lhs: QuadScalar, rhs: QuadScalar) -> QuadScalar:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown operation {op!r}")


class QuadField:
    """A field instance: ``QuadField(None)`` is Q, ``QuadField(2)`` is Q(sqrt 2)."""

    __slots__ = ("d", "zero", "one")

    def __init__(self, d: int | None = None) -> None:
        if d is not None:
            _check_discriminant(d)
        self.d = d
        self.zero = QuadScalar._raw(Fraction(0), Fraction(0), d)
        self.one = QuadScalar._raw(Fraction(1), Fraction(0), d)

    def __call__(self, a: int | Fraction | QuadScalar = 0, b: int | Fraction = 0) -> QuadScalar:
        if isinstance(a, QuadScalar):
            if a.d != self.d:
                raise FieldMismatch(f"value from Q(sqrt {a.d}) used in {self}")
            return a
        return QuadScalar(a, b, self.d)

    def sqrt(self, n: int) -> QuadScalar:
        """Exact square root of the integer ``n`` if it lies in this field."""
        if n < 0:
            raise FieldMismatch(f"sqrt({n}) is not real")
        m, k = _split_square(n)
        if k == 1:
            return self(m)
        if self.d != k:
            raise FieldMismatch(f"sqrt({n}) does not lie in {self}")
        return QuadScalar._raw(Fraction(0), Fraction(m), self.d)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadField) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("QuadField", self.d))

    def __repr__(self) -> str:
        return f"QuadField({self.d})"

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


def _split_square(n: int) -> tuple[int, int]:
    """Write ``n = m^2 * k`` with ``k`` squarefree."""
    if n == 0:
        return 0, 1
    m, k, p = 1, n, 2
    while p * p <= k:
        while k % (p * p) == 0:
            k //= p * p
            m *= p
        p += 1
    return m, k


QQ = QuadField(None)
