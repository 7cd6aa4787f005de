"""Height pairings on a rational elliptic surface from numerical divisor data.

For divisors ``D1``, ``D2`` of fiber degrees ``d1``, ``d2`` the pairing of the
associated Mordell-Weil points is

    <P1, P2> = -(D1.D2 - d2 D1.O - d1 D2.O - d1 d2 chi - sum_v c1^T A_v^{-1} c2)

where ``c(v, D)`` lists the intersections of ``D`` with the non-identity
components of the reducible fiber over ``v`` and ``A_v`` is their
intersection matrix.  The same identity read backwards recovers ``D1.D2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import BasisMismatch, NonIntegralIntersection, ROutOfRange, ShapeMismatch

Matrix = tuple[tuple[Fraction, ...], ...]

MAX_FIBER_RANK = 8


def _matrix(rows: Iterable[Iterable[int | Fraction | str]]) -> Matrix:
    return tuple(tuple(Fraction(c) for c in row) for row in rows)


def _det(m: Matrix) -> Fraction:
    a = [list(r) for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            k = a[r][c] / a[c][c]
            if k:
                for j in range(c, n):
                    a[r][j] -= k * a[c][j]
    return det


def _inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan over Q."""
    n = len(m)
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [v / p for v in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                k = a[r][c]
                a[r] = [v - k * w for v, w in zip(a[r], a[c])]
    return tuple(tuple(r[n:]) for r in a)


def _leading_minors(m: Matrix) -> list[Fraction]:
    return [_det(tuple(r[:k] for r in m[:k])) for k in range(1, len(m) + 1)]


def _check_square_symmetric(m: Matrix, what: str) -> None:
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        raise ShapeMismatch(f"{what} must be a non-empty square matrix")
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise ValueError(f"{what} is not symmetric")


def _bilinear(c1: Sequence[Fraction], m: Matrix, c2: Sequence[Fraction]) -> Fraction:
    return sum((c1[i] * m[i][j] * c2[j] for i in range(len(c1)) for j in range(len(c2))), Fraction(0))


@dataclass(frozen=True)
class FiberConfig:
    """Reducible fibers by label, each with the matrix ``A_v``; ``chi`` is chi(O_S)."""

    fibers: Mapping[str, Matrix]
    chi: int = 1
    _inverses: Mapping[str, Matrix] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if int(self.chi) != self.chi or self.chi < 1:
            raise ValueError("chi must be a positive integer")
        fibers = {str(k): _matrix(v) for k, v in self.fibers.items()}
        for label, a in fibers.items():
            _check_square_symmetric(a, f"A_{label}")
            if len(a) > MAX_FIBER_RANK:
                raise ValueError(f"A_{label} has size {len(a)} > {MAX_FIBER_RANK}")
            if any(a[i][i].denominator != 1 or a[i][i] % 2 for i in range(len(a))):
                raise ValueError(f"A_{label} must have even integer diagonal")
            if any(c.denominator != 1 for r in a for c in r):
                raise ValueError(f"A_{label} must be integral")
            for k, minor in enumerate(_leading_minors(a), start=1):
                if not (minor > 0 if k % 2 == 0 else minor < 0):
                    raise ValueError(f"A_{label} is not negative definite")
        object.__setattr__(self, "fibers", fibers)
        object.__setattr__(self, "_inverses", {k: _inverse(a) for k, a in fibers.items()})

    @classmethod
    def all_i2(cls, labels: Iterable[str], chi: int = 1) -> FiberConfig:
        """Every fiber of type I2 or III, so every ``A_v = [-2]``."""
        return cls({label: ((-2,),) for label in labels}, chi)

    def inverse(self, label: str) -> Matrix:
        return self._inverses[label]

    def contact(self, data: DivisorData, label: str) -> tuple[Fraction, ...]:
        """Contact vector of ``data`` at ``label``; omitted fibers count as zero."""
        n = len(self.fibers[label])
        c = data.contacts.get(label)
        if c is None:
            return (Fraction(0),) * n
        if len(c) != n:
            raise ShapeMismatch(f"contact vector at {label!r} has length {len(c)}, expected {n}")
        return tuple(Fraction(x) for x in c)

    def correction(self, D1: DivisorData, D2: DivisorData) -> Fraction:
        """``sum_v c(v,D1)^T A_v^{-1} c(v,D2)``."""
        for data in (D1, D2):
            unknown = set(data.contacts) - set(self.fibers)
            if unknown:
                raise ShapeMismatch(f"contacts given for undeclared fibers {sorted(unknown)}")
        return sum(
            (_bilinear(self.contact(D1, v), self.inverse(v), self.contact(D2, v)) for v in self.fibers),
            Fraction(0),
        )


@dataclass(frozen=True)
class DivisorData:
    d: int
    d_dot_o: int = 0
    contacts: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    self_int: int | None = None

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("d = D.F must be non-negative")
        object.__setattr__(self, "contacts", {str(k): tuple(int(c) for c in v) for k, v in self.contacts.items()})

    @property
    def is_integral(self) -> bool:
        return self.d_dot_o == 0


def pairing_from_geometry(D1: DivisorData, D2: DivisorData, d1_dot_d2: Fraction | int, cfg: FiberConfig) -> Fraction:
    inner = (
        Fraction(d1_dot_d2)
        - D2.d * D1.d_dot_o
        - D1.d * D2.d_dot_o
        - D1.d * D2.d * cfg.chi
        - cfg.correction(D1, D2)
    )
    return -inner


def self_pairing(D: DivisorData, cfg: FiberConfig) -> Fraction:
    if D.self_int is None:
        raise ValueError("self-intersection D^2 is not declared")
    return pairing_from_geometry(D, D, D.self_int, cfg)


def intersection_from_pairing(D1: DivisorData, D2: DivisorData, pairing: Fraction | int, cfg: FiberConfig) -> Fraction:
    """Solve the pairing identity for ``D1.D2``."""
    return (
        -Fraction(pairing)
        + D2.d * D1.d_dot_o
        + D1.d * D2.d_dot_o
        + D1.d * D2.d * cfg.chi
        + cfg.correction(D1, D2)
    )


@dataclass(frozen=True)
class MWVector:
    """Coordinates in a declared basis of the free part, with its Gram matrix."""

    coords: tuple[int, ...]
    gram: Matrix
    basis: tuple[str, ...] = ()
    torsion_tag: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        gram = _matrix(self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "basis", tuple(self.basis))
        _check_square_symmetric(gram, "gram")
        if len(self.coords) != len(gram) or (self.basis and len(self.basis) != len(gram)):
            raise ShapeMismatch("coordinates, basis and Gram matrix disagree in rank")
        if any(m <= 0 for m in _leading_minors(gram)):
            raise ValueError("gram is not positive definite")

    def _same_lattice(self, other: MWVector) -> None:
        if self.gram != other.gram or self.basis != other.basis:
            raise BasisMismatch("vectors are expressed in different bases")

    def __neg__(self) -> MWVector:
        return MWVector(tuple(-c for c in self.coords), self.gram, self.basis, self.torsion_tag)

    def __add__(self, other: MWVector) -> MWVector:
        self._same_lattice(other)
        return MWVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.gram, self.basis)

    def scale(self, n: int) -> MWVector:
        return MWVector(tuple(n * c for c in self.coords), self.gram, self.basis, self.torsion_tag)

    __rmul__ = scale


def lattice_pairing(v1: MWVector, v2: MWVector) -> Fraction:
    v1._same_lattice(v2)
    return _bilinear(tuple(map(Fraction, v1.coords)), v1.gram, tuple(map(Fraction, v2.coords)))


def height(v: MWVector) -> Fraction:
    return lattice_pairing(v, v)


def trisection_data(r: int, node_labels: Sequence[str] | None = None, infinity: str = "inf") -> DivisorData:
    """An integral trisection with ``E^2 = 3`` through ``r`` nodes of the quartic."""
    labels = list(node_labels) if node_labels is not None else [f"node{i}" for i in range(r)]
    if len(labels) != r:
        raise ValueError("need exactly r node labels")
    contacts = {infinity: (3,)} | {label: (1,) for label in labels}
    return DivisorData(3, 0, contacts, 3)


def trisection_height(r: int) -> Fraction:
    if not 0 <= r <= 3:
        raise ROutOfRange(f"r must lie in 0..3, got {r}")
    return Fraction(3, 2) - Fraction(r, 2)


class SplitType(NamedTuple):
    m1: int
    m2: int


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralIntersection(f"{what} = {value} is not a non-negative integer")
    return int(value)


def splitting_type(
    E_vec: MWVector,
    line_vec: MWVector,
    E_data: DivisorData,
    line_data: DivisorData,
    cfg: FiberConfig,
) -> SplitType:
    """Intersections of ``E^+`` with the two lifts ``s_{+-P}`` of a splitting curve, sorted.

    Both lifts share ``line_data``: on I2/III fibers ``P`` and ``-P`` meet the
    same component.
    """
    plus = intersection_from_pairing(E_data, line_data, lattice_pairing(E_vec, line_vec), cfg)
    minus = intersection_from_pairing(E_data, line_data, lattice_pairing(E_vec, -line_vec), cfg)
    m = sorted((_as_count(plus, "E+.s+"), _as_count(minus, "E+.s-")))
    return SplitType(m[0], m[1])


def i2_parity_check(c_D: int, c_sD: int) -> bool:
    return (c_D - c_sD) % 2 == 0
