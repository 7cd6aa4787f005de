from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given

from strategies import Q2, scalars
from trisect.errors import FieldMismatch
from trisect.scalars import QQ, QuadField, QuadScalar, quad_conjugate, scalar_arith

r2 = Q2.sqrt(2)
one = Q2(1)


def test_difference_of_squares():
    assert scalar_arith("mul", one + r2, one - r2) == -1


def test_inverse_of_one_plus_root_two():
    got = scalar_arith("div", one, one + r2)
    assert got == Q2(-1, 1)
    assert got * (one + r2) == 1


def test_rational_addition():
    assert scalar_arith("add", QQ(Fraction(3, 4)), QQ(Fraction(1, 4))) == 1


def test_conjugate_examples():
    assert quad_conjugate(Q2(2, 3)) == Q2(2, -3)
    assert quad_conjugate(Q2(5)) == 5
    s = one + r2
    assert s * quad_conjugate(s) == -1
    assert s.norm() == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith("div", one, Q2(0))


def test_field_mismatch_is_an_error():
    with pytest.raises(FieldMismatch):
        Q2(1) + QuadField(3)(1)
    with pytest.raises(FieldMismatch):
        QQ.sqrt(2)
    with pytest.raises(FieldMismatch):
        QuadScalar(1, 1)


@pytest.mark.parametrize("d", [0, 1, 4, 12, -8])
def test_invalid_discriminant(d):
    with pytest.raises(ValueError):
        QuadField(d)


def test_sqrt_of_square_multiples():
    assert Q2.sqrt(8) == 2 * r2
    assert Q2.sqrt(9) == 3
    assert QuadField(-1).sqrt(4) == 2


def test_canonical_components_are_reduced():
    s = Q2(Fraction(6, 4), Fraction(-10, 15))
    assert (s.a.numerator, s.a.denominator) == (3, 2)
    assert (s.b.numerator, s.b.denominator) == (-2, 3)


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(scalars())
def test_multiplicative_inverse(a):
    assume(a)
    assert a * a.inverse() == 1
    assert a / a == 1


@given(scalars(), scalars())
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * quad_conjugate(a) == a.norm()


@given(scalars())
def test_conjugation_is_an_involution(a):
    assert quad_conjugate(quad_conjugate(a)) == a


@given(scalars(QQ), scalars(QQ))
def test_plain_field_has_no_surd(a, b):
    assert (a * b).b == 0 and (a * b).d is None
