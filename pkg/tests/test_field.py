from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisquartic.exactalg.field import (
    QQ,
    FieldElement,
    TowerField,
    adjoin_sqrt,
    gaussian_tower,
    rational_sqrt,
    sqrt_in_field,
    squarefree_part,
    tower_from_descriptor,
    zeta8_tower,
)

QI = gaussian_tower()
Z8 = zeta8_tower()


# -- oracle values

def test_sqrt_of_four_over_q():
    assert sqrt_in_field(QQ(4)) == QQ(2) or sqrt_in_field(QQ(4)) == QQ(-2)


def test_sqrt_of_minus_one_in_qi():
    r = sqrt_in_field(QI(-1))
    assert r is not None and r * r == QI(-1)
    assert r in (QI.gen(), -QI.gen())


def test_sqrt_of_two_absent_over_q():
    assert sqrt_in_field(QQ(2)) is None


def test_sqrt_of_i_in_zeta8():
    # (1 + i)/sqrt 2 squares to i
    r = sqrt_in_field(Z8.gen(1))
    assert r is not None and r * r == Z8.gen(1)


def test_primitive_eighth_root():
    i, r2 = Z8.gen(1), Z8.gen(2)
    zeta = r2 * (1 + i) / 2
    assert zeta**4 == Z8(-1)
    assert zeta**8 == Z8(1)


# -- construction

def test_generators_square_to_their_d():
    for tower in (QI, Z8, QI.extend(3), QQ.extend(5).extend(7)):
        for j in range(1, tower.height + 1):
            g = tower.gen(j)
            assert g * g == tower.squares[j - 1].lift(tower)


def test_extend_refuses_squares():
    with pytest.raises(ValueError):
        QQ.extend(9)
    with pytest.raises(ValueError):
        QI.extend(-4)
    with pytest.raises(ValueError):
        QQ.extend(0)
    # -2i = (1 - i)^2 is already a square in Q(i)
    with pytest.raises(ValueError):
        QI.extend(QI.gen() * -2)


def test_tower_descriptor_round_trip():
    t = QI.extend(2).extend(3)
    assert tower_from_descriptor(t.descriptor()) == t


def test_rational_helpers():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(-1) is None
    assert rational_sqrt(Fraction(2, 9)) is None
    assert squarefree_part(12) == (3, 2)
    assert squarefree_part(Fraction(-8, 3)) == (-6, Fraction(2, 3))
    s, r = squarefree_part(Fraction(-84, 121))
    assert s * r * r == Fraction(-84, 121)
    with pytest.raises(ValueError):
        squarefree_part(0)


def test_adjoin_sqrt_reuses_squarefree_class():
    tower, r = adjoin_sqrt(QQ(Fraction(8, 9)))
    assert r * r == tower(Fraction(8, 9))
    assert tower.squares[0] == QQ(2)
    same, r2 = adjoin_sqrt(QQ(4))
    assert same == QQ and r2 * r2 == QQ(4)
    tower, r = adjoin_sqrt(QI.gen() + 1)
    assert r * r == (QI.gen() + 1).lift(tower)


def test_inverse_and_division():
    a = Z8.gen(1) + Z8.gen(2) * 3 - 2
    assert a * a.inverse() == Z8(1)
    assert (a / a) == Z8(1)
    with pytest.raises(ZeroDivisionError):
        Z8(0).inverse()


def test_lift_is_embedding():
    a = QI.gen() * 3 + 1
    b = a.lift(Z8)
    assert b == a
    assert (b * b).lift(Z8) == (a * a).lift(Z8)
    assert hash(a) == hash(b)


def test_incompatible_towers_compare_unequal():
    a = QQ.extend(2).gen()
    b = QQ.extend(3).gen()
    assert a != b


def test_conjugate_is_automorphism():
    a = Z8.gen(2) + Z8.gen(1) * 5
    b = Z8.gen(1) * Z8.gen(2) - 1
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_json_round_trip():
    a = Z8.gen(1) * Fraction(3, 7) - Z8.gen(2)
    assert FieldElement.from_json(a.to_json()) == a
    assert a.to_json()["coords"][0] == "0/1"


def test_rational_access():
    assert QI(Fraction(5, 3)).rational() == Fraction(5, 3)
    assert not QI.gen().is_rational()


# -- ring axioms on random elements of Q(i)(sqrt 2)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.lists(rationals, min_size=4, max_size=4).map(lambda c: FieldElement(Z8, tuple(c)))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == Z8(0)


@settings(max_examples=60, deadline=None)
@given(elements)
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == Z8(1)


@settings(max_examples=60, deadline=None)
@given(elements)
def test_squares_have_roots(a):
    r = sqrt_in_field(a * a)
    assert r is not None and r * r == a * a


def test_tower_repr_and_call():
    assert repr(QQ) == "QQ"
    assert isinstance(QI(3), FieldElement)
    assert TowerField() == QQ
