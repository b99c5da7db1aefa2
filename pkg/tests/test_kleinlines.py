import random

import pytest

from heisquartic import family, heisgroup
from heisquartic import kleinlines as kl
from heisquartic.exactalg.field import QQ
from heisquartic.exactalg.poly import xyzw
from heisquartic.lattice import rank_exact

QI = kl.QI
I = QI.gen()
E0, E1, E2, E3 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def rand_point(rng):
    while True:
        p = tuple(rng.randint(-6, 6) for _ in range(4))
        if any(p):
            return p


def rand_line(rng):
    while True:
        a, b = rand_point(rng), rand_point(rng)
        if kl.rank([list(a), list(b)]) == 2:
            return a, b


# -- oracle values

def test_plucker_of_coordinate_line():
    p = kl.plucker_from_points(E0, E1)
    assert p == tuple(QQ(v) for v in (1, 0, 0, 0, 0, 0))


def test_fix_line_z_w_zero_same_line():
    (line,) = [L for L in heisgroup.fix_lines((0, 0, 1, 0)) if L.eigenvalue == QI(1)]
    p = kl.plucker_from_points(*line.span)
    assert kl.projectively_equal(p, kl.plucker_from_points(E0, E1))


def test_klein_of_p01():
    x = kl.klein_from_plucker((1, 0, 0, 0, 0, 0))
    assert x == (QI(1), I, QI(0), QI(0), QI(0), QI(0))


def test_sign_of_sigma1():
    assert kl.sign_character((1, 0, 0, 0)) == (-1, 1, -1, -1, 1, -1)
    assert kl.sign_character((0, 0, 0, 0)) == (1,) * 6


def test_line_meets_itself():
    x = kl.klein_from_points(E0, E1)
    assert kl.coplanar(x, x)


def test_skew_coordinate_lines():
    assert not kl.coplanar(kl.klein_from_points(E0, E1), kl.klein_from_points(E2, E3))


def test_fermat_line_contained():
    z8 = kl.fourth_roots_of_minus_one()[0]
    K = z8.tower
    one, zero = K(1), K(0)
    line = ((one, z8, zero, zero), (zero, zero, one, z8))
    assert kl.line_on_surface(family.g_basis()[0], line)


def test_generic_line_not_on_fermat():
    assert not kl.line_on_surface(family.g_basis()[0], ((1, 2, 3, 4), (0, 1, 5, -2)))


def test_fix_line_not_on_fermat():
    assert not kl.line_on_surface(family.g_basis()[0], (E0, E1))


def test_fermat_lines_count_and_rank():
    lines = kl.fermat_lines()
    assert len(lines) == 48
    assert all(kl.line_on_surface(family.g_basis()[0], line) for line in lines)
    assert rank_exact(kl.intersection_gram(lines)) == 20


def test_nieto_condition_equal_squares():
    # all x_i^2 equal: 6 (x^2)^5
    x = (QI(2), QI(-2), QI(2), QI(-2), QI(2), QI(2))
    assert kl.nieto_line_condition(x) == QI(6) * QI(4) ** 5


def test_involution_regression_value():
    a = QI(7)
    x = (QI(1), QI(1), QI(1), QI(1), QI(1), a)
    assert kl.involution(x) == (-a, a, a, a, a, QI(1))


# -- properties

def test_plucker_relation_random():
    rng = random.Random(1)
    for _ in range(50):
        assert kl.plucker_relation(kl.plucker_from_points(*rand_line(rng))) == 0


def test_klein_round_trip_and_quadric():
    rng = random.Random(2)
    for _ in range(30):
        p = kl.plucker_from_points(*rand_line(rng))
        x = kl.klein_from_plucker(p)
        assert kl.quadric_value(x) == 0
        assert kl.projectively_equal(kl.plucker_from_klein(x), p)
        a, b = kl.points_from_klein(x)
        assert kl.projectively_equal(kl.klein_from_points(a, b), x)


def test_coplanar_matches_rank_oracle():
    rng = random.Random(3)
    agree = 0
    for k in range(100):
        a, b = rand_line(rng)
        if k % 2:
            # force a meeting pair half the time
            c = tuple(2 * s - t for s, t in zip(a, b))
            d = rand_point(rng)
            if kl.rank([list(c), list(d)]) < 2:
                d = tuple(v + 1 for v in d)
        else:
            c, d = rand_line(rng)
        x, y = kl.klein_from_points(a, b), kl.klein_from_points(c, d)
        assert kl.coplanar(x, y) == kl.coplanar(y, x)
        agree += kl.coplanar(x, y) == kl.lines_meet_by_rank(a, b, c, d)
    assert agree == 100


def test_sign_action_equals_transport():
    rng = random.Random(4)
    a, b = rand_line(rng)
    x = kl.klein_from_points(a, b)
    for g in heisgroup.labels():
        assert kl.projectively_equal(kl.h_sign_action(g, x), kl.transport_klein(g, a, b))


def test_sign_character_is_multiplicative():
    for g in heisgroup.labels():
        for h in heisgroup.labels():
            prod = tuple(s * t for s, t in zip(kl.sign_character(g), kl.sign_character(h)))
            assert kl.sign_character(heisgroup.add(g, h)) == prod


def _generic_klein(rng):
    while True:
        x = kl.klein_from_points(*rand_line(rng))
        if all(c != 0 for c in x):
            return x


def test_involution_is_an_involution():
    rng = random.Random(5)
    for _ in range(10):
        x = _generic_klein(rng)
        assert kl.projectively_equal(kl.involution(kl.involution(x)), x)


def test_involution_square_sum_is_nieto_condition():
    rng = random.Random(6)
    for _ in range(10):
        x = _generic_klein(rng)
        assert kl.quadric_value(kl.involution(x)) == kl.nieto_line_condition(x)


def test_involution_rejects_zero_coordinate():
    with pytest.raises(ValueError):
        kl.involution(kl.klein_from_points(E0, E1))


def test_normalize_klein():
    x = kl.klein_from_points((1, 2, 0, 0), (0, 1, 3, 1))
    n = kl.normalize_klein(tuple(c * 5 for c in x))
    assert kl.projectively_equal(n, x)
    assert next(c for c in n if c != 0) == QI(1)


def test_gram_diagonal_and_symmetry():
    g = kl.intersection_gram(kl.fermat_lines())
    assert all(g[i][i] == -2 for i in range(48))
    assert all(g[i][j] == g[j][i] for i in range(48) for j in range(48))


def test_dependent_points_rejected():
    with pytest.raises(ValueError):
        kl.plucker_from_points((1, 2, 3, 4), (2, 4, 6, 8))


def test_coordinate_quartic_sanity():
    x, y, z, w = xyzw()
    assert kl.line_on_surface(x * y * z * w, (E0, E1))
