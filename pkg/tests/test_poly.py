import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisquartic.exactalg.field import QQ, gaussian_tower
from heisquartic.exactalg.poly import (
    MPoly,
    binary_form_roots_count,
    perfect_square_root,
    plane_parameterization,
    poly_det,
    poly_det4,
    poly_det_columns,
    poly_det_leibniz,
    restrict_to_plane,
    univ_from_coeffs,
    univ_gcd,
    univ_squarefree_part,
    xyzw,
)
from heisquartic.family import t_basis

x, y, z, w = xyzw()
QI = gaussian_tower()


# -- oracle values

def test_fermat_hessian():
    f = x**4 + y**4 + z**4 + w**4
    assert poly_det4(f.hessian_matrix()) == (x * y * z * w) ** 2 * 20736


def test_identity_determinant():
    one, zero = MPoly.const(1, 4), MPoly.const(0, 4)
    ident = [[one if i == j else zero for j in range(4)] for i in range(4)]
    assert poly_det4(ident) == one


def test_hessian_of_b_axis_fixture():
    # recorded fixture, confirmed by two further expansion orders
    f = (x**2 * y**2 + z**2 * w**2) * 2
    m = f.hessian_matrix()
    expected = (x * y * z * w) ** 2 * 2304
    assert poly_det4(m) == expected
    assert poly_det_columns(m) == expected
    assert poly_det_leibniz(m) == expected


def test_restrict_x_to_plane_x0():
    assert restrict_to_plane(x, (1, 0, 0, 0)).is_zero()


def test_restrict_fermat_to_w0():
    s, t, u = MPoly.gens(3)
    f = x**4 + y**4 + z**4 + w**4
    assert restrict_to_plane(f, (0, 0, 0, 1)) == s**4 + t**4 + u**4


def test_square_of_binary_quadric():
    f = (x * y * 2 + y**2) ** 2
    c, g = perfect_square_root(f)
    assert g.scale(c) * g == f
    # leading coefficient normalised to 1, so g is (2xy + y^2)/2
    assert c == QQ(4)
    assert g == x * y + y**2 * Fraction(1, 2)
    assert g.is_proportional(x * y * 2 + y**2)


def test_not_a_square():
    assert perfect_square_root(x**4 + y**4) is None


def test_t0_minus_t1_not_a_square():
    t = t_basis()
    d = t[0] - t[1]
    assert d == (x**2 + y**2) * (z**2 + w**2) * -4
    assert perfect_square_root(d) is None


def test_squarefree_part_examples():
    t = MPoly.gens(1)[0]
    assert univ_squarefree_part((t - 1) ** 2 * (t + 2)) == (t - 1) * (t + 2)
    assert univ_squarefree_part(t**4 + 1) == t**4 + 1
    with pytest.raises(ValueError):
        univ_squarefree_part(MPoly(1))


# -- structure

def test_grlex_leading_term():
    f = x * w**3 + y**2 * z**2 + x**2 * w**2
    e, c = f.leading_term()
    assert e == (2, 0, 0, 2)


def test_no_stored_zeros():
    f = x + y - x
    assert f == y and len(f) == 1


def test_degree_and_homogeneity():
    assert (x**3 * y + w**4).is_homogeneous()
    assert not (x**2 + y).is_homogeneous()
    assert (x**2 * y + 1).degree() == 3


def test_divmod_exact():
    f = (x + y) * (x - z * 2)
    q, r = f.divmod(x + y)
    assert r.is_zero() and q == x - z * 2
    assert (x + y).divides(f)
    assert not (x + w).divides(f)


def test_json_round_trip():
    f = (x + y.scale(QI.gen())) ** 3
    assert MPoly.from_json(4, f.to_json()) == f


def test_compose_with_linear_forms():
    f = x**2 - y**2
    swapped = f.compose([y, x, z, w])
    assert swapped == -f


def test_evaluate():
    f = x**2 * y - z * w * 3
    assert f.evaluate((1, 2, 3, 4)) == QQ(2 - 36)


def test_mismatched_variables_rejected():
    a = MPoly.const(1, 3)
    b = MPoly.const(1, 4)
    with pytest.raises(ValueError):
        poly_det([[a, b], [b, a]])


def test_zero_plane_rejected():
    with pytest.raises(ValueError):
        plane_parameterization((0, 0, 0, 0))


def test_plane_pivot_convention():
    pivot, rows = plane_parameterization((0, 2, 1, 0))
    assert pivot == 1
    assert rows[1] == [0, Fraction(-1, 2), 0]


def test_binary_form_roots():
    s, t = MPoly.gens(2)
    assert binary_form_roots_count(s**2 * t * (s - t)) == (3, 4)
    assert binary_form_roots_count(s**4 + t**4) == (4, 4)
    assert binary_form_roots_count(t**4) == (1, 4)


def test_univ_gcd():
    t = MPoly.gens(1)[0]
    assert univ_gcd((t - 1) * (t + 3), (t - 1) * (t - 5)) == t - 1
    assert univ_from_coeffs([1, 0, 1]) == t**2 + 1


# -- properties on random inputs

def _random_form(rng, deg=2, nvars=4, terms=4):
    f = MPoly(nvars)
    gens = MPoly.gens(nvars)
    for _ in range(terms):
        m = MPoly.const(rng.randint(-3, 3), nvars)
        for _ in range(deg):
            m = m * gens[rng.randrange(nvars)]
        f = f + m
    return f


def test_determinant_routes_agree_on_random_matrices():
    rng = random.Random(7)
    for _ in range(3):
        m = [[_random_form(rng, deg=1, terms=2) for _ in range(4)] for _ in range(4)]
        d = poly_det4(m)
        assert d == poly_det_columns(m)
        assert d == poly_det_leibniz(m)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_square_root_certifies(seed):
    rng = random.Random(seed)
    g = _random_form(rng, deg=2)
    if g.is_zero():
        return
    c = Fraction(rng.randint(1, 9), rng.randint(1, 5))
    f = (g * g).scale(c)
    cc, h = perfect_square_root(f)
    assert (h * h).scale(cc) == f


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_restriction_is_linear_and_multiplicative(seed):
    rng = random.Random(seed)
    f, g = _random_form(rng), _random_form(rng)
    plane = tuple(rng.randint(-3, 3) for _ in range(4))
    if not any(plane):
        return
    rf, rg = restrict_to_plane(f, plane), restrict_to_plane(g, plane)
    assert restrict_to_plane(f * g, plane) == rf * rg
    assert restrict_to_plane(f + g.scale(3), plane) == rf + rg.scale(3)
