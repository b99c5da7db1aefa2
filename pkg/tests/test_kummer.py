from fractions import Fraction

import pytest

from heisquartic import family, heisgroup, kummer
from heisquartic.exactalg.poly import MPoly, point_in_plane_coords, restrict_to_plane

SEED_PARAM = (1, -34, -43, Fraction(226, 5), Fraction(149, 5), 1)
MUKAI_U = (1, 2, 3, 5, 7, -18)


@pytest.fixture(scope="module")
def seed():
    return kummer.build_seed(kummer.P0)


@pytest.fixture(scope="module")
def slice_result():
    return kummer.conic_slice(kummer.P0, family.Q0)[1]


# -- oracle values

def test_unique_parameter_at_p0():
    assert kummer.kummer_param_at((1, 2, 3, 4)) == SEED_PARAM


def test_parameter_on_segre_cubic():
    assert family.segre_membership(SEED_PARAM)


def test_point_on_fix_line_rejected():
    with pytest.raises(kummer.SeedError):
        kummer.kummer_param_at((1, 2, 0, 0))


def test_sixteen_nodes_and_tropes(seed):
    assert len(seed.nodes16) == 16 and len(set(seed.nodes16)) == 16
    assert len(seed.tropes16) == 16 and len(set(seed.tropes16)) == 16


def test_incidence_six_six(seed):
    assert all(len(seed.nodes_on(t)) == 6 for t in range(16))
    assert all(len(seed.tropes_through(n)) == 6 for n in range(16))


def test_gradient_vanishes_on_orbit(seed):
    for n in seed.nodes16:
        assert all(v == 0 for v in kummer.gradient_at(seed.poly, n))


def test_trope_squares(seed):
    for t, trope in enumerate(seed.tropes16):
        c, G = kummer.trope_square(seed, trope)
        assert (G * G).scale(c) == restrict_to_plane(seed.poly, trope)
        conic = kummer.Conic(tuple(trope), G)
        assert conic.det() != 0
        for n in seed.nodes_on(t):
            pt = point_in_plane_coords(seed.nodes16[n], trope)
            assert G.evaluate(pt).is_zero()


def test_third_intersection_recovers_seed():
    k = tuple(Fraction(c) for c in SEED_PARAM)
    u = tuple(a + 3 * b for a, b in zip(k, family.Q0))
    assert kummer.third_intersection(u, family.Q0) == family.normalize(k)


def test_third_point_on_cubic():
    u = (1, 2, 3, 5, 7, -18)
    r = kummer.third_intersection(u, family.Q0)
    assert family.segre_value(r) == 0


def test_double_root_at_node():
    c = kummer.restricted_cubic(MUKAI_U, family.Q0)
    s2 = MPoly(2, {(2, 0): 1})
    _, rem = c.divmod(s2)
    assert rem.is_zero()


def test_slice_has_32_smooth_conics(slice_result):
    assert len(slice_result.conics) == 32
    assert all(c.is_smooth() for c in slice_result.conics)
    assert len({c.key() for c in slice_result.conics}) == 32
    assert len({c.plane for c in slice_result.conics}) == 16


def test_slice_checks(slice_result):
    checks = kummer.verify_slice(slice_result)
    assert all(checks.values()), checks


def test_slice_uses_at_most_one_extension(slice_result):
    assert slice_result.tower.height <= 1


def test_eight_fixed_points():
    assert family.singular_discriminant(MUKAI_U) != 0
    for g in heisgroup.nonzero_labels():
        assert kummer.fixed_points_count(MUKAI_U, g) == 8


def test_mukai_count():
    _, total, rank = kummer.mukai_rank(MUKAI_U)
    assert total == 9 and rank == 7


# -- properties and errors

def test_third_intersection_scale_invariant():
    u = (1, 2, 3, 5, 7, -18)
    r = kummer.third_intersection(u, family.Q0)
    assert kummer.third_intersection(tuple(3 * c for c in u), family.Q0) == r
    assert kummer.third_intersection(u, tuple(-2 * c for c in family.Q0)) == r


def test_third_intersection_rejects_bad_inputs():
    with pytest.raises(ValueError):
        kummer.third_intersection(SEED_PARAM, family.Q0)
    with pytest.raises(ValueError):
        kummer.third_intersection(MUKAI_U, family.T0)


def test_split_product_equals_restriction(seed, slice_result):
    f = family.quartic(slice_result.u)
    for trope, c1, c2, lead in slice_result.pairs:
        fT = restrict_to_plane(f, trope).lift(slice_result.tower)
        assert (c1.form * c2.form).scale(lead) == fT


def test_split_refuses_seed_parameter(seed):
    with pytest.raises(kummer.SplittingError):
        kummer.split_trope_conics(seed.param, seed, family.Q0, seed.tropes16[0])


def test_singular_member_rejected_for_fixed_points():
    with pytest.raises(ValueError):
        kummer.fixed_points_count(SEED_PARAM, (1, 0, 0, 0))


def test_trope_must_belong_to_seed(seed):
    with pytest.raises(ValueError):
        kummer.trope_square(seed, (1, 1, 1, 1))


def test_node_trope_duality(seed):
    # the nodes on a trope are exactly the orbit points in that plane
    for t, trope in enumerate(seed.tropes16):
        on = [n for n, p in enumerate(seed.nodes16) if kummer.dot(trope, p) == 0]
        assert on == seed.nodes_on(t)
