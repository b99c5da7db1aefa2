from itertools import product

import pytest

from heisquartic import heisgroup as hg
from heisquartic.exactalg.poly import MPoly

S1, S2, T1, T2 = hg.GENERATOR_LABELS


# -- oracle values

def test_group_order_and_center():
    mats, center, labs = hg.enumerate_group()
    assert len(mats) == 32
    assert sorted(center) == sorted([hg.IDENTITY, hg.matneg(hg.IDENTITY)])
    assert len(labs) == 16


def test_labels_have_order_two():
    for g in hg.labels():
        assert hg.add(g, g) == hg.ZERO
        m = hg.lift(g)
        assert hg.matmul(m, m) in (hg.IDENTITY, hg.matneg(hg.IDENTITY))


def test_sigma_pair_commutes():
    # recorded fixture: the two coordinate permutations commute
    assert hg.symplectic_form(S1, S2) == 0
    assert hg.symplectic_form(T1, T2) == 0
    assert hg.symplectic_form(S1, T1) == 1
    assert hg.symplectic_form(S2, T2) == 1
    assert hg.symplectic_form(S1, T2) == 0


def test_form_is_alternating():
    assert all(hg.symplectic_form(g, g) == 0 for g in hg.labels())


def test_tau1_fix_lines():
    spans = {L.span for L in hg.fix_lines(T1)}
    one, zero = hg.QI(1), hg.QI(0)
    assert ((one, zero, zero, zero), (zero, one, zero, zero)) in spans  # z = w = 0
    assert ((zero, zero, one, zero), (zero, zero, zero, one)) in spans  # x = y = 0


def test_sigma1_fix_lines():
    one, zero = hg.QI(1), hg.QI(0)
    spans = {L.span for L in hg.fix_lines(S1)}
    assert spans == {
        ((one, zero, one, zero), (zero, one, zero, one)),
        ((one, zero, -one, zero), (zero, one, zero, -one)),
    }


def test_thirty_fix_lines():
    assert len({L.span for L in hg.all_fix_lines()}) == 30


def test_commuting_pair_all_meet():
    assert hg.fixline_incidence(T1, T2) == [[True, True], [True, True]]


def test_anticommuting_pair_never_meets():
    assert hg.fixline_incidence(S1, T1) == [[False, False], [False, False]]


def test_lines_of_one_element_are_skew():
    for g in hg.nonzero_labels():
        a, b = hg.fix_lines(g)
        assert not hg.lines_meet(a.span, b.span)


def test_plane_counts():
    iso, aniso = hg.classify_planes()
    assert len(iso) + len(aniso) == 35
    assert len(iso) == 15 and len(aniso) == 20


def test_diagonal_tetrahedron():
    faces, vertices = hg.tetrahedron_of(hg.make_plane(T1, T2))
    x, y, z, w = MPoly.gens(4)
    prod = None
    for f in faces:
        lin = MPoly.linear_form(list(f))
        prod = lin if prod is None else prod * lin
    assert prod.is_proportional(x * y * z * w)
    assert len(vertices) == 4


def test_fifteen_tetrahedra():
    iso, _ = hg.classify_planes()
    face_sets = {tuple(hg.tetrahedron_of(p)[0]) for p in iso}
    assert len(face_sets) == 15


def test_ten_fundamental_quadrics():
    pairs = hg.orthogonal_pairs()
    assert len(pairs) == 10
    quadrics = {hg.quadric_of(*pair) for pair in pairs}
    assert len(quadrics) == 10
    for p, q in pairs:
        assert len(hg.plane_lines(p) + hg.plane_lines(q)) == 12


# -- structural properties

def test_lift_cocycle():
    for g, h in product(hg.labels(), repeat=2):
        prod = hg.matmul(hg.lift(g), hg.lift(h))
        want = hg.lift(hg.add(g, h))
        if hg.cocycle(g, h):
            want = hg.matneg(want)
        assert prod == want


def test_canonical_lift_order():
    # sigma1^i sigma2^j tau1^k tau2^l
    g = (1, 1, 1, 1)
    m = hg.IDENTITY
    for gen in hg.GENERATORS:
        m = hg.matmul(m, gen)
    assert hg.lift(g) == m
    assert hg.label_index(g) == 15
    assert hg.label_from_index(9) == (1, 0, 0, 1)


def test_form_bilinear_exhaustively():
    labs = hg.labels()
    for g, h, k in product(labs, repeat=3):
        assert hg.symplectic_form(hg.add(g, h), k) == (hg.symplectic_form(g, k) + hg.symplectic_form(h, k)) % 2


def test_closed_form_matches_commutator():
    for g, h in product(hg.labels(), repeat=2):
        assert hg.symplectic_form(g, h) == hg.symplectic_form_formula(g, h)


def test_nondegenerate():
    assert hg.rank_f2(hg.symplectic_gram()) == 4


def test_meet_iff_commute_exhaustively():
    for g, h in product(hg.nonzero_labels(), repeat=2):
        if g == h:
            continue
        table = hg.fixline_incidence(g, h)
        meets = any(any(r) for r in table)
        assert meets == (hg.symplectic_form(g, h) == 0)
        if meets:
            # each line of g meets each line of h
            assert all(all(r) for r in table)


def test_preserve_or_flip_exhaustively():
    for g, h in product(hg.nonzero_labels(), repeat=2):
        want = "preserve" if hg.symplectic_form(g, h) == 0 else "flip"
        assert hg.action_on_fix_lines(h, g) == want


def test_bad_inputs():
    with pytest.raises(ValueError):
        hg.fix_lines(hg.ZERO)
    with pytest.raises(ValueError):
        hg.fixline_incidence(T1, T1)
    _, aniso = hg.classify_planes()
    with pytest.raises(ValueError):
        hg.tetrahedron_of(aniso[0])
    iso, _ = hg.classify_planes()
    with pytest.raises(ValueError):
        hg.quadric_of(iso[0], iso[1])
