"""The parameter space of H22-invariant quartics.

Two coordinate systems are used. lambda = (A, B, C, D, E) gives
F = A g0 + B g1 + C g2 + D g3 + E g4; the symmetric coordinates
u = (u0, ..., u5) on the hyperplane U = {sum u = 0} give F = sum t_i u_i,
and S6 acts on them by permutation.
"""

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

from . import heisgroup
from .exactalg.field import QQ, FieldElement
from .exactalg.linalg import nullspace
from .exactalg.poly import MPoly, poly_det4, xyzw

Q0 = (1, 1, 1, -1, -1, -1)
T0 = (1, -1, 0, 0, 0, 0)
FERMAT_U = (1, 1, 1, 1, -2, -2)


@lru_cache(maxsize=None)
def g_basis():
    x, y, z, w = xyzw()
    return (
        x**4 + y**4 + z**4 + w**4,
        (x**2 * y**2 + z**2 * w**2) * 2,
        (x**2 * z**2 + y**2 * w**2) * 2,
        (x**2 * w**2 + y**2 * z**2) * 2,
        x * y * z * w * 4,
    )


@lru_cache(maxsize=None)
def t_basis():
    g0, g1, g2, g3, g4 = g_basis()
    third = Fraction(1, 3)
    return (
        g0 * third - g1 - g2 - g3,
        g0 * third - g1 + g2 + g3,
        g0 * third + g1 - g2 + g3,
        g0 * third + g1 + g2 - g3,
        g0 * Fraction(-2, 3) + g4 * 2,
        g0 * Fraction(-2, 3) - g4 * 2,
    )


def _check_u(u):
    u = tuple(Fraction(c) for c in u)
    if len(u) != 6:
        raise ValueError("u has six coordinates")
    if sum(u) != 0:
        raise ValueError(f"u = {u} is not on the hyperplane sum(u) = 0")
    if not any(u):
        raise ValueError("u is not a projective point")
    return u


def quartic_abcde(lam):
    """F_lambda = A g0 + B g1 + C g2 + D g3 + E g4."""
    if len(lam) != 5:
        raise ValueError("lambda has five coordinates")
    f = MPoly(4)
    for c, g in zip(lam, g_basis()):
        if c:
            f = f + g * c
    return f


def quartic(u):
    """sum t_i u_i for u in U."""
    u = _check_u(u)
    f = MPoly(4)
    for c, t in zip(u, t_basis()):
        if c:
            f = f + t * c
    return f


def u_to_abcde(u):
    u0, u1, u2, u3, u4, u5 = _check_u(u)
    return (
        -u4 - u5,
        -u0 - u1 + u2 + u3,
        -u0 + u1 - u2 + u3,
        -u0 + u1 + u2 - u3,
        2 * u4 - 2 * u5,
    )


def abcde_to_u(lam):
    A, B, C, D, E = (Fraction(c) for c in lam)
    return (
        A - B - C - D,
        A - B + C + D,
        A + B - C + D,
        A + B + C - D,
        -2 * A + E,
        -2 * A - E,
    )


def normalize(v):
    """Projective representative with first nonzero coordinate 1."""
    v = tuple(Fraction(c) if not isinstance(c, FieldElement) else c for c in v)
    lead = next((c for c in v if c != 0), None)
    if lead is None:
        raise ValueError("zero vector")
    return tuple(c / lead for c in v)


def s6_action(perm, u):
    """Permute coordinates: (sigma u)_{sigma(i)} = u_i."""
    perm = tuple(perm)
    if sorted(perm) != list(range(6)):
        raise ValueError(f"{perm} is not a permutation of 0..5")
    out = [None] * 6
    for i, c in enumerate(u):
        out[perm[i]] = c
    return tuple(out)


def s6_orbit(u):
    """Sorted set of normalised points in the S6-orbit of u."""
    return sorted({normalize(s6_action(p, u)) for p in permutations(range(6))})


def segre_nodes():
    return s6_orbit(Q0)


def t_points():
    return s6_orbit(T0)


def segre_value(u):
    return sum(Fraction(c) ** 3 for c in u)


def segre_membership(u):
    _check_u(u)
    return segre_value(u) == 0


def is_segre_node(u):
    """Singular point of the Segre cubic in U: the gradient (3 u_i^2) is proportional to (1,...,1)."""
    u = _check_u(u)
    return segre_value(u) == 0 and len({c * c for c in u}) == 1


def singular_discriminant(u):
    """(sum u_i^3) * prod_{i<j} (u_i + u_j); zero exactly on the singular members."""
    u = _check_u(u)
    value = segre_value(u)
    for i, j in combinations(range(6), 2):
        value *= u[i] + u[j]
    return value


@lru_cache(maxsize=None)
def nieto_form():
    """sum_i prod_{j != i} u_j as a polynomial in six variables."""
    us = MPoly.gens(6)
    f = MPoly(6)
    for i in range(6):
        term = MPoly.const(1, 6)
        for j in range(6):
            if j != i:
                term = term * us[j]
        f = f + term
    return f


def nieto_value(u):
    u = _check_u(u)
    total = Fraction(0)
    for i in range(6):
        p = Fraction(1)
        for j in range(6):
            if j != i:
                p *= u[j]
        total += p
    return total


def nieto_membership(u):
    return nieto_value(u) == 0


def nieto_singular_at(u):
    """True when the quintic restricted to U is singular at u (gradient proportional to (1,...,1))."""
    u = _check_u(u)
    if nieto_value(u) != 0:
        return False
    grad = [d.evaluate(u) for d in nieto_form().gradient()]
    return len(set(grad)) == 1


# -- invariance and the Igusa map

def is_h22_invariant(f):
    return all(transform(f, gen) == f for gen in heisgroup.GENERATORS)


def igusa_map(p):
    vals = tuple(g.evaluate(p) for g in g_basis())
    if all(v == 0 for v in vals):
        raise ArithmeticError(f"{p} is a base point of the invariant quartics")
    return vals


def quartic_monomials(n=5):
    return list(combinations_with_replacement(range(n), 4))


def random_point(rng, lo=-5, hi=5):
    while True:
        p = tuple(rng.randint(lo, hi) for _ in range(4))
        if any(p):
            return p


def igusa_relation(npoints=80, seed=0):
    """Kernel of the evaluation matrix of the 70 quartic monomials at alpha(p) for random p.

    Returns the kernel basis (list of 70-vectors over Q, monomials in
    `quartic_monomials()` order). A unique quartic relation gives one vector.
    """
    rng = random.Random(seed)
    monos = quartic_monomials()
    rows = []
    for _ in range(npoints):
        a = [v.rational() for v in igusa_map(random_point(rng))]
        rows.append([a[i] * a[j] * a[k] * a[l] for i, j, k, l in monos])
    ker = nullspace(rows)
    return [normalize(v) for v in ker]


def igusa_relation_poly(vec):
    ys = MPoly.gens(5)
    f = MPoly(5)
    for c, (i, j, k, l) in zip(vec, quartic_monomials()):
        if c:
            f = f + ys[i] * ys[j] * ys[k] * ys[l] * c
    return f


# -- Hessians

def hessian(f):
    return poly_det4(f.hessian_matrix())


def hessian_surface(u):
    return hessian(quartic(u))


def transform(f, m):
    """f o m for a 4x4 matrix m (entries ints, Fractions or tower elements)."""
    forms = [MPoly.linear_form([m[r][c] for c in range(4)]) for r in range(4)]
    return f.compose(forms)


def inverse_signed_permutation(m):
    # signed permutation matrices are orthogonal
    return tuple(zip(*m))


def axis_parameters():
    """The five coordinate points of P^4 in lambda coordinates."""
    return [tuple(int(i == k) for i in range(5)) for k in range(5)]


# -- tetrahedra and quadrics as members of the family

def poly_from_quadric(coeffs):
    x = xyzw()
    f = MPoly(4)
    for c, (i, j) in zip(coeffs, heisgroup.QUADRIC_MONOMIALS):
        f = f + x[i] * x[j] * c
    return f


def poly_from_faces(faces):
    f = None
    for face in faces:
        lin = MPoly.linear_form(list(face))
        f = lin if f is None else f * lin
    return f


def match_parameter(f, candidates):
    """Candidates u (from an orbit) with quartic(u) proportional to f."""
    return [u for u in candidates if quartic(u).is_proportional(f)]


def tetrahedron_parameter(plane):
    faces, _ = heisgroup.tetrahedron_of(plane)
    matches = match_parameter(poly_from_faces(faces), t_points())
    if len(matches) != 1:
        raise AssertionError(f"tetrahedron matched {len(matches)} T-points")
    return matches[0]


def quadric_parameter(pair):
    q = poly_from_quadric(heisgroup.quadric_of(*pair))
    matches = match_parameter(q * q, segre_nodes())
    if len(matches) != 1:
        raise AssertionError(f"quadric matched {len(matches)} Segre nodes")
    return matches[0]
