"""Kummer members of the family, their 16_6 configuration, and conics cut out on tropes.

The seeding construction: for a point p off the fix lines there is exactly
one invariant quartic singular at p, found by solving four linear
equations in (A, ..., E). Its 16 nodes are the H-orbit of p and its 16
tropes are the planes with the same coordinates as the nodes.

`split_trope_conics` realises one node's share of the 320 conics: for u on
the line through a Kummer parameter k and a Segre node q, F_u = a F_k + b F_q
and on each trope T of X_k both terms are squares, so F_u|_T factors into
two conics.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from . import family, heisgroup
from .exactalg.field import FieldElement, adjoin_sqrt
from .exactalg.linalg import nullspace, solve
from .exactalg.poly import (
    MPoly,
    binary_form_roots_count,
    perfect_square_root,
    point_in_plane_coords,
    restrict_to_plane,
)

log = logging.getLogger(__name__)

P0 = (1, 2, 3, 4)


class SeedError(ValueError):
    """The point does not determine a unique Kummer member."""


class SplittingError(ArithmeticError):
    pass


def kummer_param_at(p):
    """The unique u in U whose quartic is singular at p."""
    p = tuple(Fraction(c) for c in p)
    grads = [g.gradient() for g in family.g_basis()]
    rows = [[grads[k][i].evaluate(p).rational() for k in range(5)] for i in range(4)]
    ker = nullspace(rows)
    if len(ker) != 1:
        raise SeedError(f"singular members at {p} form a space of dimension {len(ker)}")
    return family.normalize(family.abcde_to_u(ker[0]))


def orbit(point):
    """Distinct normalised images of a point under the 16 lifts, in label order."""
    seen = []
    for g in heisgroup.labels():
        q = family.normalize(heisgroup.apply(heisgroup.lift(g), point))
        if q not in seen:
            seen.append(q)
    return seen


def plane_image(m, plane):
    """Coefficients of m(P) for P = {a . x = 0}: a m^-1, i.e. m^-T a."""
    inv = heisgroup.transpose(m)  # signed permutations are orthogonal
    if heisgroup.matmul(inv, m) != heisgroup.IDENTITY:
        raise ValueError("expected a signed permutation matrix")
    return heisgroup.apply(heisgroup.transpose(inv), plane)


def plane_orbit(plane):
    seen = []
    for g in heisgroup.labels():
        q = family.normalize(plane_image(heisgroup.lift(g), plane))
        if q not in seen:
            seen.append(q)
    return seen


def gradient_at(f, p):
    return [d.evaluate(p) for d in f.gradient()]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass
class KummerSeed:
    node: tuple
    param: tuple
    poly: MPoly
    nodes16: list
    tropes16: list
    incidence: list = field(default_factory=list)  # incidence[t][n]: node n lies on trope t

    def nodes_on(self, t):
        return [n for n in range(16) if self.incidence[t][n]]

    def tropes_through(self, n):
        return [t for t in range(16) if self.incidence[t][n]]


def build_seed(p0=P0):
    param = kummer_param_at(p0)
    if not family.segre_membership(param):
        raise SeedError(f"seeded parameter {param} is not on the Segre cubic")
    f = family.quartic(param)
    nodes = orbit(p0)
    if len(nodes) != 16:
        raise SeedError(f"orbit of {p0} has only {len(nodes)} points")
    for n in nodes:
        if any(v != 0 for v in gradient_at(f, n)):
            raise SeedError(f"orbit point {n} is not singular")
    tropes = plane_orbit(p0)
    if len(tropes) != 16:
        raise SeedError("trope orbit is degenerate")
    incidence = [[dot(t, n) == 0 for n in nodes] for t in tropes]
    return KummerSeed(tuple(Fraction(c) for c in p0), param, f, nodes, tropes, incidence)


def conic_matrix(g):
    """Symmetric 3x3 matrix of a ternary quadratic form."""
    if g.nvars != 3 or g.degree() != 2 or not g.is_homogeneous():
        raise ValueError("expected a ternary quadratic form")
    m = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = g.coeff(tuple(e))
            m[i][j] = c if i == j else c / 2
    return m


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@dataclass
class Conic:
    plane: tuple
    form: MPoly

    @property
    def matrix(self):
        return conic_matrix(self.form)

    def det(self):
        return det3(self.matrix)

    def is_smooth(self):
        return self.det() != 0

    def key(self):
        return (self.plane, self.form.monic())


def trope_square(seed, trope):
    """(c, G) with F|_T = c G^2 for a trope T of the seeded surface."""
    if tuple(trope) not in [tuple(t) for t in seed.tropes16]:
        raise ValueError("not one of the seed's tropes")
    r = perfect_square_root(restrict_to_plane(seed.poly, trope))
    if r is None:
        raise SeedError(f"restriction to {trope} is not a square")
    return r


def third_intersection(u, q):
    """Third point where the line through u and a Segre node q meets the Segre cubic.

    On the binary form c(s, t) = sum (s u_i + t q_i)^3 the node q = (0:1)
    is a double root, so c = s^2 (a s + b t) and the third point is
    (s : t) = (b : -a).
    """
    u = tuple(Fraction(c) for c in u)
    q = tuple(Fraction(c) for c in q)
    if not family.is_segre_node(q):
        raise ValueError(f"{q} is not a node of the Segre cubic")
    if family.segre_value(u) == 0:
        raise ValueError("u already lies on the Segre cubic")
    c = restricted_cubic(u, q)
    s2 = MPoly(2, {(2, 0): 1})
    lin, rem = c.divmod(s2)
    if not rem.is_zero():
        raise ArithmeticError("the node is not a double root of the restricted cubic")
    a, b = lin.coeff((1, 0)), lin.coeff((0, 1))
    if b == 0:
        raise ArithmeticError("the line meets the cubic only at the node")
    a, b = a.rational(), b.rational()
    return family.normalize(tuple(b * x - a * y for x, y in zip(u, q)))


def restricted_cubic(u, q):
    s, t = MPoly.gens(2)
    c = MPoly(2)
    for x, y in zip(u, q):
        c = c + (s * x + t * y) ** 3
    return c


def line_coefficients(u, k, q):
    """(a, b) with u = a k + b q."""
    rows = [[k[i], q[i]] for i in range(6)]
    sol = solve(rows, list(u))
    if sol is None:
        raise ValueError("u is not on the line through k and q")
    return sol


@dataclass
class ConicSlice:
    u: tuple
    direction: tuple  # the Segre node q with u = k + t q
    t: Fraction
    alpha: Fraction
    beta: Fraction
    mu: FieldElement
    tower: object
    conics: list
    pairs: list  # (trope, conic_minus, conic_plus, constant)


def split_trope_conics(u, seed, q, trope, tower=None):
    """Two conics C1, C2 with F_u|_T == const * C1 * C2 on the trope T."""
    k = tuple(Fraction(c) for c in seed.param)
    alpha, beta = line_coefficients(u, k, q)
    if beta == 0:
        raise SplittingError("u is the seed parameter itself")
    c_k, G = trope_square(seed, trope)
    sq = perfect_square_root(family.quartic(q))
    if sq is None:
        raise SplittingError(f"{q} does not give a double quadric")
    c_q, Q = sq
    QT = restrict_to_plane(Q, trope)
    # F_u|_T = alpha c_k G^2 + beta c_q QT^2 = alpha c_k (G - mu QT)(G + mu QT)
    lead = alpha * c_k
    mu2 = -(beta * c_q) / lead
    if tower is not None and mu2.tower != tower:
        mu2 = mu2.lift(tower)
    tower_mu, mu = adjoin_sqrt(mu2)
    G, QT = G.lift(tower_mu), QT.lift(tower_mu)
    first = Conic(tuple(trope), G - QT.scale(mu))
    second = Conic(tuple(trope), G + QT.scale(mu))
    return first, second, lead, mu


def conic_slice(p0=P0, q=family.Q0, t=None, max_tries=20):
    """The 32 conics of one node's slice on X_u, u = k + t q.

    When t is None, t = 1, 2, 3, ... is tried until X_u is smooth and all
    32 conics are smooth.
    """
    seed = build_seed(p0)
    k = tuple(Fraction(c) for c in seed.param)
    q = tuple(Fraction(c) for c in q)
    candidates = [Fraction(t)] if t is not None else [Fraction(n) for n in range(1, max_tries + 1)]
    last_error = None
    for tt in candidates:
        u = tuple(a + tt * b for a, b in zip(k, q))
        if family.singular_discriminant(u) == 0:
            last_error = f"t={tt}: X_u is singular"
            log.info(last_error)
            continue
        try:
            result = _slice_at(seed, u, q, tt)
        except SplittingError as exc:
            last_error = f"t={tt}: {exc}"
            log.info(last_error)
            continue
        if all(c.is_smooth() for c in result.conics):
            return seed, result
        last_error = f"t={tt}: a singular conic"
        log.info(last_error)
    raise SplittingError(f"no admissible line parameter ({last_error})")


def _slice_at(seed, u, q, t):
    tower = None
    pairs = []
    conics = []
    alpha = beta = None
    mu0 = None
    k = tuple(Fraction(c) for c in seed.param)
    alpha, beta = line_coefficients(u, k, q)
    for trope in seed.tropes16:
        c1, c2, lead, mu = split_trope_conics(u, seed, q, trope, tower)
        if tower is None:
            tower = mu.tower
            mu0 = mu
        elif mu.tower != tower:
            raise SplittingError("tropes need different quadratic extensions")
        pairs.append((tuple(trope), c1, c2, lead))
        conics.extend([c1, c2])
    return ConicSlice(tuple(u), tuple(q), t, alpha, beta, mu0, tower, conics, pairs)


def verify_slice(result):
    """Checks for a conic slice; returns a dict of named booleans."""
    f = family.quartic(result.u)
    checks = {}
    prod_ok = True
    divides_ok = True
    for trope, c1, c2, lead in result.pairs:
        fT = restrict_to_plane(f, trope).lift(result.tower)
        if (c1.form * c2.form).scale(lead) != fT:
            prod_ok = False
        if not (c1.form.divides(fT) and c2.form.divides(fT)):
            divides_ok = False
    checks["product_equals_restriction"] = prod_ok
    checks["conics_divide_restriction"] = divides_ok
    checks["all_smooth"] = all(c.is_smooth() for c in result.conics)
    checks["distinct_conics"] = len({c.key() for c in result.conics}) == 32
    checks["distinct_planes"] = len({c.plane for c in result.conics}) == 16
    checks["at_most_one_extension"] = result.tower.height <= 1
    checks["smooth_surface"] = family.singular_discriminant(result.u) != 0
    return checks


# -- fixed points and the Mukai count

def restrict_to_line(f, span):
    """f(s a + t b) as a binary form in (s, t)."""
    a, b = span
    tower = f.tower
    for v in list(a) + list(b):
        if isinstance(v, FieldElement):
            tower = v.tower if tower.is_prefix_of(v.tower) else tower
    forms = [MPoly(2, {(1, 0): a[i], (0, 1): b[i]}, tower) for i in range(4)]
    return f.lift(tower).compose(forms)


def fixed_points_on_line(f, span):
    r = restrict_to_line(f, span)
    if r.is_zero():
        raise ArithmeticError("the fix line lies on the surface")
    distinct, degree = binary_form_roots_count(r)
    if distinct != degree:
        raise ArithmeticError("surface is tangent to a fix line; refusing to count with multiplicity")
    return distinct


def fixed_points_count(u, g):
    """Number of fixed points of g on the smooth surface X_u (both fix lines)."""
    if family.singular_discriminant(u) == 0:
        raise ValueError("X_u is singular")
    f = family.quartic(u)
    return sum(fixed_points_on_line(f, L.span) for L in heisgroup.fix_lines(g))


def mukai_rank(u):
    """(fixed point counts by label, averaged sum, rank of the invariant lattice)."""
    counts = {g: fixed_points_count(u, g) for g in heisgroup.nonzero_labels()}
    total = Fraction(24 + sum(counts.values()), 16)
    return counts, total, total - 2
