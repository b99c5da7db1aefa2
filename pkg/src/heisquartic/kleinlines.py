"""Plucker and Klein coordinates of lines in P^3.

Plucker coordinates are the 2x2 minors p_ij = a_i b_j - a_j b_i of two
spanning points, in the order (01, 02, 03, 12, 13, 23). Klein coordinates
are the linear change

    x0 = p01 - p23    x2 = p02 + p13    x4 = p03 - p12
    x1 = i(p01 + p23) x3 = i(p02 - p13) x5 = i(p03 + p12)

under which the line quadric becomes sum x_k^2 = 0 and H acts by sign
changes. Klein vectors live over a tower containing i.
"""

from itertools import product

from . import heisgroup
from .exactalg.field import FieldElement, gaussian_tower, zeta8_tower
from .exactalg.linalg import rank
from .exactalg.poly import MPoly

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# rows of the sign table for sigma1, sigma2, tau1, tau2
SIGN_TABLE = (
    (-1, 1, -1, -1, 1, -1),
    (-1, -1, 1, -1, -1, 1),
    (1, 1, -1, -1, -1, -1),
    (-1, -1, 1, 1, -1, -1),
)

QI = gaussian_tower()


def _tower_of(values, default):
    tower = default
    for v in values:
        if isinstance(v, FieldElement) and tower.is_prefix_of(v.tower):
            tower = v.tower
    return tower


def _lift_all(values, tower):
    return tuple(v.lift(tower) if isinstance(v, FieldElement) else tower(v) for v in values)


def plucker_from_points(a, b):
    if rank([list(a), list(b)]) < 2:
        raise ValueError("points are dependent")
    tower = _tower_of(list(a) + list(b), QI.parent())
    a, b = _lift_all(a, tower), _lift_all(b, tower)
    return tuple(a[i] * b[j] - a[j] * b[i] for i, j in PAIRS)


def plucker_relation(p):
    p01, p02, p03, p12, p13, p23 = p
    return p01 * p23 - p02 * p13 + p03 * p12


def klein_from_plucker(p):
    tower = _tower_of(p, QI)
    p01, p02, p03, p12, p13, p23 = _lift_all(p, tower)
    i = QI.gen().lift(tower)
    return (p01 - p23, i * (p01 + p23), p02 + p13, i * (p02 - p13), p03 - p12, i * (p03 + p12))


def plucker_from_klein(x):
    tower = _tower_of(x, QI)
    x0, x1, x2, x3, x4, x5 = _lift_all(x, tower)
    i = QI.gen().lift(tower)
    return (
        (x0 - i * x1) / 2,
        (x2 - i * x3) / 2,
        (x4 - i * x5) / 2,
        (-i * x5 - x4) / 2,
        (x2 + i * x3) / 2,
        (-i * x1 - x0) / 2,
    )


def klein_from_points(a, b):
    return klein_from_plucker(plucker_from_points(a, b))


def quadric_value(x):
    return sum((c * c for c in x), start=0 * x[0])


def bilinear(x, y):
    return sum((a * b for a, b in zip(x, y)), start=0 * x[0])


def coplanar(x, y):
    """Klein vectors x, y of two lines: True iff the lines meet."""
    return bilinear(x, y) == 0


def plucker_matrix(p):
    p01, p02, p03, p12, p13, p23 = p
    z = 0 * p01
    return [
        [z, p01, p02, p03],
        [-p01, z, p12, p13],
        [-p02, -p12, z, p23],
        [-p03, -p13, -p23, z],
    ]


def points_from_plucker(p):
    """Two points spanning the line: independent columns of the Plucker matrix.

    For P = a b^T - b a^T, P v = a (b.v) - b (a.v) lies on the line.
    """
    m = plucker_matrix(p)
    cols = [tuple(m[r][c] for r in range(4)) for c in range(4)]
    nonzero = [c for c in cols if any(v != 0 for v in c)]
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            if rank([list(nonzero[i]), list(nonzero[j])]) == 2:
                return nonzero[i], nonzero[j]
    raise ValueError("not the Plucker vector of a line")


def points_from_klein(x):
    return points_from_plucker(plucker_from_klein(x))


def lines_meet_by_rank(a, b, c, d):
    return rank([list(a), list(b), list(c), list(d)]) <= 3


# -- the H action

def sign_character(g):
    eps = [1] * 6
    for bit, row in zip(g, SIGN_TABLE):
        if bit:
            eps = [e * r for e, r in zip(eps, row)]
    return tuple(eps)


def h_sign_action(g, x):
    return tuple(e * c for e, c in zip(sign_character(g), x))


def transport_klein(g, a, b):
    """Klein vector of lift(g) applied to the line through a and b."""
    m = heisgroup.lift(g)
    return klein_from_points(heisgroup.apply(m, a), heisgroup.apply(m, b))


def projectively_equal(x, y):
    k = next((i for i, c in enumerate(x) if c != 0), None)
    if k is None or y[k] == 0:
        return False
    s = y[k] / x[k]
    return all(s * a == b for a, b in zip(x, y))


def normalize_klein(x):
    """Canonical representative: first nonzero coordinate scaled to 1."""
    lead = next((c for c in x if c != 0), None)
    if lead is None:
        raise ValueError("zero Klein vector")
    return tuple(c / lead for c in x)


def involution(x):
    """(-1/x0, 1/x1, ..., 1/x5) with denominators cleared by prod x_k."""
    if any(c == 0 for c in x):
        raise ValueError("involution needs all Klein coordinates nonzero")
    out = []
    for k in range(6):
        p = 1
        for j in range(6):
            if j != k:
                p = x[j] * p
        out.append(-p if k == 0 else p)
    return tuple(out)


def nieto_line_condition(x):
    """sum_k prod_{j != k} x_j^2."""
    total = 0 * x[0]
    for k in range(6):
        p = 1
        for j in range(6):
            if j != k:
                p = x[j] * x[j] * p
        total = total + p
    return total


# -- lines on surfaces

def line_on_surface(f, line):
    """True when the quartic f vanishes on the line (a pair of points or a Klein vector)."""
    if len(line) == 6:
        a, b = points_from_klein(line)
    else:
        a, b = line
    tower = _tower_of(list(a) + list(b), f.tower)
    a, b = _lift_all(a, tower), _lift_all(b, tower)
    forms = [MPoly(2, {(1, 0): a[i], (0, 1): b[i]}, tower) for i in range(4)]
    return f.lift(tower).compose(forms).is_zero()


def fourth_roots_of_minus_one():
    K = zeta8_tower()
    i, r2 = K.gen(1), K.gen(2)
    zeta = r2 * (1 + i) / 2
    return [zeta, zeta * i, -zeta, -zeta * i]


COORDINATE_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def fermat_lines():
    """The 48 lines joining (1, alpha) and (1, beta) on complementary coordinate pairs."""
    K = zeta8_tower()
    roots = fourth_roots_of_minus_one()
    lines = []
    for (i, j), (k, l) in COORDINATE_PAIRINGS:
        for alpha, beta in product(roots, repeat=2):
            a = [K(0)] * 4
            b = [K(0)] * 4
            a[i], a[j] = K(1), alpha
            b[k], b[l] = K(1), beta
            lines.append((tuple(a), tuple(b)))
    return lines


def intersection_gram(lines, self_intersection=-2):
    """Gram matrix for lines on a smooth quartic: -2 on the diagonal, 1 if two lines meet."""
    pl = [plucker_from_points(a, b) for a, b in lines]
    n = len(lines)
    gram = [[0] * n for _ in range(n)]
    for r in range(n):
        gram[r][r] = self_intersection
        for c in range(r + 1, n):
            meet = _plucker_pairing(pl[r], pl[c]) == 0
            gram[r][c] = gram[c][r] = int(meet)
    return gram


def _plucker_pairing(p, q):
    return p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2]
