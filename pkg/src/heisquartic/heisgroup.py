"""The Heisenberg group H22 in SL4 and its quotient H = F2^4.

Labels are 4-tuples (i, j, k, l) of bits; the canonical lift of a label is
the signed permutation matrix sigma1^i sigma2^j tau1^k tau2^l. Reading the
label as a binary number gives the canonical order on H used throughout
the package (`label_index`).

Lifts multiply as lift(g) lift(h) = (-1)^c(g, h) lift(g + h) with the
cocycle c(g, h) = k*i' + l*j' (tau's moved past sigma's), see `cocycle`.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .exactalg.field import gaussian_tower
from .exactalg.linalg import nullspace, rank, span_key

SIGMA1 = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))
SIGMA2 = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
TAU1 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
TAU2 = ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))
GENERATORS = (SIGMA1, SIGMA2, TAU1, TAU2)
GENERATOR_NAMES = ("sigma1", "sigma2", "tau1", "tau2")
GENERATOR_LABELS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
IDENTITY = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
ZERO = (0, 0, 0, 0)

QI = gaussian_tower()


def matmul(a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(4)) for c in range(4)) for r in range(4))


def matneg(a):
    return tuple(tuple(-x for x in row) for row in a)


def apply(m, v):
    """m acting on a column vector (entries of any ring)."""
    return tuple(sum((m[r][c] * v[c] for c in range(4) if m[r][c]), start=0 * v[0]) for r in range(4))


def transpose(m):
    return tuple(zip(*m))


# -- labels

def labels():
    """All 16 labels in canonical (binary) order."""
    return [tuple(b) for b in product((0, 1), repeat=4)]


def nonzero_labels():
    return labels()[1:]


def label_index(g):
    i, j, k, l = g
    return 8 * i + 4 * j + 2 * k + l


def label_from_index(n):
    return ((n >> 3) & 1, (n >> 2) & 1, (n >> 1) & 1, n & 1)


def add(g, h):
    return tuple((a + b) % 2 for a, b in zip(g, h))


def label_name(g):
    parts = [n for n, b in zip(GENERATOR_NAMES, g) if b]
    return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def lift(g):
    m = IDENTITY
    for bit, gen in zip(g, GENERATORS):
        if bit:
            m = matmul(m, gen)
    return m


def cocycle(g, h):
    """Bit c with lift(g) lift(h) == (-1)^c lift(g + h)."""
    return (g[2] * h[0] + g[3] * h[1]) % 2


def enumerate_group():
    """Close the generators under multiplication.

    Returns (elements of H22 as matrices, center, labels of H).
    """
    elements = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for m in frontier:
            for gen in GENERATORS:
                p = matmul(m, gen)
                if p not in elements:
                    elements.add(p)
                    nxt.append(p)
        frontier = nxt
    elements = sorted(elements)
    center = [z for z in elements if all(matmul(z, m) == matmul(m, z) for m in elements)]
    return elements, center, labels()


def commutes(a, b):
    return matmul(a, b) == matmul(b, a)


def symplectic_form(g, h):
    """0 when the lifts commute, 1 when they anticommute."""
    a, b = lift(g), lift(h)
    ab, ba = matmul(a, b), matmul(b, a)
    if ab == ba:
        return 0
    if ab == matneg(ba):
        return 1
    raise AssertionError("lifts neither commute nor anticommute")


def symplectic_form_formula(g, h):
    """Closed form i*k' + k*i' + j*l' + l*j' of the commutator pairing."""
    return (g[0] * h[2] + g[2] * h[0] + g[1] * h[3] + g[3] * h[1]) % 2


def symplectic_gram():
    return [[symplectic_form(a, b) for b in GENERATOR_LABELS] for a in GENERATOR_LABELS]


def rank_f2(rows):
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] % 2), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] % 2:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


# -- fix lines

@dataclass(frozen=True)
class FixLine:
    owner: tuple
    eigenvalue: object
    span: tuple  # two points over Q(i), rows of the reduced echelon form

    def key(self):
        return self.span

    def points(self):
        return self.span


def _sort_key(span):
    return tuple(tuple(x.coords for x in row) for row in span)


@lru_cache(maxsize=None)
def fix_lines(g):
    """The two eigenspace lines of lift(g), ordered by their echelon forms."""
    if tuple(g) == ZERO:
        raise ValueError("the identity has no fix lines")
    m = lift(g)
    sq = matmul(m, m)
    if sq == IDENTITY:
        eigenvalues = (QI(1), QI(-1))
    elif sq == matneg(IDENTITY):
        eigenvalues = (QI.gen(), -QI.gen())
    else:
        raise AssertionError("lift does not square to +-1")
    lines = []
    for lam in eigenvalues:
        rows = [[QI(m[r][c]) - (lam if r == c else 0) for c in range(4)] for r in range(4)]
        basis = nullspace(rows)
        if len(basis) != 2:
            raise AssertionError(f"eigenspace of dimension {len(basis)}")
        lines.append(FixLine(tuple(g), lam, span_key(basis)))
    lines.sort(key=lambda L: _sort_key(L.span))
    return tuple(lines)


def all_fix_lines():
    return [L for g in nonzero_labels() for L in fix_lines(g)]


def lines_meet(a, b):
    """Two lines in P^3, each given by two spanning points, meet iff the 4 points are dependent."""
    return rank(list(a) + list(b)) <= 3


def line_intersection(a, b):
    """Intersection point of two meeting, distinct lines."""
    a0, a1 = a
    b0, b1 = b
    # s a0 + t a1 - u b0 - v b1 = 0
    cols = [a0, a1, [-x for x in b0], [-x for x in b1]]
    rows = [[cols[k][r] for k in range(4)] for r in range(4)]
    ker = nullspace(rows)
    if len(ker) != 1:
        raise ValueError("lines do not meet in a single point")
    s, t = ker[0][0], ker[0][1]
    return tuple(s * x + t * y for x, y in zip(a0, a1))


def transport_line(m, line_span):
    return span_key([apply(m, p) for p in line_span])


def fixline_incidence(g, h):
    """2x2 table: does line a of g meet line b of h."""
    if tuple(g) == ZERO or tuple(h) == ZERO or tuple(g) == tuple(h):
        raise ValueError("need two distinct nonidentity labels")
    return [[lines_meet(a.span, b.span) for b in fix_lines(h)] for a in fix_lines(g)]


def action_on_fix_lines(h, g):
    """How lift(h) permutes the two fix lines of g: 'preserve' or 'flip'."""
    la, lb = fix_lines(g)
    m = lift(h)
    ta = transport_line(m, la.span)
    if ta == la.span:
        if transport_line(m, lb.span) != lb.span:
            raise AssertionError("inconsistent action on fix lines")
        return "preserve"
    if ta == lb.span:
        return "flip"
    raise AssertionError("fix line not mapped to a fix line")


# -- planes of F2^4

@dataclass(frozen=True)
class F2Plane:
    basis: tuple
    members: frozenset

    @property
    def isotropic(self):
        return symplectic_form(*self.basis) == 0

    def nonzero(self):
        return sorted((m for m in self.members if m != ZERO), key=label_index)


def make_plane(g, h):
    g, h = tuple(g), tuple(h)
    return F2Plane((g, h), frozenset({ZERO, g, h, add(g, h)}))


def all_planes():
    seen = {}
    for g, h in combinations(nonzero_labels(), 2):
        p = make_plane(g, h)
        if p.members not in seen:
            seen[p.members] = p
    return sorted(seen.values(), key=lambda p: sorted(label_index(m) for m in p.members))


def classify_planes():
    planes = all_planes()
    iso = [p for p in planes if p.isotropic]
    aniso = [p for p in planes if not p.isotropic]
    return iso, aniso


def orthogonal_complement(plane):
    members = [g for g in labels() if all(symplectic_form(g, m) == 0 for m in plane.members)]
    nz = [g for g in members if g != ZERO]
    if len(members) != 4:
        raise AssertionError("complement of a plane is not a plane")
    return make_plane(nz[0], nz[1])


def orthogonal_pairs():
    """The 10 pairs (P, P^perp) of anisotropic planes."""
    _, aniso = classify_planes()
    pairs = []
    seen = set()
    for p in aniso:
        q = orthogonal_complement(p)
        if q.isotropic:
            raise AssertionError("complement of an anisotropic plane is isotropic")
        key = frozenset({p.members, q.members})
        if key not in seen:
            seen.add(key)
            pairs.append((p, q))
    return pairs


def _normalize(v):
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


def tetrahedron_of(plane):
    """Face forms of the invariant tetrahedron whose edges are the fix lines of an isotropic plane.

    Returns (faces, vertices); faces and vertices are normalised
    coefficient vectors over Q(i).
    """
    if not plane.isotropic:
        raise ValueError("tetrahedra come from isotropic planes")
    edges = [L.span for g in plane.nonzero() for L in fix_lines(g)]
    points = {}
    for a, b in combinations(edges, 2):
        if a != b and lines_meet(a, b):
            p = _normalize(line_intersection(a, b))
            points.setdefault(p, set()).update({a, b})
    vertices = [p for p, ls in points.items() if len(ls) == 3]
    if len(vertices) != 4 or len(points) != 4:
        raise AssertionError("edges do not form a tetrahedron")
    faces = []
    for tri in combinations(vertices, 3):
        ker = nullspace([list(v) for v in tri])
        if len(ker) != 1:
            raise AssertionError("degenerate face")
        faces.append(_normalize(ker[0]))
    faces.sort(key=lambda f: tuple(x.coords for x in f))
    vertices.sort(key=lambda f: tuple(x.coords for x in f))
    return faces, vertices


QUADRIC_MONOMIALS = [(i, j) for i in range(4) for j in range(i, 4)]


def _line_conditions(span):
    a, b = span
    rows = []
    for coeff in (lambda i, j: a[i] * a[j],
                  lambda i, j: a[i] * b[j] + a[j] * b[i],
                  lambda i, j: b[i] * b[j]):
        rows.append([coeff(i, j) for i, j in QUADRIC_MONOMIALS])
    return rows


def quadric_of(p1, p2):
    """Coefficients (over QUADRIC_MONOMIALS) of the quadric through the 12 fix lines of P1 and P2."""
    if p1.isotropic or p2.isotropic:
        raise ValueError("fundamental quadrics come from anisotropic planes")
    if orthogonal_complement(p1).members != p2.members:
        raise ValueError("planes are not orthogonal complements")
    rows = []
    for plane in (p1, p2):
        for g in plane.nonzero():
            for L in fix_lines(g):
                rows.extend(_line_conditions(L.span))
    ker = nullspace(rows)
    if len(ker) != 1:
        raise ArithmeticError(f"quadric solution space has dimension {len(ker)}")
    return _normalize(ker[0])


def plane_lines(plane):
    return [L for g in plane.nonzero() for L in fix_lines(g)]
