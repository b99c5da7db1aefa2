"""The 32_10 line configuration and the intersection matrices of its conics.

A line L with all Klein coordinates nonzero and its image L' = iota(L)
give two H-orbits {a L} and {b L'} indexed by labels a, b. Since H acts by
sign characters and iota inverts coordinates (with an extra sign on x0),

    (a L) . (b L') = sum_k t_k eps_k(a + b),   t = (-1, 1, 1, 1, 1, 1),

so a L and b L' meet exactly when a + b lies in the set S of labels with
a balanced sign sum. Nothing else about L matters.

Intersection numbers follow the usual rules for curves on a smooth
quartic: lines have self-intersection -2, lines in one orbit are
disjoint, coplanar lines meet once, and the hyperplane class h has h^2 = 4,
h.L = 1.
"""

from collections import Counter
from dataclasses import dataclass

from . import heisgroup
from .kleinlines import sign_character

INVOLUTION_SIGNS = (-1, 1, 1, 1, 1, 1)

# 1-based ordinals of the 16 reducible conics chosen for the Picard lattice
REFERENCE_ORDINALS = (4, 7, 21, 27, 36, 50, 75, 81, 88, 110, 114, 128, 131, 138, 141, 154)

REFERENCE_M = (
    (-2, 0, 2, 1, 2, 2, 1, 0, 0, 2, 0, 1, 1, 2, 1, 1),
    (0, -2, 1, 0, 2, 1, 2, 0, 0, 1, 2, 2, 1, 2, 1, 2),
    (2, 1, -2, 0, 1, 1, 2, 0, 1, 1, 1, 0, 0, 0, 1, 2),
    (1, 0, 0, -2, 1, 0, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2),
    (2, 2, 1, 1, -2, 1, 1, 2, 2, 0, 1, 2, 1, 1, 1, 0),
    (2, 1, 1, 0, 1, -2, 1, 2, 1, 0, 2, 2, 1, 1, 2, 1),
    (1, 2, 2, 2, 1, 1, -2, 1, 0, 2, 1, 1, 1, 0, 1, 1),
    (0, 0, 0, 1, 2, 2, 1, -2, 0, 1, 1, 1, 0, 1, 0, 2),
    (0, 0, 1, 2, 2, 1, 0, 0, -2, 2, 1, 2, 0, 1, 2, 1),
    (2, 1, 1, 1, 0, 0, 2, 1, 2, -2, 2, 2, 1, 1, 1, 0),
    (0, 2, 1, 1, 1, 2, 1, 1, 1, 2, -2, 0, 1, 1, 2, 0),
    (1, 2, 0, 1, 2, 2, 1, 1, 2, 2, 0, -2, 2, 0, 1, 2),
    (1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 2, -2, 0, 0, 0),
    (2, 2, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, -2, 1, 1),
    (1, 1, 1, 1, 1, 2, 1, 0, 2, 1, 2, 1, 0, 1, -2, 1),
    (1, 2, 2, 2, 0, 1, 1, 2, 1, 0, 0, 2, 0, 1, 1, -2),
)


def incidence_set():
    """Labels k (in binary order) with sum_i t_i eps_i(k) = 0."""
    s = []
    for k in heisgroup.labels():
        eps = sign_character(k)
        if sum(t * e for t, e in zip(INVOLUTION_SIGNS, eps)) == 0:
            s.append(k)
    if len(s) != 10:
        raise AssertionError(f"incidence set has {len(s)} elements, expected 10")
    return s


def inc(a, b, S=None):
    if S is None:
        S = incidence_set()
    return int(heisgroup.add(a, b) in S)


@dataclass(frozen=True)
class ReducibleConic:
    a: tuple  # label of the line in the orbit of L
    b: tuple  # label of the line in the orbit of iota(L)
    ordinal: int  # 1-based position in the (a, b) listing


def reducible_conics(swap_roles=False):
    """All incident pairs (a, b) with a outer, b inner, both in binary label order."""
    S = incidence_set()
    out = []
    for a in heisgroup.labels():
        for b in heisgroup.labels():
            if heisgroup.add(a, b) in S:
                pa, pb = (b, a) if swap_roles else (a, b)
                out.append(ReducibleConic(pa, pb, len(out) + 1))
    if len(out) != 160:
        raise AssertionError(f"{len(out)} reducible conics, expected 160")
    return out


def conic_product(c, d, S):
    same_a = -2 if c.a == d.a else 0
    same_b = -2 if c.b == d.b else 0
    return same_a + same_b + inc(c.a, d.b, S) + inc(d.a, c.b, S)


def gram_reducible(conics=None):
    S = incidence_set()
    if conics is None:
        conics = reducible_conics()
    n = len(conics)
    N = [[conic_product(conics[i], conics[j], S) for j in range(n)] for i in range(n)]
    if any(N[i][j] != N[j][i] for i in range(n) for j in range(n)):
        raise AssertionError("intersection matrix is not symmetric")
    return N


# -- the full 320 conics with the hyperplane class

def line_basis_gram():
    """Gram of (h, L_0..L_15, M_0..M_15) with L_a = a L and M_b = b iota(L), labels in binary order."""
    S = incidence_set()
    labs = heisgroup.labels()
    n = 33
    G = [[0] * n for _ in range(n)]
    G[0][0] = 4
    for k in range(32):
        G[0][k + 1] = G[k + 1][0] = 1
        G[k + 1][k + 1] = -2
    for i, a in enumerate(labs):
        for j, b in enumerate(labs):
            v = inc(a, b, S)
            G[1 + i][17 + j] = G[17 + j][1 + i] = v
    return G


def reducible_vector(a, b):
    v = [0] * 33
    v[1 + heisgroup.label_index(a)] += 1
    v[17 + heisgroup.label_index(b)] += 1
    return v


def complement_vector(a, b):
    v = [0] * 33
    v[0] = 1
    v[1 + heisgroup.label_index(a)] -= 1
    v[17 + heisgroup.label_index(b)] -= 1
    return v


def hyperplane_vector():
    v = [0] * 33
    v[0] = 1
    return v


@dataclass(frozen=True)
class Curve:
    kind: str  # "reducible", "complement" or "h"
    a: tuple = None
    b: tuple = None

    def vector(self):
        if self.kind == "reducible":
            return reducible_vector(self.a, self.b)
        if self.kind == "complement":
            return complement_vector(self.a, self.b)
        return hyperplane_vector()

    def translate(self, g):
        if self.kind == "h":
            return self
        return Curve(self.kind, heisgroup.add(self.a, g), heisgroup.add(self.b, g))

    def label(self):
        if self.kind == "h":
            return "h"
        prefix = "C" if self.kind == "reducible" else "D"
        return f"{prefix}({heisgroup.label_index(self.a)},{heisgroup.label_index(self.b)})"


def all_curves(include_h=True):
    conics = reducible_conics()
    curves = [Curve("reducible", c.a, c.b) for c in conics]
    curves += [Curve("complement", c.a, c.b) for c in conics]
    if include_h:
        curves.append(Curve("h"))
    return curves


def pairing(G, u, v):
    return sum(u[i] * G[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])


def gram_full320(include_h=True):
    """(curves, Gram matrix) for the 160 reducible conics, their 160 complements and optionally h."""
    G = line_basis_gram()
    curves = all_curves(include_h)
    vecs = [c.vector() for c in curves]
    n = len(curves)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = pairing(G, vecs[i], vecs[j])
    return curves, M


def h_orbits(curves):
    """Partition conics (not h) into H-orbits; returns a list of lists of indices."""
    index = {c: i for i, c in enumerate(curves)}
    seen = set()
    orbits = []
    for i, c in enumerate(curves):
        if c.kind == "h" or i in seen:
            continue
        orb = sorted({index[c.translate(g)] for g in heisgroup.labels()})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def orbit_statistics():
    """Distribution of C.gC (g != 1) per orbit and of C.gD (all g) per pair of distinct orbits."""
    curves, M = gram_full320(include_h=False)
    G = line_basis_gram()
    orbits = h_orbits(curves)
    reps = [curves[o[0]] for o in orbits]
    self_stats = []
    for c in reps:
        cv = c.vector()
        dist = Counter(pairing(G, cv, c.translate(g).vector()) for g in heisgroup.nonzero_labels())
        self_stats.append(dict(sorted(dist.items())))
    cross_stats = {}
    for i, c in enumerate(reps):
        cv = c.vector()
        for j, d in enumerate(reps):
            if i == j:
                continue
            dist = Counter(pairing(G, cv, d.translate(g).vector()) for g in heisgroup.labels())
            cross_stats[(i, j)] = dict(sorted(dist.items()))
    return reps, self_stats, cross_stats


# -- the 16x16 submatrix

CONVENTIONS = (
    {"base": 1, "swap_roles": False},
    {"base": 1, "swap_roles": True},
    {"base": 0, "swap_roles": False},
    {"base": 0, "swap_roles": True},
)


def submatrix(ordinals=REFERENCE_ORDINALS, base=1, swap_roles=False):
    conics = reducible_conics(swap_roles)
    N = gram_reducible(conics)
    idx = [o - base for o in ordinals]
    if min(idx) < 0 or max(idx) >= len(conics):
        raise IndexError("ordinal out of range for this convention")
    return [[N[i][j] for j in idx] for i in idx], [conics[i] for i in idx]


def convention_search(target=REFERENCE_M, ordinals=REFERENCE_ORDINALS):
    """Variants (of the four indexing conventions) that reproduce the target matrix."""
    hits = []
    for conv in CONVENTIONS:
        try:
            M, _ = submatrix(ordinals, **conv)
        except IndexError:
            continue
        if [list(r) for r in target] == M:
            hits.append(conv)
    return hits


def submatrix_M():
    """The frozen-convention 16x16 matrix, its determinant and the variant used.

    Swapping the roles of the two line orbits leaves the 160x160 matrix
    unchanged (incidence depends only on a + b), so both role choices under
    1-based ordinals reproduce the displayed matrix; the first hit in
    CONVENTIONS is frozen.
    """
    from .lattice import det_exact

    hits = convention_search()
    if not hits:
        raise AssertionError("no indexing convention reproduces the displayed matrix")
    mats = [submatrix(REFERENCE_ORDINALS, **conv)[0] for conv in hits]
    if any(m != mats[0] for m in mats):
        raise AssertionError("convention variants disagree")
    conv = hits[0]
    M, conics = submatrix(REFERENCE_ORDINALS, **conv)
    return M, det_exact(M), conv, conics
