"""Integer lattices given by Gram matrices.

Determinants and ranks use fraction-free (Bareiss) elimination; signature
uses congruence diagonalisation over Q; kernels of integer linear forms use
unimodular column operations, so complements come out saturated.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

LAMBDA15 = (
    (4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (-2, 4, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0),
    (0, -2, 4, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 1, 1),
    (0, 2, 0, 4, 2, 2, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (0, 0, 0, 2, 4, 2, 0, 0, 2, 1, 0, 0, 0, 0, 0),
    (0, 0, 2, 2, 2, 4, 2, 2, 1, 2, 0, 0, 1, 1, 2),
    (0, 0, 0, 0, 0, 2, 4, 2, 0, 2, 0, 0, 0, -1, 1),
    (0, 0, 0, 0, 0, 2, 2, 4, 0, 2, 0, 0, 1, 0, 2),
    (0, 0, 0, 0, 2, 1, 0, 0, 4, 2, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 2, 2, 2, 2, 4, 2, 2, 1, 1, 2),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 2, 2, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 1, 2, 2),
    (0, -1, 2, 0, 0, 1, 0, 1, 0, 1, 2, 1, 4, 0, 2),
    (1, 0, 1, 1, 0, 1, -1, 0, 0, 1, 1, 2, 0, 4, 2),
    (1, 0, 1, 1, 0, 2, 1, 2, 0, 2, 1, 2, 2, 2, 4),
)

HYPERBOLIC_PLANE = ((0, 1), (1, 0))


@dataclass
class GramLattice:
    gram: list
    labels: list = field(default=None)
    basis: list = field(default=None)  # rows in ambient coordinates, when a sublattice

    def __post_init__(self):
        self.gram = [list(map(int, row)) for row in self.gram]
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix is not square")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix is not symmetric")
        if self.labels is None:
            self.labels = [f"e{i + 1}" for i in range(n)]

    @property
    def rank(self):
        return len(self.gram)

    def det(self):
        return det_exact(self.gram)

    def signature(self):
        return signature(self.gram)

    def is_even(self):
        return is_even(self.gram)

    def norm(self, x):
        return inner(self.gram, x, x)

    def negated(self):
        return GramLattice([[-v for v in row] for row in self.gram], list(self.labels))


def inner(gram, x, y):
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])


def det_exact(m):
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_exact(m):
    """Rank of an integer matrix by fraction-free row reduction."""
    a = [list(map(int, row)) for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def signature(m):
    """(positive, negative) by symmetric elimination over Q.

    When every remaining diagonal entry is zero, e_i is replaced by e_i + e_j
    for some a_ij != 0, which puts 2 a_ij on the diagonal.
    """
    a = [[Fraction(v) for v in row] for row in m]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            ij = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if ij is None:
                raise ValueError("degenerate form")
            i, j = ij
            # congruence by e_i -> e_i + e_j
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / piv for c in rest] for r in rest]
    return pos, neg


def is_even(m):
    return all(m[i][i] % 2 == 0 for i in range(len(m)))


def is_positive_definite(m):
    return signature(m) == (len(m), 0)


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def restrict_gram(gram, basis):
    """B G B^T for basis rows B."""
    return matmul(matmul(basis, gram), transpose(basis))


def solve_rational(m, rhs):
    """Solve m x = rhs over Q for square nonsingular integer m."""
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(m, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [v * inv for v in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n] for row in a]


def solve_integral(gram, target):
    """Integer x with gram x = target, or None when the rational solution is not integral."""
    if det_exact(gram) == 0:
        raise ValueError("Gram matrix is degenerate")
    x = solve_rational(gram, target)
    if x is None:
        raise ArithmeticError("no rational solution")
    if any(v.denominator != 1 for v in x):
        return None
    return [int(v) for v in x]


def integer_kernel(row):
    """Basis (rows) of {x in Z^n : row . x = 0}, via unimodular column operations."""
    n = len(row)
    r = [int(v) for v in row]
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of U transform r

    def col_op(src, dst, q):
        # column dst -= q * column src
        r[dst] -= q * r[src]
        for i in range(n):
            U[i][dst] -= q * U[i][src]

    def swap(i, j):
        r[i], r[j] = r[j], r[i]
        for k in range(n):
            U[k][i], U[k][j] = U[k][j], U[k][i]

    # bring the gcd into position 0
    while True:
        nz = [i for i in range(n) if r[i] != 0]
        if len(nz) <= 1:
            break
        k = min(nz, key=lambda i: abs(r[i]))
        for i in nz:
            if i != k:
                col_op(k, i, r[i] // r[k])
    nz = [i for i in range(n) if r[i] != 0]
    if nz and nz[0] != 0:
        swap(0, nz[0])
    start = 1 if nz else 0
    return [[U[i][j] for i in range(n)] for j in range(start, n)]


def maximal_minor_gcd(basis):
    k = len(basis)
    n = len(basis[0])
    g = 0
    for cols in combinations(range(n), k):
        g = math.gcd(g, det_exact([[row[c] for c in cols] for row in basis]))
        if g == 1:
            return 1
    return g


def is_saturated(basis):
    """A sublattice spanned by the rows is primitive iff its maximal minors have gcd 1."""
    return maximal_minor_gcd(basis) == 1


def orth_complement(L, v):
    """Sublattice {x : x . v = 0} of L (v in L's coordinates)."""
    if not any(v):
        raise ValueError("v must be nonzero")
    form = [sum(L.gram[i][j] * v[j] for j in range(L.rank)) for i in range(L.rank)]
    basis = integer_kernel(form)
    return GramLattice(restrict_gram(L.gram, basis), basis=basis)


def direct_sum(*grams):
    n = sum(len(g) for g in grams)
    out = [[0] * n for _ in range(n)]
    off = 0
    for g in grams:
        for i in range(len(g)):
            for j in range(len(g)):
                out[off + i][off + j] = g[i][j]
        off += len(g)
    return out


def sublattice_index(basis, ambient_gram):
    """[M : N] for N spanned by integer rows `basis` in M; checked two ways."""
    n = len(ambient_gram)
    if len(basis) != n:
        raise ValueError("sublattice must have full rank")
    if any(int(x) != x for row in basis for x in row):
        raise ValueError("basis vectors are not in the ambient lattice")
    dN = det_exact(restrict_gram(ambient_gram, basis))
    dM = det_exact(ambient_gram)
    if dN == 0 or dM == 0:
        raise ValueError("degenerate lattice")
    ratio = Fraction(dN, dM)
    if ratio.denominator != 1 or ratio < 0:
        raise ArithmeticError(f"disc ratio {ratio} is not a positive integer")
    idx = math.isqrt(ratio.numerator)
    if idx * idx != ratio:
        raise ArithmeticError(f"disc ratio {ratio} is not a square")
    if abs(det_exact(basis)) != idx:
        raise ArithmeticError("index disagrees with |det| of the basis matrix")
    return idx


# -- short vectors

def _decompose(gram):
    """Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2, exact."""
    n = len(gram)
    q = [[Fraction(v) for v in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def short_vectors(gram, bound, nonzero_only=False):
    """All integer x with x^T G x <= bound for positive definite G (Fincke-Pohst).

    Bounds for each coordinate are found in floating point and widened by
    one; every candidate is then checked exactly, so nothing is missed.
    Returns a list of (norm, vector), vectors up to sign NOT identified.
    """
    n = len(gram)
    if not is_positive_definite(gram):
        raise ValueError("short_vectors needs a positive definite form")
    q = _decompose(gram)
    diag = [q[i][i] for i in range(n)]
    bound = Fraction(bound)
    x = [0] * n
    out = []

    def center(i):
        return sum(q[i][j] * x[j] for j in range(i + 1, n))

    def rec(i, remaining):
        c = center(i)
        cf = float(c)
        r = math.sqrt(max(float(remaining / diag[i]), 0.0))
        lo = math.floor(-cf - r) - 1
        hi = math.ceil(-cf + r) + 1
        for v in range(lo, hi + 1):
            t = v + c
            used = diag[i] * t * t
            if used > remaining:
                continue
            x[i] = v
            if i == 0:
                out.append(tuple(x))
            else:
                rec(i - 1, remaining - used)
        x[i] = 0

    rec(n - 1, bound)
    result = []
    for v in out:
        nv = inner(gram, v, v)
        if nv <= bound and (any(v) or not nonzero_only):
            result.append((nv, v))
    return result


def norm_counts(gram, bound):
    counts = {}
    for nv, v in short_vectors(gram, bound):
        counts[nv] = counts.get(nv, 0) + 1
    return dict(sorted(counts.items()))


def minimum_norm(gram, search_bound):
    """Smallest nonzero norm up to search_bound (None if no nonzero vector that short)."""
    norms = [nv for nv, v in short_vectors(gram, search_bound) if any(v)]
    return min(norms) if norms else None


def box_search(gram, bound, radius):
    """Brute force over the cube [-radius, radius]^n; the oracle for short_vectors on small n."""
    n = len(gram)
    out = []
    for v in product(range(-radius, radius + 1), repeat=n):
        nv = inner(gram, v, v)
        if nv <= bound:
            out.append((nv, v))
    return out


def lattice_invariants(gram, min_search=None):
    info = {
        "rank": len(gram),
        "det": det_exact(gram),
        "even": is_even(gram),
    }
    if info["det"] != 0:
        info["signature"] = list(signature(gram))
    if min_search is not None and info.get("signature") == [len(gram), 0]:
        info["minimum"] = minimum_norm(gram, min_search)
    return info
