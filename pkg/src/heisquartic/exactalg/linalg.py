"""Exact dense linear algebra over Q or a quadratic tower.

Entries may be ints, Fractions or FieldElements; all that is used is
field arithmetic and comparison with zero.
"""

from fractions import Fraction

from .field import FieldElement


def _lift(x):
    return x if isinstance(x, FieldElement) else Fraction(x)


def rref(rows):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    m = [[_lift(x) for x in row] for row in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of {v : rows * v = 0}, one vector per free column."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    one = _one_like(m)
    zero = one - one
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def _one_like(m):
    for row in m:
        for x in row:
            if isinstance(x, FieldElement):
                return x.tower.one()
    return Fraction(1)


def solve(rows, rhs):
    """One solution x of rows * x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    n = len(rows[0])
    if n in pivots:
        return None
    zero = _one_like(m) * 0
    x = [zero] * n
    for r, c in enumerate(pivots):
        x[c] = m[r][n]
    return x


def det(rows):
    """Determinant by Gaussian elimination over the field."""
    m = [[_lift(x) for x in row] for row in rows]
    n = len(m)
    d = _one_like(m)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return d * 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d = d * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), start=0 * row[0]) for col in zip(*b)] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), start=0 * row[0]) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def normalize_projective(v):
    """Scale so the first nonzero coordinate is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    return tuple(_lift(x) / lead for x in v)


def same_point(a, b):
    return normalize_projective(a) == normalize_projective(b)


def span_key(rows):
    """Canonical key of the row space: the nonzero rows of its rref."""
    m, pivots = rref(rows)
    return tuple(tuple(m[i]) for i in range(len(pivots)))
