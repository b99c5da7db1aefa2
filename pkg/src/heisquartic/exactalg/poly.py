"""Sparse multivariate polynomials with tower-field coefficients.

Terms are kept in a dict from exponent tuples to nonzero FieldElements.
The term order is graded lex with x0 > x1 > ... everywhere a leading
term is needed.
"""

from fractions import Fraction
from itertools import permutations

from .field import QQ, FieldElement, common_tower, to_fraction

XYZW = ("x", "y", "z", "w")


def grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("nvars", "tower", "terms")

    def __init__(self, nvars, terms=None, tower=QQ):
        self.nvars = nvars
        self.tower = tower
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                c = _coeff(c, tower)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms, tower):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.tower = tower
        p.terms = terms
        return p

    @classmethod
    def const(cls, c, nvars, tower=QQ):
        return cls(nvars, {(0,) * nvars: c}, tower)

    @classmethod
    def var(cls, i, nvars, tower=QQ):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, tower)

    @classmethod
    def gens(cls, nvars, tower=QQ):
        return [cls.var(i, nvars, tower) for i in range(nvars)]

    @classmethod
    def linear_form(cls, coeffs, tower=None):
        if tower is None:
            tower = QQ
            for c in coeffs:
                if isinstance(c, FieldElement):
                    tower = common_tower(tower, c.tower)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms, tower)

    def lift(self, tower):
        if tower == self.tower:
            return self
        return MPoly._raw(self.nvars, {e: c.lift(tower) for e, c in self.terms.items()}, tower)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            if other.tower == self.tower:
                return self, other
            t = common_tower(self.tower, other.tower)
            return self.lift(t), other.lift(t)
        if isinstance(other, (int, Fraction, FieldElement)):
            if isinstance(other, FieldElement) and other.tower != self.tower:
                t = common_tower(self.tower, other.tower)
                return self.lift(t), MPoly.const(other, self.nvars, t)
            return self, MPoly.const(other, self.nvars, self.tower)
        return None, None

    # -- queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def coeff(self, exps):
        c = self.terms.get(tuple(exps))
        return c if c is not None else self.tower.zero()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coeff(self):
        return self.leading_term()[1]

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return MPoly._raw(a.nvars, terms, a.tower)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.tower)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def scale(self, s):
        if isinstance(s, FieldElement) and s.tower != self.tower:
            t = common_tower(self.tower, s.tower)
            return self.lift(t).scale(s.lift(t))
        if not isinstance(s, FieldElement):
            s = to_fraction(s)
        if s == 0:
            return MPoly._raw(self.nvars, {}, self.tower)
        return MPoly._raw(self.nvars, {e: c * s for e, c in self.terms.items()}, self.tower)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                s = terms.get(e)
                terms[e] = prod if s is None else s + prod
        return MPoly._raw(a.nvars, {e: c for e, c in terms.items() if not c.is_zero()}, a.tower)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if isinstance(other, FieldElement):
            return self.scale(other.inverse())
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.const(1, self.nvars, self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement, MPoly)):
            try:
                d = self - other
            except ValueError:
                return False
            return d.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((e, hash(c)) for e, c in self.terms.items()))

    def divmod(self, other):
        """Multivariate division by a single divisor in grlex order; returns (q, r)."""
        a, b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = b.leading_term()
        lcinv = lc.inverse()
        q = MPoly._raw(a.nvars, {}, a.tower)
        r = MPoly._raw(a.nvars, {}, a.tower)
        p = a
        while p.terms:
            e, c = p.leading_term()
            if all(x >= y for x, y in zip(e, le)):
                m = MPoly._raw(a.nvars, {tuple(x - y for x, y in zip(e, le)): c * lcinv}, a.tower)
                q = q + m
                p = p - m * b
            else:
                t = MPoly._raw(a.nvars, {e: c}, a.tower)
                r = r + t
                p = p - t
        return q, r

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def divides(self, other):
        """True when self divides other exactly."""
        return other.divmod(self)[1].is_zero()

    # -- calculus and substitution

    def diff(self, i):
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = c * e[i]
        return MPoly._raw(self.nvars, terms, self.tower)

    def gradient(self):
        return [self.diff(i) for i in range(self.nvars)]

    def hessian_matrix(self):
        g = self.gradient()
        return [[g[i].diff(j) for j in range(self.nvars)] for i in range(self.nvars)]

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        tower = self.tower
        for v in point:
            if isinstance(v, FieldElement):
                tower = common_tower(tower, v.tower)
        pt = [tower(v) if not isinstance(v, FieldElement) else v.lift(tower) for v in point]
        powers = [dict() for _ in pt]
        total = tower.zero()
        for e, c in self.terms.items():
            t = c.lift(tower)
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = pt[i] ** k
                        powers[i][k] = pw
                    t = t * pw
            total = total + t
        return total

    def compose(self, subs):
        """Substitute polynomials (all in one common ring) for the variables."""
        if len(subs) != self.nvars:
            raise ValueError(f"expected {self.nvars} substitutions")
        subs = list(subs)
        nv = subs[0].nvars
        tower = self.tower
        for s in subs:
            if s.nvars != nv:
                raise ValueError("substitutions live in different rings")
            tower = common_tower(tower, s.tower)
        subs = [s.lift(tower) for s in subs]
        cache = [dict() for _ in subs]
        result = MPoly._raw(nv, {}, tower)
        for e, c in self.terms.items():
            t = MPoly.const(c.lift(tower), nv, tower)
            for i, k in enumerate(e):
                if k:
                    pw = cache[i].get(k)
                    if pw is None:
                        pw = subs[i] ** k
                        cache[i][k] = pw
                    t = t * pw
            result = result + t
        return result

    def linear_substitute(self, matrix):
        """Compose with x_i -> sum_j matrix[i][j] * y_j."""
        return self.compose([MPoly.linear_form(list(row)) for row in matrix])

    # -- normalisation

    def monic(self):
        return self.scale(self.leading_coeff().inverse())

    def proportionality(self, other):
        """Return s with self == s * other, or None."""
        a, b = self._coerce(other)
        if a.is_zero() or b.is_zero():
            return None if (a.is_zero() != b.is_zero()) else a.tower.one()
        if set(a.terms) != set(b.terms):
            return None
        e, c = b.leading_term()
        s = a.terms[e] / c
        return s if a == b.scale(s) else None

    def is_proportional(self, other):
        return self.proportionality(other) is not None

    # -- display / serialisation

    def __repr__(self):
        if not self.terms:
            return "0"
        names = XYZW if self.nvars <= 4 else tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cs = repr(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}" if c.is_rational() else f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars, data):
        terms = {}
        tower = QQ
        for t in data:
            c = FieldElement.from_json(t["coeff"])
            tower = common_tower(tower, c.tower)
            terms[tuple(t["exps"])] = c
        return cls(nvars, {e: c.lift(tower) for e, c in terms.items()}, tower)


def _q(x):
    return x if isinstance(x, FieldElement) else to_fraction(x)


def _coeff(c, tower):
    if isinstance(c, FieldElement):
        return c.lift(tower)
    return tower(to_fraction(c))


def xyzw(tower=QQ):
    return MPoly.gens(4, tower)


def poly_det(m):
    """Determinant of a square matrix of MPolys by Laplace expansion along the first row.

    Minors are memoised on their column sets, so a 4x4 costs 28 minor
    products rather than 64.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    nv = m[0][0].nvars
    tower = QQ
    for row in m:
        for p in row:
            if p.nvars != nv:
                raise ValueError("matrix entries live in different variable sets")
            tower = common_tower(tower, p.tower)
    m = [[p.lift(tower) for p in row] for row in m]
    memo = {}

    def minor(r, cols):
        if r == n:
            return MPoly.const(1, nv, tower)
        key = cols
        if key in memo:
            return memo[key]
        total = MPoly._raw(nv, {}, tower)
        for k, c in enumerate(cols):
            entry = m[r][c]
            if entry.is_zero():
                continue
            rest = cols[:k] + cols[k + 1:]
            term = entry * minor(r + 1, rest)
            total = total + term if k % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def poly_det4(m):
    if len(m) != 4:
        raise ValueError("poly_det4 expects a 4x4 matrix")
    return poly_det(m)


def poly_det_columns(m):
    """Determinant by expansion along the first column; an independent route for checks."""
    n = len(m)
    if n == 1:
        return m[0][0]
    nv = m[0][0].nvars
    total = None
    for i in range(n):
        sub = [row[1:] for k, row in enumerate(m) if k != i]
        term = m[i][0] * poly_det_columns(sub)
        if i % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else MPoly.const(0, nv)


def poly_det_leibniz(m):
    """Determinant as the signed sum over permutations."""
    n = len(m)
    nv = m[0][0].nvars
    total = MPoly.const(0, nv)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = MPoly.const(1, nv)
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total - term if inv % 2 else total + term
    return total


# -- planes

def plane_parameterization(plane):
    """Linear map P^2 -> plane for the plane sum a_i x_i = 0.

    The pivot is the first index with a_i != 0; the other three coordinates
    become the plane coordinates (in index order) and the pivot coordinate
    is solved for. Returns (pivot, 4x3 matrix rows).
    """
    coeffs = list(plane)
    if len(coeffs) != 4:
        raise ValueError("a plane in P^3 has 4 coefficients")
    pivot = next((i for i, a in enumerate(coeffs) if a != 0), None)
    if pivot is None:
        raise ValueError("the zero vector does not define a plane")
    free = [i for i in range(4) if i != pivot]
    ap = _q(coeffs[pivot])
    rows = []
    for i in range(4):
        if i == pivot:
            rows.append([-_q(coeffs[j]) / ap for j in free])
        else:
            rows.append([1 if j == i else 0 for j in free])
    return pivot, rows


def restrict_to_plane(f, plane):
    """Compose a form in x,y,z,w with the pivot parameterisation of a plane."""
    if f.nvars != 4:
        raise ValueError("restrict_to_plane expects a polynomial in 4 variables")
    _, rows = plane_parameterization(plane)
    tower = f.tower
    for row in rows:
        for c in row:
            if isinstance(c, FieldElement):
                tower = common_tower(tower, c.tower)
    forms = [MPoly(3, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]}, tower) for row in rows]
    return f.compose(forms)


def point_in_plane_coords(point, plane):
    """Drop the pivot coordinate of a point lying in the plane."""
    pivot, _ = plane_parameterization(plane)
    return [c for i, c in enumerate(point) if i != pivot]


# -- square roots of polynomials

def perfect_square_root(f):
    """Return (c, g) with f == c * g**2 and g monic, or None.

    Works term by term down the grlex order: once the leading part of g is
    fixed, the leading term of the remainder f/c - g**2 determines the next
    term of g.
    """
    if f.is_zero():
        return None
    if not f.is_homogeneous():
        raise ValueError("perfect_square_root expects a homogeneous polynomial")
    le, lc = f.leading_term()
    if any(k % 2 for k in le):
        return None
    target = f.scale(lc.inverse())
    n = f.nvars
    lead = tuple(k // 2 for k in le)
    g = MPoly._raw(n, {lead: f.tower.one()}, f.tower)
    rem = target - g * g
    while rem.terms:
        e, c = rem.leading_term()
        if not all(x >= y for x, y in zip(e, lead)):
            return None
        t_exp = tuple(x - y for x, y in zip(e, lead))
        if grlex_key(t_exp) >= grlex_key(lead):
            return None
        t = MPoly._raw(n, {t_exp: c / 2}, f.tower)
        # (g + t)^2 = g^2 + 2 g t + t^2
        rem = rem - (g * t).scale(2) - t * t
        g = g + t
    return lc, g


# -- univariate helpers (polynomials in one variable as MPoly with nvars=1)

def univ_coeffs(f):
    """Dense coefficient list, lowest degree first."""
    if f.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    d = f.degree()
    return [f.coeff((k,)) for k in range(d + 1)]


def univ_from_coeffs(coeffs, tower=QQ):
    return MPoly(1, {(k,): c for k, c in enumerate(coeffs)}, tower)


def univ_gcd(f, g):
    a, b = f._coerce(g)
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.monic()


def univ_squarefree_part(f):
    """f / gcd(f, f'), made monic."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no squarefree part")
    if f.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    if f.degree() == 0:
        return MPoly.const(1, 1, f.tower)
    g = univ_gcd(f, f.diff(0))
    return f.exact_div(g).monic()


def binary_form_roots_count(f):
    """Number of distinct points of P^1 where a binary form vanishes.

    f is homogeneous in two variables (s, t). Returns (distinct, degree),
    with the point at infinity t = 0 included.
    """
    if f.nvars != 2 or not f.is_homogeneous() or f.is_zero():
        raise ValueError("expected a nonzero binary form")
    d = f.degree()
    affine = univ_from_coeffs([f.coeff((k, d - k)) for k in range(d + 1)], f.tower)
    # affine(s) = f(s, 1); missing degree is the multiplicity of (1:0)
    at_infinity = d - affine.degree()
    distinct = univ_squarefree_part(affine).degree() + (1 if at_infinity else 0)
    return distinct, d
