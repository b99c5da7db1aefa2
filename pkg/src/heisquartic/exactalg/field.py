"""Quadratic towers over the rationals.

A tower Q(g_1, ..., g_k) is built one square root at a time: g_j**2 = d_j
with d_j an element of the previous level. Elements are stored as 2**k
rational coordinates in the power-product basis of the generators; bit j
of a coordinate index records the exponent of g_{j+1}. Because of that
layout an element of a level embeds into any extension of it by padding
with zeros.
"""

from fractions import Fraction
from math import isqrt


def to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def rational_sqrt(q):
    """Square root of a rational number, or None when it is irrational."""
    q = to_fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def squarefree_part(n):
    """Write a nonzero rational as s * r**2 with s a squarefree integer; returns (s, r)."""
    q = to_fraction(n)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    # q = a/b = a*b / b**2
    m = q.numerator * q.denominator
    sign = -1 if m < 0 else 1
    m = abs(m)
    s, r = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            r *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1
    s *= m
    return sign * s, Fraction(r, q.denominator)


class TowerField:
    """Q adjoined a chain of square roots.

    ``squares[j]`` is the FieldElement d_{j+1} living in the level below,
    so ``TowerField().extend(-1).extend(2)`` is Q(i)(sqrt 2). Construction
    refuses a d that already has a square root at its level.
    """

    __slots__ = ("squares", "_key", "_parent")

    def __init__(self, squares=()):
        squares = tuple(squares)
        self.squares = squares
        self._key = tuple(s.coords for s in squares)
        self._parent = None

    @property
    def height(self):
        return len(self.squares)

    @property
    def dim(self):
        return 1 << len(self.squares)

    def parent(self):
        if self._parent is None:
            self._parent = TowerField(self.squares[:-1])
        return self._parent

    def extend(self, d):
        """Return the tower with a new generator g satisfying g**2 = d."""
        d = self(d)
        if d.is_zero():
            raise ValueError("cannot adjoin the square root of zero")
        if sqrt_in_field(d) is not None:
            raise ValueError(f"{d} is already a square in {self}")
        return TowerField(self.squares + (d,))

    def is_prefix_of(self, other):
        n = len(self._key)
        return n <= len(other._key) and other._key[:n] == self._key

    def __eq__(self, other):
        return isinstance(other, TowerField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.squares:
            return "QQ"
        return "QQ(" + ", ".join(f"sqrt({d})" for d in self.squares) + ")"

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return x.lift(self)
        c = [Fraction(0)] * self.dim
        c[0] = to_fraction(x)
        return FieldElement(self, tuple(c))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self, j=None):
        """Generator g_j (1-based); the top generator by default."""
        if j is None:
            j = self.height
        if not 1 <= j <= self.height:
            raise IndexError("generator index out of range")
        c = [Fraction(0)] * self.dim
        c[1 << (j - 1)] = Fraction(1)
        return FieldElement(self, tuple(c))

    def descriptor(self):
        return [s.to_json()["coords"] for s in self.squares]


QQ = TowerField()


def common_tower(a, b):
    if a == b:
        return a
    if a.is_prefix_of(b):
        return b
    if b.is_prefix_of(a):
        return a
    raise ValueError(f"incompatible towers {a} and {b}")


# raw coordinate arithmetic; `squares` are the d_j as raw coordinate tuples

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _scale(a, s):
    return tuple(x * s for x in a)


def _is_zero(a):
    return not any(a)


def _mul(a, b, sq):
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n >> 1
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    lower = sq[:-1]
    d = sq[-1]
    a0b0 = _mul(a0, b0, lower)
    if _is_zero(a1) and _is_zero(b1):
        return a0b0 + (Fraction(0),) * h
    a1b1 = _mul(a1, b1, lower)
    lo = _add(a0b0, _mul(a1b1, d, lower))
    hi = _add(_mul(a0, b1, lower), _mul(a1, b0, lower))
    return lo + hi


def _inv(a, sq):
    n = len(a)
    if n == 1:
        if a[0] == 0:
            raise ZeroDivisionError("inverse of zero")
        return (1 / a[0],)
    h = n >> 1
    a0, a1 = a[:h], a[h:]
    lower = sq[:-1]
    if _is_zero(a1):
        return _inv(a0, lower) + (Fraction(0),) * h
    # (a0 + a1 g)^-1 = (a0 - a1 g) / (a0^2 - a1^2 d)
    norm = _sub(_mul(a0, a0, lower), _mul(_mul(a1, a1, lower), sq[-1], lower))
    ninv = _inv(norm, lower)
    return _mul(a0, ninv, lower) + _neg(_mul(a1, ninv, lower))


class FieldElement:
    """Immutable element of a TowerField."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower, coords):
        self.tower = tower
        self.coords = coords

    @classmethod
    def from_coords(cls, tower, coords):
        coords = tuple(to_fraction(c) for c in coords)
        if len(coords) != tower.dim:
            raise ValueError(f"expected {tower.dim} coordinates, got {len(coords)}")
        return cls(tower, coords)

    def lift(self, tower):
        if tower == self.tower:
            return self
        if not self.tower.is_prefix_of(tower):
            raise ValueError(f"cannot embed {self.tower} into {tower}")
        return FieldElement(tower, self.coords + (Fraction(0),) * (tower.dim - len(self.coords)))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self, other
            t = common_tower(self.tower, other.tower)
            return self.lift(t), other.lift(t)
        if isinstance(other, (int, Fraction)):
            return self, self.tower(other)
        return None, None

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, _add(a.coords, b.coords))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, _sub(a.coords, b.coords))

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return FieldElement(a.tower, _sub(b.coords, a.coords))

    def __neg__(self):
        return FieldElement(self.tower, _neg(self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.tower, _scale(self.coords, other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if len(a.coords) == 1:
            return FieldElement(a.tower, (a.coords[0] * b.coords[0],))
        return FieldElement(a.tower, _mul(a.coords, b.coords, a.tower._key))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.tower, _inv(self.coords, self.tower._key))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.tower, _scale(self.coords, 1 / Fraction(other)))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            a, b = self._coerce(other)
        except ValueError:
            return False
        if a is None:
            return NotImplemented
        return a.coords == b.coords

    def __hash__(self):
        # elements equal across towers must hash alike: strip trailing zeros
        c = self.coords
        n = len(c)
        while n > 1 and not any(c[n >> 1:n]):
            n >>= 1
        return hash(c[:n])

    def conjugate(self):
        """Apply g_k -> -g_k for the top generator."""
        h = self.tower.dim >> 1
        if h == 0:
            return self
        return FieldElement(self.tower, self.coords[:h] + _neg(self.coords[h:]))

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        parts = []
        for idx, c in enumerate(self.coords):
            if c == 0:
                continue
            gens = "*".join(f"g{j + 1}" for j in range(self.tower.height) if idx >> j & 1)
            parts.append(f"({c})*{gens}" if gens else f"({c})")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"tower": self.tower.descriptor(), "coords": [f"{c.numerator}/{c.denominator}" for c in self.coords]}

    @classmethod
    def from_json(cls, data):
        tower = tower_from_descriptor(data["tower"])
        return cls.from_coords(tower, [Fraction(c) for c in data["coords"]])


def tower_from_descriptor(desc):
    tower = QQ
    for coords in desc:
        d = FieldElement.from_coords(tower, [Fraction(c) for c in coords])
        tower = TowerField(tower.squares + (d,))
    return tower


def sqrt_in_field(a):
    """Return r with r*r == a inside a's own tower, or None."""
    tower = a.tower
    if tower.height == 0:
        r = rational_sqrt(a.coords[0])
        return None if r is None else tower(r)
    if a.is_zero():
        return tower.zero()
    low = tower.parent()
    h = tower.dim >> 1
    a0 = FieldElement(low, a.coords[:h])
    a1 = FieldElement(low, a.coords[h:])
    d = tower.squares[-1]
    g = tower.gen()
    if a1.is_zero():
        r = sqrt_in_field(a0)
        if r is not None:
            return r.lift(tower)
        # a0 = (r g)^2 = r^2 d
        r = sqrt_in_field(a0 / d)
        if r is not None:
            return r.lift(tower) * g
        return None
    # (x + y g)^2 = x^2 + y^2 d + 2xy g
    n = sqrt_in_field(a0 * a0 - a1 * a1 * d)
    if n is None:
        return None
    for cand in (a0 + n, a0 - n):
        x = sqrt_in_field(cand / 2)
        if x is not None and not x.is_zero():
            y = a1 / (2 * x)
            r = x.lift(tower) + y.lift(tower) * g
            if r * r == a:
                return r
    return None


def adjoin_sqrt(a):
    """Square root of a, extending a's tower by one level if needed.

    Returns (tower, root). For a rational non-square the adjoined d is the
    squarefree part of a, so a single extension Q(sqrt s) serves every
    rational in the same square class.
    """
    r = sqrt_in_field(a)
    if r is not None:
        return a.tower, r
    if a.is_rational():
        s, k = squarefree_part(a.rational())
        tower = a.tower.extend(s)
        return tower, tower.gen() * k
    tower = a.tower.extend(a)
    return tower, tower.gen()


def gaussian_tower():
    """Q(i)."""
    return QQ.extend(-1)


def zeta8_tower():
    """Q(i)(sqrt 2), which contains the primitive 8th roots of unity."""
    return gaussian_tower().extend(2)
