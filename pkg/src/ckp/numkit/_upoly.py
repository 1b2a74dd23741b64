"""Dense univariate polynomials and rational functions over a generic field.

Coefficients may be exact rationals, complex numbers, or any ring with
+, -, * and equality against 0.  Division-dependent routines (divmod, gcd)
additionally require /.
"""
from __future__ import annotations

from ._errors import IdenticallyZeroDenominator
from ._scalars import QQ, is_rational


def _is0(c) -> bool:
    return c == 0


def _divlin(c, a):
    """Synthetic division of low-first coefficients ``c`` by (x - a)."""
    d = len(c) - 1
    if d < 0:
        return [], 0
    if d == 0:
        return [], c[0]
    q = [c[0] * 0] * d
    acc = c[d]
    for i in range(d - 1, 0, -1):
        q[i] = acc
        acc = c[i] + a * acc
    q[0] = acc
    return q, c[0] + a * acc


class UPoly:
    """Univariate polynomial, coefficients stored low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and _is0(c[-1]):
            c.pop()
        self.c = c

    @classmethod
    def const(cls, v):
        return cls([v])

    @classmethod
    def x(cls, one=QQ(1)):
        return cls([one * 0, one])

    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(tuple(self.c))

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return UPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UPoly([-v for v in self.c])

    def __mul__(self, other):
        a, b = self.c, other.c
        if not a or not b:
            return UPoly([])
        out = [a[0] * 0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if _is0(u):
                continue
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return UPoly(out)

    def scale(self, s):
        return UPoly([v * s for v in self.c])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = UPoly([self.c[0] * 0 + 1]) if self.c else UPoly([1])
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def deriv(self, k: int = 1):
        p = self
        for _ in range(k):
            p = UPoly([i * v for i, v in enumerate(p.c)][1:])
        return p

    def __call__(self, x):
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def shift(self, a):
        """Taylor rebase: return q with q(t) = p(t + a)."""
        out = []
        c = list(self.c)
        while c:
            q, r = _divlin(c, a)
            out.append(r)
            c = q
        return UPoly(out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        d = other.c
        lcd = d[-1]
        q = [r[0] * 0] * max(0, len(r) - len(d) + 1)
        for i in range(len(r) - len(d), -1, -1):
            if _is0(r[i + len(d) - 1]):
                continue
            t = r[i + len(d) - 1] / lcd
            q[i] = t
            for j, v in enumerate(d):
                r[i + j] = r[i + j] - t * v
        return UPoly(q), UPoly(r)

    def monic(self):
        if self.is_zero():
            return self
        inv = 1 / self.lc()
        return self.scale(inv)

    def map(self, fn):
        return UPoly([fn(v) for v in self.c])

    def __repr__(self):
        return f"UPoly({self.c})"


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over an exact field (Euclid)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


class URat:
    """Rational function num/den in one variable."""

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly, reduce: bool = True):
        if den.is_zero():
            raise IdenticallyZeroDenominator("zero denominator")
        if reduce and num.c and is_rational(num.c[0]) and is_rational(den.c[0]):
            g = poly_gcd(num, den)
            if g.deg > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            # canonical sign: monic denominator
            lcd = den.lc()
            num = num.scale(1 / lcd)
            den = den.scale(1 / lcd)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: UPoly):
        one = p.c[0] * 0 + 1 if p.c else QQ(1)
        return cls(p, UPoly([one]), reduce=False)

    def __add__(self, other):
        return URat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return URat(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return URat(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        return URat(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return URat(self.num * other.den, self.den * other.num)

    def scale(self, s):
        return URat(self.num.scale(s), self.den, reduce=False)

    def deriv(self, k: int = 1):
        f = self
        for _ in range(k):
            f = URat(f.num.deriv() * f.den - f.num * f.den.deriv(), f.den * f.den)
        return f

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, URat):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("URat is unhashable")

    def __repr__(self):
        return f"URat({self.num.c} / {self.den.c})"
