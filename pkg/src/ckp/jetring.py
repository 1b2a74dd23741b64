"""Differential polynomials in the fields v_1..v_n, w, u and their x-derivatives.

Fields are numbered 1..n+2 with w = n+1 and u = n+2.  A jet variable is a
pair (field, order) encoded as ``field * 256 + order``; a monomial is a
sorted tuple of (encoded var, exponent) pairs.  Exponents may be negative
only for order-0 variables (Laurent factors such as 1/u arise in
variational derivatives and cancel again downstream).

The jet degree of d^s(field)/dx^s is s, so multiplication adds degrees and
the total derivative raises the degree by exactly one.
"""
from __future__ import annotations

from .numkit import QQ, qq, rat_str
from .numkit._errors import NotATotalDerivative
from .numkit._scalars import is_rational

_ORD = 256


def enc(field: int, order: int) -> int:
    return field * _ORD + order

def dec(var: int) -> tuple[int, int]:
    return divmod(var, _ORD)

def w_field(n: int) -> int:
    return n + 1

def u_field(n: int) -> int:
    return n + 2

def all_fields(n: int) -> list[int]:
    return list(range(1, n + 3))

def field_name(field: int, n: int) -> str:
    if field == n + 1:
        return "w"
    if field == n + 2:
        return "u"
    return f"v{field}"

def var_name(var: int, n: int) -> str:
    f, s = dec(var)
    base = field_name(f, n)
    if s == 0:
        return base
    if s <= 3:
        return base + "_" + "x" * s
    return f"{base}_x{s}"


def _mono_mul(m1, m2):
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            e = e1 + e2
            if e:
                out.append((v1, e))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i]); i += 1
        else:
            out.append(m2[j]); j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_degree(mono) -> int:
    return sum((v % _ORD) * e for v, e in mono)


class DiffPoly:
    """Sparse differential polynomial with exact rational coefficients."""

    __slots__ = ("d",)

    def __init__(self, d=None):
        self.d = d if d is not None else {}

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def const(cls, c):
        c = qq(c) if isinstance(c, int) else c
        return cls({(): c} if c != 0 else {})

    @classmethod
    def var(cls, field: int, order: int = 0, exp: int = 1, coeff=1):
        if exp < 0 and order != 0:
            raise ValueError("negative exponents only on order-0 variables")
        return cls({((enc(field, order), exp),): qq(coeff)}) if coeff != 0 else cls({})

    one = None  # set below

    # -- basic ring structure -----------------------------------------
    def is_zero(self) -> bool:
        return not self.d

    def __eq__(self, other):
        if isinstance(other, DiffPoly):
            return self.d == other.d
        if other == 0:
            return not self.d
        if is_rational(other):
            return self.d == {(): qq(other)}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.d)
        for m, c in other.d.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return DiffPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __neg__(self):
        return DiffPoly({m: -c for m, c in self.d.items()})

    def __mul__(self, other):
        if is_rational(other):
            return self.scale(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self.d.items():
            for m2, c2 in other.d.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return DiffPoly(out)

    __rmul__ = __mul__

    def scale(self, s):
        s = qq(s) if isinstance(s, int) else s
        if s == 0:
            return DiffPoly.zero()
        return DiffPoly({m: c * s for m, c in self.d.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a DiffPoly")
        r = DiffPoly.const(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def _coerce(self, other):
        if isinstance(other, DiffPoly):
            return other
        if is_rational(other):
            return DiffPoly.const(other)
        return NotImplemented

    # -- differential structure ----------------------------------------
    def dx(self):
        """Total x-derivative (Leibniz over every jet variable)."""
        out = {}
        for m, c in self.d.items():
            for i, (v, e) in enumerate(m):
                f, s = dec(v)
                rest = list(m)
                if e == 1:
                    rest.pop(i)
                else:
                    rest[i] = (v, e - 1)
                term = _mono_mul(tuple(rest), ((enc(f, s + 1), 1),))
                coeff = c * e
                cur = out.get(term, 0) + coeff
                if cur == 0:
                    out.pop(term, None)
                else:
                    out[term] = cur
        return DiffPoly(out)

    def partial(self, field: int, order: int):
        """Partial derivative with respect to one jet variable."""
        v0 = enc(field, order)
        out = {}
        for m, c in self.d.items():
            for i, (v, e) in enumerate(m):
                if v != v0:
                    continue
                rest = list(m)
                if e == 1:
                    rest.pop(i)
                else:
                    rest[i] = (v, e - 1)
                term = tuple(rest)
                cur = out.get(term, 0) + c * e
                if cur == 0:
                    out.pop(term, None)
                else:
                    out[term] = cur
                break
        return DiffPoly(out)

    def times_var(self, field: int, order: int = 0, exp: int = 1):
        """Multiply by a single jet variable power (exp may be negative at order 0)."""
        if exp < 0 and order != 0:
            raise ValueError("negative exponents only on order-0 variables")
        unit = ((enc(field, order), exp),)
        return DiffPoly({_mono_mul(m, unit): c for m, c in self.d.items()})

    def freeze(self):
        """Drop every monomial containing a jet variable of order >= 1."""
        return DiffPoly(
            {m: c for m, c in self.d.items() if all(v % _ORD == 0 for v, _ in m)}
        )

    def max_order(self) -> int:
        mo = 0
        for m in self.d:
            for v, _ in m:
                mo = max(mo, v % _ORD)
        return mo

    def jet_degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.d}

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for m in self.d for _, e in m)

    def vars_used(self) -> set[int]:
        return {v for m in self.d for v, _ in m}

    # -- evaluation and rendering ---------------------------------------
    def eval_num(self, values: dict):
        """Evaluate at numbers; ``values`` maps (field, order) to a number."""
        acc = 0j
        for m, c in self.d.items():
            term = complex(float(c)) if is_rational(c) else complex(c)
            for v, e in m:
                term = term * values[dec(v)] ** e
            acc = acc + term
        return acc

    def eval_exact(self, values: dict):
        """Evaluate at exact rationals; ``values`` maps (field, order) to QQ."""
        acc = qq(0)
        for m, c in self.d.items():
            term = c
            for v, e in m:
                base = values[dec(v)]
                term = term * base ** e if e >= 0 else term / base ** (-e)
            acc = acc + term
        return acc

    def render(self, n: int) -> str:
        if not self.d:
            return "0"
        parts = []
        for m in sorted(self.d):
            c = self.d[m]
            factors = []
            for v, e in m:
                nm = var_name(v, n)
                factors.append(nm if e == 1 else f"{nm}^{e}")
            body = "*".join(factors)
            cs = rat_str(c)
            if body:
                parts.append(body if cs == "1" else (f"-{body}" if cs == "-1" else f"{cs}*{body}"))
            else:
                parts.append(cs)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"DiffPoly({len(self.d)} terms)"


DiffPoly.one = DiffPoly.const(1)
