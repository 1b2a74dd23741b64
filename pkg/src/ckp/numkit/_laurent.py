"""Truncated Laurent expansions at a finite site or at infinity.

A jet is a series sum(c_k * t**k) in the local parameter t, where
t = x - site at a finite site and t = 1/x at infinity.  Exponents in
[lo, hi) are represented; coefficients at hi and beyond are *unknown*,
never assumed zero.  Coefficients may live in any commutative ring with
+, -, * and equality against 0 (exact rationals, complex, jet-variable
polynomials).
"""
from __future__ import annotations

from ._errors import BranchAmbiguity, IdenticallyZeroDenominator, TruncationExhausted
from ._scalars import QQ, is_rational

INF = "inf"


def _is0(c) -> bool:
    return c == 0


class LaurentJet:
    __slots__ = ("site", "lo", "coeffs", "hi")

    def __init__(self, site, lo, coeffs, hi=None):
        coeffs = list(coeffs)
        if hi is None:
            hi = lo + len(coeffs)
        assert hi - lo == len(coeffs)
        while coeffs and _is0(coeffs[0]):
            coeffs.pop(0)
            lo += 1
        if not coeffs:
            lo = hi
        self.site = site
        self.lo = lo
        self.coeffs = coeffs
        self.hi = hi

    @classmethod
    def zero(cls, site, hi):
        return cls(site, hi, [])

    def is_zero_to_truncation(self) -> bool:
        return all(_is0(c) for c in self.coeffs)

    def coeff(self, k):
        """Coefficient of t**k; raises if k is beyond the truncation."""
        if k >= self.hi:
            raise TruncationExhausted(f"coefficient t^{k} beyond truncation {self.hi}")
        if k < self.lo:
            return 0
        return self.coeffs[k - self.lo]

    def residue(self):
        """Residue of the expanded function: coeff of 1/(x-site), or minus
        the coefficient of 1/x for an expansion at infinity."""
        if self.site is INF:
            return -self.coeff(1) if self.hi > 1 else self._raise_trunc(1)
        return self.coeff(-1)

    def _raise_trunc(self, k):
        raise TruncationExhausted(f"coefficient t^{k} beyond truncation {self.hi}")

    def items(self):
        return [(self.lo + i, c) for i, c in enumerate(self.coeffs)]

    def __add__(self, other):
        assert self.site == other.site, "jets expanded at different sites"
        hi = min(self.hi, other.hi)
        lo = min(self.lo, other.lo)
        out = []
        for k in range(lo, hi):
            a = self.coeffs[k - self.lo] if self.lo <= k < self.hi else 0
            b = other.coeffs[k - other.lo] if other.lo <= k < other.hi else 0
            out.append(a + b)
        return LaurentJet(self.site, lo, out, hi)

    def __neg__(self):
        return LaurentJet(self.site, self.lo, [-c for c in self.coeffs], self.hi)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return LaurentJet(self.site, self.lo, [c * s for c in self.coeffs], self.hi)

    def shift_exp(self, k: int):
        """Multiply by t**k."""
        return LaurentJet(self.site, self.lo + k, list(self.coeffs), self.hi + k)

    def __mul__(self, other):
        assert self.site == other.site
        lo = self.lo + other.lo
        hi = min(self.lo + other.hi, other.lo + self.hi)
        n = hi - lo
        if n <= 0 or not self.coeffs or not other.coeffs:
            return LaurentJet.zero(self.site, hi)
        out = [self.coeffs[0] * 0] * n
        for i, a in enumerate(self.coeffs):
            if _is0(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j < n:
                    out[i + j] = out[i + j] + a * b
        return LaurentJet(self.site, lo, out, hi)

    def inverse(self):
        if not self.coeffs or _is0(self.coeffs[0]):
            raise IdenticallyZeroDenominator("cannot invert a jet with vanishing leading term")
        n = self.hi - self.lo
        inv = _series_inv(self.coeffs, n)
        return LaurentJet(self.site, -self.lo, inv, -self.lo + n)

    def pow_frac(self, s):
        """Raise to a rational power.  The leading exponent must produce an
        integer total exponent, and a non-integer power requires leading
        coefficient exactly 1 (monic normalization fixes the branch)."""
        s = QQ(s)
        if not self.coeffs:
            raise BranchAmbiguity("fractional power of an identically truncated-zero jet")
        c0 = self.coeffs[0]
        m = self.lo
        total = s * m
        if total.denominator != 1:
            raise BranchAmbiguity(f"t^{m} to power {s} is not a Laurent monomial")
        if s.denominator == 1:
            lead = c0 ** int(s) if not is_rational(c0) else QQ(c0) ** int(s)
        else:
            if not c0 == 1:
                raise BranchAmbiguity("non-integer power needs leading coefficient 1")
            lead = 1
        n = self.hi - self.lo
        # (c0 + c1 t + ...) = c0 (1 + x), binomial series for (1+x)^s
        x = [_div_lead(c, c0) for c in self.coeffs[1:]]
        out = _binom_series(x, s, n)
        out = [lead * v for v in out]
        return LaurentJet(self.site, int(total), out, int(total) + n)

    def log1p_form(self):
        """log of a jet of the form 1 + c1 t + ... (exponent 0, leading 1)."""
        if self.lo != 0 or not self.coeffs or not self.coeffs[0] == 1:
            raise BranchAmbiguity("logarithm requires the form 1 + O(t)")
        n = self.hi - self.lo
        xfull = [0] * n
        for i, c in enumerate(self.coeffs[1:]):
            xfull[i + 1] = c
        # log(1+x) = x - x^2/2 + x^3/3 - ...
        out = [0] * n
        term = [1] + [0] * (n - 1)
        for k in range(1, n):
            term = _series_mul(term, xfull, n)
            if all(_is0(v) for v in term):
                break
            s = QQ(-1) ** (k + 1) / QQ(k)
            for i, v in enumerate(term):
                if not _is0(v):
                    out[i] = out[i] + v * s
        return LaurentJet(self.site, 0, out, n)

    def __repr__(self):
        terms = ", ".join(f"t^{k}: {c}" for k, c in self.items())
        return f"LaurentJet(site={self.site}, {{{terms}}}, hi={self.hi})"


def _div_lead(c, c0):
    if is_rational(c) and is_rational(c0):
        return QQ(c) / QQ(c0)
    return c * (1 / c0) if not is_rational(c0) else c * (QQ(1) / QQ(c0))


def _series_mul(a, b, n):
    out = [0] * n
    for i, u in enumerate(a):
        if _is0(u) or i >= n:
            continue
        for j, v in enumerate(b):
            if i + j < n:
                out[i + j] = out[i + j] + u * v
    return out


def _series_inv(b, n):
    """Reciprocal of the series b (b[0] != 0) to n terms."""
    c0 = b[0]
    if is_rational(c0):
        inv0 = QQ(1) / QQ(c0)
    else:
        inv0 = 1 / c0
    out = [inv0] + [inv0 * 0] * (n - 1)
    for k in range(1, n):
        acc = out[0] * 0
        for j in range(1, min(k, len(b) - 1) + 1):
            acc = acc + b[j] * out[k - j]
        out[k] = -inv0 * acc
    return out


def _binom_series(x, s, n):
    """(1 + x)^s to n terms, x a series starting at t^1 (x[i] is coeff of t^{i+1})."""
    out = [1] + [0] * (n - 1)
    term = [1] + [0] * (n - 1)
    xfull = [0] + list(x)
    coef = QQ(1)
    for k in range(1, n):
        term = _series_mul(term, xfull, n)
        coef = coef * (s - (k - 1)) / k
        if _is0(coef):
            break
        for i, v in enumerate(term):
            if not _is0(v):
                out[i] = out[i] + coef * v
    return out
