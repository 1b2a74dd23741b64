"""Exact rational scalars, with a gmpy2 fast path when available."""
from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as QQ

    RAT_TYPES = (int, type(QQ(0)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is normally installed
    QQ = Fraction
    RAT_TYPES = (int, Fraction)

QQ0 = QQ(0)
QQ1 = QQ(1)


def qq(num, den=1):
    """Build an exact rational in canonical (reduced, positive-denominator) form."""
    return QQ(num, den)


def is_rational(x) -> bool:
    return isinstance(x, RAT_TYPES)


def rat_binom(k: int, l: int):
    """Generalized binomial coefficient k(k-1)...(k-l+1)/l! for integer k of any sign."""
    if l < 0:
        return QQ0
    num = 1
    for i in range(l):
        num *= k - i
    return QQ(num, math.factorial(l))


def inv_factorial(l: int):
    return QQ(1, math.factorial(l))


def rat_str(x) -> str:
    """Canonical text form n/d (used in JSON reports and golden files)."""
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else f"{n}/{d}"


def to_float(x) -> float:
    return float(x)


def to_complex(x) -> complex:
    if isinstance(x, complex):
        return x
    return complex(float(x), 0.0)
