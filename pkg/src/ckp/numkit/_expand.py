"""Laurent expansion and residues of univariate rational functions."""
from __future__ import annotations

from ._errors import IdenticallyZeroDenominator
from ._laurent import INF, LaurentJet, _series_inv, _series_mul
from ._upoly import UPoly, URat


def laurent_at(f: URat, site, order: int) -> LaurentJet:
    """Expand f at a finite site or at INF, keeping exponents up to ``order``.

    ``order`` is the highest represented exponent of the local parameter
    (x - site, or 1/x at infinity).
    """
    if f.den.is_zero():
        raise IdenticallyZeroDenominator()
    if site is INF:
        return _laurent_at_inf(f, order)
    num = f.num.shift(site)
    den = f.den.shift(site)
    if den.is_zero():
        raise IdenticallyZeroDenominator()
    if num.is_zero():
        return LaurentJet.zero(site, order + 1)
    # strip the common power of t and the denominator's vanishing order
    vn = next(i for i, c in enumerate(num.c) if not c == 0)
    vd = next(i for i, c in enumerate(den.c) if not c == 0)
    lo = vn - vd
    n = order + 1 - lo
    if n <= 0:
        return LaurentJet.zero(site, order + 1)
    a = num.c[vn:]
    b = den.c[vd:]
    inv = _series_inv(b, n)
    out = _series_mul(a, inv, n)
    return LaurentJet(site, lo, out, order + 1)


def _laurent_at_inf(f: URat, order: int) -> LaurentJet:
    num, den = f.num, f.den
    if num.is_zero():
        return LaurentJet.zero(INF, order + 1)
    dn, dd = num.deg, den.deg
    # f(x) = t^(dd-dn) * N~(t)/D~(t) with t = 1/x and reversed coefficients
    a = list(reversed(num.c))
    b = list(reversed(den.c))
    lo = dd - dn
    n = order + 1 - lo
    if n <= 0:
        return LaurentJet.zero(INF, order + 1)
    inv = _series_inv(b, n)
    out = _series_mul(a, inv, n)
    return LaurentJet(INF, lo, out, order + 1)


def residue_at(f, site):
    """Residue of a rational function (or precomputed jet) at a site or INF.

    At infinity this returns minus the coefficient of 1/x of the expansion,
    so that the sum of residues over all poles and infinity vanishes.
    """
    if isinstance(f, LaurentJet):
        return f.residue()
    order = 1 if site is INF else -1
    return laurent_at(f, site, order + 1).residue()
