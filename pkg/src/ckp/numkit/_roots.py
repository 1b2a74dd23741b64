"""Numeric polynomial root finding: companion matrix plus Newton polishing."""
from __future__ import annotations

import numpy as np

from ._errors import DegenerateInput, LeadingCoefficientVanishes

#: relative Newton-polish target and genericity gate for root separation
POLISH_TOL = 1e-13
SEPARATION = 1e-6


def roots_numeric(coeffs, tol: float = 1e-10, polish_steps: int = 60):
    """All complex roots of a polynomial given low-first coefficients.

    Roots are companion-matrix eigenvalues polished by Newton iteration and
    sorted by (real part, imaginary part).  Raises DegenerateInput when two
    roots come closer than SEPARATION * max|root| and
    LeadingCoefficientVanishes when the top coefficient is negligible.
    """
    c = [complex(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) < 2:
        raise LeadingCoefficientVanishes("polynomial is constant")
    scale = max(abs(v) for v in c)
    if abs(c[-1]) <= 1e-12 * scale:
        raise LeadingCoefficientVanishes(f"|lc| = {abs(c[-1])} vs scale {scale}")
    roots = np.roots(list(reversed(c)))
    dp = [k * v for k, v in enumerate(c)][1:]
    polished = []
    for r in roots:
        r = complex(r)
        for _ in range(polish_steps):
            pv = _horner(c, r)
            dv = _horner(dp, r)
            if dv == 0:
                break
            step = pv / dv
            r = r - step
            if abs(step) <= POLISH_TOL * max(1.0, abs(r)):
                break
        polished.append(r)
    rscale = max(max(abs(r) for r in polished), 1e-300)
    for i in range(len(polished)):
        for j in range(i + 1, len(polished)):
            if abs(polished[i] - polished[j]) < SEPARATION * rscale:
                raise DegenerateInput(
                    f"roots {polished[i]} and {polished[j]} closer than "
                    f"{SEPARATION} * {rscale}"
                )
    vscale = scale * max(1.0, rscale) ** (len(c) - 1)
    for r in polished:
        if abs(_horner(c, r)) > tol * vscale:
            raise DegenerateInput(f"residual {_horner(c, r)} at root {r} above {tol * vscale}")
    polished.sort(key=lambda z: (z.real, z.imag))
    return polished


def _horner(c, x):
    acc = 0j
    for v in reversed(c):
        acc = acc * x + v
    return acc
