"""Factorization of rational polynomials into monic irreducibles (sympy backend)."""
from __future__ import annotations

from fractions import Fraction

import sympy

from .poly import UniPoly
from .rings import QQ

_T = sympy.Symbol("t")


def factor_rational(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors over Q with multiplicity, sorted by (degree, coefficients)."""
    if f.ring != QQ:
        raise TypeError("rational polynomial expected")
    if f.degree <= 0:
        return []
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], _T, domain="QQ")
    _, facs = sp.factor_list()
    out = []
    for g, m in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((UniPoly(cs).monic(), m))
    out.sort(key=lambda pair: (pair[0].degree, pair[0].coeffs[::-1], pair[1]))
    return out


def irreducible_factors(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Dispatch on the coefficient ring: Q via sympy, F_p via the native factorizer."""
    if f.ring == QQ:
        return factor_rational(f)
    from .ffactor import factor
    return factor(f)
