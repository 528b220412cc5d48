"""Factorization of polynomials over prime fields (distinct-degree + equal-degree)."""
from __future__ import annotations

import random

from .poly import UniPoly
from .rings import PrimeField


def _check(f: UniPoly) -> PrimeField:
    if not isinstance(f.ring, PrimeField):
        raise TypeError("expected a polynomial over a prime field")
    return f.ring


def distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    F = _check(f)
    p = F.p
    out = []
    x = UniPoly.gen(F)
    h = x % f if f.degree > 0 else x
    rest = f
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest.exact_div(g)
            h = h % rest
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def equal_degree(f: UniPoly, d: int, rng: random.Random | None = None) -> list[UniPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles (p odd)."""
    F = _check(f)
    p = F.p
    if f.degree == d:
        return [f.monic()]
    if p == 2:
        raise NotImplementedError("characteristic 2")
    rng = rng or random.Random(0)
    n = f.degree
    e = (p**d - 1) // 2
    while True:
        a = UniPoly([rng.randrange(p) for _ in range(n)], F)
        if a.degree <= 0:
            continue
        g = f.gcd(a)
        if 0 < g.degree < n:
            break
        b = a.powmod(e, f) - 1
        g = f.gcd(b)
        if 0 < g.degree < n:
            break
    return equal_degree(g, d, rng) + equal_degree(f.exact_div(g), d, rng)


def factor(f: UniPoly, seed: int = 0) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors with multiplicity, sorted by (degree, coefficients)."""
    _check(f)
    rng = random.Random(seed)
    out = []
    for g, mult in f.squarefree_decomposition():
        for h, d in distinct_degree(g):
            for q in equal_degree(h, d, rng):
                out.append((q, mult))
    out.sort(key=lambda pair: (pair[0].degree, pair[0].coeffs[::-1], pair[1]))
    return out


def is_irreducible(f: UniPoly) -> bool:
    """Ben-Or style test: no factor of degree <= n/2 and squarefree."""
    F = _check(f)
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    if f.gcd(f.derivative()).degree > 0:
        return False
    x = UniPoly.gen(F)
    h = x
    for _ in range(n // 2):
        h = h.powmod(F.p, f)
        if f.gcd(h - x).degree > 0:
            return False
    return True


def roots(f: UniPoly) -> list:
    """Distinct roots of f in its prime field, ascending."""
    return sorted(int(-q.coeffs[0]) % f.ring.p for q, _ in factor(f) if q.degree == 1)
