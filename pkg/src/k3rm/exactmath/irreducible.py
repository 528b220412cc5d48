"""Irreducibility certificates for monic integer polynomials.

First try to find a prime modulo which f stays irreducible.  Polynomials whose
Galois group has no n-cycle (e.g. biquadratic quartics) never pass that test,
so the fallback searches for integer factors of degree <= n/2 by Hensel-lifting
every subset of the modular factorization past the Mignotte bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, isqrt

from .ffactor import factor as factor_mod_p, is_irreducible as irreducible_mod_p
from .intutil import is_prime
from .poly import UniPoly
from .rings import GF, QQ


@dataclass(frozen=True)
class IrreducibilityCertificate:
    irreducible: bool
    method: str  # "mod-p", "factor-search", "degree-1"
    prime: int | None = None
    factor: UniPoly | None = None


def _primes(limit: int):
    for p in range(3, limit):
        if is_prime(p):
            yield p


def _mod_sym(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def _to_int_list(g: UniPoly) -> list[int]:
    return [int(c) for c in g.coeffs]


def _hensel_lift(f: list[int], g: UniPoly, h: UniPoly, p: int, k: int) -> list[int]:
    """Lift f = g*h (mod p), g monic and coprime to h, to a factor g mod p^k."""
    F = GF(p)
    one, a, b = g.xgcd(h)  # a g + b h = 1 mod p
    if one.degree != 0:
        raise ArithmeticError("modular factors not coprime")
    G = _to_int_list(g)
    H = _to_int_list(h)
    mod = p
    fpoly = UniPoly(f)
    for _ in range(1, k):
        prod = UniPoly(G) * UniPoly(H)
        e = fpoly - prod
        ints = e.integer_coeffs()
        if any(c % mod for c in ints):
            raise ArithmeticError("Hensel invariant broken")
        ebar = UniPoly([(c // mod) % p for c in ints], F)
        s = (ebar * b) % g
        t = (ebar - s * h).exact_div(g)
        G = _add_scaled(G, _to_int_list(s), mod)
        H = _add_scaled(H, _to_int_list(t), mod)
        mod *= p
    return [_mod_sym(c, mod) for c in G]


def _add_scaled(A: list[int], B: list[int], m: int) -> list[int]:
    n = max(len(A), len(B))
    A = A + [0] * (n - len(A))
    return [A[i] + m * (B[i] if i < len(B) else 0) for i in range(n)]


def find_small_factor(f: UniPoly, p: int | None = None) -> UniPoly | None:
    """A monic integer factor of f with 1 <= degree <= deg f / 2, or None."""
    coeffs = f.integer_coeffs()
    n = f.degree
    if coeffs[-1] != 1:
        raise ValueError("monic integer polynomial required")
    if p is None:
        disc = f.discriminant()
        p = next(q for q in _primes(10**4) if disc.numerator % q != 0)
    fp = f.reduce_mod(p)
    mods = [g for g, e in factor_mod_p(fp) for _ in range(e)]
    norm2 = sum(c * c for c in coeffs)
    bound = max(comb(n // 2, j) for j in range(n // 2 + 1)) * (isqrt(norm2) + 1)
    k, pk = 1, p
    while pk <= 2 * bound:
        k += 1
        pk *= p
    idx = range(len(mods))
    for r in range(1, len(mods)):
        for S in combinations(idx, r):
            deg = sum(mods[i].degree for i in S)
            if deg == 0 or deg > n // 2:
                continue
            g = UniPoly.const(1, GF(p))
            h = UniPoly.const(1, GF(p))
            for i in idx:
                if i in S:
                    g = g * mods[i]
                else:
                    h = h * mods[i]
            G = UniPoly(_hensel_lift(coeffs, g.monic(), h, p, k))
            if G.degree >= 1 and (f % G).is_zero():
                return G
    return None


def certify_irreducible(f: UniPoly, max_prime: int = 500) -> IrreducibilityCertificate:
    if f.ring != QQ:
        raise TypeError("rational polynomial expected")
    f.integer_coeffs()
    if f.degree <= 0:
        return IrreducibilityCertificate(False, "constant")
    if f.degree == 1:
        return IrreducibilityCertificate(True, "degree-1")
    disc = f.discriminant()
    if disc == 0:
        return IrreducibilityCertificate(False, "repeated-root", factor=f.gcd(f.derivative()))
    for p in _primes(max_prime):
        if disc.numerator % p == 0:
            continue
        if irreducible_mod_p(f.reduce_mod(p)):
            return IrreducibilityCertificate(True, "mod-p", prime=p)
    g = find_small_factor(f)
    if g is None:
        return IrreducibilityCertificate(True, "factor-search")
    return IrreducibilityCertificate(False, "factor-search", factor=g)
