"""Dickson polynomials p_{n,a}(x) with p_{n,a}(v + a/v) = v^n + (a/v)^n.

Symbolic checks treat ``a`` as a polynomial variable, so they are identities
rather than spot checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath.multipoly import MultiPoly
from .exactmath.poly import UniPoly

PRINTED = {
    # power of x -> (integer coefficient, power of a)
    3: {3: (1, 0), 1: (-3, 1)},
    5: {5: (1, 0), 3: (-5, 1), 1: (5, 2)},
    7: {7: (1, 0), 5: (-7, 1), 3: (14, 2), 1: (-7, 3)},
    9: {9: (1, 0), 7: (-9, 1), 5: (27, 2), 3: (-30, 3), 1: (9, 4)},
    11: {11: (1, 0), 9: (-11, 1), 7: (44, 2), 5: (-77, 3), 3: (55, 4), 1: (-11, 5)},
}


@lru_cache(maxsize=None)
def dickson_coefficients(n: int) -> tuple[int, ...]:
    """Integers c_k with p_{n,a}(x) = sum_k c_k a^k x^(n-2k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # p_k as dict {k: c} meaning c a^k x^(deg-2k)
    prev, cur = {0: 2}, {0: 1}
    if n == 0:
        return (2,)
    for _ in range(n - 1):
        # p_{k+1} = x p_k - a p_{k-1}
        nxt = dict(cur)
        for k, c in prev.items():
            nxt[k + 1] = nxt.get(k + 1, 0) - c
        prev, cur = cur, nxt
    return tuple(cur.get(k, 0) for k in range(n // 2 + 1))


@dataclass(frozen=True)
class DicksonPoly:
    n: int
    a: Fraction | None  # None: symbolic parameter

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Dickson polynomials need n >= 1")
        if self.a is not None:
            object.__setattr__(self, "a", Fraction(self.a))

    @property
    def coefficients(self) -> UniPoly | MultiPoly:
        if self.a is None:
            return dickson_symbolic(self.n)
        return dickson_unipoly(self.n, self.a)

    def __call__(self, x):
        """Evaluate at a number, UniPoly or MultiPoly (numeric a only for non-MultiPoly x)."""
        cs = dickson_coefficients(self.n)
        if self.a is None:
            raise ValueError("symbolic parameter; use coefficients")
        acc = 0
        for k, c in enumerate(cs):
            if c:
                acc = acc + x ** (self.n - 2 * k) * (c * self.a ** k)
        return acc


def dickson(n: int, a=None) -> DicksonPoly:
    return DicksonPoly(n, a)


def dickson_unipoly(n: int, a, ring=None) -> UniPoly:
    """p_{n,a} as a UniPoly in x for a numeric parameter a."""
    if n < 1:
        raise ValueError("Dickson polynomials need n >= 1")
    if ring is None:
        cs = [Fraction(0)] * (n + 1)
        for k, c in enumerate(dickson_coefficients(n)):
            cs[n - 2 * k] = c * Fraction(a) ** k
        return UniPoly(cs)
    av = ring.convert(a)
    cs = [ring.zero] * (n + 1)
    for k, c in enumerate(dickson_coefficients(n)):
        cs[n - 2 * k] = ring.mul(ring.convert(c), _rpow(ring, av, k))
    return UniPoly(cs, ring)


def _rpow(ring, x, k):
    out = ring.one
    for _ in range(k):
        out = ring.mul(out, x)
    return out


def dickson_symbolic(n: int, vars=("x", "a"), x="x", a="a") -> MultiPoly:
    """p_{n,a}(x) as a polynomial in the named variables x and a."""
    if n < 1:
        raise ValueError("Dickson polynomials need n >= 1")
    ix, ia = vars.index(x), vars.index(a)
    terms = {}
    for k, c in enumerate(dickson_coefficients(n)):
        e = [0] * len(vars)
        e[ix], e[ia] = n - 2 * k, k
        terms[tuple(e)] = c
    return MultiPoly(vars, terms)


def compose_symbolic(n: int, inner: MultiPoly, a_value: MultiPoly) -> MultiPoly:
    """p_{n, a_value}(inner) with both arguments polynomials in the same variables."""
    out = MultiPoly(inner.vars)
    for k, c in enumerate(dickson_coefficients(n)):
        if c:
            out = out + inner ** (n - 2 * k) * a_value ** k * c
    return out


def matches_printed(n: int) -> bool:
    want = PRINTED[n]
    cs = dickson_coefficients(n)
    got = {n - 2 * k: (c, k) for k, c in enumerate(cs) if c}
    return got == want


def check_defining_identity(n: int) -> bool:
    """v^n (p_{n,a}(v + a/v) - v^n - (a/v)^n) = 0 in Z[v, a]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v, a = MultiPoly.gens("v", "a")
    vx = v * v + a  # v * (v + a/v)
    lhs = MultiPoly(("v", "a"))
    for k, c in enumerate(dickson_coefficients(n)):
        if c:
            # c a^k x^(n-2k) times v^n = c a^k (v x)^(n-2k) v^(2k)
            lhs = lhs + vx ** (n - 2 * k) * v ** (2 * k) * a ** k * c
    return (lhs - v ** (2 * n) - a ** n).is_zero()


def check_scaling(n: int) -> bool:
    """p_{n,a^2}(a x) = a^n p_{n,1}(x) in Z[x, a]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x, a = MultiPoly.gens("x", "a")
    lhs = compose_symbolic(n, a * x, a * a)
    rhs = compose_symbolic(n, x, MultiPoly.const(("x", "a"), 1)) * a ** n
    return lhs == rhs


def check_composition(m: int, n: int) -> bool:
    """p_{mn,a}(t) = p_{m,a^n}(p_{n,a}(t)) in Z[t, a]."""
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    t, a = MultiPoly.gens("t", "a")
    inner = compose_symbolic(n, t, a)
    lhs = compose_symbolic(m * n, t, a)
    return lhs == compose_symbolic(m, inner, a ** n)


def check_parity(n: int) -> bool:
    """p_{n,a}(-x) = (-1)^n p_{n,a}(x)."""
    x, a = MultiPoly.gens("x", "a")
    return compose_symbolic(n, -x, a) == compose_symbolic(n, x, a) * (-1) ** n
