"""Frobenius characteristic polynomial on H^2(1) from point counts, cyclotomic content,
and the algebraic factor coming from the trivial lattice and known sections."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..exactmath.intutil import squarefree_part
from ..exactmath.poly import UniPoly
from ..exactmath.qfactor import factor_rational
from ..exactmath.rings import QQ
from ..ellsurf.tate import KodairaFibre, SurfaceAnalysis
from .counting import CountTable, CountingError

H2_RANK = 22


class InconsistentCounts(ValueError):
    pass


def _P(cs) -> UniPoly:
    return UniPoly([Fraction(c) for c in cs], QQ)


def poly_from_high(cs) -> UniPoly:
    """Monic-first coefficient list (highest degree first) to a polynomial."""
    return _P(list(reversed(list(cs))))


# Newton identities -----------------------------------------------------------------
def power_sums(P: UniPoly, kmax: int) -> list[Fraction]:
    """p_1..p_kmax of the roots of a monic P."""
    r = P.degree
    c = [Fraction(P[r - i]) for i in range(r + 1)]  # c_0 = 1, P = sum c_i T^{r-i}
    out: list[Fraction] = []
    for k in range(1, kmax + 1):
        s = -k * c[k] if k <= r else Fraction(0)
        for i in range(1, min(k, r + 1)):
            s -= c[i] * out[k - i - 1]
        out.append(s)
    return out


def elementary_from_power_sums(ps: list) -> list[Fraction]:
    """e_0..e_n from p_1..p_n."""
    e = [Fraction(1)]
    for i in range(1, len(ps) + 1):
        s = Fraction(0)
        for j in range(1, i + 1):
            s += (-1) ** (j - 1) * e[i - j] * ps[j - 1]
        e.append(s / i)
    return e


def reciprocal_from_traces(taus: list, sign: int) -> UniPoly | None:
    """Degree 2g polynomial with the given first g power sums and T^{2g} Q(1/T) = sign Q(T)."""
    g = len(taus)
    e = elementary_from_power_sums(taus)
    c = [(-1) ** i * e[i] for i in range(g + 1)]
    if sign == -1 and c[g] != 0:
        return None
    full = c + [sign * c[2 * g - i] for i in range(g + 1, 2 * g + 1)]
    return poly_from_high(full)


def is_reciprocal(P: UniPoly) -> int:
    """+1 or -1 for T^n P(1/T) = sign P(T), 0 otherwise."""
    R = P.reflect(P.degree)
    if R == P:
        return 1
    if R == -P:
        return -1
    return 0


def unnormalized(P: UniPoly, p: int) -> UniPoly:
    """p^n P(T/p): the integral form of a normalized polynomial."""
    n = P.degree
    return _P([Fraction(P[i]) * p ** (n - i) for i in range(n + 1)])


def is_integral(P: UniPoly) -> bool:
    return all(Fraction(c).denominator == 1 for c in P.coeffs)


def roots_on_unit_circle(P: UniPoly, tol: float = 1e-9) -> bool:
    if P.degree <= 0:
        return True
    # repeated roots are numerically unstable; the squarefree part has the same roots
    P = P.squarefree_part()
    roots = np.roots([float(c) for c in reversed(P.coeffs)])
    return bool(np.all(np.abs(np.abs(roots) - 1) <= tol))


# cyclotomic content --------------------------------------------------------------------
def _phi(n: int) -> int:
    out, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            out -= out // d
        d += 1
    if m > 1:
        out -= out // m
    return out


_CYC: dict[int, UniPoly] = {}


def cyclotomic(n: int) -> UniPoly:
    if n not in _CYC:
        f = _P([-1] + [0] * (n - 1) + [1])
        for d in range(1, n):
            if n % d == 0:
                f = f.exact_div(cyclotomic(d))
        _CYC[n] = f
    return _CYC[n]


def cyclotomic_part(P: UniPoly) -> tuple[UniPoly, UniPoly, int]:
    """(cyclo, rest, bound) with P = cyclo * rest, cyclo a product of cyclotomic polynomials."""
    rest = P.monic()
    cyc = _P([1])
    # phi(n) >= sqrt(n / 2), so no n beyond 2 deg^2 has phi(n) <= deg
    for n in range(1, 2 * P.degree**2 + 3):
        if _phi(n) > rest.degree:
            continue
        Phi = cyclotomic(n)
        while rest.degree >= Phi.degree and Phi.divides(rest):
            rest = rest.exact_div(Phi)
            cyc = cyc * Phi
    return cyc, rest, P.degree - rest.degree


# recovery ---------------------------------------------------------------------------
@dataclass
class FrobData:
    p: int
    normalized_traces: list[Fraction]
    algebraic_factor: UniPoly
    transcendental_factor: UniPoly
    picard_upper_bound: int
    sign: int = 1

    @property
    def full(self) -> UniPoly:
        return self.algebraic_factor * self.transcendental_factor

    @property
    def integral_transcendental(self) -> UniPoly:
        return unnormalized(self.transcendental_factor, self.p)


def normalized_traces(table: CountTable) -> list[Fraction]:
    p = table.p
    return [Fraction(n - 1 - p ** (2 * k), p**k) for k, n in enumerate(table.counts, 1)]


def recover_charpoly(table: CountTable, algebraic_factor: UniPoly) -> FrobData:
    """Transcendental factor from the first g normalized traces, g = (22 - deg alg) / 2."""
    alg = algebraic_factor.monic()
    r = alg.degree
    if r > H2_RANK or (H2_RANK - r) % 2:
        raise InconsistentCounts(f"algebraic factor of degree {r} leaves no even complement in 22")
    g = (H2_RANK - r) // 2
    if g > table.kmax:
        raise InconsistentCounts(f"need counts up to k = {g}, have {table.kmax}")
    ts = normalized_traces(table)
    ps = power_sums(alg, table.kmax) if r else [Fraction(0)] * table.kmax
    taus = [ts[k] - ps[k] for k in range(table.kmax)]
    chosen = None
    for sign in (1, -1):
        Q = reciprocal_from_traces(taus[:g], sign)
        if Q is None or not is_integral(unnormalized(Q, table.p)):
            continue
        if not roots_on_unit_circle(Q, 1e-6):
            continue
        # an extra count beyond g, when present, must agree
        extra = power_sums(Q, table.kmax)
        if any(extra[k] != taus[k] for k in range(g, table.kmax)):
            continue
        chosen = (Q, sign)
        break
    if chosen is None:
        raise InconsistentCounts(
            "no functional-equation sign gives an integral transcendental factor with "
            "roots on the unit circle (wrong algebraic factor or a counting error)")
    Q, sign = chosen
    _, _, bound = cyclotomic_part(alg * Q)
    return FrobData(table.p, ts, alg, Q, bound, sign)


# biquadratic splitting -------------------------------------------------------------------
def _sqclass(x: Fraction) -> int:
    """Squarefree integer representative of x modulo squares (0 for x = 0)."""
    if x == 0:
        return 0
    return squarefree_part(Fraction(x))


def _class_group(d1: int, d2: int) -> set[int]:
    return {1, _sqclass(d1), _sqclass(d2), _sqclass(Fraction(d1 * d2))}


def _rational_roots(f: UniPoly) -> list[Fraction]:
    return [-g[0] for g, _ in factor_rational(f) if g.degree == 1]


def splits_in_biquadratic(h: UniPoly, d1: int, d2: int) -> bool:
    """True iff h factors into linear factors over Q(sqrt d1, sqrt d2).

    Each irreducible factor over Q must have its splitting field inside the given field:
    quadratics by their discriminant class, quartics through the resolvent cubic (all three
    roots rational and the three quadratic subfields matching those of the target).
    """
    group = _class_group(d1, d2)
    for g, _ in factor_rational(h):
        if g.degree == 1:
            continue
        if g.degree == 2:
            if _sqclass(g.discriminant()) not in group:
                return False
            continue
        if g.degree != 4:
            return False
        if not _quartic_fields(g) <= group or len(group) != 4:
            return False
    return True


def _quartic_fields(g: UniPoly) -> set[int]:
    """Square classes generating the quadratic subfields of the splitting field of a V4 quartic;
    returns {0} when the Galois group is not of order 4."""
    e1, e2, e3, e4 = (Fraction(g[3]) * -1, Fraction(g[2]), Fraction(g[1]) * -1, Fraction(g[0]))
    # theta = r1 r2 + r3 r4
    res = _P([-(e1 * e1 * e4 - 4 * e2 * e4 + e3 * e3), e1 * e3 - 4 * e4, -e2, 1])
    thetas = _rational_roots(res)
    if len(thetas) < 3:
        return {0}
    out = set()
    for th in thetas:
        for disc in (th * th - 4 * e4, e1 * e1 - 4 * (e2 - th)):
            c = _sqclass(disc)
            if c not in (0, 1):
                out.add(c)
    return out if len(out) == 3 else {0}


# derive mode ---------------------------------------------------------------------------
def _component_charpoly(fib: KodairaFibre) -> UniPoly:
    """Char poly of the residue Frobenius on the non-identity components of one fibre."""
    T = UniPoly.gen(QQ)
    one, m1 = T - 1, T + 1
    sym, n, split = fib.symbol, fib.n, fib.split == "split"
    if sym == "I":
        if n <= 1:
            return _P([1])
        if split:
            return one ** (n - 1)
        pairs = (n - 1) // 2
        return one ** (pairs + (1 - n % 2)) * m1**pairs
    if sym == "II":
        return _P([1])
    if sym == "III":
        return one
    if sym == "IV":
        return one**2 if split else one * m1
    if sym == "I*" and n == 0:
        leaves = {3: one**3, 1: one * one * m1, 0: T**3 - 1}.get(fib.leaf_roots)
        if leaves is None:
            raise CountingError("I0* fibre without leaf data")
        return one * leaves
    if sym == "IV*":
        return one**6 if split else one**4 * m1**2
    if sym == "III*":
        return one**7
    if sym == "II*":
        return one**8
    raise CountingError(f"no component action implemented for {fib.type}")


def derive_algebraic_factor(analysis: SurfaceAnalysis, section_classes=()) -> UniPoly:
    """Frobenius on zero section, fibre class, fibre components, and declared sections.

    A section defined over F_p(sqrt c) is sent to its negative when c is a non-square,
    contributing T + 1; rational sections contribute T - 1.
    """
    p = analysis.model.characteristic
    T = UniPoly.gen(QQ)
    out = (T - 1) ** 2
    for fib in analysis.fibres:
        d = fib.place.degree
        out = out * _component_charpoly(fib)(T**d) if d > 1 else out * _component_charpoly(fib)
    for c in section_classes:
        c = Fraction(c)
        c = c.numerator * pow(c.denominator, -1, p) % p
        chi = pow(c, (p - 1) // 2, p)
        out = out * (T - 1 if chi == 1 else T + 1)
    return out
