"""Exact real root isolation by Sturm sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import UniPoly
from .rings import QQ


@dataclass(frozen=True)
class RealRootBox:
    """Closed interval [lo, hi] holding exactly one real root; endpoints are not roots."""

    lo: Fraction
    hi: Fraction
    index: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(seq: list[UniPoly], x) -> int:
    if x == "inf" or x == "-inf":
        signs = []
        for p in seq:
            s = _sign(p.lc)
            if x == "-inf" and p.degree % 2:
                s = -s
            signs.append(s)
    else:
        signs = [_sign(p(x)) for p in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: UniPoly, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi] (whole line when bounds are omitted)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    seq = sturm_sequence(f)
    a = "-inf" if lo is None else Fraction(lo)
    b = "inf" if hi is None else Fraction(hi)
    return _variations(seq, a) - _variations(seq, b)


def root_bound(f: UniPoly) -> Fraction:
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def _nonroot_near(f: UniPoly, x: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    step = (hi - lo) / 4
    k = 0
    while f(x) == 0:
        k += 1
        x = (lo + hi) / 2 + step / (k + 1) * (1 if k % 2 else -1)
    return x


def sturm_isolate(f: UniPoly) -> list[RealRootBox]:
    """Disjoint isolating intervals for the real roots of f, ascending."""
    if f.ring != QQ:
        raise TypeError("real roots need a rational polynomial")
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = f.squarefree_part()
    if g.degree <= 0:
        return []
    seq = sturm_sequence(g)

    def count(a, b):
        return _variations(seq, a) - _variations(seq, b)

    B = root_bound(g)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = _nonroot_near(g, (a + b) / 2, a, b)
        stack.append((m, b))
        stack.append((a, m))
    out.sort()
    return [RealRootBox(a, b, i) for i, (a, b) in enumerate(out)]


def refine(f: UniPoly, box: RealRootBox, width=None) -> RealRootBox:
    """Bisect box until narrower than ``width`` (or once if width is None)."""
    g = f.squarefree_part()
    lo, hi = box.lo, box.hi
    target = width if width is not None else (hi - lo) / 2
    slo = _sign(g(lo))
    while hi - lo > target:
        m = _nonroot_near(g, (lo + hi) / 2, lo, hi)
        if _sign(g(m)) == slo:
            lo = m
        else:
            hi = m
    return RealRootBox(lo, hi, box.index)


def sign_at_root(g: UniPoly, f: UniPoly, box: RealRootBox) -> int:
    """Sign of g at the unique root of f inside box, decided exactly."""
    f = f.squarefree_part()
    g = g % f if f.degree > 0 else g
    if g.is_zero():
        return 0
    h = g.gcd(f)
    if h.degree > 0 and count_real_roots(h, box.lo, box.hi) > 0:
        return 0
    b = box
    while count_real_roots(g.squarefree_part(), b.lo, b.hi) > 0 or g(b.lo) == 0:
        b = refine(f, b)
    return _sign(g(b.midpoint()))
