"""Residue fields F_p[t]/(pi) for monic irreducible pi, elements as coefficient tuples."""
from __future__ import annotations

from fractions import Fraction

from .poly import UniPoly
from .rings import PrimeField


class ResidueField:
    tag = "residue field"

    def __init__(self, modulus: UniPoly):
        if not isinstance(modulus.ring, PrimeField):
            raise TypeError("residue fields need a prime-field modulus")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus.monic()
        self.base = modulus.ring
        self.p = self.base.p
        self.characteristic = self.p
        self.d = self.modulus.degree
        self.q = self.p**self.d
        self.zero = (0,) * self.d
        self.one = (1,) + (0,) * (self.d - 1)

    def _wrap(self, f: UniPoly) -> tuple:
        r = f % self.modulus
        cs = list(r.coeffs) + [0] * (self.d - len(r.coeffs))
        return tuple(cs)

    def _poly(self, a) -> UniPoly:
        return UniPoly(a, self.base, _raw=True)

    def convert(self, x):
        if isinstance(x, tuple):
            return x
        if isinstance(x, UniPoly):
            return self._wrap(x)
        if isinstance(x, (list,)):
            return self._wrap(UniPoly(x, self.base))
        if isinstance(x, Fraction):
            x = self.base.convert(x)
        return self._wrap(UniPoly([int(x) % self.p], self.base))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        return self._wrap(self._poly(a) * self._poly(b))

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self._poly(a).xgcd(self.modulus)
        return self._wrap(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not any(a)

    def pow(self, a, n: int):
        return self._wrap(self._poly(a).powmod(n, self.modulus)) if n >= 0 else self.pow(self.inv(a), -n)

    def is_square(self, a) -> bool:
        if self.is_zero(a):
            return True
        return self.pow(a, (self.q - 1) // 2) == self.one

    def __eq__(self, other):
        return isinstance(other, ResidueField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("RF", self.modulus))

    def __repr__(self):
        return f"F_{self.p}[t]/({self.modulus.to_str()})"


def root_count(f: UniPoly) -> int:
    """Number of distinct roots in the coefficient field of f (a ResidueField or prime field)."""
    R = f.ring
    q = R.q if isinstance(R, ResidueField) else R.p
    f = f.monic()
    x = UniPoly.gen(R)
    h = x.powmod(q, f) - x
    return f.gcd(h).degree
