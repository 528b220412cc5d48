"""Finite fields F_{p^k} in logarithmic (Zech) representation.

Elements are ints: ``e`` in [0, q-2] stands for g^e for a fixed primitive
element g, and the sentinel ``q - 1`` stands for zero.  Multiplication is
addition of exponents; addition goes through the Zech table
``zech[n] = log(1 + g^n)``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .intutil import is_prime, prime_divisors
from .poly import UniPoly
from .rings import GF


def _poly_value(cs, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(cs))


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> UniPoly:
    """Monic irreducible of degree k minimizing sum c_i p^i over its lower coefficients."""
    from .ffactor import is_irreducible
    F = GF(p)
    for low in product(range(p), repeat=k):
        cs = list(low[::-1]) + [1]  # low[::-1]: c_0 varies fastest
        f = UniPoly(cs, F)
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    tag = "extension field"

    def __init__(self, p: int, k: int = 1, modulus: UniPoly | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p, self.k = p, k
        self.characteristic = p
        self.q = p**k
        self.m = self.q - 1
        self.modulus = modulus if modulus is not None else smallest_irreducible(p, k)
        self.zero = self.m
        self.one = 0
        self._build()

    # tables -----------------------------------------------------------------
    def _mul_matrix(self, g_cs) -> np.ndarray:
        """Matrix of multiplication by g on coefficient vectors (row vector convention)."""
        p, k = self.p, self.k
        F = GF(p)
        g = UniPoly(g_cs, F)
        rows = []
        for i in range(k):
            v = (g * UniPoly.monomial(i, 1, F)) % self.modulus
            rows.append([int(v[j]) for j in range(k)])
        return np.array(rows, dtype=np.int64)

    def _find_generator(self):
        F = GF(self.p)
        one = UniPoly([1], F)
        exps = [self.m // r for r in prime_divisors(self.m)] if self.m > 1 else []
        for code in range(1, self.q):
            cs = [(code // self.p**i) % self.p for i in range(self.k)]
            g = UniPoly(cs, F)
            if g.is_zero():
                continue
            if all(g.powmod(e, self.modulus) != one for e in exps):
                return cs
        raise AssertionError("no primitive element")

    def _build(self):
        p, k, m = self.p, self.k, self.m
        gen = self._find_generator()
        self.generator_coeffs = tuple(gen)
        M = self._mul_matrix(gen)
        block = min(m, max(1, int(m**0.5)))
        vecs = np.zeros((m, k), dtype=np.int64)
        v = np.zeros(k, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            vecs[i] = v
            v = (v @ M) % p
        # g^block as a matrix, then advance whole blocks at once
        Mb = np.eye(k, dtype=np.int64)
        for _ in range(block):
            Mb = (Mb @ M) % p
        start = block
        while start < m:
            n = min(block, m - start)
            vecs[start:start + n] = (vecs[start - block:start - block + n] @ Mb) % p
            start += n
        weights = p ** np.arange(k, dtype=np.int64)
        codes = vecs @ weights
        self.exp = codes  # exp[e] = code of g^e
        log = np.full(self.q, m, dtype=np.int64)
        log[codes] = np.arange(m, dtype=np.int64)
        self.log = log  # log[code], log[0] = m (zero)
        # 1 + g^n: add 1 to the constant digit
        v0 = vecs[:, 0]
        plus_one = codes - v0 + (v0 + 1) % p
        self.zech = log[plus_one]
        self._zech_list = self.zech.tolist()
        self._half = m // 2 if p != 2 else 0

    # ring protocol ------------------------------------------------------------
    def convert(self, x) -> int:
        from fractions import Fraction
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has denominator divisible by {self.p}")
            x = x.numerator * pow(x.denominator, -1, self.p)
        return int(self.log[int(x) % self.p])

    def from_coeffs(self, cs) -> int:
        code = _poly_value([int(c) % self.p for c in cs[:self.k]], self.p)
        if len(cs) > self.k:
            F = GF(self.p)
            r = UniPoly(cs, F) % self.modulus
            code = _poly_value([int(r[i]) for i in range(self.k)], self.p)
        return int(self.log[code])

    def to_coeffs(self, a: int) -> list[int]:
        if a == self.m:
            return [0] * self.k
        code = int(self.exp[a])
        return [(code // self.p**i) % self.p for i in range(self.k)]

    def add(self, a: int, b: int) -> int:
        m = self.m
        if a == m:
            return b
        if b == m:
            return a
        z = self._zech_list[(b - a) % m]
        if z == m:
            return m
        return (a + z) % m

    def neg(self, a: int) -> int:
        if a == self.m or self.p == 2:
            return a
        return (a + self._half) % self.m

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        m = self.m
        if a == m or b == m:
            return m
        return (a + b) % m

    def inv(self, a: int) -> int:
        if a == self.m:
            raise ZeroDivisionError("inverse of zero")
        return (-a) % self.m

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == self.m:
            if n == 0:
                return 0
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return self.m
        return (a * n) % self.m

    def is_zero(self, a: int) -> bool:
        return a == self.m

    def is_square(self, a: int) -> bool:
        return a == self.m or a % 2 == 0

    def chi(self, a: int) -> int:
        """Quadratic character (0 on zero)."""
        if a == self.m:
            return 0
        return 1 if a % 2 == 0 else -1

    def sqrt(self, a: int) -> int:
        if a == self.m:
            return a
        if a % 2:
            raise ValueError("not a square")
        return a // 2

    def frobenius(self, a: int, times: int = 1) -> int:
        if a == self.m:
            return a
        return (a * self.p**times) % self.m

    def degree_of(self, a: int) -> int:
        """Degree over F_p of the subfield generated by a."""
        if a == self.m:
            return 1
        d = 1
        b = self.frobenius(a)
        while b != a:
            b = self.frobenius(b)
            d += 1
        return d

    def elements(self) -> range:
        """All elements (logs 0..q-2 and the zero sentinel)."""
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash(("FF", self.p, self.k))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    # vectorized helpers ---------------------------------------------------------
    def add_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        m = self.m
        d = (b - a) % m
        z = self.zech[np.where(a == m, 0, d)]
        out = np.where(z == m, m, (a + z) % m)
        out = np.where(a == m, b, out)
        out = np.where(b == m, a, out)
        return out

    def mul_vec(self, a: np.ndarray, b) -> np.ndarray:
        m = self.m
        out = (a + b) % m
        return np.where((a == m) | (b == m), m, out)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    """F_{p^k} with the smallest irreducible modulus (p >= 5)."""
    if p < 5:
        raise ValueError("fields of characteristic 2 or 3 are not supported")
    return FiniteField(p, k)
