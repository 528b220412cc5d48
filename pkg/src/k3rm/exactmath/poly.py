"""Dense univariate polynomials over an exact coefficient ring."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rings import QQ, GF, PrimeField


class UniPoly:
    """Polynomial with ``coeffs[i]`` the coefficient of t^i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable = (), ring=QQ, *, _raw: bool = False):
        self.ring = ring
        cs = list(coeffs) if _raw else [ring.convert(c) for c in coeffs]
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # construction -------------------------------------------------------
    @classmethod
    def gen(cls, ring=QQ) -> "UniPoly":
        return cls((ring.zero, ring.one), ring, _raw=True)

    @classmethod
    def const(cls, c, ring=QQ) -> "UniPoly":
        return cls((c,), ring)

    @classmethod
    def monomial(cls, n: int, c=1, ring=QQ) -> "UniPoly":
        return cls([ring.zero] * n + [ring.convert(c)], ring, _raw=True)

    @classmethod
    def from_roots(cls, roots: Sequence, ring=QQ) -> "UniPoly":
        out = cls.const(1, ring)
        t = cls.gen(ring)
        for r in roots:
            out = out * (t - cls.const(r, ring))
        return out

    def _new(self, cs) -> "UniPoly":
        return UniPoly(cs, self.ring, _raw=True)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return UniPoly((self.ring.convert(other),), self.ring, _raw=True)

    # basic properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = R.add(out[i], c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return self._new([R.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return self._new(())
        R = self.ring
        a, b = self.coeffs, other.coeffs
        out = [R.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if R.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = R.add(out[i + j], R.mul(x, y))
        return self._new(out)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        """Multiply by a ring element (ints and Fractions are fine for Q and F_p)."""
        R = self.ring
        return self._new([R.mul(c, x) for x in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self._new((self.ring.one,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        R = self.ring
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = R.inv(other.lc)
        if len(rem) - 1 < db:
            return self._new(()), self
        quo = [R.zero] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = R.mul(rem[k + db], inv_lc)
            quo[k] = c
            if R.is_zero(c):
                continue
            for j, y in enumerate(bc):
                rem[k + j] = R.sub(rem[k + j], R.mul(c, y))
        return self._new(quo), self._new(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other: "UniPoly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.ring.inv(self.lc))

    # evaluation and substitution ------------------------------------------
    def __call__(self, x):
        """Horner evaluation; ``x`` may be a ring element or a polynomial."""
        if isinstance(x, UniPoly):
            out = x._new(())
            for c in reversed(self.coeffs):
                out = out * x + UniPoly((c,), x.ring, _raw=True)
            return out
        R = self.ring
        if R == QQ or isinstance(R, PrimeField):
            x = R.convert(x)
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, x), c)
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        return self(inner)

    def derivative(self) -> "UniPoly":
        R = self.ring
        return self._new([R.mul(R.convert(i), c) for i, c in enumerate(self.coeffs) if i])

    def reflect(self, n: int | None = None) -> "UniPoly":
        """t^n p(1/t); ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reflection degree below polynomial degree")
        cs = list(self.coeffs) + [self.ring.zero] * (n + 1 - len(self.coeffs))
        return self._new(cs[::-1])

    def scale_var(self, c) -> "UniPoly":
        """p(c t)."""
        R = self.ring
        if R == QQ or isinstance(R, PrimeField):
            c = R.convert(c)
        out, pw = [], R.one
        for x in self.coeffs:
            out.append(R.mul(x, pw))
            pw = R.mul(pw, c)
        return self._new(out)

    def sigma(self) -> "UniPoly":
        """p(-t)."""
        return self.scale_var(-1)

    def taylor(self, t0) -> list:
        """Coefficients of p in powers of (t - t0)."""
        R = self.ring
        cs = list(self.coeffs)
        out = []
        n = len(cs)
        for _ in range(n):
            # synthetic division by (t - t0)
            acc = R.zero
            q = [R.zero] * len(cs)
            for i in range(len(cs) - 1, -1, -1):
                acc = R.add(R.mul(acc, t0), cs[i])
                q[i] = acc
            out.append(q[0])
            cs = q[1:]
        return out

    def valuation_at_zero(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return i
        raise ValueError("valuation of zero polynomial")

    # gcd and friends -------------------------------------------------------
    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "UniPoly"):
        """Return (g, s, t) with s*self + t*other = g monic."""
        other = self._coerce(other)
        zero, one = self._new(()), self._new((self.ring.one,))
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = self.ring.inv(r0.lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def powmod(self, e: int, mod: "UniPoly") -> "UniPoly":
        result = self._new((self.ring.one,)) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def resultant(self, other: "UniPoly"):
        """Res(self, other) by the Euclidean algorithm over a field."""
        R = self.ring
        a, b = self, self._coerce(other)
        if a.is_zero() or b.is_zero():
            return R.zero
        res = R.one
        while b.degree > 0:
            r = a % b
            if r.is_zero():
                return R.zero
            sign = -1 if (a.degree * b.degree) % 2 else 1
            factor = R.mul(R.convert(sign), _ring_pow(R, b.lc, a.degree - r.degree))
            res = R.mul(res, factor)
            a, b = b, r
        return R.mul(res, _ring_pow(R, b.lc, a.degree))

    def discriminant(self):
        R = self.ring
        n = self.degree
        r = self.resultant(self.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return R.div(R.mul(R.convert(sign), r), self.lc)

    def squarefree_part(self) -> "UniPoly":
        """Product of the distinct monic irreducible factors."""
        return _radical(self.monic())

    def squarefree_decomposition(self) -> list[tuple["UniPoly", int]]:
        """Pairs (g_i, i) with p = lc * prod g_i^i, g_i squarefree coprime."""
        return [(g, i) for g, i in _sqf_decomp(self.monic()) if g.degree > 0]

    # conversion ------------------------------------------------------------
    def reduce_mod(self, p: int) -> "UniPoly":
        if self.ring != QQ:
            raise TypeError("reduction defined for rational polynomials")
        F = GF(p)
        return UniPoly([F.convert(c) for c in self.coeffs], F, _raw=True)

    def lift(self) -> "UniPoly":
        """Prime-field polynomial as a rational one with coefficients in [0,p)."""
        return UniPoly([Fraction(int(c)) for c in self.coeffs], QQ, _raw=True)

    def change_ring(self, ring) -> "UniPoly":
        return UniPoly(self.coeffs, ring)

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError("non-integral coefficient")
            out.append(c.numerator)
        return out

    def clear_denominators(self) -> tuple["UniPoly", int]:
        """Return (primitive integer polynomial, positive scale) for Q input."""
        from math import gcd, lcm
        den = 1
        for c in self.coeffs:
            den = lcm(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        g = g or 1
        return UniPoly([v // g for v in ints]), den

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()}, {self.ring!r})"

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.ring.is_zero(c):
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            s = str(c)
            if mono:
                if s == "1":
                    s = mono
                elif s == "-1":
                    s = "-" + mono
                else:
                    s = f"{s}*{mono}"
            terms.append(s)
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


def _ring_pow(R, a, n: int):
    out = R.one
    for _ in range(n):
        out = R.mul(out, a)
    return out


def _pth_root(f: UniPoly) -> UniPoly:
    """For f in F_p[t^p], return g with g^p = f (coefficients fixed by Frobenius)."""
    p = f.ring.characteristic
    return f._new([f.coeffs[i] for i in range(0, len(f.coeffs), p)])


def _sqf_decomp(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm, with the p-th root step in positive characteristic."""
    if f.degree <= 0:
        return []
    p = f.ring.characteristic
    out: list[tuple[UniPoly, int]] = []
    d = f.derivative()
    if d.is_zero():
        return [(g, i * p) for g, i in _sqf_decomp(_pth_root(f))]
    c = f.gcd(d)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c.exact_div(y)
    if c.degree > 0:
        # remaining part is a p-th power in characteristic p
        out.extend((g, k * p) for g, k in _sqf_decomp(_pth_root(c.monic())))
    merged: dict[UniPoly, int] = {}
    for g, k in out:
        merged[g] = merged.get(g, 0) + k
    # regroup by multiplicity so the factors for a given exponent are multiplied
    by_mult: dict[int, UniPoly] = {}
    for g, k in merged.items():
        by_mult[k] = by_mult[k] * g if k in by_mult else g
    return sorted(((g.monic(), k) for k, g in by_mult.items()), key=lambda x: x[1])


def _radical(f: UniPoly) -> UniPoly:
    out = UniPoly.const(1, f.ring)
    for g, _ in _sqf_decomp(f):
        out = out * g
    return out.monic() if not out.is_zero() else out


def poly(coeffs, ring=QQ) -> UniPoly:
    """Shorthand constructor."""
    return UniPoly(coeffs, ring)


T = UniPoly.gen(QQ)
