"""Sparse multivariate polynomials over Q in at most four named variables."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import UniPoly

MAX_VARS = 4


class MultiPoly:
    """Map from exponent tuples to nonzero Fractions over a fixed variable list."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[tuple[int, ...], object] | None = None):
        if len(vars) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported")
        self.vars = tuple(vars)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.vars):
                raise ValueError("exponent length mismatch")
            c = Fraction(c)
            if c:
                out[tuple(e)] = out.get(tuple(e), Fraction(0)) + c
        self.terms = {e: c for e, c in out.items() if c}

    # constructors --------------------------------------------------------
    @classmethod
    def var(cls, vars: tuple[str, ...], name: str) -> "MultiPoly":
        e = tuple(int(v == name) for v in vars)
        if sum(e) != 1:
            raise ValueError(f"unknown variable {name}")
        return cls(vars, {e: 1})

    @classmethod
    def const(cls, vars: tuple[str, ...], c) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def gens(cls, *names: str) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(names, n) for n in names)

    @classmethod
    def from_unipoly(cls, vars: tuple[str, ...], name: str, p: UniPoly) -> "MultiPoly":
        i = vars.index(name)
        terms = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * len(vars)
            e[i] = k
            terms[tuple(e)] = c
        return cls(vars, terms)

    def _coerce(self, o) -> "MultiPoly":
        if isinstance(o, MultiPoly):
            if o.vars != self.vars:
                raise TypeError(f"variable mismatch {o.vars} vs {self.vars}")
            return o
        return MultiPoly.const(self.vars, o)

    # arithmetic ----------------------------------------------------------
    def __add__(self, o):
        o = self._coerce(o)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        t: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # structure -----------------------------------------------------------
    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name^k (as a polynomial in the remaining variables)."""
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                t[tuple(e2)] = c
        return MultiPoly(self.vars, t)

    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return MultiPoly(self.vars, t)

    def subs(self, name: str, value) -> "MultiPoly":
        """Substitute a polynomial (or number) for a variable."""
        i = self.vars.index(name)
        value = self._coerce(value)
        by_power: dict[int, dict] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            by_power.setdefault(k, {})[tuple(e2)] = c
        out = MultiPoly(self.vars)
        powers = {0: MultiPoly.const(self.vars, 1)}
        for k in sorted(by_power):
            if k not in powers:
                powers[k] = value ** k
            out = out + MultiPoly(self.vars, by_power[k]) * powers[k]
        return out

    def reduce_square(self, name: str, square: "MultiPoly") -> "MultiPoly":
        """Replace name^2 by ``square`` repeatedly (reduction modulo name^2 - square)."""
        i = self.vars.index(name)
        square = self._coerce(square)
        out = MultiPoly(self.vars)
        cache = {0: MultiPoly.const(self.vars, 1)}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = k % 2
            half = k // 2
            if half not in cache:
                cache[half] = square ** half
            out = out + MultiPoly(self.vars, {tuple(e2): c}) * cache[half]
        return out

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        acc = Fraction(0)
        vals = [Fraction(values[v]) for v in self.vars]
        for e, c in self.terms.items():
            term = c
            for x, k in zip(vals, e):
                if k:
                    term *= x ** k
            acc += term
        return acc

    def to_unipoly(self, name: str) -> UniPoly:
        """View as a univariate polynomial; other variables must be absent."""
        i = self.vars.index(name)
        cs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial involves other variables")
            cs[e[i]] = c
        n = max(cs, default=-1)
        return UniPoly([cs.get(k, 0) for k in range(n + 1)])

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def proportional(a: MultiPoly, b: MultiPoly) -> Fraction | None:
    """The constant c with a = c*b, if it exists (b nonzero)."""
    if b.is_zero():
        raise ZeroDivisionError("zero polynomial")
    e0 = next(iter(b.terms))
    c = a.terms.get(e0, Fraction(0)) / b.terms[e0]
    return c if (a - b * c).is_zero() else None
