"""Rational functions n/d in one variable, kept in lowest terms."""
from __future__ import annotations

from .poly import UniPoly


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly.const(1, num.ring)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = UniPoly.const(1, num.ring)
            return
        g = num.gcd(den)
        num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc
        R = num.ring
        inv = R.inv(c)
        self.num = num.scale(inv)
        self.den = den.scale(inv)

    @classmethod
    def coerce(cls, x, ring=None) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, UniPoly):
            return cls(x)
        from .rings import QQ
        return cls(UniPoly.const(x, ring or QQ))

    @property
    def ring(self):
        return self.num.ring

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, o):
        o = RatFunc.coerce(o, self.ring)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-RatFunc.coerce(o, self.ring))

    def __rsub__(self, o):
        return RatFunc.coerce(o, self.ring) - self

    def __mul__(self, o):
        o = RatFunc.coerce(o, self.ring)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RatFunc.coerce(o, self.ring)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, o) -> bool:
        try:
            o = RatFunc.coerce(o, self.ring)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.ring.div(self.num(x), self.den(x))

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den ** 2)

    def degree(self) -> int:
        """deg num - deg den (order of pole at infinity)."""
        return self.num.degree - self.den.degree

    def __repr__(self):
        if self.is_polynomial():
            return f"RatFunc({self.num.to_str()})"
        return f"RatFunc(({self.num.to_str()})/({self.den.to_str()}))"


def ratfun_normalize(n: UniPoly, d: UniPoly) -> RatFunc:
    """Coprime pair with monic denominator representing n/d."""
    return RatFunc(n, d)
