"""Exact arithmetic in the real quadratic field Q(sqrt d)."""
from __future__ import annotations

from fractions import Fraction


class QuadElem:
    """a + b*sqrt(d) with a, b rational and d > 0 squarefree."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _wrap(self, o) -> "QuadElem":
        if isinstance(o, QuadElem):
            if o.d != self.d and o.b and self.b:
                raise TypeError("different quadratic fields")
            return o
        return QuadElem(o, 0, self.d)

    def __add__(self, o):
        o = self._wrap(o)
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, o):
        return self + (-self._wrap(o))

    def __rsub__(self, o):
        return self._wrap(o) - self

    def __mul__(self, o):
        o = self._wrap(o)
        return QuadElem(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, o):
        o = self._wrap(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        c = self * o.conjugate()
        return QuadElem(c.a / n, c.b / n, self.d)

    def sign(self) -> int:
        """Exact sign of a + b sqrt(d) as a real number."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d b^2
        diff = self.a * self.a - self.d * self.b * self.b
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __eq__(self, o):
        o = self._wrap(o)
        return self.a == o.a and self.b == o.b

    def __ne__(self, o):
        return not self == o

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"
