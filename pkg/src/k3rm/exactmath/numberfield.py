"""Number fields Q[x]/(f) on the power basis."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .irreducible import IrreducibilityCertificate, certify_irreducible
from .linalg import Matrix, mat, trace as mtrace
from .poly import UniPoly
from .realroots import RealRootBox, sign_at_root, sturm_isolate


class NumberField:
    """Q(alpha) with alpha a root of the monic integer polynomial f."""

    def __init__(self, f: UniPoly | Sequence[int], certify: bool = True):
        if not isinstance(f, UniPoly):
            f = UniPoly(f)
        if not f.is_monic():
            raise ValueError("defining polynomial must be monic")
        f.integer_coeffs()
        self.f = f
        self.m = f.degree
        if self.m < 1:
            raise ValueError("degree must be at least 1")
        self.certificate: IrreducibilityCertificate | None = None
        if certify:
            self.certificate = certify_irreducible(f)
            if not self.certificate.irreducible:
                raise ValueError(f"{f.to_str('x')} is reducible")
        self._boxes: list[RealRootBox] | None = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.f == self.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"NumberField({self.f.to_str('x')})"

    # elements ------------------------------------------------------------
    def __call__(self, coords) -> "NFElem":
        if isinstance(coords, UniPoly):
            return NFElem(self, (coords % self.f).coeffs)
        if isinstance(coords, (int, Fraction)):
            return NFElem(self, (coords,))
        return NFElem(self, coords)

    @property
    def gen(self) -> "NFElem":
        return self([0, 1]) if self.m > 1 else self([-self.f.coeffs[0]])

    @property
    def one(self) -> "NFElem":
        return self([1])

    def discriminant(self) -> Fraction:
        return self.f.discriminant()

    # embeddings ------------------------------------------------------------
    def real_roots(self) -> list[RealRootBox]:
        if self._boxes is None:
            self._boxes = sturm_isolate(self.f)
        return self._boxes

    def is_totally_real(self) -> bool:
        return len(self.real_roots()) == self.m

    def signs(self, x: "NFElem") -> list[int]:
        """Signs of x under the real embeddings, in ascending root order."""
        return [sign_at_root(x.poly(), self.f, b) for b in self.real_roots()]


class NFElem:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > field.m:
            cs = list((UniPoly(cs) % field.f).coeffs)
        cs += [Fraction(0)] * (field.m - len(cs))
        self.field = field
        self.coords = tuple(cs)

    def poly(self) -> UniPoly:
        return UniPoly(self.coords)

    def _wrap(self, o) -> "NFElem":
        if isinstance(o, NFElem):
            if o.field != self.field:
                raise TypeError("elements of different fields")
            return o
        return self.field(o)

    def __add__(self, o):
        o = self._wrap(o)
        return NFElem(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, [-a for a in self.coords])

    def __sub__(self, o):
        return self + (-self._wrap(o))

    def __rsub__(self, o):
        return self._wrap(o) - self

    def __mul__(self, o):
        o = self._wrap(o)
        return self.field(self.poly() * o.poly())

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self * nf_inverse(self._wrap(o))

    def __rtruediv__(self, o):
        return self._wrap(o) * nf_inverse(self)

    def __pow__(self, n: int):
        if n < 0:
            return nf_inverse(self) ** (-n)
        out = self.field.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        try:
            o = self._wrap(o)
        except TypeError:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"NFElem({self.poly().to_str('a')})"

    def mul_matrix(self) -> Matrix:
        """Regular representation: column j holds the coordinates of x * alpha^j."""
        m = self.field.m
        cols = []
        xp = self.poly()
        for j in range(m):
            v = (xp * UniPoly.monomial(j)) % self.field.f
            cols.append([v[i] for i in range(m)])
        return mat([[cols[j][i] for j in range(m)] for i in range(m)])

    def trace(self) -> Fraction:
        return nf_trace(self, self.field)

    def charpoly(self) -> UniPoly:
        return charpoly(self.mul_matrix())


def nf_trace(x: NFElem, field: NumberField | None = None) -> Fraction:
    """Trace of multiplication by x on the power basis."""
    return mtrace(x.mul_matrix())


def nf_inverse(x: NFElem, field: NumberField | None = None) -> NFElem:
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero element")
    g, s, _ = x.poly().xgcd(x.field.f)
    if g.degree != 0:
        raise ArithmeticError("element is a zero divisor")
    return x.field(s)


def charpoly(A: Matrix) -> UniPoly:
    """Characteristic polynomial det(t I - A) by Faddeev-LeVerrier."""
    from .linalg import identity, matadd, matmul
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = identity(n, 0)
    for k in range(1, n + 1):
        M = matadd(matmul(A, M), identity(n, coeffs[n - k + 1]))
        coeffs[n - k] = -mtrace(matmul(A, M)) / k
    return UniPoly(coeffs)


def is_algebraic_integer(x: NFElem) -> bool:
    return all(c.denominator == 1 for c in x.charpoly().coeffs)
