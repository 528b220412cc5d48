"""Weierstrass models y^2 = x^3 + A(t) x + B(t) over Q(t) or F_p(t)."""
from __future__ import annotations

from dataclasses import dataclass
from ..exactmath.poly import UniPoly
from ..exactmath.rings import GF, QQ

FORMS = ("short", "two_torsion", "three_isog")


class UnsupportedCharacteristic(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class WeierstrassModel:
    """``form`` decides how (c1, c2) are read.

    short:        y^2 = x^3 + c1 x + c2            (c1, c2) = (A, B)
    two_torsion:  y^2 = x (x^2 + 2 a x + b)        (c1, c2) = (a, b)
    three_isog:   y^2 = x^3 + 27 a (x - 4 b)^2     (c1, c2) = (a, b)
    """

    c1: UniPoly
    c2: UniPoly
    form: str = "short"
    name: str = ""

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.c1.ring != self.c2.ring:
            raise TypeError("coefficient rings differ")
        if self.form == "two_torsion":
            a, b = self.c1, self.c2
            if b.is_zero() or (a * a - b).is_zero():
                raise ValueError("two-torsion form needs b (a^2 - b) != 0")
        if self.discriminant().is_zero():
            raise ValueError("discriminant vanishes identically")

    # basic data ----------------------------------------------------------------
    @property
    def ring(self):
        return self.c1.ring

    @property
    def characteristic(self) -> int:
        return self.ring.characteristic

    @classmethod
    def short(cls, A, B, ring=QQ, name: str = "") -> "WeierstrassModel":
        A = A if isinstance(A, UniPoly) else UniPoly(A, ring)
        B = B if isinstance(B, UniPoly) else UniPoly(B, ring)
        return cls(A, B, "short", name)

    def a_invariants(self) -> tuple[UniPoly, UniPoly, UniPoly]:
        """(a2, a4, a6) with y^2 = x^3 + a2 x^2 + a4 x + a6."""
        R = self.ring
        zero = UniPoly((), R)
        if self.form == "short":
            return zero, self.c1, self.c2
        a, b = self.c1, self.c2
        if self.form == "two_torsion":
            return a.scale(R.convert(2)), b, zero
        # 27 a (x - 4b)^2 = 27 a x^2 - 216 a b x + 432 a b^2
        return a.scale(R.convert(27)), (a * b).scale(R.convert(-216)), (a * b * b).scale(R.convert(432))

    def rhs(self, x):
        a2, a4, a6 = self.a_invariants()
        return x * x * x + a2 * x * x + a4 * x + a6

    def to_short_form(self) -> "WeierstrassModel":
        if self.form == "short":
            return self
        p = self.characteristic
        if p in (2, 3):
            raise UnsupportedCharacteristic("completing the cube needs characteristic not 2, 3")
        R = self.ring
        a2, a4, a6 = self.a_invariants()
        third = R.inv(R.convert(3))
        A = a4 - (a2 * a2).scale(third)
        B = a6 - (a2 * a4).scale(third) + (a2 * a2 * a2).scale(R.div(R.convert(2), R.convert(27)))
        return WeierstrassModel(A, B, "short", self.name)

    def shift(self) -> UniPoly:
        """s(t) with x_short = x + s(t) (a2/3)."""
        R = self.ring
        a2 = self.a_invariants()[0]
        return a2.scale(R.inv(R.convert(3)))

    @property
    def A(self) -> UniPoly:
        return self.to_short_form().c1

    @property
    def B(self) -> UniPoly:
        return self.to_short_form().c2

    def discriminant(self) -> UniPoly:
        """4 A^3 + 27 B^2 of the short form (the constant -16 is dropped)."""
        a2, a4, a6 = self.a_invariants()
        R = self.ring
        if self.form == "short":
            A, B = a4, a6
            return (A * A * A).scale(R.convert(4)) + (B * B).scale(R.convert(27))
        # general formula, valid in every characteristic except 2
        b2 = a2.scale(R.convert(4))
        b4 = a4.scale(R.convert(2))
        b6 = a6.scale(R.convert(4))
        b8 = (a2 * a6).scale(R.convert(4)) - a4 * a4
        disc = -(b2 * b2 * b8) - (b4 * b4 * b4).scale(R.convert(8)) - (b6 * b6).scale(R.convert(27)) \
            + (b2 * b4 * b6).scale(R.convert(9))
        # -16 (4A^3 + 27B^2) = disc; rescale to match the short convention
        if self.characteristic == 2:
            return disc
        return disc.scale(R.inv(R.convert(-16)))

    # global invariants ------------------------------------------------------------
    def euler_index(self) -> int:
        """Smallest e >= 1 with deg A <= 4e and deg B <= 6e (the chart at infinity uses it);
        0 for a constant model, which is a product with the base."""
        A, B = self.A, self.B
        if A.degree <= 0 and B.degree <= 0:
            return 0
        e = 1
        if not A.is_zero():
            e = max(e, _ceil_div(A.degree, 4))
        if not B.is_zero():
            e = max(e, _ceil_div(B.degree, 6))
        return e

    def degree_class(self) -> str:
        """Rational / K3 candidate by the degree criterion (minimality not checked)."""
        e = self.euler_index()
        return {1: "rational", 2: "K3"}.get(e, "other")

    def infinity_chart(self, e: int | None = None) -> tuple[UniPoly, UniPoly]:
        """(s^{4e} A(1/s), s^{6e} B(1/s))."""
        e = e or self.euler_index()
        A, B = self.A, self.B
        As = A.reflect(4 * e) if not A.is_zero() else A
        Bs = B.reflect(6 * e) if not B.is_zero() else B
        return As, Bs

    def minimalize(self) -> "WeierstrassModel":
        """Short model with every finite non-minimal place (v(A) >= 4, v(B) >= 6) removed."""
        from ..exactmath.qfactor import irreducible_factors
        from .tate import valuation
        A, B = self.A, self.B
        g = B if A.is_zero() else (A if B.is_zero() else A.gcd(B))
        u = UniPoly([1], self.ring)
        for pi, _ in irreducible_factors(g):
            k = min(valuation(A, pi) // 4, valuation(B, pi) // 6)
            if k > 0:
                u = u * pi ** k
        if u.degree <= 0:
            return self.to_short_form()
        return WeierstrassModel(A.exact_div(u ** 4), B.exact_div(u ** 6), "short", self.name)

    def reduce_mod(self, p: int) -> "WeierstrassModel":
        if self.ring != QQ:
            raise TypeError("reduction needs a rational model")
        return WeierstrassModel(self.c1.reduce_mod(p), self.c2.reduce_mod(p), self.form, self.name)

    def __str__(self):
        names = {"short": ("A", "B"), "two_torsion": ("a", "b"), "three_isog": ("a", "b")}[self.form]
        return f"{self.form}: {names[0]} = {self.c1.to_str()}, {names[1]} = {self.c2.to_str()}"


def base_ring(spec: str):
    """``Q`` or ``Fp:<p>``."""
    if spec in ("Q", "QQ"):
        return QQ
    if spec.startswith("Fp:"):
        p = int(spec[3:])
        from ..exactmath.intutil import is_prime
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return GF(p)
    raise ValueError(f"unknown base {spec!r}")


def ring_tag(R) -> str:
    return "Q" if R == QQ else f"Fp:{R.p}"
