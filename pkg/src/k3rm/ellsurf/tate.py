"""Kodaira fibre types from the valuations of (A, B, Delta), residue characteristic 0 or >= 5."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..exactmath.poly import UniPoly
from ..exactmath.qfactor import irreducible_factors
from ..exactmath.residue import ResidueField, root_count
from ..exactmath.rings import PrimeField
from .weierstrass import UnsupportedCharacteristic, WeierstrassModel

INF = 10**9


class NonMinimalModel(ValueError):
    pass


# places -----------------------------------------------------------------------
@dataclass(frozen=True)
class Place:
    kind: str  # "finite" or "infinity"
    poly: UniPoly | None = None

    def __post_init__(self):
        if self.kind == "finite":
            if self.poly is None or self.poly.degree < 1 or not self.poly.is_monic():
                raise ValueError("finite places need a monic nonconstant polynomial")
        elif self.kind != "infinity":
            raise ValueError(f"unknown place kind {self.kind!r}")

    @classmethod
    def infinity(cls) -> "Place":
        return cls("infinity")

    @property
    def degree(self) -> int:
        return 1 if self.kind == "infinity" else self.poly.degree

    def sort_key(self):
        if self.kind == "infinity":
            return (1, 0, ())
        return (0, self.poly.degree, tuple(self.poly.coeffs[::-1]))

    def __str__(self):
        return "t=inf" if self.kind == "infinity" else self.poly.to_str()


def valuation(f: UniPoly, pi: UniPoly) -> int:
    if f.is_zero():
        return INF
    v = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return v
        f, v = q, v + 1


# Kodaira symbols ----------------------------------------------------------------
_ADDITIVE_EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
_ADDITIVE_COMPONENTS = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}


def kodaira_symbol(vA: int, vB: int, vD: int) -> tuple[str, int]:
    """(symbol, n) with symbol in I, I*, II, III, IV, IV*, III*, II*; n is the index for I_n, I_n*."""
    if vA >= 4 and vB >= 6:
        raise NonMinimalModel(f"non-minimal valuations v(A)={vA}, v(B)={vB}")
    if vD == 0:
        return "I", 0
    if min(vA, vB) == 0:
        return "I", vD
    if vA == 2 and vB == 3:
        return "I*", vD - 6
    table = {2: "II", 3: "III", 4: "IV", 6: "I*", 8: "IV*", 9: "III*", 10: "II*"}
    if vD not in table:
        raise ValueError(f"inconsistent valuations ({vA}, {vB}, {vD})")
    return table[vD], 0


def type_name(sym: str, n: int) -> str:
    if sym == "I":
        return f"I{n}"
    if sym == "I*":
        return f"I{n}*"
    return sym


def euler_number(sym: str, n: int = 0) -> int:
    if sym == "I":
        return n
    if sym == "I*":
        return n + 6
    return _ADDITIVE_EULER[sym]


def component_count(sym: str, n: int = 0) -> int:
    if sym == "I":
        return max(n, 1)
    if sym == "I*":
        return n + 5
    return _ADDITIVE_COMPONENTS[sym]


def parse_type(name: str) -> tuple[str, int]:
    """Inverse of type_name."""
    if name.startswith("I") and name[1:2].isdigit():
        if name.endswith("*"):
            return "I*", int(name[1:-1])
        return "I", int(name[1:])
    if name in _ADDITIVE_EULER:
        return name, 0
    raise ValueError(f"unknown Kodaira type {name!r}")


# fibres -------------------------------------------------------------------------
@dataclass(frozen=True)
class KodairaFibre:
    place: Place
    symbol: str
    n: int
    valuations: tuple[int, int, int]
    split: str = "n/a"  # split / nonsplit / n/a
    leaf_roots: int | None = None  # roots of the I0* leaf cubic in the residue field

    @property
    def type(self) -> str:
        return type_name(self.symbol, self.n)

    @property
    def euler(self) -> int:
        return euler_number(self.symbol, self.n)

    @property
    def components(self) -> int:
        return component_count(self.symbol, self.n)

    @property
    def count(self) -> int:
        """Number of geometric fibres of this shape (the degree of the place)."""
        return self.place.degree

    @property
    def additive(self) -> bool:
        return self.symbol != "I"

    def describe(self) -> str:
        extra = ""
        if self.split != "n/a":
            extra = f" {self.split}"
        if self.leaf_roots is not None:
            extra += f" leaves={self.leaf_roots}"
        return f"{self.type} at {self.place} (deg {self.place.degree}){extra}"


def _residue_data(sym: str, n: int, A: UniPoly, B: UniPoly, pi: UniPoly) -> tuple[str, int | None]:
    """Split/nonsplit and I0* leaf data over the residue field F_p[t]/(pi)."""
    if not isinstance(A.ring, PrimeField):
        return "n/a", None
    R = ResidueField(pi)

    def red(f: UniPoly, k: int = 0):
        return R.convert(f.exact_div(pi ** k) if k else f)

    if sym == "I" and n >= 1:
        z = R.mul(R.convert(-2), R.mul(red(A), red(B)))
        return ("split" if R.is_square(z) else "nonsplit"), None
    if sym == "IV":
        return ("split" if R.is_square(red(B, 2)) else "nonsplit"), None
    if sym == "IV*":
        return ("split" if R.is_square(red(B, 4)) else "nonsplit"), None
    if sym == "I*" and n == 0:
        cubic = UniPoly([red(B, 3), red(A, 2), R.zero, R.one], R, _raw=True)
        r = root_count(cubic)
        return ("split" if r == 3 else "nonsplit"), r
    return "n/a", None


def _check_char(model: WeierstrassModel):
    if model.characteristic in (2, 3):
        raise UnsupportedCharacteristic("residue characteristic 2 or 3 is not supported")


def classify_place(model: WeierstrassModel, place: Place, e: int | None = None) -> KodairaFibre:
    """Kodaira fibre of a minimal short model at ``place`` (I0 for smooth fibres)."""
    _check_char(model)
    short = model.to_short_form()
    if place.kind == "infinity":
        A, B = short.infinity_chart(e)
        pi = UniPoly.gen(short.ring)
    else:
        A, B, pi = short.A, short.B, place.poly
    D = (A * A * A).scale(A.ring.convert(4)) + (B * B).scale(A.ring.convert(27))
    vals = (valuation(A, pi), valuation(B, pi), valuation(D, pi))
    sym, n = kodaira_symbol(*vals)
    split, leaves = _residue_data(sym, n, A, B, pi) if vals[2] > 0 else ("n/a", None)
    return KodairaFibre(place, sym, n, vals, split, leaves)


# surfaces -----------------------------------------------------------------------
@dataclass
class SurfaceAnalysis:
    model: WeierstrassModel  # minimal short model the fibres refer to
    e: int
    fibres: list[KodairaFibre] = field(default_factory=list)

    @property
    def euler_total(self) -> int:
        return sum(f.count * f.euler for f in self.fibres)

    @property
    def chi(self) -> int:
        return self.euler_total // 12

    @property
    def surface_class(self) -> str:
        return {12: "rational", 24: "K3"}.get(self.euler_total, "other")

    @property
    def degree_class(self) -> str:
        return {1: "rational", 2: "K3"}.get(self.e, "other")

    @property
    def shioda_tate_lower_bound(self) -> int:
        return 2 + sum(f.count * (f.components - 1) for f in self.fibres)

    def type_counts(self) -> Counter:
        c: Counter = Counter()
        for f in self.fibres:
            c[f.type] += f.count
        return c

    def reducible_counts(self) -> Counter:
        return Counter({k: v for k, v in self.type_counts().items() if k not in ("I1", "II")})

    def fibre_at_infinity(self) -> KodairaFibre | None:
        for f in self.fibres:
            if f.place.kind == "infinity":
                return f
        return None

    def summary(self) -> str:
        parts = [f"{v}x{k}" for k, v in sorted(self.type_counts().items(), key=_type_order)]
        return " + ".join(parts)


def _type_order(item):
    name = item[0]
    sym, n = parse_type(name)
    order = ["I", "I*", "II", "III", "IV", "IV*", "III*", "II*"].index(sym)
    return order, n


def analyze(model: WeierstrassModel, e: int | None = None) -> SurfaceAnalysis:
    """Fibres at every zero of the discriminant and at infinity, after minimalization."""
    _check_char(model)
    minimal = model.minimalize()
    e_min = minimal.euler_index()
    if e is None or e < e_min:
        e = e_min
    else:
        As, Bs = minimal.infinity_chart(e)
        if valuation(As, UniPoly.gen(minimal.ring)) >= 4 and valuation(Bs, UniPoly.gen(minimal.ring)) >= 6:
            e = e_min  # declared class over-twists infinity
    fibres = []
    for pi, _ in irreducible_factors(minimal.discriminant()):
        fib = classify_place(minimal, Place("finite", pi))
        if fib.valuations[2] > 0:
            fibres.append(fib)
    fib = classify_place(minimal, Place.infinity(), e)
    if fib.valuations[2] > 0:
        fibres.append(fib)
    fibres.sort(key=lambda f: f.place.sort_key())
    return SurfaceAnalysis(minimal, e, fibres)
