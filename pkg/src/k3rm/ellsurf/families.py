"""Constructors for the explicit elliptic families, including Dickson deformations."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..dickson import dickson_unipoly
from ..exactmath.poly import UniPoly
from ..exactmath.rings import QQ
from .weierstrass import WeierstrassModel


class FamilyParameterError(ValueError):
    pass


def _poly(cs, ring) -> UniPoly:
    if isinstance(cs, UniPoly):
        return cs
    if isinstance(cs, (int, Fraction, str)):
        cs = [cs]
    return UniPoly([Fraction(c) for c in cs], QQ) if ring == QQ else UniPoly(cs, ring)


def _bound(name: str, f: UniPoly, d: int, label: str):
    if f.degree > d:
        raise FamilyParameterError(
            f"{name}: deg({label}) = {f.degree} exceeds {d} "
            "(K3 criterion deg A <= 8, deg B <= 12 on the resulting model)"
        )


def _t(ring) -> UniPoly:
    return UniPoly.gen(ring)


def _in_t2(f: UniPoly) -> UniPoly:
    """f(t^2)."""
    t = _t(f.ring)
    return f(t * t)


def _cyclic_base(n: int, dickson, ring) -> UniPoly:
    """t^n, or p_{n,a}(t) when a Dickson parameter is given."""
    if dickson is None:
        return UniPoly.monomial(n, 1, ring)
    return dickson_unipoly(n, Fraction(dickson), None if ring == QQ else ring)


def res5(a1, a2, dickson=None, base_change: bool | None = None, ring=QQ) -> WeierstrassModel:
    """y^2 = x^3 + a1(t) x + a2(t), deg a_i <= i; with a Dickson parameter (or base_change=True)
    the base is pulled back along t = p_{5,a}(s)."""
    A, B = _poly(a1, ring), _poly(a2, ring)
    _bound("res5", A, 1, "a1")
    _bound("res5", B, 2, "a2")
    if base_change or dickson is not None:
        T = _cyclic_base(5, dickson if dickson is not None else 0, ring)
        A, B = A(T), B(T)
    return WeierstrassModel(A, B, "short", "res5")


def n7(b1, b0, c1, c0, dickson=None, ring=QQ) -> WeierstrassModel:
    """y^2 = x^3 + (b1 T + b0) x + (c1 T + c0), T = t^7 or p_{7,a}(t)."""
    T = _cyclic_base(7, dickson, ring)
    R = T.ring
    A = T.scale(R.convert(b1)) + UniPoly([b0], R)
    B = T.scale(R.convert(c1)) + UniPoly([c0], R)
    return WeierstrassModel(A, B, "short", "n7")


def n9(b, c1, c0, dickson=None, ring=QQ) -> WeierstrassModel:
    """y^2 = x^3 + b x + (c1 T + c0), T = t^9 or p_{9,a}(t)."""
    T = _cyclic_base(9, dickson, ring)
    R = T.ring
    return WeierstrassModel(UniPoly([b], R), T.scale(R.convert(c1)) + UniPoly([c0], R), "short", "n9")


def n11(b, c1, c0, dickson=None, ring=QQ) -> WeierstrassModel:
    """y^2 = x^3 + b x + (c1 T + c0), T = t^11 or p_{11,a}(t)."""
    T = _cyclic_base(11, dickson, ring)
    R = T.ring
    return WeierstrassModel(UniPoly([b], R), T.scale(R.convert(c1)) + UniPoly([c0], R), "short", "n11")


def prop2cm(alpha, beta, ring=QQ) -> WeierstrassModel:
    """Two-torsion form with a = alpha(t^2), b = alpha(t^2)^2 / 2 + t beta(t^2)."""
    al, be = _poly(alpha, ring), _poly(beta, ring)
    _bound("prop2cm", al, 2, "alpha")
    _bound("prop2cm", be, 3, "beta")
    a = _in_t2(al)
    b = (a * a).scale(ring.inv(ring.convert(2))) + _t(ring) * _in_t2(be)
    return WeierstrassModel(a, b, "two_torsion", "prop2cm")


def prop2rm(alpha, beta, ring=QQ) -> WeierstrassModel:
    """Two-torsion form with a = t alpha(t^2), b = t^2 alpha(t^2)^2 / 2 + t beta(t^2)."""
    al, be = _poly(alpha, ring), _poly(beta, ring)
    _bound("prop2rm", al, 1, "alpha")
    _bound("prop2rm", be, 3, "beta")
    t = _t(ring)
    a = t * _in_t2(al)
    b = (a * a).scale(ring.inv(ring.convert(2))) + t * _in_t2(be)
    return WeierstrassModel(a, b, "two_torsion", "prop2rm")


def prop2rm_nl(alpha, beta, ring=QQ) -> WeierstrassModel:
    """Noether-Lefschetz stratum of prop2rm: t | beta or deg beta < 3."""
    be = _poly(beta, ring)
    if not (be.is_zero() or ring.is_zero(be[0]) or be.degree < 3):
        raise FamilyParameterError("prop2rm_nl needs t | beta or deg(beta) < 3")
    m = prop2rm(alpha, be, ring)
    return WeierstrassModel(m.c1, m.c2, m.form, "prop2rm_nl")


def prop2_cm_stratum(beta, ring=QQ) -> WeierstrassModel:
    """alpha = 0: y^2 = x (x^2 + t beta(t^2))."""
    be = _poly(beta, ring)
    _bound("prop2_cm_stratum", be, 3, "beta")
    a = UniPoly((), ring)
    return WeierstrassModel(a, _t(ring) * _in_t2(be), "two_torsion", "prop2_cm_stratum")


def prop3cm(alpha, beta, ring=QQ) -> WeierstrassModel:
    """Three-isogeny form with a = alpha(t^2), b = -a/2 + t beta(t^2)."""
    al, be = _poly(alpha, ring), _poly(beta, ring)
    _bound("prop3cm", al, 2, "alpha")
    _bound("prop3cm", be, 1, "beta")
    a = _in_t2(al)
    b = a.scale(ring.convert(Fraction(-1, 2))) + _t(ring) * _in_t2(be)
    return WeierstrassModel(a, b, "three_isog", "prop3cm")


def prop3rm(alpha, beta, ring=QQ) -> WeierstrassModel:
    """Three-isogeny form with a = t alpha(t^2), b = -a/2 + beta(t^2)."""
    al, be = _poly(alpha, ring), _poly(beta, ring)
    _bound("prop3rm", al, 1, "alpha")
    _bound("prop3rm", be, 2, "beta")
    a = _t(ring) * _in_t2(al)
    b = a.scale(ring.convert(Fraction(-1, 2))) + _in_t2(be)
    return WeierstrassModel(a, b, "three_isog", "prop3rm")


def _prod(*fs: UniPoly) -> UniPoly:
    out = UniPoly([1], fs[0].ring)
    for f in fs:
        out = out * f
    return out


def rm7(ring=QQ) -> WeierstrassModel:
    P = lambda cs: UniPoly(cs, ring)  # noqa: E731
    q1 = P([49, 13, 1])
    q2 = P([1, 5, 1])
    q3 = P([-49, 0, 1])
    q4 = P([-7, 70, 63, 14, 1])
    A = _prod(q1, q2, q3, q3).scale(ring.convert(-27))
    B = _prod(q1, q4, q3, q3, q3).scale(ring.convert(54))
    return WeierstrassModel(A, B, "short", "rm7")


def rm5(ring=QQ) -> WeierstrassModel:
    P = lambda cs: UniPoly(cs, ring)  # noqa: E731
    q125 = P([-125, 0, 1])
    A = _prod(q125, q125, P([5, 10, 1]), P([125, 22, 1])).scale(ring.convert(-27))
    B = _prod(P([-1, 4, 1]), q125, q125, q125, P([125, 22, 1]), P([125, 22, 1])).scale(ring.convert(-54))
    return WeierstrassModel(A, B, "short", "rm5")


RM5_SECTION_X = (-3, [-125, 0, 1], [35, 16, 1])  # -3 (t^2 - 125)(t^2 + 16 t + 35)


def rm5_section_x(ring=QQ) -> UniPoly:
    c, f, g = RM5_SECTION_X
    return (UniPoly(f, ring) * UniPoly(g, ring)).scale(ring.convert(c))


# registry and sampling ------------------------------------------------------------
@dataclass(frozen=True)
class FamilyInfo:
    name: str
    build: Callable
    params: tuple[tuple[str, int], ...]  # (parameter, max degree); -1 marks a scalar
    generic_finite_places: int | None  # distinct finite singular fibres of a generic member
    fixed: bool = False


FAMILIES: dict[str, FamilyInfo] = {
    "res5": FamilyInfo("res5", res5, (("a1", 1), ("a2", 2)), 4),
    "n7": FamilyInfo("n7", n7, (("b1", -1), ("b0", -1), ("c1", -1), ("c0", -1)), 21),
    "n9": FamilyInfo("n9", n9, (("b", -1), ("c1", -1), ("c0", -1)), 18),
    "n11": FamilyInfo("n11", n11, (("b", -1), ("c1", -1), ("c0", -1)), 22),
    "prop2cm": FamilyInfo("prop2cm", prop2cm, (("alpha", 2), ("beta", 3)), 16),
    "prop2rm": FamilyInfo("prop2rm", prop2rm, (("alpha", 1), ("beta", 3)), 13),
    "prop3cm": FamilyInfo("prop3cm", prop3cm, (("alpha", 2), ("beta", 1)), 12),
    "prop3rm": FamilyInfo("prop3rm", prop3rm, (("alpha", 1), ("beta", 2)), 11),
    "rm7": FamilyInfo("rm7", rm7, (), None, fixed=True),
    "rm5": FamilyInfo("rm5", rm5, (), None, fixed=True),
}

DICKSON_FAMILIES = {"res5": 5, "n7": 7, "n9": 9, "n11": 11}


def family(name: str, *args, **kwargs) -> WeierstrassModel:
    extra = {
        "prop2rm_nl": prop2rm_nl,
        "prop2_cm_stratum": prop2_cm_stratum,
    }
    if name in FAMILIES:
        return FAMILIES[name].build(*args, **kwargs)
    if name in extra:
        return extra[name](*args, **kwargs)
    raise FamilyParameterError(f"unknown family {name!r}")


def _draw(rng: random.Random, deg: int, bound: int) -> list[int] | int:
    nz = [c for c in range(-bound, bound + 1) if c]
    if deg < 0:
        return rng.choice(nz)
    return [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice(nz)]


def random_member(name: str, rng: random.Random, bound: int = 5, dickson: bool = False,
                  tries: int = 200) -> tuple[WeierstrassModel, dict]:
    """Seeded generic member: leading coefficients nonzero and no merged singular fibres."""
    from ..exactmath.qfactor import irreducible_factors
    info = FAMILIES[name]
    if info.fixed:
        return info.build(), {}
    for _ in range(tries):
        params = {p: _draw(rng, d, bound) for p, d in info.params}
        if dickson:
            params["dickson"] = rng.choice([c for c in range(-bound, bound + 1) if c])
        try:
            model = info.build(**params)
        except ValueError:
            continue
        expected = info.generic_finite_places
        if dickson:
            expected = {"res5": 20}.get(name, expected)
        short = model.minimalize()
        n = sum(g.degree for g, _ in irreducible_factors(short.discriminant()))
        if n == expected:
            return model, params
    raise RuntimeError(f"no generic member of {name} found in {tries} draws")
