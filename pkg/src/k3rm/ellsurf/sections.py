"""Sections of elliptic surfaces: verification, heights, constant-x sections."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactmath.intutil import rational_sqrt
from ..exactmath.poly import UniPoly
from ..exactmath.ratfunc import RatFunc
from ..exactmath.rings import QQ
from .tate import INF, KodairaFibre, SurfaceAnalysis, valuation
from .weierstrass import WeierstrassModel


class HeightUnsupported(ValueError):
    pass


@dataclass(frozen=True)
class Section:
    """x(t) and y(t) = sqrt(c) * w(t): ``y_scale`` c is 1 for sections over the base field,
    otherwise a constant recording the quadratic extension the section is defined over."""

    x: RatFunc
    y: RatFunc | None = None
    y_scale: object = 1
    zero: bool = False  # the point at infinity

    @classmethod
    def zero_section(cls, ring=QQ) -> "Section":
        return cls(RatFunc(UniPoly((), ring)), None, 1, True)

    @property
    def rational(self) -> bool:
        return self.y_scale == 1


def _rf(f, ring) -> RatFunc:
    if isinstance(f, RatFunc):
        return f
    if isinstance(f, UniPoly):
        return RatFunc(f)
    if isinstance(f, (list, tuple)):
        return RatFunc(UniPoly(f, ring))
    return RatFunc(UniPoly([f], ring))


def _scalar_sqrt(c, ring):
    if ring == QQ:
        return rational_sqrt(Fraction(c))
    p = ring.p
    c %= p
    if c == 0:
        return 0
    if pow(c, (p - 1) // 2, p) != 1:
        return None
    return next(r for r in range(p) if r * r % p == c)


def _square_class(c, ring):
    """Canonical representative of c modulo squares."""
    if ring == QQ:
        from ..exactmath.intutil import squarefree_part
        return Fraction(squarefree_part(Fraction(c)))
    if _scalar_sqrt(c, ring) is not None:
        return 1
    return next(r for r in range(2, ring.p) if pow(r, (ring.p - 1) // 2, ring.p) != 1)


def poly_sqrt(f: UniPoly, up_to_constant: bool = False):
    """Exact square root of a polynomial.

    Returns w with f = w^2, or None.  With ``up_to_constant`` returns (c, w) with
    f = c w^2 and c a square-class representative, or None.
    """
    if f.is_zero():
        return (1, f) if up_to_constant else f
    root = UniPoly([1], f.ring)
    for g, m in f.squarefree_decomposition():
        if m % 2:
            return None
        root = root * g ** (m // 2)
    R = f.ring
    if up_to_constant:
        c = _square_class(f.lc, R)
        w = _scalar_sqrt(R.div(f.lc, R.convert(c)), R)
        return (1 if c == 1 else c), root.scale(R.convert(w))
    lc = _scalar_sqrt(f.lc, R)
    if lc is None:
        return None
    return root.scale(R.convert(lc))


def ratfunc_sqrt(r: RatFunc, up_to_constant: bool = False):
    n = poly_sqrt(r.num, up_to_constant)
    d = poly_sqrt(r.den)  # denominators are monic
    if n is None or d is None:
        return None
    if up_to_constant:
        return n[0], RatFunc(n[1], d)
    return RatFunc(n, d)


def _rhs(model: WeierstrassModel, x: RatFunc) -> RatFunc:
    a2, a4, a6 = model.a_invariants()
    return x * x * x + x * x * RatFunc(a2) + x * RatFunc(a4) + RatFunc(a6)


def verify_section(model: WeierstrassModel, x, y=None, base_only: bool = False, y_scale=1) -> bool:
    """True if (x, y) lies on the model.

    With y omitted, the right-hand side must be a square in kbar(t), or in k(t) when
    ``base_only`` is set.  A given y is read as sqrt(y_scale) * y.
    """
    if x is None:
        return True  # zero section
    x = _rf(x, model.ring)
    rhs = _rhs(model, x)
    if y is None:
        if base_only:
            return ratfunc_sqrt(rhs) is not None
        return ratfunc_sqrt(rhs, True) is not None
    y = _rf(y, model.ring)
    return y * y * RatFunc.coerce(y_scale, model.ring) == rhs


def make_section(model: WeierstrassModel, x, y=None) -> Section:
    x = _rf(x, model.ring)
    if y is None:
        got = ratfunc_sqrt(_rhs(model, x), True)
        if got is None:
            raise ValueError("x-coordinate does not give a section: right-hand side is not a square")
        c, w = got
        return Section(x, w, c)
    y = _rf(y, model.ring)
    if y * y != _rhs(model, x):
        raise ValueError("point does not satisfy the curve equation")
    return Section(x, y)


# heights ---------------------------------------------------------------------------
_ADDITIVE_CONTRIBUTION = {"III": Fraction(1, 2), "IV": Fraction(2, 3), "IV*": Fraction(4, 3),
                          "III*": Fraction(3, 2)}


def _ord(r: RatFunc, pi: UniPoly) -> int:
    if r.is_zero():
        return INF
    return valuation(r.num, pi) - valuation(r.den, pi)


def _to_minimal_x(model: WeierstrassModel, analysis: SurfaceAnalysis, x: RatFunc) -> RatFunc:
    """x on the given model -> x on the analysis model (short form, then the minimal rescaling)."""
    xs = x + RatFunc(model.shift()) if model.form != "short" else x
    short = model.to_short_form()
    A0, A1 = short.A, analysis.model.A
    if A0 == A1 and short.B == analysis.model.B:
        return xs
    # minimalization divided (A, B) by (u^4, u^6)
    ref0, ref1 = (A0, A1) if not A0.is_zero() else (short.B, analysis.model.B)
    k = 4 if not A0.is_zero() else 6
    u_k = ref0.exact_div(ref1)
    u = _kth_root(u_k, k)
    return xs / RatFunc(u * u)


def _kth_root(f: UniPoly, k: int) -> UniPoly:
    out = UniPoly([1], f.ring)
    for g, m in f.squarefree_decomposition():
        out = out * g ** (m // k)
    c = f.exact_div(out ** k)
    if c.degree != 0:
        raise ValueError("minimalizing factor is not a perfect power")
    return out


def _local_contribution(fib: KodairaFibre, A: UniPoly, B: UniPoly, x: RatFunc, pi: UniPoly) -> Fraction:
    """Correction term for a section meeting the fibre at pi (x integral at pi)."""
    y2 = x * x * x + x * RatFunc(A) + RatFunc(B)
    if fib.symbol == "I":
        n = fib.n
        if n < 2:
            return Fraction(0)
        node = x * RatFunc(A.scale(A.ring.convert(2))) + RatFunc(B.scale(B.ring.convert(3)))
        if _ord(node, pi) <= 0:
            return Fraction(0)
        i = min(_ord(y2, pi) // 2, n // 2)
        if n > 9:
            raise HeightUnsupported(f"I{n} beyond the implemented table at {fib.place}")
        return Fraction(i * (n - i), n)
    if _ord(x, pi) <= 0:
        return Fraction(0)  # identity component
    if fib.type == "I0*":
        return Fraction(1)
    if fib.type in _ADDITIVE_CONTRIBUTION:
        return _ADDITIVE_CONTRIBUTION[fib.type]
    raise HeightUnsupported(f"no height contribution implemented for {fib.type} at {fib.place}")


def section_height(model: WeierstrassModel, section: Section, analysis: SurfaceAnalysis) -> Fraction:
    """h(P) = 2 chi + 2 (P.O) - sum of local contributions."""
    if section.zero:
        return Fraction(0)
    if not verify_section(model, section.x, section.y, y_scale=section.y_scale):
        raise ValueError("section does not lie on the model")
    x = _to_minimal_x(model, analysis, section.x)
    short = analysis.model
    A, B = short.A, short.B
    e = analysis.e
    R = short.ring
    po = Fraction(0)
    contr = Fraction(0)
    # finite places: poles of x and bad fibres
    if x.den.degree > 0:
        from ..exactmath.qfactor import irreducible_factors
        for pi, m in irreducible_factors(x.den):
            po += Fraction(m, 2) * pi.degree
    for fib in analysis.fibres:
        if fib.place.kind == "finite":
            pi = fib.place.poly
            if valuation(x.den, pi) > 0:
                continue
            contr += _local_contribution(fib, A, B, x, pi) * fib.count
    # infinity: x* = s^{2e} x(1/s)
    dx = x.degree()
    s = UniPoly.gen(R)
    if 2 * e - dx < 0:
        po += Fraction(dx - 2 * e, 2)
    else:
        fib = analysis.fibre_at_infinity()
        if fib is not None:
            num = x.num.reflect(x.num.degree)
            den = x.den.reflect(x.den.degree)
            xs = RatFunc(num * s ** (2 * e - dx), den)
            As, Bs = short.infinity_chart(e)
            contr += _local_contribution(fib, As, Bs, xs, s)
    return 2 * analysis.chi + 2 * po - contr


# constant-x sections on res5 members ----------------------------------------------------
@dataclass(frozen=True)
class ConstantXSections:
    condition: UniPoly  # polynomial in c whose roots give x = c
    squarefree: bool
    degenerate: bool
    section_count: int  # geometric sections (two signs of y per root)
    rational_roots: tuple


def constant_x_sections(model: WeierstrassModel) -> ConstantXSections:
    """x = c gives a section iff c^3 + a1(t) c + a2(t) is a square in kbar[t]."""
    A, B = model.A, model.B
    if A.degree > 1 or B.degree > 2:
        raise ValueError("expects a rational res5 member (deg a1 <= 1, deg a2 <= 2)")
    R = model.ring
    p, q = A[0] if A.degree >= 0 else R.zero, A[1] if A.degree >= 1 else R.zero
    r, s_, u = (B[i] if B.degree >= i else R.zero for i in range(3))
    c = UniPoly.gen(R)
    const = c ** 3 + c.scale(p) + UniPoly([r], R)
    lin = c.scale(q) + UniPoly([s_], R)
    # RHS = const + lin t + u t^2; a square iff lin^2 - 4 u const = 0
    cond = lin * lin - const.scale(R.mul(R.convert(4), u))
    degenerate = R.is_zero(u) or cond.degree < 3
    sqf = not degenerate and cond.gcd(cond.derivative()).degree == 0
    roots = tuple(_rational_roots(cond)) if not cond.is_zero() else ()
    count = 2 * cond.degree if sqf else 0
    return ConstantXSections(cond, sqf, degenerate, count, roots)


def _rational_roots(f: UniPoly) -> list:
    from ..exactmath.qfactor import irreducible_factors
    if f.degree <= 0:
        return []
    out = []
    for g, _ in irreducible_factors(f):
        if g.degree == 1:
            out.append(f.ring.neg(g[0]))
    return sorted(out)
