"""Explicit 2- and 3-isogenies, twist matching and the multiplier of the induced self-maps."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath.intutil import squarefree_part
from .exactmath.multipoly import MultiPoly
from .exactmath.poly import UniPoly
from .ellsurf.weierstrass import WeierstrassModel

VARS = ("x", "y", "a", "b")
TVARS = ("u", "v", "a", "b")


class IsogenyError(ValueError):
    pass


def _g(vars=VARS):
    return MultiPoly.gens(*vars)


@dataclass(frozen=True)
class IsogenyFormula:
    """source: y^2 = source_rhs(x); target: v^2 = target_rhs(u);
    map: u = u_num / u_den, v = v_num / v_den, polynomials in (x, y, a, b)."""

    degree: int
    source_rhs: MultiPoly
    target_rhs: MultiPoly
    u_num: MultiPoly
    u_den: MultiPoly
    v_num: MultiPoly
    v_den: MultiPoly
    label: str = ""


def isogeny_formula(degree: int, variant: str = "derived") -> IsogenyFormula:
    """The degree-2 map of the two-torsion form, or the degree-3 map of the three-isogeny form.

    For degree 3, ``variant="printed"`` returns the map exactly as displayed in the
    literature source (it does not satisfy the target equation, see the tests).
    """
    x, y, a, b = _g()
    u, v, ua, ub = _g(TVARS)
    if degree == 2:
        src = x * (x * x + a * x * 2 + b)
        tgt = u * (u * u - ua * u * 4 + (ua * ua - ub) * 4)
        return IsogenyFormula(2, src, tgt, y * y, x * x, y * (x * x - b), x * x, "two_torsion")
    if degree == 3:
        src = x ** 3 + a * (x - b * 4) ** 2 * 27
        tgt = u ** 3 - ua * (u - (ua + ub) * 108) ** 2 * 729
        if variant == "printed":
            un = (y * y * 2 + a * b * b * 2 - x ** 3 - a * x * x * Fraction(2, 3)) * 9
            vn = y * (a * b * x * (-4) + a * b * b * 8 - x ** 3) * 27
            return IsogenyFormula(3, src, tgt, un, x * x, vn, x ** 3, "three_isog_printed")
        un = (x ** 3 + a * x * x * 36 - a * b * x * 432 + a * b * b * 1728) * 9
        vn = y * (x ** 3 + a * b * x * 432 - a * b * b * 3456) * (-27)
        return IsogenyFormula(3, src, tgt, un, x * x, vn, x ** 3, "three_isog")
    raise IsogenyError("only degrees 2 and 3 are implemented")


def _as_xy(p: MultiPoly) -> MultiPoly:
    """Rename (u, v, a, b) -> (x, y, a, b) positionally."""
    return MultiPoly(VARS, p.terms)


def _target_coeffs(f: IsogenyFormula) -> list[MultiPoly]:
    """Coefficients of target_rhs in u (as polynomials in a, b over the source variable list)."""
    t = _as_xy(f.target_rhs)
    deg = t.degree_in("x")
    return [t.coefficient("x", k) for k in range(deg + 1)]


def verify_isogeny(degree: int, formula: IsogenyFormula | None = None) -> bool:
    """Substitute the map into the target equation and reduce modulo the source relation."""
    f = formula or isogeny_formula(degree)
    cs = _target_coeffs(f)
    n = len(cs) - 1  # cubic
    # v^2 = sum c_k u^k, cleared by u_den^n v_den^2
    lhs = f.v_num * f.v_num * f.u_den ** n
    rhs = MultiPoly(VARS)
    for k, c in enumerate(cs):
        rhs = rhs + c * f.u_num ** k * f.u_den ** (n - k) * f.v_den * f.v_den
    resid = (lhs - rhs).reduce_square("y", f.source_rhs)
    return resid.is_zero()


def mutate_sign(f: IsogenyFormula) -> IsogenyFormula:
    """Flip the sign of the lowest-order term of the u-numerator (mutation fixture)."""
    terms = dict(f.u_num.terms)
    key = min(terms)
    terms[key] = -terms[key]
    return IsogenyFormula(f.degree, f.source_rhs, f.target_rhs, MultiPoly(VARS, terms), f.u_den,
                          f.v_num, f.v_den, f.label + "_mutated")


def isogenous_curve(degree: int, a, b) -> tuple[tuple, IsogenyFormula]:
    """Target coefficients for concrete (a, b) (numbers or UniPolys) and the map."""
    if degree == 2:
        if _is_zero(b) or _is_zero(a * a - b):
            raise IsogenyError("degree 2 needs b (a^2 - b) != 0")
        # v^2 = u^3 - 4a u^2 + 4(a^2 - b) u
        return (a * -4, (a * a - b) * 4, a * 0), isogeny_formula(2)
    if degree == 3:
        if _is_zero(a):
            raise IsogenyError("degree 3 needs a != 0")
        if _is_zero(_disc3(a, b)):
            raise IsogenyError("degenerate three-isogeny form")
        # v^2 = u^3 - 729 a (u - 108(a+b))^2
        s = a + b
        return (a * -729, a * s * (729 * 216), a * s * s * (-729 * 108**2)), isogeny_formula(3)
    raise IsogenyError("only degrees 2 and 3 are implemented")


def _disc3(a, b):
    # discriminant of x^3 + 27a(x - 4b)^2 is a constant times a^2 b^3 (a + b)
    return a * b ** 3 * (a + b)


def _is_zero(z) -> bool:
    return z.is_zero() if hasattr(z, "is_zero") else z == 0


def kernel_support(degree: int) -> MultiPoly:
    """The common denominator of the map; it vanishes exactly on the kernel (x = 0)."""
    f = isogeny_formula(degree)
    return f.u_den


# differential pull-back ----------------------------------------------------------
def pullback_ratio(f: IsogenyFormula) -> Fraction:
    """The constant c0 with (du / v) o psi = c0 dx / y; raises if the ratio is not constant."""
    # du/dx along the curve: u depends on x only after reducing y^2
    un = f.u_num.reduce_square("y", f.source_rhs)
    if un.degree_in("y") > 0:
        raise IsogenyError("u-coordinate depends on y")
    ud = f.u_den
    du_num = un.derivative("x") * ud - un * ud.derivative("x")  # over ud^2
    # ratio = du/dx * y / v = du_num * y * v_den / (ud^2 * v_num)
    num = (du_num * _y() * f.v_den).reduce_square("y", f.source_rhs)
    den = (ud * ud * f.v_num).reduce_square("y", f.source_rhs)
    from .exactmath.multipoly import proportional
    c = proportional(num, den)
    if c is None:
        raise IsogenyError("pull-back of the invariant differential is not a constant multiple")
    return c


def _y() -> MultiPoly:
    return MultiPoly.var(VARS, "y")


# twists ----------------------------------------------------------------------------
def _sigma(p: UniPoly) -> UniPoly:
    return p.sigma()


def twist_match(a: UniPoly, b: UniPoly, degree: int, sign: int) -> bool:
    """Whether the isogenous curve is the pull-back of the source along t -> -t.

    Degree 2: a(-t) = sign a(t) and b(t) + b(-t) = a(t)^2.
    Degree 3: a(-t) = sign a(t) and b(t) + b(-t) = -a(t) (sign +1), b(-t) - b(t) = a(t) (sign -1).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a_s, b_s = _sigma(a), _sigma(b)
    if a_s != a.scale(a.ring.convert(sign)):
        return False
    if degree == 2:
        return b + b_s == a * a
    if degree == 3:
        if sign == 1:
            return b + b_s == -a
        return b_s - b == a
    raise IsogenyError("only degrees 2 and 3 are implemented")


def twist_kappa(degree: int, sign: int) -> int:
    """u = kappa x' on the twisted target; kappa^3 is the square of the y-scaling."""
    if degree == 2:
        return -2 * sign
    if degree == 3:
        return -27 * sign
    raise IsogenyError("only degrees 2 and 3 are implemented")


def twist_identity(model: WeierstrassModel, degree: int, kappa) -> bool:
    """Exact check that u = kappa x', v = mu y' (mu^2 = kappa^3) maps the isogenous curve onto
    the source model with t replaced by -t."""
    a, b = model.c1, model.c2
    R = a.ring
    k = R.convert(kappa)
    a_s, b_s = _sigma(a), _sigma(b)
    if degree == 2:
        # x'(x'^2 - (4a/k) x' + 4(a^2-b)/k^2) vs x'(x'^2 + 2a^s x' + b^s)
        return a_s.scale(R.convert(2)) == a.scale(R.div(R.convert(-4), k)) and \
            b_s == (a * a - b).scale(R.div(R.convert(4), R.mul(k, k)))
    # x'^3 - (729 a / k)(x' - 108(a+b)/k)^2 vs x'^3 + 27 a^s (x' - 4 b^s)^2
    return a_s.scale(R.convert(27)) == a.scale(R.div(R.convert(-729), k)) and \
        b_s.scale(R.convert(4)) == (a + b).scale(R.div(R.convert(108), k))


@dataclass
class SelfMapSpec:
    model: WeierstrassModel
    degree: int
    kappa: Fraction  # x-scaling of the twist isomorphism
    base_action: str = "t -> -t"

    @property
    def multiplier_square(self) -> Fraction:
        c0 = pullback_ratio(isogeny_formula(self.degree))
        # omega = dx dt / y pulls back to -(mu/kappa) c0 dx dt / y, and mu^2 = kappa^3
        return Fraction(self.kappa) * c0 * c0


def selfmap_for(model: WeierstrassModel) -> SelfMapSpec:
    """Detect the twist for a two_torsion / three_isog member and assemble the self-map."""
    degree = {"two_torsion": 2, "three_isog": 3}.get(model.form)
    if degree is None:
        raise IsogenyError("self-maps are assembled for two_torsion or three_isog forms")
    found = []
    for sign in (1, -1):
        kappa = twist_kappa(degree, sign)
        if twist_identity(model, degree, kappa):
            found.append(kappa)
    if not found:
        raise IsogenyError("no twist t -> -t matches the isogenous curve")
    return SelfMapSpec(model, degree, Fraction(found[0]))


def squareclass(q: Fraction) -> int:
    if q == 0:
        raise IsogenyError("zero multiplier")
    return int(squarefree_part(Fraction(q)))


def selfmap_multiplier_squareclass(spec: SelfMapSpec | WeierstrassModel) -> int:
    if isinstance(spec, WeierstrassModel):
        spec = selfmap_for(spec)
    if not twist_identity(spec.model, spec.degree, spec.kappa):
        raise IsogenyError("twist scaling does not match the model")
    return squareclass(spec.multiplier_square)


def all_multiplier_squareclasses(model: WeierstrassModel) -> list[int]:
    """Every square class realized by a matching twist (two for the alpha = 0 stratum)."""
    degree = {"two_torsion": 2, "three_isog": 3}[model.form]
    out = []
    for sign in (1, -1):
        k = twist_kappa(degree, sign)
        if twist_identity(model, degree, k):
            out.append(squareclass(SelfMapSpec(model, degree, Fraction(k)).multiplier_square))
    return sorted(out)


# numeric check for the fixed degree 5 / 7 surfaces -----------------------------------------
FIXED_SELFMAPS = {"rm5": (125, 5), "rm7": (49, 7)}  # base action t -> c / t, isogeny degree


@dataclass
class NumericMultiplierResult:
    name: str
    squareclass: int | None
    index: int | None
    samples: list = field(default_factory=list)  # (t0, d, integer matrix)

    @property
    def consistent(self) -> bool:
        return self.squareclass is not None


def _period_lattice(A, B):
    import mpmath as mp
    roots = mp.polyroots([1, 0, A, B], maxsteps=200, extraprec=200)
    if any(abs(mp.im(z)) > mp.mpf(10) ** (-mp.mp.dps // 2) for z in roots):
        return None
    e3, e2, e1 = sorted(mp.re(z) for z in roots)
    if min(e1 - e2, e2 - e3) < mp.mpf(10) ** (-mp.mp.dps // 2):
        return None  # singular fibre
    w1 = 2 * mp.pi / mp.agm(mp.sqrt(e1 - e3), mp.sqrt(e1 - e2))
    w2 = 2j * mp.pi / mp.agm(mp.sqrt(e1 - e3), mp.sqrt(e2 - e3))
    return w1, w2


def numeric_multiplier(name: str, t_values=(1, 2, 3, 7, 13, 20, 30, -20, -100), dps: int = 40,
                       candidates=(-35, -15, -10, -7, -5, -3, -2, -1, 1, 2, 3, 5, 7, 10, 15, 35)):
    """For t0 with totally real fibres, find squarefree d with sqrt(d) t0^2 / (+-c) L(t0) in L(c/t0).

    The base action t -> c/t sends dt to -c/t^2 dt, so the multiplier on omega is sqrt(d) up to
    sign, and the index of the lattice inclusion is the isogeny degree.
    """
    import mpmath as mp
    from .ellsurf.families import rm5, rm7
    c, _ = FIXED_SELFMAPS[name]
    model = {"rm5": rm5, "rm7": rm7}[name]()
    A, B = model.A, model.B
    samples = []
    with mp.workdps(dps):
        tol = mp.mpf(10) ** (-(dps // 3))
        for t0 in t_values:
            t0 = mp.mpf(t0)
            ev = lambda f, t: sum(mp.mpf(Fraction(co).numerator) / Fraction(co).denominator * t ** i  # noqa: E731
                                  for i, co in enumerate(f.coeffs))
            L1 = _period_lattice(ev(A, t0), ev(B, t0))
            L2 = _period_lattice(ev(A, c / t0), ev(B, c / t0))
            if L1 is None or L2 is None:
                continue
            M = mp.matrix([[mp.re(L2[0]), mp.re(L2[1])], [mp.im(L2[0]), mp.im(L2[1])]])
            for d in candidates:
                root = mp.sqrt(d) if d > 0 else 1j * mp.sqrt(-d)
                for sgn in (1, -1):
                    kappa = root * t0 ** 2 / (sgn * c)
                    rows, ok = [], True
                    for w in (kappa * L1[0], kappa * L1[1]):
                        s = mp.lu_solve(M, mp.matrix([mp.re(w), mp.im(w)]))
                        if max(abs(s[0] - mp.nint(s[0])), abs(s[1] - mp.nint(s[1]))) > tol:
                            ok = False
                            break
                        rows.append([int(mp.nint(s[0])), int(mp.nint(s[1]))])
                    if ok:
                        det = abs(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
                        samples.append((float(t0), d, rows, det))
    ds = {s[1] for s in samples}
    dets = {s[3] for s in samples}
    if len(ds) == 1 and len(dets) == 1 and samples:
        return NumericMultiplierResult(name, ds.pop(), dets.pop(), samples)
    return NumericMultiplierResult(name, None, None, samples)


FAMILY_SQUARECLASS = {"prop2cm": -2, "prop2rm": 2, "prop3cm": -3, "prop3rm": 3, "rm5": 5, "rm7": 7}
CLAIMED_FIELD = {"prop2cm": "Q(sqrt(-2))", "prop2rm": "Q(sqrt(2))", "prop3cm": "Q(sqrt(-3))",
                 "prop3rm": "Q(sqrt(3))", "rm5": "Q(sqrt(5))", "rm7": "Q(sqrt(7))"}


def family_multiplier(name: str, model: WeierstrassModel | None = None) -> int | None:
    """Square class of the multiplier for a family tag (numeric route for rm5 / rm7)."""
    if name in FIXED_SELFMAPS:
        return numeric_multiplier(name).squareclass
    if model is None:
        raise ValueError("a family member is needed")
    return selfmap_multiplier_squareclass(model)
