"""Text formats: coefficient lists, surface files, field spec files, lattice expressions."""
from __future__ import annotations

import re
from fractions import Fraction

from ..exactmath.poly import UniPoly
from ..exactmath.rings import QQ
from ..ellsurf.weierstrass import WeierstrassModel, base_ring, ring_tag


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(where + msg)
        self.line, self.col = line, col


# coefficient lists ---------------------------------------------------------------
_NUM = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not _NUM.match(s):
        raise ParseError(f"not an exact rational: {s!r}")
    return Fraction(s)


def parse_list(s: str) -> list[Fraction]:
    """``[c0, c1, ...]`` lowest degree first; ``[]`` is the zero polynomial."""
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {s!r}")
    body = s[1:-1].strip()
    if not body:
        return []
    return [parse_rational(x) for x in body.split(",")]


def fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def fmt_list(cs) -> str:
    return "[" + ", ".join(fmt_rational(int(c) if isinstance(c, int) else c) for c in cs) + "]"


def fmt_poly(f: UniPoly) -> str:
    return fmt_list(f.coeffs)


def to_ring(cs: list[Fraction], R) -> UniPoly:
    if R == QQ:
        return UniPoly(cs, QQ)
    out = []
    for c in cs:
        if c.denominator % R.p == 0:
            raise ParseError(f"coefficient {fmt_rational(c)} does not reduce mod {R.p}")
        out.append(c.numerator * pow(c.denominator, -1, R.p) % R.p)
    return UniPoly(out, R)


# surface files --------------------------------------------------------------------
SURFACE_KEYS = ("base", "form", "A", "B", "a", "b", "family", "params")
_FORM_NAMES = {"short": "short", "twotorsion": "two_torsion", "threeisog": "three_isog"}
_FORM_PRINT = {v: k for k, v in _FORM_NAMES.items()}
_PARAM = re.compile(r"(\w+)\s*=\s*(\[[^\]]*\]|[^,\s]+)")


def _kv_lines(text: str) -> list[tuple[int, str, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected `key = value`", i, 1)
        k, v = line.split("=", 1)
        out.append((i, k.strip(), v.strip()))
    return out


def parse_params(s: str) -> dict:
    out = {}
    pos = 0
    for m in _PARAM.finditer(s):
        gap = s[pos:m.start()].strip(" ,;")
        if gap:
            raise ParseError(f"cannot read parameters near {gap!r}")
        k, v = m.group(1), m.group(2)
        out[k] = [int(c) if c.denominator == 1 else c for c in parse_list(v)] if v.startswith("[") \
            else (int(parse_rational(v)) if parse_rational(v).denominator == 1 else parse_rational(v))
        pos = m.end()
    if s[pos:].strip(" ,;"):
        raise ParseError(f"cannot read parameters near {s[pos:]!r}")
    return out


def parse_surface(text: str) -> WeierstrassModel:
    seen: dict[str, tuple[int, str]] = {}
    for i, k, v in _kv_lines(text):
        if k not in SURFACE_KEYS:
            raise ParseError(f"unknown key {k!r}", i, 1)
        if k in seen:
            raise ParseError(f"duplicate key {k!r}", i, 1)
        seen[k] = (i, v)
    try:
        R = base_ring(seen.get("base", (0, "Q"))[1])
    except ValueError as e:
        raise ParseError(str(e), seen.get("base", (None,))[0], 1) from None
    if "family" in seen:
        from ..ellsurf.families import family
        extra = set(seen) - {"family", "params", "base"}
        if extra:
            raise ParseError(f"family shorthand cannot be combined with {sorted(extra)}")
        name = seen["family"][1]
        params = parse_params(seen["params"][1]) if "params" in seen else {}
        try:
            model = family(name, **params)
        except (TypeError, ValueError) as e:
            raise ParseError(f"family {name}: {e}", seen["family"][0], 1) from None
        if R != QQ:
            model = model.reduce_mod(R.p)
        return model
    form = _FORM_NAMES.get(seen.get("form", (0, "short"))[1])
    if form is None:
        raise ParseError(f"unknown form {seen['form'][1]!r}", seen["form"][0], 1)
    keys = ("A", "B") if form == "short" else ("a", "b")
    wrong = {"A", "B", "a", "b"} - set(keys)
    for k in wrong:
        if k in seen:
            raise ParseError(f"key {k!r} does not belong to form {_FORM_PRINT[form]}", seen[k][0], 1)
    polys = []
    for k in keys:
        if k not in seen:
            raise ParseError(f"missing key {k!r}")
        line, v = seen[k]
        try:
            polys.append(to_ring(parse_list(v), R))
        except ParseError as e:
            raise ParseError(str(e), line, len(k) + 4) from None
    try:
        return WeierstrassModel(polys[0], polys[1], form)
    except ValueError as e:
        raise ParseError(str(e)) from None


def print_surface(model: WeierstrassModel) -> str:
    names = ("A", "B") if model.form == "short" else ("a", "b")
    lines = [f"base = {ring_tag(model.ring)}", f"form = {_FORM_PRINT[model.form]}",
             f"{names[0]} = {fmt_poly(model.c1)}", f"{names[1]} = {fmt_poly(model.c2)}"]
    return "\n".join(lines) + "\n"


# field spec files ----------------------------------------------------------------------
def parse_field_spec(text: str) -> dict:
    """``f``, ``delta``, ``udelta`` lists; a trailing ``/q`` is a global denominator."""
    out: dict = {}
    for i, k, v in _kv_lines(text):
        if k not in ("f", "delta", "udelta", "l"):
            raise ParseError(f"unknown key {k!r}", i, 1)
        if k == "l":
            out["l"] = int(v)
            continue
        den = 1
        m = re.match(r"^(\[.*\])\s*/\s*(\d+)$", v)
        if m:
            v, den = m.group(1), int(m.group(2))
        cs = parse_list(v)
        if any(c.denominator != 1 for c in cs):
            raise ParseError("use integer coefficients with a global /q denominator", i, len(k) + 4)
        out[k] = ([int(c) for c in cs], den)
    for k in ("f", "delta", "udelta"):
        if k not in out:
            raise ParseError(f"missing key {k!r}")
    f, fden = out["f"]
    if fden != 1 or not f or f[-1] != 1:
        raise ParseError("f must be a monic integer polynomial")
    m = len(f) - 1
    for k in ("delta", "udelta"):
        if len(out[k][0]) > m:
            raise ParseError(f"{k} has more than deg f = {m} coordinates")
    out["f"] = f
    return out


# lattice expressions -----------------------------------------------------------------
_TERM = re.compile(r"^(?P<name>U|E8|A\d+|D\d+|diag|<[^>]*>)(\((?P<arg>[^)]*)\))?(\^(?P<k>\d+))?$")


def parse_lattice(expr: str):
    """Direct sums like ``U+U(2)+E8(-1)^2+<-1>`` or ``diag(1,1,-1)``."""
    from ..qform import diag, direct_sum, standard_lattice
    parts = []
    depth, cur = 0, ""
    for ch in expr.replace(" ", ""):
        if ch in "(<":
            depth += 1
        elif ch in ")>":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    forms = []
    for p in parts:
        m = _TERM.match(p)
        if not m:
            raise ParseError(f"cannot read lattice term {p!r}")
        name, arg, k = m.group("name"), m.group("arg"), int(m.group("k") or 1)
        if name.startswith("<"):
            G = diag(*[parse_rational(x) for x in name[1:-1].split(",")])
            if arg is not None:
                G = G.rescale(parse_rational(arg))
        elif name == "diag":
            G = diag(*[parse_rational(x) for x in (arg or "").split(",")])
        elif name == "U":
            G = standard_lattice("U", parse_rational(arg)) if arg else standard_lattice("U")
        else:
            G = standard_lattice(name, rescale=parse_rational(arg) if arg else None)
        forms.extend([G] * k)
    return direct_sum(*forms)
