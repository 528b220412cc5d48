"""Trace forms Tr(gamma^-1 x y) on orders of totally real fields, their
certification, and the assembled lattices with diagonal field action."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..exactmath.intutil import factorint
from ..exactmath.linalg import (Matrix, block_diag, hnf_rows, identity, inverse, is_integral,
                                kernel_mod_p, mat, matmul, transpose)
from ..exactmath.numberfield import NFElem, NumberField, nf_inverse, nf_trace
from ..qform import GramForm, diag, direct_sum, rationally_isometric, signature
from .endo import EndoMatrix, adjoint_check
from .table1 import FIELD_DATA


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class TraceFormSpec:
    field: NumberField
    delta: NFElem
    u_delta: NFElem
    basis: Matrix = None  # rows: order basis on the power basis

    def __post_init__(self):
        if self.basis is None:
            object.__setattr__(self, "basis", identity(self.field.m))
        else:
            object.__setattr__(self, "basis", mat(self.basis))
        if self.delta.is_zero() or self.u_delta.is_zero():
            raise ValueError("generators must be nonzero")

    @property
    def m(self) -> int:
        return self.field.m

    def with_basis(self, basis: Matrix) -> "TraceFormSpec":
        return TraceFormSpec(self.field, self.delta, self.u_delta, basis)

    def basis_elements(self) -> list[NFElem]:
        return [self.field(row) for row in self.basis]

    def order_coords(self, x: NFElem) -> tuple[Fraction, ...]:
        """Coordinates of x on the order basis (row convention: x = c . basis)."""
        inv = inverse(self.basis)
        return tuple(sum((x.coords[k] * inv[k][j] for k in range(self.m)), Fraction(0))
                     for j in range(self.m))

    def in_order(self, x: NFElem) -> bool:
        return all(c.denominator == 1 for c in self.order_coords(x))

    def generator(self, which: str) -> NFElem:
        if which in ("delta", "d"):
            return self.delta
        if which in ("u_delta", "udelta", "ud"):
            return self.u_delta
        raise ValueError(f"unknown generator {which!r}")


def spec_from_data(name: str) -> TraceFormSpec:
    data = FIELD_DATA[name]
    K = NumberField(data["f"])
    dc, dd = data["delta"]
    uc, ud = data["udelta"]
    return TraceFormSpec(K, K([Fraction(c, dd) for c in dc]), K([Fraction(c, ud) for c in uc]))


def trace_form_gram(spec: TraceFormSpec, generator: str | NFElem = "delta") -> GramForm:
    """Gram matrix of (x, y) -> Tr(gamma^-1 x y) on the order basis."""
    gamma = spec.generator(generator) if isinstance(generator, str) else generator
    ginv = nf_inverse(gamma)
    b = spec.basis_elements()
    m = spec.m
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        gi = ginv * b[i]
        for j in range(i, m):
            rows[i][j] = rows[j][i] = nf_trace(gi * b[j])
    return GramForm(rows, f"b_{generator if isinstance(generator, str) else 'gamma'}")


# certificates --------------------------------------------------------------

@dataclass
class Certificate:
    checks: list[tuple[str, bool, object]] = dc_field(default_factory=list)

    def add(self, name: str, ok: bool, witness=None):
        self.checks.append((name, bool(ok), witness))

    @property
    def overall(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failed(self) -> list[str]:
        return [n for n, ok, _ in self.checks if not ok]


def _certify_on_basis(spec: TraceFormSpec) -> Certificate:
    K = spec.field
    m = spec.m
    cert = Certificate()
    boxes = K.real_roots()
    cert.add("totally_real", len(boxes) == m, f"{len(boxes)} real roots of {m}")
    Gd = trace_form_gram(spec, "delta")
    Gu = trace_form_gram(spec, "u_delta")
    dd, du = Gd.det(), Gu.det()
    cert.add("delta_unimodular", is_integral(Gd.entries) and abs(dd) == 1, f"det {dd}")
    cert.add("udelta_unimodular", is_integral(Gu.entries) and abs(du) == 1, f"det {du}")
    signs_d = K.signs(spec.delta)
    sig_d = signature(Gd)
    cert.add("delta_totally_negative", all(s < 0 for s in signs_d) and sig_d == (0, m),
             f"signs {signs_d}, signature {sig_d}")
    sig_u = signature(Gu)
    cert.add("udelta_signature", sig_u == (1, m - 1), f"signature {sig_u}")
    u = spec.u_delta / spec.delta
    uinv = nf_inverse(u)
    cert.add("unit_quotient", spec.in_order(u) and spec.in_order(uinv), f"u = {u}")
    return cert


def certify_table_entry(spec: TraceFormSpec, m: int | None = None, l: int | None = None,
                        allow_enlarge: bool = True,
                        normalize: bool = False) -> tuple[Certificate, TraceFormSpec]:
    """Run the six checks; on integrality failure over Z[alpha], retry on an enlarged order.

    With ``normalize`` the generators are first passed through normalize_signs
    and the applied flips are recorded as an extra (always passing) entry.
    Returns the certificate and the spec actually certified.
    """
    if m is not None and m != spec.m:
        raise ValueError(f"degree mismatch: {m} vs {spec.m}")
    if l is not None and l < 1:
        raise ValueError("multiplicity must be positive")
    flips: tuple[str, ...] = ()
    if normalize:
        spec, flips = normalize_signs(spec)
    cert, used = _certify_with_fallback(spec, allow_enlarge)
    if normalize:
        cert.add("sign_normalization", True, ",".join(flips) or "none")
    return cert, used


def _certify_with_fallback(spec: TraceFormSpec, allow_enlarge: bool):
    cert = _certify_on_basis(spec)
    integrality = {"delta_unimodular", "udelta_unimodular", "unit_quotient"}
    if (not cert.overall and allow_enlarge and set(cert.failed()) & integrality
            and spec.basis == identity(spec.m)):
        enlarged = spec.with_basis(maximal_order_basis(spec.field))
        if enlarged.basis != spec.basis:
            cert2 = _certify_on_basis(enlarged)
            cert2.add("enlarged_order", True, "basis from maximal_order_basis")
            return cert2, enlarged
    return cert, spec


def normalize_signs(spec: TraceFormSpec) -> tuple[TraceFormSpec, tuple[str, ...]]:
    """Flip the signs of delta / u_delta so that delta is totally negative and
    b_{u delta} has exactly one positive direction (when a flip achieves it).

    -delta generates the same ideal and u*delta/delta changes by the unit -1,
    so flips never affect integrality or the unit check.
    """
    K = spec.field
    m = spec.m
    flips = []
    delta, ud = spec.delta, spec.u_delta
    if all(s > 0 for s in K.signs(delta)):
        delta = -delta
        flips.append("delta")
    su = K.signs(ud)
    if su.count(-1) == 1 and su.count(1) == m - 1 and m > 2:
        ud = -ud
        flips.append("u_delta")
    return TraceFormSpec(K, delta, ud, spec.basis), tuple(flips)


# orders ----------------------------------------------------------------------

def _coords_in(basis_inv: Matrix, x: NFElem) -> list[Fraction]:
    m = len(basis_inv)
    return [sum((x.coords[k] * basis_inv[k][j] for k in range(m)), Fraction(0)) for j in range(m)]


def _enlarge_at(K: NumberField, basis: list[list[Fraction]], p: int) -> list[list[Fraction]]:
    """One Round-2 step at p: the multiplier ring of the p-radical."""
    m = K.m
    elems = [K(row) for row in basis]
    binv = inverse(mat(basis))
    # p-radical: kernel of x -> x^(p^j) on O/pO with p^j >= m
    q = p
    while q < m:
        q *= p
    frob_cols = []
    for b in elems:
        c = _coords_in(binv, b ** q)
        frob_cols.append([int(x) % p for x in c])
    # matrix acting on coordinate column vectors: column i = image of b_i
    A = [[frob_cols[i][r] for i in range(m)] for r in range(m)]
    ker = kernel_mod_p(A, p)
    gens = [[p * x for x in row] for row in basis]
    for v in ker:
        gens.append([sum((Fraction(v[i]) * basis[i][k] for i in range(m)), Fraction(0)) for k in range(m)])
    rad = hnf_rows(gens)
    rad_elems = [K(r) for r in rad]
    rinv = inverse(mat(rad))
    # U/pO = kernel of y -> (z_k -> y z_k mod p I_p)
    rowsM = []
    for y in elems:
        img = []
        for z in rad_elems:
            c = _coords_in(rinv, y * z)
            img.extend(int(x) % p for x in c)
        rowsM.append(img)
    A2 = [[rowsM[i][r] for i in range(m)] for r in range(m * m)]
    ker2 = kernel_mod_p(A2, p)
    gens2 = [list(row) for row in basis]
    for v in ker2:
        gens2.append([sum((Fraction(v[i]) * basis[i][k] for i in range(m)), Fraction(0)) / p
                      for k in range(m)])
    return hnf_rows(gens2)


def maximal_order_basis(field: NumberField) -> Matrix:
    """Basis (rows on the power basis) of the order obtained from Z[alpha] by
    Round-2 enlargement at every p with p^2 | disc(f), iterated to a fixed point."""
    m = field.m
    basis = [list(r) for r in identity(m)]
    disc = field.discriminant()
    for p, e in sorted(factorint(disc.numerator).items()):
        if e < 2:
            continue
        while True:
            new = _enlarge_at(field, basis, p)
            if abs(_det(new)) == abs(_det(basis)):
                break
            basis = new
    return hnf_canonical(basis)


def _det(rows) -> Fraction:
    from ..exactmath.linalg import det
    return det(mat(rows))


def hnf_canonical(rows) -> Matrix:
    return mat(sorted(hnf_rows(rows), key=lambda r: [i for i, x in enumerate(r) if x][0]))


# assembly -------------------------------------------------------------------

@dataclass(frozen=True)
class RMAssembly:
    spec: TraceFormSpec
    l: int
    gram: GramForm
    action: EndoMatrix
    block_generators: tuple[str, ...]


def multiplication_matrix(spec: TraceFormSpec, x: NFElem) -> Matrix:
    """Matrix of multiplication by x on order coordinates (column convention)."""
    A = x.mul_matrix()  # power-basis columns
    Bt = transpose(spec.basis)
    return matmul(matmul(inverse(Bt), A), Bt)


def assemble_rm_lattice(spec: TraceFormSpec, l: int) -> RMAssembly:
    """(F, b_{u delta})^2 + (F, b_delta)^(l-2) with diagonal multiplication by alpha."""
    if l < 3:
        raise PreconditionError("RM needs l = dim T_eps >= 3 (the eigenspace carrying the period must have signature (2, l-2) with l-2 >= 1)")
    Gu = trace_form_gram(spec, "u_delta")
    Gd = trace_form_gram(spec, "delta")
    gens = ("u_delta", "u_delta") + ("delta",) * (l - 2)
    gram = direct_sum(*[Gu if g == "u_delta" else Gd for g in gens])
    A = multiplication_matrix(spec, spec.field.gen)
    action = EndoMatrix(block_diag(*([A] * l)))
    asm = RMAssembly(spec, l, gram, action, gens)
    if not adjoint_check(action, gram):
        raise AssertionError("field action is not self-adjoint")
    return asm


def assembly_branch_signatures(asm: RMAssembly) -> list[tuple[int, tuple[int, int]]]:
    """For each real embedding i: signature of the form on the sigma_i(alpha)-eigenspace.

    Each block b_gamma contributes sign(sigma_i(gamma)) on the i-th eigenline.
    """
    K = asm.spec.field
    signs = {g: K.signs(asm.spec.generator(g)) for g in set(asm.block_generators)}
    out = []
    for i in range(K.m):
        s = [signs[g][i] for g in asm.block_generators]
        out.append((i, (s.count(1), s.count(-1))))
    return out


def expected_diagonal_form(m: int, l: int) -> GramForm:
    """(<1> + <-1>^(m-1))^2 + (<-1>^m)^(l-2)."""
    entries = ([1] + [-1] * (m - 1)) * 2 + [-1] * (m * (l - 2))
    return diag(*entries)


def assembly_matches_expected(asm: RMAssembly) -> bool:
    return rationally_isometric(asm.gram, expected_diagonal_form(asm.spec.m, asm.l))


def moduli_dimension(rank_T: int, m: int, kind: str) -> int:
    """l - 2 for RM and l - 1 for CM, where l = rank_T / m."""
    if m <= 0 or rank_T % m:
        raise ValueError(f"field degree {m} does not divide rank {rank_T}")
    l = rank_T // m
    kind = kind.upper()
    if kind == "RM":
        return l - 2
    if kind == "CM":
        return l - 1
    raise ValueError(f"kind must be RM or CM, got {kind!r}")
