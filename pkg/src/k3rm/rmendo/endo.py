"""Quadratic RM endomorphisms on U + U(r) + E8(-1)^2 and E8 involutions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..exactmath.intutil import is_squarefree
from ..exactmath.linalg import (Matrix, block_diag, identity, inverse, mat, matadd, matmul,
                                matscale, transpose)
from ..qform import E8, E8_ROOTS, GramForm, U, diagonalize_entries, direct_sum
from .quadfield import QuadElem


class ContractViolation(ValueError):
    """An endomorphism fails the relation it was declared with."""


@dataclass(frozen=True)
class EndoMatrix:
    """Matrix acting on column coordinate vectors of a GramForm's space."""

    matrix: Matrix
    min_poly_witness: Fraction | None = None  # d with matrix^2 = d * Id

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def square_is_scalar(self) -> bool:
        if self.min_poly_witness is None:
            return False
        return matmul(self.matrix, self.matrix) == identity(self.dim, self.min_poly_witness)


def tau(d) -> Matrix:
    """(u, v) -> (d v, u) on a rank-2 lattice with basis (e, f)."""
    return mat([[0, d], [1, 0]])


def adjoint_check(M: EndoMatrix | Matrix, G: GramForm) -> bool:
    """True iff (Mx, y) = (x, My), i.e. M^T G = G M."""
    A = M.matrix if isinstance(M, EndoMatrix) else mat(M)
    if len(A) != G.dim:
        raise ValueError("dimension mismatch")
    return matmul(transpose(A), G.entries) == matmul(G.entries, A)


# E8 involutions -------------------------------------------------------------

_PX = ((0, 1), (1, 0))
_PZ = ((1, 0), (0, -1))
_PI = ((1, 0), (0, 1))


def _kron(A, B):
    return tuple(tuple(a * b for a in ra for b in rb) for ra in A for rb in B)


def _kron3(A, B, C):
    return _kron(_kron(A, B), C)


@lru_cache(maxsize=1)
def anticommuting_involutions_e8() -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Four pairwise anticommuting involutions in O(E8), on the simple-root basis.

    Built from the Pauli tensors Z(x)I(x)I, X(x)Z(x)I, X(x)X(x)Z, X(x)X(x)X on R^8:
    each is a signed permutation matrix flipping an even number of signs, so it
    preserves the even coordinate lattice containing the simple roots.
    """
    ortho = [
        _kron3(_PZ, _PI, _PI),
        _kron3(_PX, _PZ, _PI),
        _kron3(_PX, _PX, _PZ),
        _kron3(_PX, _PX, _PX),
    ]
    B = E8_ROOTS  # rows are simple roots
    Bt = transpose(B)
    Bt_inv = inverse(Bt)
    out = []
    for g in ortho:
        # coordinates c of v = B^T c; g v = B^T c' gives c' = (B^T)^{-1} g B^T c
        out.append(matmul(matmul(Bt_inv, mat(g)), Bt))
    return tuple(out)


def check_involutions(gs, G: GramForm | None = None) -> dict[str, bool]:
    G = G or E8()
    n = G.dim
    I = identity(n)
    res = {
        "integral": all(x.denominator == 1 for g in gs for r in g for x in r),
        "preserves_form": all(matmul(matmul(transpose(g), G.entries), g) == G.entries for g in gs),
        "involution": all(matmul(g, g) == I for g in gs),
        "anticommute": all(matadd(matmul(gs[i], gs[j]), matmul(gs[j], gs[i])) == identity(n, 0)
                           for i in range(len(gs)) for j in range(i + 1, len(gs))),
    }
    return res


def four_squares(n: int) -> tuple[int, int, int, int]:
    """Lexicographically smallest (a1, a2, a3, a4) with a1 >= a2 >= a3 >= a4 >= 0 and sum of squares n."""
    if n < 1:
        raise ValueError("four_squares needs n >= 1")
    a1 = isqrt((n + 3) // 4)
    while a1 * a1 * 4 < n:
        a1 += 1
    for a1 in range(a1, isqrt(n) + 1):
        r1 = n - a1 * a1
        for a2 in range(0, a1 + 1):
            r2 = r1 - a2 * a2
            if r2 < 0:
                break
            if 2 * a2 * a2 < r2:
                continue
            for a3 in range(0, a2 + 1):
                r3 = r2 - a3 * a3
                if r3 < 0:
                    break
                a4 = isqrt(r3)
                if a4 * a4 == r3 and a4 <= a3:
                    return (a1, a2, a3, a4)
    raise AssertionError("unreachable by Lagrange's theorem")


def clifford_endo(a) -> Matrix:
    """sum a_i g_i on E8 for the fixed involutions g_i."""
    gs = anticommuting_involutions_e8()
    out = identity(8, 0)
    for ai, g in zip(a, gs):
        out = matadd(out, matscale(g, ai))
    return out


# quad_endo ------------------------------------------------------------------

def quad_endo(d: int, shape: str = "U_pair", r=1) -> tuple[GramForm, EndoMatrix]:
    """Gram form and endomorphism with M^2 = d for the shapes U_pair, E8_pair, full_T.

    U_pair: U + U(r) with (u, v) -> (dv, u) on each summand.
    E8_pair: E8(-1)^2 with sum a_i g_i on each copy, (a_i) = four_squares(d).
    full_T: the direct sum of both.
    E8_swap: the literal swap (u, v) -> (dv, u) between two copies of E8(-1);
    it squares to d but is only self-adjoint for d = 1 (kept for comparison).
    """
    if d < 1 or not is_squarefree(d):
        raise ValueError(f"d = {d} must be a positive squarefree integer")
    if Fraction(r) == 0:
        raise ValueError("r must be nonzero")
    E = E8().rescale(-1)
    if shape == "U_pair":
        G = direct_sum(U(), U(r))
        M = block_diag(tau(d), tau(d))
    elif shape == "E8_pair":
        G = direct_sum(E, E)
        N = clifford_endo(four_squares(d))
        M = block_diag(N, N)
    elif shape == "full_T":
        G1, M1 = quad_endo(d, "U_pair", r)
        G2, M2 = quad_endo(d, "E8_pair", r)
        return direct_sum(G1, G2), EndoMatrix(block_diag(M1.matrix, M2.matrix), Fraction(d))
    elif shape == "E8_swap":
        G = direct_sum(E, E)
        Z, I = identity(8, 0), identity(8)
        top = [list(Z[i]) + list(matscale(I, d)[i]) for i in range(8)]
        bot = [list(I[i]) + list(Z[i]) for i in range(8)]
        M = mat(top + bot)
    else:
        raise ValueError(f"unknown shape {shape!r}")
    return G, EndoMatrix(M, Fraction(d))


def eigenspace_signatures(M: EndoMatrix, G: GramForm) -> list[tuple[str, tuple[int, int]]]:
    """Signature of G on the +sqrt(d) and -sqrt(d) eigenspaces of M (M^2 = d).

    On the image of M + s sqrt(d), the form pulls back to 2 s sqrt(d) times
    H_s = s sqrt(d) G + G M (using M^T G = G M), so the signature of H_s,
    computed exactly over Q(sqrt d), is the eigenspace signature up to the sign s.
    """
    d = M.min_poly_witness
    if d is None or not M.square_is_scalar():
        raise ContractViolation("endomorphism does not square to a scalar")
    if not adjoint_check(M, G):
        raise ContractViolation("endomorphism is not self-adjoint for the form")
    if d <= 0 or d.denominator != 1:
        raise ContractViolation("eigenspace signatures need a positive integer d")
    d = int(d)
    root = isqrt(d)
    GM = matmul(G.entries, M.matrix)
    out = []
    for s in (1, -1):
        if root * root == d:
            H = [[QuadElem(GM[i][j] + s * root * G.entries[i][j], 0, 1) for j in range(G.dim)]
                 for i in range(G.dim)]
        else:
            H = [[QuadElem(GM[i][j], s * G.entries[i][j], d) for j in range(G.dim)]
                 for i in range(G.dim)]
        diagonal = diagonalize_entries(H)
        signs = [x.sign() * s for x in diagonal]
        out.append(("+sqrt(%d)" % d if s > 0 else "-sqrt(%d)" % d,
                    (signs.count(1), signs.count(-1))))
    return out
