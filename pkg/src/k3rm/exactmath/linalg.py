"""Exact dense linear algebra on tuples of tuples of Fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int, scale=1) -> Matrix:
    s = Fraction(scale)
    return tuple(tuple(s if i == j else Fraction(0) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence) -> tuple:
    return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A)


def matadd(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(A, B))


def matscale(A: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * a for a in row) for row in A)


def trace(A: Matrix) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = Fraction(b[i][j])
        off += k
    return mat(out)


def is_symmetric(A: Matrix) -> bool:
    return all(A[i][j] == A[j][i] for i in range(len(A)) for j in range(i))


def is_integral(A: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for row in A for x in row)


def det(A: Matrix) -> Fraction:
    n = len(A)
    M = [list(r) for r in A]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] * inv
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return d


def rref(A: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    M = [list(r) for r in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [list(A[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    M, piv = rref(mat(aug))
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return mat([row[n:] for row in M[:n]])


def solve(A: Matrix, b: Sequence) -> tuple | None:
    """One solution of A x = b, or None."""
    n = len(A[0])
    aug = mat([list(r) + [bi] for r, bi in zip(A, b)])
    M, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = M[i][n]
    return tuple(x)


def kernel(A: Matrix) -> list[tuple]:
    """Basis of the right kernel {x : A x = 0}."""
    if not A:
        return []
    n = len(A[0])
    M, piv = rref(A)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -M[i][f]
        basis.append(tuple(v))
    return basis


def kernel_mod_p(A: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Right kernel basis of an integer matrix over F_p."""
    rows = [[x % p for x in r] for r in A]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f] % p
        basis.append(v)
    return basis


def hnf_rows(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Hermite normal form basis (upper triangular, positive pivots) of the
    Z-module spanned by rational row vectors of full rank."""
    from math import lcm
    den = 1
    for v in vectors:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    rows = [[int(Fraction(x) * den) for x in v] for v in vectors]
    n = len(rows[0])
    basis: list[list[int]] = []
    work = [r for r in rows if any(r)]
    for c in range(n):
        # gcd-reduce column c among remaining rows
        cand = [r for r in work if r[c] != 0]
        others = [r for r in work if r[c] == 0]
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[c]))
            piv = cand[0]
            new = [piv]
            for r in cand[1:]:
                q = r[c] // piv[c]
                r2 = [x - q * y for x, y in zip(r, piv)]
                if r2[c] != 0:
                    new.append(r2)
                elif any(r2):
                    others.append(r2)
            cand = new
        if cand:
            piv = cand[0]
            if piv[c] < 0:
                piv = [-x for x in piv]
            basis.append(piv)
        work = others
    # reduce entries above pivots
    for i in range(len(basis)):
        c = next(k for k, x in enumerate(basis[i]) if x)
        for j in range(i):
            q = basis[j][c] // basis[i][c]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return [[Fraction(x, den) for x in r] for r in basis]
