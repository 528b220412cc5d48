"""Rational quadratic forms and the standard lattices.

All root lattices are positive definite on their simple-root bases; use
``rescale(-1)`` for the negative definite versions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath.intutil import legendre, prime_divisors, squarefree_part, valuation
from .exactmath.linalg import Matrix, block_diag, det, inverse, is_integral, is_symmetric, mat

INF = "inf"


@dataclass(frozen=True)
class GramForm:
    entries: Matrix
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", mat(self.entries))
        n = len(self.entries)
        if n == 0 or any(len(r) != n for r in self.entries):
            raise ValueError("Gram matrix must be square and nonempty")
        if not is_symmetric(self.entries):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def det(self) -> Fraction:
        return det(self.entries)

    def rescale(self, c) -> "GramForm":
        c = Fraction(c)
        return GramForm(tuple(tuple(c * x for x in r) for r in self.entries), f"{self.name}({c})")

    def dual(self) -> "GramForm":
        return GramForm(inverse(self.entries), f"{self.name}^dual")

    def __add__(self, other: "GramForm") -> "GramForm":
        return direct_sum(self, other)

    def __mul__(self, k: int) -> "GramForm":
        return direct_sum(*([self] * k))

    def __eq__(self, other):
        return isinstance(other, GramForm) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)


def direct_sum(*forms: GramForm) -> GramForm:
    return GramForm(block_diag(*(f.entries for f in forms)), "+".join(f.name for f in forms))


# named lattices ----------------------------------------------------------

def U(r=1) -> GramForm:
    r = Fraction(r)
    if r == 0:
        raise ValueError("U(r) needs r != 0")
    return GramForm([[0, r], [r, 0]], "U" if r == 1 else f"U({r})")


def A(n: int) -> GramForm:
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    return GramForm([[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)], f"A{n}")


def D(n: int) -> GramForm:
    """D_n with simple roots a_1..a_{n-2} in a chain and a_{n-1}, a_n attached to a_{n-2}."""
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = 2
    for i in range(n - 2):
        G[i][i + 1] = G[i + 1][i] = -1
    G[n - 3][n - 1] = G[n - 1][n - 3] = -1
    return GramForm(G, f"D{n}")


# E8 simple roots in R^8 (Bourbaki numbering): a2 attached to a4.
E8_ROOTS = mat([
    [Fraction(1, 2), -Fraction(1, 2), -Fraction(1, 2), -Fraction(1, 2), -Fraction(1, 2), -Fraction(1, 2), -Fraction(1, 2), Fraction(1, 2)],
    [1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0, 0],
    [0, 0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, 1, 0],
])


def E8() -> GramForm:
    from .exactmath.linalg import matmul, transpose
    return GramForm(matmul(E8_ROOTS, transpose(E8_ROOTS)), "E8")


def diag(*entries) -> GramForm:
    n = len(entries)
    return GramForm([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
                    "<" + ",".join(str(Fraction(e)) for e in entries) + ">")


def standard_lattice(name: str, *params, rescale=None, dualize: bool = False) -> GramForm:
    """Named lattice by tag: U, U(r), A_n, D_n, E8, diag."""
    key = name.replace("_", "").upper()
    if key == "U":
        G = U(*params) if params else U()
    elif key.startswith("U(") and key.endswith(")"):
        G = U(Fraction(key[2:-1]))
    elif key == "A" or (key.startswith("A") and key[1:].isdigit()):
        G = A(int(key[1:]) if key[1:] else params[0])
    elif key == "D" or (key.startswith("D") and key[1:].isdigit()):
        G = D(int(key[1:]) if key[1:] else params[0])
    elif key == "E8":
        G = E8()
    elif key == "DIAG":
        if not params:
            raise ValueError("diag needs entries")
        G = diag(*params)
    else:
        raise ValueError(f"unknown lattice name {name!r}")
    if rescale is not None:
        G = G.rescale(rescale)
    if dualize:
        G = G.dual()
    return G


# diagonalization and invariants ---------------------------------------------

def diagonalize(G: GramForm) -> list[Fraction]:
    """Diagonal entries of a form rationally equivalent to G (exact symmetric elimination)."""
    return diagonalize_entries(G.entries)


def diagonalize_entries(rows) -> list:
    """Congruence-diagonalize a symmetric matrix over any exact ordered field.

    Entries need +, -, *, / and comparison with 0.  Pivot choice: first nonzero
    diagonal entry; if the remaining block has zero diagonal, the first nonzero
    off-diagonal entry (i, j) is used after replacing e_i by e_i + e_j.
    Degenerate directions contribute zeros.
    """
    M = [list(r) for r in rows]
    n = len(M)
    out = []
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and M[i][j] != 0), None)
            if pair is None:
                out.extend(M[i][i] for i in active)
                break
            i, j = pair
            for k in range(n):
                M[i][k] = M[i][k] + M[j][k]
            for k in range(n):
                M[k][i] = M[k][i] + M[k][j]
            piv = i
        a = M[piv][piv]
        out.append(a)
        rest = [k for k in active if k != piv]
        for r in rest:
            if M[r][piv] == 0:
                continue
            f = M[r][piv] / a
            for c in range(n):
                M[r][c] = M[r][c] - f * M[piv][c]
            for c in range(n):
                M[c][r] = M[c][r] - f * M[c][piv]
        active = rest
    return out


def signature(G: GramForm) -> tuple[int, int]:
    d = diagonalize(G)
    return sum(1 for x in d if x > 0), sum(1 for x in d if x < 0)


def hilbert_symbol(a, b, p) -> int:
    """(a, b)_p for nonzero rationals; p a prime or "inf"."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol of zero")
    if p == INF or p == float("inf"):
        return -1 if (a < 0 and b < 0) else 1
    # reduce to squarefree integers
    a, b = squarefree_part(a), squarefree_part(b)
    alpha, beta = valuation(a, p), valuation(b, p)
    u = a // p**alpha
    v = b // p**beta
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        return sign * legendre(u, p) ** beta * legendre(v, p) ** alpha

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class QClassInvariants:
    dimension: int
    det_squarefree: int
    signature: tuple[int, int]
    hasse: tuple[tuple[object, int], ...]

    def hasse_minus_places(self) -> frozenset:
        return frozenset(p for p, s in self.hasse if s == -1)


def hasse_invariant(diagonal: Sequence, p) -> int:
    s = 1
    d = [Fraction(x) for x in diagonal]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            s *= hilbert_symbol(d[i], d[j], p)
    return s


def invariants(G: GramForm) -> QClassInvariants:
    d = diagonalize(G)
    if any(x == 0 for x in d):
        raise ValueError("degenerate form")
    disc = Fraction(1)
    for x in d:
        disc *= x
    primes = {2}
    for x in d:
        primes.update(prime_divisors(x.numerator))
        primes.update(prime_divisors(x.denominator))
    places = sorted(primes) + [INF]
    return QClassInvariants(
        dimension=len(d),
        det_squarefree=squarefree_part(disc),
        signature=(sum(1 for x in d if x > 0), sum(1 for x in d if x < 0)),
        hasse=tuple((p, hasse_invariant(d, p)) for p in places),
    )


def rationally_isometric(G1: GramForm, G2: GramForm) -> bool:
    i1, i2 = invariants(G1), invariants(G2)
    return (i1.dimension == i2.dimension and i1.det_squarefree == i2.det_squarefree
            and i1.signature == i2.signature
            and i1.hasse_minus_places() == i2.hasse_minus_places())


def is_integral_unimodular(G: GramForm) -> bool:
    return is_integral(G.entries) and abs(G.det()) == 1
