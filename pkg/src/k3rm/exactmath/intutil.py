"""Integer and rational helpers: square classes, square roots, factorization."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from sympy import factorint as _factorint


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n != 0)."""
    if n == 0:
        raise ValueError("factorint(0)")
    return {int(p): int(e) for p, e in _factorint(abs(int(n))).items()}


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n)) if abs(n) > 1 else []


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorint(n) == {n: 1}


def squarefree_part(q) -> int:
    """Squarefree integer in the square class of the nonzero rational q."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("square class of zero")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return sign * out


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(n).values())


def int_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q) -> Fraction | None:
    """Nonnegative square root of a rational square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    a = int_sqrt_exact(q.numerator)
    b = int_sqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    q = Fraction(n)
    if q == 0:
        raise ValueError("valuation of zero")
    v = 0
    a, b = q.numerator, q.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v
