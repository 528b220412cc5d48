import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from k3rm.exactmath.linalg import det, matmul, transpose
from k3rm.qform import (A, D, E8, INF, GramForm, U, diag, diagonalize, direct_sum, hilbert_symbol,
                        invariants, is_integral_unimodular, rationally_isometric, signature,
                        standard_lattice)
from k3rm.rmendo.traceform import spec_from_data, trace_form_gram


def test_standard_grams():
    assert U().entries == ((0, 1), (1, 0))
    assert U(3).entries == ((0, 3), (3, 0))
    assert A(2).entries == ((2, -1), (-1, 2))
    assert A(2).dual().det() == Fraction(1, 3)
    assert E8().det() == 1
    assert D(4).det() == 4
    assert standard_lattice("E8", rescale=-1) == E8().rescale(-1)


def test_invariant_examples():
    iu = invariants(U())
    assert (iu.dimension, iu.det_squarefree, iu.signature) == (2, -1, (1, 1))
    ie = invariants(E8())
    assert (ie.dimension, ie.det_squarefree, ie.signature) == (8, 1, (8, 0))
    assert signature(E8().rescale(-1)) == (0, 8)
    assert signature(diag(1, -1)) == (1, 1)
    assert rationally_isometric(diag(1, -1), U())


def tame_symbol(a: int, b: int, p: int) -> int:
    """(a,b)_p for odd p from the tame symbol, with Euler's criterion for the residue."""
    def split(x):
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v, x
    al, u = split(a)
    be, v = split(b)
    val = (-1) ** (al * be * ((p - 1) // 2)) * pow(u, be * (p - 1) // 2, p) * pow(v, al * (p - 1) // 2, p)
    return 1 if val % p == 1 else -1


def test_hilbert_examples():
    for p in (2, 3, 5, 7, INF):
        assert hilbert_symbol(1, 5, p) == 1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(2, 7, 7) == tame_symbol(2, 7, 7) == 1


nz = st.integers(-60, 60).filter(lambda x: x != 0)


@given(nz, nz)
def test_hilbert_against_tame_symbol(a, b):
    for p in (3, 5, 7, 11):
        # reduce to squarefree parts first so the tame formula needs no square removal
        assert hilbert_symbol(a, b, p) == hilbert_symbol(_sf(a), _sf(b), p) == tame_symbol(_sf(a), _sf(b), p)


def _sf(x: int) -> int:
    s = 1 if x > 0 else -1
    x = abs(x)
    d = 2
    while d * d <= x:
        while x % (d * d) == 0:
            x //= d * d
        d += 1
    return s * x


@given(nz, nz, nz)
def test_hilbert_bilinear(a, b1, b2):
    for p in (2, 3, 5, 7, INF):
        assert hilbert_symbol(a, b1 * b2, p) == hilbert_symbol(a, b1, p) * hilbert_symbol(a, b2, p)


@given(nz, nz)
def test_hilbert_product_formula(a, b):
    primes = [p for p in range(2, 62) if all(p % q for q in range(2, p))]
    prod = hilbert_symbol(a, b, INF)
    for p in primes:
        prod *= hilbert_symbol(a, b, p)
    assert prod == 1


def _random_invertible(n, rng):
    while True:
        P = tuple(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)) for _ in range(n))
        if det(P) != 0:
            return P


@pytest.mark.parametrize("seed", range(50))
def test_change_of_basis_is_isometry(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    G = diag(*[rng.choice([-7, -3, -2, -1, 1, 2, 3, 5, 6]) for _ in range(n)])
    P = _random_invertible(n, rng)
    H = GramForm(matmul(transpose(P), matmul(G.entries, P)))
    assert rationally_isometric(G, H)
    flipped = diag(*([-x for x in diagonalize(G)]))
    if signature(flipped) != signature(G):
        assert not rationally_isometric(G, flipped)


def test_hasse_of_direct_sum_composition():
    # s(G + H) = s(G) s(H) (det G, det H)_p
    rng = random.Random(3)
    for _ in range(20):
        G = diag(*[rng.choice([-5, -3, -1, 1, 2, 3, 7]) for _ in range(3)])
        H = diag(*[rng.choice([-5, -3, -1, 1, 2, 3, 7]) for _ in range(2)])
        s_sum = dict(invariants(G + H).hasse)
        sG, sH = dict(invariants(G).hasse), dict(invariants(H).hasse)
        for p, val in s_sum.items():
            expect = sG.get(p, 1) * sH.get(p, 1) * hilbert_symbol(G.det(), H.det(), p)
            assert val == expect


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tt_reproduction(k):
    left = direct_sum(U(), U(), E8().rescale(-1), E8().rescale(-1), diag(-k * k))
    assert rationally_isometric(left, diag(*([1] * 2 + [-1] * 19)))


@pytest.mark.parametrize("r", [1, 2])
def test_rmmax_reproductions(r):
    E = E8().rescale(-1)
    m4 = direct_sum(U(), diag(4 * r * r, -4 * r * r), E, E)
    assert rationally_isometric(m4, diag(*([1] * 2 + [-1] * 18)))
    m6 = direct_sum(diag(4 * r * r, 4 * r * r), E, E)
    assert rationally_isometric(m6, diag(*([1] * 2 + [-1] * 16)))


def test_unimodular_examples():
    assert is_integral_unimodular(U())
    assert not is_integral_unimodular(U(2))
    assert is_integral_unimodular(E8())
    assert is_integral_unimodular(trace_form_gram(spec_from_data("f6")))
