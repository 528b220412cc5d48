import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from k3rm.ellsurf import WeierstrassModel, analyze, family
from k3rm.exactmath import GF, QQ, UniPoly
from k3rm.exactmath.ffield import make_field
from k3rm.zeta import (CountTable, CountingError, InconsistentCounts, cyclotomic_part, derive_algebraic_factor,
                       lift_count, power_sums, recover_charpoly, splits_in_biquadratic, surface_counts)
from k3rm.zeta.charpoly import (elementary_from_power_sums, is_reciprocal, poly_from_high,
                                reciprocal_from_traces, roots_on_unit_circle, unnormalized)
from k3rm.zeta.counting import count_bsgs, count_curve, count_naive

T = UniPoly.gen(QQ)
PRINTED_A = poly_from_high([1, 0, Fraction(8, 7), 0, Fraction(6, 7), 0, 1, 0, Fraction(6, 7), 0, Fraction(8, 7), 0, 1])
ALG_A = (T - 1) ** 3 * (T + 1) * (T**2 + 1) * (T**4 + 1)
H_RM5 = poly_from_high([1, Fraction(-12, 11), Fraction(18, 11), Fraction(-12, 11), 1])


def brute_curve(p, a, b):
    """Projective points on y^2 = x^3 + a x + b over F_p by enumeration."""
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    return 1 + sum(sq[(x**3 + a * x + b) % p] for x in range(p))


# curves --------------------------------------------------------------------------------------
def test_small_curve():
    F = make_field(5)
    assert count_curve(F, F.convert(-1), F.convert(0)) == 8 == brute_curve(5, -1, 0)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_naive_against_enumeration(p):
    F = make_field(p)
    for a in range(p):
        for b in range(p):
            if (4 * a**3 + 27 * b**2) % p:
                assert count_naive(F, F.convert(a), F.convert(b)) == brute_curve(p, a, b)


def test_bsgs_matches_naive_f7_4():
    F = make_field(7, 4)
    rng = random.Random(4)
    els = list(F.elements())
    done = 0
    while done < 15:
        a, b = rng.choice(els), rng.choice(els)
        try:
            n = count_naive(F, a, b)
        except CountingError:
            continue
        assert count_bsgs(F, a, b, seed=done) == n
        done += 1


@given(st.sampled_from([(5, 1), (5, 2), (7, 2), (11, 1), (13, 1)]), st.integers(0, 10**6), st.integers(0, 10**6))
def test_hasse_bound(pk, ia, ib):
    p, k = pk
    F = make_field(p, k)
    q = p**k
    a, b = ia % q, ib % q
    try:
        n = count_curve(F, a, b)
    except CountingError:
        return
    assert (n - q - 1) ** 2 <= 4 * q


@pytest.mark.parametrize("p", [5, 7, 11])
def test_lifting_recurrence(p):
    rng = random.Random(p)
    fields = {j: make_field(p, j) for j in (2, 3)}
    done = 0
    while done < 34:
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a**3 + 27 * b**2) % p == 0:
            continue
        n = brute_curve(p, a, b)
        for j, F in fields.items():
            assert lift_count(n, p, j) == count_naive(F, F.convert(a), F.convert(b))
        done += 1


# surfaces ------------------------------------------------------------------------------------
def test_isotrivial_surface():
    # y^2 = x^3 + B(t) over F_5: cubing is a bijection on F_{5^k} for odd k,
    # so every fibre (smooth or type II) has q + 1 points
    R = GF(5)
    B = UniPoly([1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3], R)
    m = WeierstrassModel(UniPoly((), R), B, "short")
    tab = surface_counts(m, 3)
    for k in (1, 3):
        q = 5**k
        assert tab.counts[k - 1] == (q + 1) ** 2


def test_product_surface():
    R = GF(7)
    m = WeierstrassModel(UniPoly([3], R), UniPoly([5], R), "short")
    tab = surface_counts(m, 2)
    n1 = brute_curve(7, 3, 5)
    for k in (1, 2):
        assert tab.counts[k - 1] == lift_count(n1, 7, k) * (7**k + 1)


def _i2_resolution_count(p, A, B, t0, x0):
    """Resolved I2 fibre: the singular curve minus its node, plus the conic given by the
    quadratic part of the surface equation at the node (its tangent cone)."""
    x, y, t = sympy.symbols("x y t")
    Af = sum(int(c) * t**i for i, c in enumerate(A.coeffs))
    Bf = sum(int(c) * t**i for i, c in enumerate(B.coeffs))
    F = sympy.expand((y**2 - x**3 - Af * x - Bf).subs({x: x + x0, t: t + t0}))
    quad = sympy.Poly(F, x, y, t)
    Q = {m: int(c) % p for m, c in quad.terms() if sum(m) == 2}
    conic = 0
    for v in itertools.product(range(p), repeat=3):
        if v == (0, 0, 0):
            continue
        if sum(c * v[0] ** m[0] * v[1] ** m[1] * v[2] ** m[2] for m, c in Q.items()) % p == 0:
            conic += 1
    conic //= p - 1
    a = int(A(t0)) % p
    b = int(B(t0)) % p
    return brute_curve(p, a, b) - 1 + conic


def _find_i2_model(p, seed):
    rng = random.Random(seed)
    R = GF(p)
    for _ in range(4000):
        # force a node at t = 0, x = 1: A(0) = -3, B(0) = 2
        A = UniPoly([-3 % p] + [rng.randrange(p) for _ in range(4)], R)
        B = UniPoly([2] + [rng.randrange(p) for _ in range(6)], R)
        try:
            m = WeierstrassModel(A, B, "short")
            an = analyze(m)
        except ValueError:
            continue
        types = {f.type for f in an.fibres}
        if not types <= {"I1", "I2"} or an.fibre_at_infinity() is not None:
            continue
        i2 = [f for f in an.fibres if f.type == "I2"]
        if len(i2) == 1 and i2[0].place.degree == 1 and i2[0].place.poly == UniPoly([0, 1], R):
            return m, an
    raise RuntimeError("no I2 model found")


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_i2_resolution_oracle_f5(seed):
    p = 5
    m, an = _find_i2_model(p, seed)
    A, B = m.A, m.B
    total = 0
    for t0 in range(p):
        a, b = int(A(t0)) % p, int(B(t0)) % p
        if t0 == 0:
            total += _i2_resolution_count(p, A, B, 0, 1)
        else:
            total += brute_curve(p, a, b)
    As, Bs = m.infinity_chart(an.e)
    total += brute_curve(p, int(As[0]) % p, int(Bs[0]) % p)
    assert surface_counts(m, 1, analysis=an).counts[0] == total


def test_partition_independence():
    m = family("prop3rm", [1, 2], [3, 4, 1]).reduce_mod(7)
    a = surface_counts(m, 3)
    b = surface_counts(m, 3, chunk=5)
    c = surface_counts(m, 3, chunk=11, workers=2)
    assert a.counts == b.counts == c.counts


def test_counting_rejects_small_p():
    m = family("prop3rm", [1, 2], [3, 4, 1])
    with pytest.raises(ValueError):
        m.reduce_mod(3).to_short_form()


# polynomial recovery -------------------------------------------------------------------------
def test_newton_round_trip_printed():
    ps = power_sums(PRINTED_A, 12)
    e = elementary_from_power_sums(ps)
    assert poly_from_high([(-1) ** i * e[i] for i in range(13)]) == PRINTED_A
    assert reciprocal_from_traces(ps[:6], 1) == PRINTED_A


def test_power_sums_against_roots():
    import numpy as np
    roots = np.roots([float(c) for c in reversed(PRINTED_A.coeffs)])
    ps = power_sums(PRINTED_A, 8)
    for k in range(1, 9):
        assert abs(complex(np.sum(roots**k)) - float(ps[k - 1])) < 1e-8


def test_cyclotomic_part_examples():
    cyc, rest, bound = cyclotomic_part((T - 1) * (T + 1))
    assert cyc == (T - 1) * (T + 1) and rest == UniPoly([1], QQ) and bound == 2
    cyc, rest, bound = cyclotomic_part(ALG_A * PRINTED_A)
    assert rest == PRINTED_A and bound == 10
    cyc, rest, bound = cyclotomic_part(T**4 + 1)
    assert bound == 4


def _table_from(P, p, kmax):
    ps = power_sums(P, kmax)
    return CountTable(p, [int(1 + p ** (2 * k) + p**k * ps[k - 1]) for k in range(1, kmax + 1)])


def test_recover_synthetic():
    tab = _table_from(ALG_A * PRINTED_A, 7, 7)
    fd = recover_charpoly(tab, ALG_A)
    assert fd.transcendental_factor == PRINTED_A and fd.picard_upper_bound == 10
    assert is_reciprocal(fd.transcendental_factor) == 1
    assert roots_on_unit_circle(fd.transcendental_factor, 1e-9)
    assert all(Fraction(c).denominator == 1 for c in fd.integral_transcendental.coeffs)


def test_recover_rejects_wrong_factor():
    tab = _table_from(ALG_A * PRINTED_A, 7, 7)
    wrong = (T - 1) ** 6 * (T**2 + T + 1) ** 2
    with pytest.raises(InconsistentCounts):
        recover_charpoly(tab, wrong)


def test_recover_needs_enough_counts():
    tab = _table_from(ALG_A * PRINTED_A, 7, 3)
    with pytest.raises(InconsistentCounts):
        recover_charpoly(tab, ALG_A)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4))
def test_reciprocal_functional_equation(cs):
    # product of factors T^2 - c T + 1 with |c| < 2 has all roots on the unit circle
    P = UniPoly([1], QQ)
    for c in cs:
        P = P * UniPoly([1, Fraction(-c, 2), 1], QQ)
    g = P.degree // 2
    Q = reciprocal_from_traces(power_sums(P, g), 1)
    assert Q == P and is_reciprocal(Q) == 1 and roots_on_unit_circle(Q, 1e-9)


def test_unnormalized():
    assert unnormalized(H_RM5, 11) == poly_from_high([1, -12, 18 * 11, -12 * 121, 11**4])


# biquadratic splitting ------------------------------------------------------------------------
def sympy_splits(h: UniPoly, d1: int, d2: int) -> bool:
    x = sympy.Symbol("x")
    f = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * x**i for i, c in enumerate(h.coeffs))
    _, facs = sympy.factor_list(f, x, extension=[sympy.sqrt(d1), sympy.sqrt(d2)])
    return all(sympy.degree(g, x) == 1 for g, _ in facs)


def test_splitting_examples():
    assert splits_in_biquadratic(H_RM5, 5, -2)
    assert not splits_in_biquadratic(H_RM5, 3, -1)
    assert splits_in_biquadratic(T**4 + 1, 2, -1)
    for d1, d2, want in ((5, -2, True), (3, -1, False), (2, -1, False)):
        assert sympy_splits(H_RM5, d1, d2) == want


@pytest.mark.parametrize("seed", range(12))
def test_splitting_against_sympy(seed):
    rng = random.Random(seed)
    pool = [2, 3, 5, -1, -2, -3, 6, 10, -5, 7]
    d1, d2 = rng.sample(pool, 2)
    # build h from random quadratics and a quartic over Q(sqrt e1, sqrt e2)
    h = UniPoly([1], QQ)
    for _ in range(2):
        e = rng.choice(pool)
        c = rng.randint(-3, 3)
        h = h * UniPoly([c * c - e, -2 * c, 1], QQ)
    e1, e2 = rng.sample(pool, 2)
    # minimal polynomial of sqrt(e1) + sqrt(e2)
    h = h * UniPoly([(e1 - e2) ** 2, 0, -2 * (e1 + e2), 0, 1], QQ)
    assert splits_in_biquadratic(h, d1, d2) == sympy_splits(h, d1, d2)


# derive mode -----------------------------------------------------------------------------------
def test_derive_prop3rm_p7():
    m = family("prop3rm", [1, 2], [3, 4, 1]).reduce_mod(7)
    assert derive_algebraic_factor(analyze(m)) == ALG_A


def test_derive_rm5_p11_with_sections():
    m = family("rm5").reduce_mod(11)
    alg = derive_algebraic_factor(analyze(m), [-1, -1])
    assert alg.degree == 18
    assert cyclotomic_part(alg)[2] == 18
