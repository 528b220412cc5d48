import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from k3rm import dickson as dk

X, A, V = sympy.symbols("x a v")


def sympy_dickson(n):
    """Oracle from the closed form sum n/(n-k) C(n-k, k) (-a)^k x^(n-2k)."""
    return sum(sympy.Rational(n, n - k) * sympy.binomial(n - k, k) * (-A) ** k * X ** (n - 2 * k)
               for k in range(n // 2 + 1))


def ours_sympy(n):
    return sum(c * A**k * X ** (n - 2 * k) for k, c in enumerate(dk.dickson_coefficients(n)))


def test_printed_polynomials():
    assert sympy.expand(ours_sympy(3) - (X**3 - 3 * A * X)) == 0
    p11 = X**11 - 11 * A * X**9 + 44 * A**2 * X**7 - 77 * A**3 * X**5 + 55 * A**4 * X**3 - 11 * A**5 * X
    assert sympy.expand(ours_sympy(11) - p11) == 0
    for n in (3, 5, 7, 9, 11):
        assert dk.matches_printed(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_against_closed_form(n):
    assert sympy.expand(ours_sympy(n) - sympy_dickson(n)) == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_a_zero_is_power(n):
    f = dk.dickson_unipoly(n, 0)
    assert f.degree == n and f.coeffs[-1] == 1 and all(c == 0 for c in f.coeffs[:-1])


@pytest.mark.parametrize("n", range(1, 13))
def test_identities(n):
    assert dk.check_defining_identity(n)
    assert dk.check_scaling(n)
    assert dk.check_parity(n)


@pytest.mark.parametrize("n", [1, 5, 11])
def test_defining_identity_sympy_oracle(n):
    lhs = ours_sympy(n).subs(X, V + A / V)
    assert sympy.simplify(sympy.expand(lhs) - V**n - (A / V) ** n) == 0


@pytest.mark.parametrize("m,n", [(3, 3), (5, 2), (2, 5), (1, 4), (1, 7), (4, 1), (2, 3)])
def test_composition(m, n):
    assert dk.check_composition(m, n)


@given(st.integers(1, 12), st.floats(0.1, 3.0))
def test_chebyshev_specialization(n, theta):
    # p_{n,1}(2 cos t) = 2 cos(n t)
    val = dk.dickson(n, 1)(2 * math.cos(theta))
    assert abs(float(val) - 2 * math.cos(n * theta)) < 1e-8 * (2**n)


small_q = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5))


@given(st.integers(1, 10), small_q, small_q.filter(lambda q: q != 0))
def test_numeric_defining_identity(n, a, v):
    x = v + a / v
    assert dk.dickson(n, a)(x) == v**n + (a / v) ** n
    assert dk.dickson_unipoly(n, a)(x) == v**n + (a / v) ** n


def test_errors():
    with pytest.raises(ValueError):
        dk.dickson(0, 1)
    with pytest.raises(ValueError):
        dk.dickson_unipoly(-1, 1)


def test_monic_shape():
    for n in range(1, 12):
        f = dk.dickson_unipoly(n, Fraction(3, 2))
        assert f.coeffs[-1] == 1
        assert all(f[i] == 0 for i in range(n + 1) if (n - i) % 2)
