from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from egfkit.bernoulli import (
    H_seq,
    Poly,
    bernoulli,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_seq,
    faulhaber_sum,
    power_sum_bruteforce,
    s_poly,
)
from egfkit.seq_core import EgfSeq, geometric, hadamard, identity, inverse, make_seq, star

from conftest import small_rationals


def akiyama_tanigawa(n):
    """B_0..B_n by the Akiyama-Tanigawa triangle (gives B_1 = +1/2)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def test_first_bernoulli_numbers():
    expected = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730", "0", "7/6"]
    assert bernoulli_numbers(15) == make_seq(expected)


def test_bernoulli_matches_independent_triangle():
    assert list(bernoulli_numbers(61)) == akiyama_tanigawa(60)


def test_bernoulli_equals_inverse_of_harmonic():
    assert bernoulli_numbers(60) == inverse(H_seq(60))


def test_bernoulli_scalar_and_errors():
    assert bernoulli(12) == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        bernoulli_numbers(0)


def test_bernoulli_cache_prefix_consistent():
    long = bernoulli_numbers(40)
    assert bernoulli_numbers(7) == long.truncate(7)


def test_H_seq():
    assert H_seq(3) == make_seq([1, "1/2", "1/3"])
    assert H_seq(1) == make_seq([1])
    assert star(bernoulli_numbers(12), H_seq(12)) == identity(12)


def test_odd_bernoulli_vanish():
    bs = bernoulli_numbers(60)
    assert all(bs[2 * k + 1] == 0 for k in range(1, 30))


@pytest.mark.parametrize("n", range(0, 51, 5))
def test_binomial_sum_reflects_sign(n):
    bs = bernoulli_numbers(n + 1)
    assert sum(comb(n, k) * bs[k] for k in range(n + 1)) == (-1) ** n * bs[n]


def test_bernoulli_poly_small():
    assert bernoulli_poly(0) == Poly([1])
    assert bernoulli_poly(1) == Poly(["-1/2", 1])
    assert bernoulli_poly(2) == Poly(["1/6", -1, 1])
    assert bernoulli_poly(3) == Poly([0, "1/2", "-3/2", 1])


def test_bernoulli_poly_seq_examples():
    assert bernoulli_poly_seq(0, 10) == bernoulli_numbers(10)
    assert bernoulli_poly_seq(1, 10) == hadamard(geometric(-1, 10), bernoulli_numbers(10))
    assert bernoulli_poly_seq(Fraction(1, 2), 3)[2] == Fraction(-1, 12)


@given(small_rationals)
def test_bernoulli_poly_seq_matches_polynomials(x):
    seq = bernoulli_poly_seq(x, 12)
    assert all(seq[n] == bernoulli_poly(n)(x) for n in range(12))


def test_faulhaber_examples():
    assert faulhaber_sum(1, 100) == 5050
    assert faulhaber_sum(2, 3) == 14
    assert faulhaber_sum(10, 50) == sum(j**10 for j in range(1, 51))
    assert faulhaber_sum(0, 1) == 1
    with pytest.raises(ValueError):
        faulhaber_sum(2, 0)


def test_power_sum_bruteforce():
    assert power_sum_bruteforce(0, 5) == 5
    assert power_sum_bruteforce(2, 3) == 14
    assert power_sum_bruteforce(3, 4) == 100


@given(st.integers(0, 12), st.integers(1, 100))
def test_faulhaber_is_bernoulli_poly_difference(n, m):
    b = bernoulli_poly(n + 1)
    assert faulhaber_sum(n, m) == (b(m + 1) - b(1)) / (n + 1)


@pytest.mark.parametrize("m", [1, 2, 7, 20])
def test_power_sum_generating_function(m):
    K = 20
    lhs = EgfSeq((Fraction(0),) + tuple((n + 1) * power_sum_bruteforce(n, m) for n in range(K - 1)))
    assert lhs == bernoulli_poly_seq(m + 1, K) - bernoulli_poly_seq(1, K)


def test_s_poly_examples():
    assert s_poly(0) == Poly([-1, 1])
    assert s_poly(1) == Poly([0, "-1/2", "1/2"])
    assert s_poly(2)(4) == 14


@given(st.integers(0, 15), st.integers(1, 40))
def test_s_poly_counts_power_sums_below_m(n, m):
    assert s_poly(n)(m) == power_sum_bruteforce(n, m - 1)


@pytest.mark.parametrize("n", range(0, 16))
def test_s_poly_via_bernoulli_polys(n):
    b = bernoulli_poly(n + 1)
    assert s_poly(n) == (b - Poly([b(1)])) * Fraction(1, n + 1)


class TestPolynomialIdentities:
    N = 30

    def test_harmonic_convolution_gives_power(self):
        for n in range(self.N + 1):
            lhs = Poly([0])
            for k in range(n + 1):
                lhs = lhs + bernoulli_poly(k) * Fraction(comb(n, k), n - k + 1)
            assert lhs == Poly.monomial(n)

    def test_binomial_sum_shifts_argument(self):
        for n in range(self.N + 1):
            lhs = Poly([0])
            for k in range(n + 2):
                lhs = lhs + bernoulli_poly(k) * comb(n + 1, k)
            assert lhs == bernoulli_poly(n + 1).compose_linear(1, 1)

    def test_difference_is_power(self):
        for n in range(self.N + 1):
            b = bernoulli_poly(n + 1)
            assert (b.compose_linear(1, 1) - b) * Fraction(1, n + 1) == Poly.monomial(n)

    def test_reflection(self):
        for n in range(self.N + 1):
            b = bernoulli_poly(n)
            assert b.compose_linear(-1, 1) == b * (-1) ** n

    def test_complement(self):
        for n in range(1, self.N + 1):
            b = bernoulli_poly(n)
            assert b.compose_linear(-1, 0) * (-1) ** n == b + Poly.monomial(n - 1, n)


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
        assert Poly([0, 0]).degree == 0 and Poly([0, 0]).is_zero()

    def test_arithmetic(self):
        p, q = Poly([1, 1]), Poly([-1, 1])
        assert p * q == Poly([-1, 0, 1])
        assert p + q == Poly([0, 2])
        assert p - p == Poly([0])
        assert 3 * p == Poly([3, 3])

    def test_compose_and_evaluate(self):
        p = Poly([1, 2, 3])
        assert p.compose_linear(2, -1)(Fraction(5, 7)) == p(2 * Fraction(5, 7) - 1)
        assert p.derivative() == Poly([2, 6])

    def test_str(self):
        assert str(bernoulli_poly(2)) == "x^2 - x + 1/6"
