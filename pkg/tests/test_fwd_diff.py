import random
from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from egfkit.bernoulli import Poly
from egfkit.fwd_diff import ValueTable, diff_seq_via_star, diff_table_recursive, forward_diff, guard_bits
from egfkit.seq_core import geometric, identity, make_seq

from conftest import small_rationals

tables = st.lists(small_rationals, min_size=1, max_size=20).map(ValueTable)


def test_constant_table():
    t = ValueTable([7] * 6)
    assert forward_diff(t, 0) == 7
    assert all(forward_diff(t, n) == 0 for n in range(1, 6))


def test_powers_of_two():
    t = ValueTable([2**i for i in range(8)])
    assert all(forward_diff(t, n) == 1 for n in range(8))


def test_squares_second_difference():
    assert forward_diff(ValueTable([0, 1, 4, 9]), 2) == 2


def test_table_too_short():
    with pytest.raises(IndexError, match="table too short"):
        forward_diff(ValueTable([1, 2]), 2)
    with pytest.raises(ValueError):
        ValueTable([])


def test_recursive_examples():
    assert diff_table_recursive(ValueTable([5])).values == (5,)
    assert diff_table_recursive(ValueTable([1, 2, 4])).values == (1, 1, 1)


def test_star_route_examples():
    assert diff_seq_via_star(ValueTable([1] * 6)) == identity(6)
    assert diff_seq_via_star(ValueTable(list(geometric(2, 6)))) == geometric(1, 6)


@given(tables)
def test_three_routes_agree(t):
    direct = [forward_diff(t, n) for n in range(len(t))]
    assert direct == list(diff_table_recursive(t).values) == list(diff_seq_via_star(t).coeffs)


@given(st.lists(st.tuples(small_rationals, small_rationals), min_size=1, max_size=15), small_rationals, small_rationals)
def test_linearity(pairs, alpha, beta):
    f = ValueTable([p for p, _ in pairs])
    g = ValueTable([q for _, q in pairs])
    h = ValueTable([alpha * p + beta * q for p, q in pairs])
    for n in range(len(pairs)):
        assert forward_diff(h, n) == alpha * forward_diff(f, n) + beta * forward_diff(g, n)


@pytest.mark.parametrize("degree", [0, 1, 3, 6])
def test_degree_annihilation(degree):
    rng = random.Random(degree)
    p = Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree)] + [Fraction(3, 2)])
    t = ValueTable([p(i) for i in range(degree + 5)])
    assert forward_diff(t, degree) == factorial(degree) * Fraction(3, 2)
    assert all(forward_diff(t, n) == 0 for n in range(degree + 1, len(t)))


def test_star_route_rejects_floats():
    with pytest.raises(TypeError):
        diff_seq_via_star(ValueTable([mpmath.mpf(1)]))


def _exact(x):
    sign, man, exp, _ = x._mpf_
    return (-1) ** sign * Fraction(man) * Fraction(2) ** exp


def test_float_table_uses_guard_bits():
    # alternating binomial sum of 30 terms loses ~30 bits without guard bits
    with mpmath.workprec(80):
        floats = ValueTable([1 / mpmath.mpf(i + 1) ** 3 for i in range(30)])
        got = forward_diff(floats, 29, prec=80)
    want = forward_diff(ValueTable([_exact(v) for v in floats.values]), 29)
    rel = abs((_exact(got) - want) / want)
    assert rel <= Fraction(1, 2**79)
    assert guard_bits(5) == 32 and guard_bits(100) == 100
