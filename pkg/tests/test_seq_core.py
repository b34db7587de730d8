from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from egfkit.bernoulli import H_seq, bernoulli_numbers
from egfkit.seq_core import (
    EgfSeq,
    add,
    geometric,
    hadamard,
    identity,
    inverse,
    make_seq,
    scale,
    shift_left,
    shift_right,
    star,
    to_rational,
)

from conftest import nonzero_rationals, seq_triples, seqs, small_rationals


def test_make_seq_examples():
    assert make_seq([1, 0, 0]) == identity(3)
    assert make_seq([1, 1, 1, 1]) == geometric(1, 4)
    assert make_seq(["1", "-1/2", "1/6"]).coeffs == (1, Fraction(-1, 2), Fraction(1, 6))
    assert make_seq([1, 2]).order == 2


def test_empty_sequence_rejected():
    with pytest.raises(ValueError, match="empty sequence"):
        make_seq([])


def test_to_rational_parsing():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -4 ") == -4
    for bad in ("1/0", "a/b", "1.5", ""):
        with pytest.raises(ValueError):
            to_rational(bad)
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_add_and_scale():
    assert add(make_seq([1, 2]), make_seq([3, 4])) == make_seq([4, 6])
    assert scale(0, make_seq([1, 2, 3])) == make_seq([0, 0, 0])
    assert scale(-1, make_seq([1, -1, 1])) == make_seq([-1, 1, -1])


def test_binary_ops_truncate_to_shorter():
    a, b = make_seq([1, 2, 3, 4]), make_seq([5, 6])
    assert add(a, b).order == star(a, b).order == hadamard(a, b).order == 2


def test_star_examples():
    ones = make_seq([1, 1, 1])
    assert star(ones, ones) == make_seq([1, 2, 4])
    a = make_seq([3, "1/2", -7, 2])
    assert star(identity(4), a) == a
    assert star(bernoulli_numbers(5), H_seq(5)) == identity(5)


def test_star_against_direct_definition():
    a = make_seq([2, -1, "1/3", 5])
    b = make_seq(["1/2", 4, 0, -2])
    # (a*b)_3 = a0 b3 + 3 a1 b2 + 3 a2 b1 + a3 b0
    expected3 = 2 * -2 + 3 * -1 * 0 + 3 * Fraction(1, 3) * 4 + 5 * Fraction(1, 2)
    assert star(a, b)[3] == expected3


def test_hadamard_examples():
    b = make_seq([4, "2/3", -1])
    assert hadamard(geometric(1, 3), b) == b
    assert hadamard(geometric(3, 5), geometric(Fraction(1, 3), 5)) == geometric(1, 5)
    assert hadamard(make_seq([1, -1, 1]), make_seq([1, 2, 4])) == make_seq([1, -2, 4])


def test_identity_and_geometric():
    assert identity(1) == make_seq([1])
    assert identity(3) == make_seq([1, 0, 0])
    with pytest.raises(ValueError):
        identity(0)
    assert geometric(-1, 4) == make_seq([1, -1, 1, -1])
    assert geometric(0, 3) == make_seq([1, 0, 0])
    assert star(geometric(2, 3), geometric(-2, 3)) == make_seq([1, 0, 0])


def test_inverse_examples():
    assert inverse(identity(6)) == identity(6)
    assert inverse(H_seq(5)) == make_seq([1, "-1/2", "1/6", 0, "-1/30"])
    assert inverse(geometric(Fraction(5, 3), 7)) == geometric(Fraction(-5, 3), 7)
    with pytest.raises(ZeroDivisionError, match="not invertible"):
        inverse(make_seq([0, 1, 2]))


def test_shifts():
    assert shift_left(make_seq([0, 1, 2, 3])) == make_seq([1, 2, 3])
    assert shift_right(make_seq([1, 2])) == make_seq([0, 1, 2])
    assert shift_right(make_seq([0, 0])) == make_seq([0, 0, 0])
    j = Fraction(7, 2)
    assert shift_left(geometric(j, 6)) == scale(j, geometric(j, 5))
    with pytest.raises(ValueError, match="order-1"):
        shift_left(make_seq([5]))


@given(seqs(), seqs())
def test_star_commutative(a, b):
    assert star(a, b) == star(b, a)


@given(seq_triples())
def test_star_associative(abc):
    a, b, c = abc
    assert star(star(a, b), c) == star(a, star(b, c))


@given(seq_triples())
def test_star_distributive(abc):
    a, b, c = abc
    assert star(a, add(b, c)) == add(star(a, b), star(a, c))


@given(seqs(), seqs(), small_rationals)
def test_star_scalar_compatible(a, b, lam):
    assert star(a, scale(lam, b)) == scale(lam, star(a, b)) == star(scale(lam, a), b)


@given(seqs())
def test_inverse_law(a):
    if a[0] == 0:
        a = add(a, identity(a.order))
    assert star(a, inverse(a)) == identity(a.order)


@given(seqs(), seqs(), nonzero_rationals)
def test_geometric_hadamard_distributes_over_star(a, b, j):
    k = min(a.order, b.order)
    g = geometric(j, k)
    assert hadamard(g, star(a, b)) == star(hadamard(g, a), hadamard(g, b))


@given(seqs(), seqs())
def test_sign_flip_moves_across_star(a, b):
    k = min(a.order, b.order)
    neg = geometric(-1, k)
    assert star(hadamard(neg, a), b) == hadamard(neg, star(a, hadamard(neg, b)))


def test_alternating_bernoulli_and_harmonic_are_inverse():
    neg = geometric(-1, 30)
    assert star(hadamard(neg, bernoulli_numbers(30)), hadamard(neg, H_seq(30))) == identity(30)


@given(seqs())
def test_shift_left_undoes_shift_right(a):
    r = shift_right(a)
    assert r[0] == 0 and r.order == a.order + 1
    assert shift_left(r) == a


@given(seqs(min_order=2))
def test_derivative_of_product_rule(a):
    # d/dz (f g) = f' g + f g'
    b = geometric(3, a.order)
    lhs = shift_left(star(a, b))
    rhs = add(star(shift_left(a), b), star(a, shift_left(b)))
    assert lhs == rhs


def test_values_are_immutable():
    a = make_seq([1, 2])
    with pytest.raises(Exception):
        a.coeffs = (3,)
    assert isinstance(a.coeffs, tuple)
