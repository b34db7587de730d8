"""Exact values of zeta and Hurwitz zeta at nonpositive integers.

``zeta(-n) = (-1)^n B_{n+1} / (n+1)`` and ``zeta(-n, a) = -B_{n+1}(a) / (n+1)``.
The signed form for ``zeta`` matters only at ``n = 0``, where it gives
``zeta(0) = B_1 = -1/2``; for ``n >= 1`` the odd Bernoulli numbers vanish and
the sign is immaterial.

Note ``zeta(0, a) = 1/2 - a``.  The alternative ``1 - 3a/2`` sometimes quoted
agrees only at ``a = 1`` and is not used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bernoulli import H_seq, bernoulli, bernoulli_numbers, bernoulli_poly, bernoulli_poly_seq
from .seq_core import (
    EgfSeq,
    RationalLike,
    _check_order,
    geometric,
    hadamard,
    identity,
    make_seq,
    star,
    to_rational,
)

__all__ = [
    "ZetaNegVector",
    "zeta_neg",
    "hurwitz_neg",
    "alternating_zeta_identity",
    "alternating_zeta_identity_delta",
    "alternating_hurwitz_identity",
    "zeta_neg_vector",
    "hurwitz_neg_vector",
    "minus_z",
    "alt_harmonic_identity",
    "alt_bernoulli_identity",
    "hurwitz_exp_identity",
    "hurwitz_bernoulli_identity",
    "alt_inverse_identity",
]


def zeta_neg(n: int) -> Fraction:
    """``zeta(-n)`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("zeta_neg takes n >= 0 (the argument is -n)")
    return (-1) ** n * bernoulli(n + 1) / (n + 1)


def _check_hurwitz_a(a: Fraction) -> None:
    if not 0 < a <= 1:
        raise ValueError(f"a out of Hurwitz domain (0, 1]: {a}")


def hurwitz_neg(n: int, a: RationalLike) -> Fraction:
    """``zeta(-n, a)`` for ``n >= 0`` and ``0 < a <= 1``."""
    a = to_rational(a)
    _check_hurwitz_a(a)
    if n < 0:
        raise ValueError("hurwitz_neg takes n >= 0 (the argument is -n)")
    return -bernoulli_poly(n + 1)(a) / (n + 1)


def alternating_zeta_identity(m: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``(-1)^(m+1)/(m+1) = sum_{i=1}^m (-1)^i C(m,i) zeta(i-m)``."""
    if m < 1:
        raise ValueError("identity holds for m > 0 only")
    lhs = Fraction((-1) ** (m + 1), m + 1)
    rhs = sum((Fraction((-1) ** i * comb(m, i)) * zeta_neg(m - i) for i in range(1, m + 1)), Fraction(0))
    return lhs, rhs


def alternating_zeta_identity_delta(m: int) -> tuple[Fraction, Fraction]:
    """Kronecker-delta form valid for every ``m >= 0``; at ``m = 0`` both sides are 0.

    The sum starts at ``i = 1``.  Including ``i = 0`` would add ``zeta(-m)``,
    which is nonzero for odd ``m``, and the identity would fail there.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    delta = 1 if m == 0 else 0
    lhs = delta - Fraction((-1) ** m, m + 1)
    rhs = sum(
        (Fraction((1 - delta) * (-1) ** i * comb(m, i)) * zeta_neg(m - i) for i in range(1, m + 1)),
        Fraction(0),
    )
    return lhs, rhs


def alternating_hurwitz_identity(m: int, a: RationalLike) -> tuple[Fraction, Fraction]:
    """Hurwitz analogue: ``(-1)^(m+1)/(m+1) = sum_v (-1)^v C(m,v) zeta(v-m, a) - (a-1)^m``."""
    a = to_rational(a)
    _check_hurwitz_a(a)
    if m < 1:
        raise ValueError("identity holds for m > 0 only")
    lhs = Fraction((-1) ** (m + 1), m + 1)
    rhs = sum(
        (Fraction((-1) ** v * comb(m, v)) * hurwitz_neg(m - v, a) for v in range(1, m + 1)),
        Fraction(0),
    )
    return lhs, rhs - (a - 1) ** m


@dataclass(frozen=True)
class ZetaNegVector:
    """``(zeta(0), zeta(-1), ..., zeta(-(K-1)))`` as an EGF sequence."""

    seq: EgfSeq

    @property
    def order(self) -> int:
        return self.seq.order

    def __getitem__(self, n: int) -> Fraction:
        return self.seq[n]


def zeta_neg_vector(K: int) -> ZetaNegVector:
    _check_order(K)
    return ZetaNegVector(EgfSeq(tuple(zeta_neg(n) for n in range(K))))


def hurwitz_neg_vector(a: RationalLike, K: int) -> EgfSeq:
    _check_order(K)
    return EgfSeq(tuple(hurwitz_neg(n, a) for n in range(K)))


def minus_z(K: int) -> EgfSeq:
    """``(0, -1, 0, 0, ...)``, the coefficients of ``-z``."""
    _check_order(K)
    return make_seq(([0, -1] + [0] * K)[:K])


# Each *_identity helper returns (lhs, rhs) so callers can compare or display them.

def alt_harmonic_identity(K: int) -> tuple[EgfSeq, EgfSeq]:
    """``id - (-1)H = (-1)H * (-z) * zeta(-s)``."""
    alt_h = hadamard(geometric(-1, K), H_seq(K))
    lhs = identity(K) - alt_h
    rhs = star(alt_h, star(minus_z(K), zeta_neg_vector(K).seq))
    return lhs, rhs


def alt_bernoulli_identity(K: int) -> tuple[EgfSeq, EgfSeq]:
    """``(-1)B - id = id * (-z) * zeta(-s)``."""
    lhs = hadamard(geometric(-1, K), bernoulli_numbers(K)) - identity(K)
    rhs = star(identity(K), star(minus_z(K), zeta_neg_vector(K).seq))
    return lhs, rhs


def hurwitz_exp_identity(a: RationalLike, K: int) -> tuple[EgfSeq, EgfSeq]:
    """``-(-1)H = (e^{-z} - 1) * zeta(-s, a) - exp((a-1) z)``."""
    a = to_rational(a)
    lhs = -hadamard(geometric(-1, K), H_seq(K))
    exp_minus_one = geometric(-1, K) - identity(K)
    rhs = star(exp_minus_one, hurwitz_neg_vector(a, K)) - geometric(a - 1, K)
    return lhs, rhs


def hurwitz_bernoulli_identity(a: RationalLike, K: int) -> tuple[EgfSeq, EgfSeq]:
    """``B(a) - id = (-z) * zeta(-s, a)``."""
    lhs = bernoulli_poly_seq(a, K) - identity(K)
    rhs = star(minus_z(K), hurwitz_neg_vector(a, K))
    return lhs, rhs


def alt_inverse_identity(K: int) -> tuple[EgfSeq, EgfSeq]:
    """``(-1)B * (-1)H = id``."""
    g = geometric(-1, K)
    lhs = star(hadamard(g, bernoulli_numbers(K)), hadamard(g, H_seq(K)))
    return lhs, identity(K)
