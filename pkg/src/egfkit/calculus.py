"""Polynomials in the basis ``(x-1)^k / k!`` and integration as an index shift.

In this basis differentiation drops the first coefficient and integration
prepends a zero, exactly as for EGF sequences at the origin.  The prepended
zero fixes the antiderivative's constant so that it vanishes at ``x = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .bernoulli import Poly, bernoulli_numbers
from .seq_core import RationalLike, to_rational

__all__ = [
    "ShiftedSeq",
    "s_poly_shifted",
    "integrate_shifted",
    "differentiate_shifted",
    "definite_integral_01",
    "shifted_to_poly",
    "poly_to_shifted",
    "integral_closed_form",
]


@dataclass(frozen=True)
class ShiftedSeq:
    """``coeffs[k]`` multiplies ``(x-1)^k / k!``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]) -> None:
        cs = tuple(to_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("empty sequence")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: RationalLike) -> Fraction:
        return shifted_to_poly(self)(x)


def s_poly_shifted(n: int) -> ShiftedSeq:
    """Power-sum polynomial ``S_n`` with entry ``n+1-k`` equal to ``(n!/k!) (-1)^k B_k``."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    bs = bernoulli_numbers(n + 1)
    coeffs = [Fraction(0)] * (n + 2)
    for k in range(n + 1):
        coeffs[n + 1 - k] = Fraction(factorial(n), factorial(k)) * (-1) ** k * bs[k]
    return ShiftedSeq(coeffs)


def integrate_shifted(a: ShiftedSeq) -> ShiftedSeq:
    return ShiftedSeq((Fraction(0),) + a.coeffs)


def differentiate_shifted(a: ShiftedSeq) -> ShiftedSeq:
    if a.order < 2:
        return ShiftedSeq([0])
    return ShiftedSeq(a.coeffs[1:])


def definite_integral_01(a: ShiftedSeq) -> Fraction:
    """``int_0^1`` of the represented polynomial, basis element by basis element.

    ``int_0^1 (x-1)^k / k! dx = -(-1)^(k+1) / (k+1)!``.
    """
    total = Fraction(0)
    for k, c in enumerate(a.coeffs):
        if c:
            total += c * Fraction(-((-1) ** (k + 1)), factorial(k + 1))
    return total


def shifted_to_poly(a: ShiftedSeq) -> Poly:
    out = [Fraction(0)] * a.order
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        scaled = c / factorial(k)
        # (x-1)^k = sum_j C(k,j) x^j (-1)^(k-j)
        for j in range(k + 1):
            out[j] += scaled * comb(k, j) * (-1) ** (k - j)
    return Poly(out)


def poly_to_shifted(p: Poly) -> ShiftedSeq:
    """Taylor coefficients at 1: entry ``k`` is ``p^(k)(1)``."""
    out = []
    q = p
    for _ in range(p.degree + 1):
        out.append(q(1))
        q = q.derivative()
    return ShiftedSeq(out)


def integral_closed_form(n: int) -> tuple[Fraction, Fraction]:
    """Two closed forms for ``int_0^1 S_n``.

    Returns ``((-1)^(n+1) / ((n+1)(n+2)) * sum_{k<=n} C(n+2,k) B_k`` and
    ``(-1)^n B_{n+1} / (n+1)``; they agree for every ``n >= 0``.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    bs = bernoulli_numbers(n + 2)
    first = Fraction((-1) ** (n + 1), (n + 1) * (n + 2)) * sum(
        (comb(n + 2, k) * bs[k] for k in range(n + 1)), Fraction(0)
    )
    second = (-1) ** n * bs[n + 1] / (n + 1)
    return first, second
