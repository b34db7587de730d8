"""Bernoulli numbers and polynomials, the harmonic vector, and power sums.

Convention: ``B_1 = -1/2``, the one generated by ``z / (e^z - 1)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .seq_core import EgfSeq, RationalLike, _check_order, star, geometric, to_rational

__all__ = [
    "Poly",
    "H_seq",
    "bernoulli_numbers",
    "bernoulli",
    "bernoulli_poly",
    "bernoulli_poly_seq",
    "faulhaber_sum",
    "power_sum_bruteforce",
    "s_poly",
]


@dataclass(frozen=True)
class Poly:
    """Polynomial over the rationals in the monomial basis; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = (0,)) -> None:
        cs = [to_rational(c) for c in coeffs] or [Fraction(0)]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(p + q for p, q in zip(a, b))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        if not isinstance(other, Poly):
            lam = to_rational(other)
            return Poly(lam * c for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            if p:
                for j, q in enumerate(other.coeffs):
                    out[i + j] += p * q
        return Poly(out)

    __rmul__ = __mul__

    def compose_linear(self, a: RationalLike, b: RationalLike) -> Poly:
        """Return ``p(a*x + b)``."""
        inner = Poly([b, a])
        acc = Poly([0])
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k) if self.degree else Poly([0])

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")


def H_seq(K: int) -> EgfSeq:
    """``(1, 1/2, 1/3, ...)``, the coefficients of ``(e^z - 1)/z``."""
    _check_order(K)
    return EgfSeq(tuple(Fraction(1, n + 1) for n in range(K)))


_cache_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(K: int) -> None:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, solved for B_n
    with _cache_lock:
        bs = _bernoulli_cache
        for n in range(len(bs), K):
            acc = Fraction(0)
            for k in range(n):
                if bs[k]:
                    acc += comb(n + 1, k) * bs[k]
            bs.append(-acc / (n + 1))


def bernoulli_numbers(K: int) -> EgfSeq:
    """First ``K`` Bernoulli numbers from the binomial recursion."""
    _check_order(K)
    if len(_bernoulli_cache) < K:
        _extend_bernoulli(K)
    return EgfSeq(tuple(_bernoulli_cache[:K]))


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    return bernoulli_numbers(n + 1)[n]


def bernoulli_poly(n: int) -> Poly:
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    bs = bernoulli_numbers(n + 1)
    # coefficient of x^{n-k} is C(n,k) B_k
    return Poly(comb(n, n - j) * bs[n - j] for j in range(n + 1))


def bernoulli_poly_seq(x: RationalLike, K: int) -> EgfSeq:
    """``(B_0(x), ..., B_{K-1}(x))`` as the convolution of ``B`` with ``exp(x z)``."""
    return star(bernoulli_numbers(K), geometric(x, K))


def faulhaber_sum(n: int, m: int) -> Fraction:
    """``1^n + 2^n + ... + m^n`` in closed form through Bernoulli numbers."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if m < 1:
        raise ValueError("upper limit must be positive")
    bs = bernoulli_numbers(n + 1)
    total = Fraction(0)
    for k in range(n + 1):
        if bs[k]:
            total += comb(n + 1, k) * (-1) ** k * bs[k] * m ** (n - k + 1)
    return total / (n + 1)


def power_sum_bruteforce(n: int, m: int) -> Fraction:
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    return Fraction(sum(j**n for j in range(1, m + 1)))


def s_poly(n: int) -> Poly:
    """Polynomial ``S_n`` with ``S_n(m) = sum_{j=1}^{m-1} j^n`` for integers ``m >= 1``.

    Built from the expansion in powers of ``(x - 1)``::

        S_n(x) = sum_k (n!/k!) (-1)^k B_k (x-1)^(n+1-k) / (n+1-k)!
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    bs = bernoulli_numbers(n + 1)
    shifted = Poly([-1, 1])
    total = Poly([0])
    power = Poly([1])
    powers = [power]
    for _ in range(n + 1):
        power = power * shifted
        powers.append(power)
    for k in range(n + 1):
        if bs[k]:
            c = Fraction(factorial(n), factorial(k)) * (-1) ** k * bs[k] / factorial(n + 1 - k)
            total = total + powers[n + 1 - k] * c
    return total
