"""Exact algebra of truncated EGF coefficient sequences.

A sequence ``(a_0, a_1, ..., a_{K-1})`` stands for the power series
``sum a_n z^n / n!`` cut off after ``K`` terms.  Binary operations on two
sequences of different orders truncate to the shorter one; this is exact
prefix-wise because every operation here produces index ``n`` from inputs
at indices ``<= n`` only.

Scalars are :class:`fractions.Fraction`; nothing in this module rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "EgfSeq",
    "to_rational",
    "make_seq",
    "add",
    "scale",
    "star",
    "hadamard",
    "identity",
    "geometric",
    "inverse",
    "shift_left",
    "shift_right",
]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` / ``"p"`` string to a Fraction.

    Floats are rejected: they would smuggle binary rounding into exact work.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class EgfSeq:
    """Truncated coefficient vector of an exponential generating function."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("empty sequence")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> EgfSeq:
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} sequence to {order}")
        return EgfSeq(self.coeffs[:order])

    def __add__(self, other: EgfSeq) -> EgfSeq:
        return add(self, other)

    def __sub__(self, other: EgfSeq) -> EgfSeq:
        return add(self, scale(-1, other))

    def __neg__(self) -> EgfSeq:
        return scale(-1, self)

    def __rmul__(self, lam: RationalLike) -> EgfSeq:
        return scale(lam, self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


def make_seq(coeffs: Iterable[RationalLike]) -> EgfSeq:
    return EgfSeq(tuple(to_rational(c) for c in coeffs))


def _common_order(a: EgfSeq, b: EgfSeq) -> int:
    return min(a.order, b.order)


def add(a: EgfSeq, b: EgfSeq) -> EgfSeq:
    k = _common_order(a, b)
    return EgfSeq(tuple(a.coeffs[n] + b.coeffs[n] for n in range(k)))


def scale(lam: RationalLike, a: EgfSeq) -> EgfSeq:
    lam = to_rational(lam)
    return EgfSeq(tuple(lam * c for c in a.coeffs))


def star(a: EgfSeq, b: EgfSeq) -> EgfSeq:
    """Binomial convolution: ``(a * b)_n = sum_k C(n, k) a_k b_{n-k}``.

    This is the coefficient sequence of the product of the two EGFs.
    """
    k = _common_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(k):
        total = Fraction(0)
        for i in range(n + 1):
            if ac[i] and bc[n - i]:
                total += comb(n, i) * ac[i] * bc[n - i]
        out.append(total)
    return EgfSeq(tuple(out))


def hadamard(a: EgfSeq, b: EgfSeq) -> EgfSeq:
    k = _common_order(a, b)
    return EgfSeq(tuple(a.coeffs[n] * b.coeffs[n] for n in range(k)))


def _check_order(K: int) -> None:
    if not isinstance(K, int) or K < 1:
        raise ValueError(f"order must be a positive integer, got {K!r}")


def identity(K: int) -> EgfSeq:
    _check_order(K)
    return EgfSeq((Fraction(1),) + (Fraction(0),) * (K - 1))


def geometric(j: RationalLike, K: int) -> EgfSeq:
    """Coefficients ``(j^0, j^1, ..., j^{K-1})`` of ``exp(j z)``; ``0^0 = 1``."""
    _check_order(K)
    j = to_rational(j)
    out = [Fraction(1)]
    for _ in range(K - 1):
        out.append(out[-1] * j)
    return EgfSeq(tuple(out))


def inverse(a: EgfSeq) -> EgfSeq:
    """Inverse under ``star``, solved term by term from ``a * b = id``."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("not invertible: zero leading coefficient")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a.coeffs[k]:
                acc += comb(n, k) * a.coeffs[k] * b[n - k]
        b.append(-inv0 * acc)
    return EgfSeq(tuple(b))


def shift_left(a: EgfSeq) -> EgfSeq:
    """Derivative of the EGF: drop ``a_0`` and move everything one slot left."""
    if a.order < 2:
        raise ValueError("cannot differentiate order-1 truncation")
    return EgfSeq(a.coeffs[1:])


def shift_right(a: EgfSeq) -> EgfSeq:
    """Antiderivative from 0: prepend a single zero."""
    return EgfSeq((Fraction(0),) + a.coeffs)

