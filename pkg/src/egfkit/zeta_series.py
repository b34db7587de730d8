"""Numerical zeta(s) from the double sum

    zeta(s) = e * sum_{n>=0} sum_{i=0}^{n} (-1)^(n-i) / ((n-i)! (1+i)^s)

and an independent reference evaluator built on the alternating eta series.

The double sum is the binomial convolution of ``((1+i)^-s * i!)_i`` with
``exp(-z)`` evaluated at ``z = 1``; its inner sums are ``Delta^n f(0) / n!``
for ``f(i) = i! (1+i)^-s``.  Truncating after ``N`` outer terms leaves an error
of roughly ``sum_{i>N} (1+i)^-s``, i.e. ``N^(1-s) / (s-1)`` for real ``s > 1``;
the rearrangement does not speed up the Dirichlet series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath

from .zeta_special import zeta_neg

__all__ = [
    "MIN_PREC",
    "ZetaAccuracyError",
    "ZetaReport",
    "series_guard_bits",
    "inner_sums",
    "zeta_via_differences",
    "zeta_reference",
    "convergence_report",
    "tail_estimate",
]

MIN_PREC = 53


class ZetaAccuracyError(ValueError):
    """The reference evaluator cannot certify the requested accuracy at this ``s``."""


def series_guard_bits(N: int) -> int:
    return max(32, math.ceil(1.5 * N))


def _as_number(s: Any) -> mpmath.mpf | mpmath.mpc:
    if isinstance(s, Fraction):
        return mpmath.mpf(s.numerator) / s.denominator
    if isinstance(s, complex):
        return mpmath.mpc(s)
    return mpmath.mpmathify(s)


def _is_pole(s) -> bool:
    return s == 1


def _check_prec(prec: int) -> None:
    if not isinstance(prec, int) or prec < MIN_PREC:
        raise ValueError(f"precision must be an integer >= {MIN_PREC} bits, got {prec!r}")


@dataclass(frozen=True)
class ZetaReport:
    """Partial sums ``T_0 .. T_N`` of the double series, with a reference value."""

    s: Any
    terms_used: int
    prec: int
    partial_sums: tuple[Any, ...]
    reference: Any = None
    reference_error: str | None = None

    @property
    def final(self):
        return self.partial_sums[-1]

    @property
    def abs_error(self):
        if self.reference is None:
            return None
        with mpmath.workprec(self.prec):
            return abs(self.final - self.reference)

    @property
    def errors(self) -> tuple[Any, ...] | None:
        """``|T_n - reference|`` for every ``n <= N``; ``None`` without a reference."""
        if self.reference is None:
            return None
        with mpmath.workprec(self.prec):
            return tuple(abs(t - self.reference) for t in self.partial_sums)


def inner_sums(s: Any, N: int, prec: int) -> list:
    """``inner_n = sum_{i=0}^n (-1)^(n-i) / ((n-i)! (1+i)^s)`` for ``n = 0..N``.

    Computed at ``prec + series_guard_bits(N)`` bits and returned at that
    working precision (callers round).
    """
    if N < 0:
        raise ValueError("number of terms must be nonnegative")
    wp = prec + series_guard_bits(N)
    with mpmath.workprec(wp):
        s = _as_number(s)
        powers = [mpmath.power(mpmath.mpf(1 + i), -s) for i in range(N + 1)]
        recip_fact = [mpmath.mpf(1)]
        for m in range(1, N + 1):
            recip_fact.append(recip_fact[-1] / m)
        out = []
        for n in range(N + 1):
            acc = mpmath.mpf(0)
            for i in range(n + 1):
                term = recip_fact[n - i] * powers[i]
                acc = acc - term if (n - i) % 2 else acc + term
            out.append(acc)
    return out


def zeta_via_differences(s: Any, N: int, prec: int = 128, *, with_reference: bool = True) -> ZetaReport:
    """Evaluate the double series through ``N`` outer terms at ``prec`` bits.

    Outer index ascending, inner index ascending, ``e`` applied last to each
    partial sum.  Identical arguments give bit-identical results.
    """
    _check_prec(prec)
    if not isinstance(N, int) or N < 0:
        raise ValueError("number of terms must be a nonnegative integer")
    wp = prec + series_guard_bits(N)
    with mpmath.workprec(wp):
        s_val = _as_number(s)
        if _is_pole(s_val):
            raise ValueError("pole of zeta at s = 1")
        inner = inner_sums(s_val, N, prec)
        e = +mpmath.e
        running = mpmath.mpf(0)
        partial_wp = []
        for term in inner:
            running += term
            partial_wp.append(e * running)
    with mpmath.workprec(prec):
        partial = tuple(+t for t in partial_wp)
        s_out = +s_val

    reference = None
    reference_error = None
    if with_reference:
        try:
            reference = zeta_reference(s_val, prec)
        except ZetaAccuracyError as exc:
            reference_error = str(exc)
    return ZetaReport(s_out, N, prec, partial, reference, reference_error)


def convergence_report(s: Any, N_max: int, prec: int = 128) -> ZetaReport:
    """Run the series to ``N_max`` and keep every partial sum for error study.

    No accuracy is promised for ``Re(s) <= 1``; the report is diagnostic there.
    """
    return zeta_via_differences(s, N_max, prec, with_reference=True)


def tail_estimate(s: Any, N: int, prec: int = 128):
    """``zeta(s) - sum_{i=1}^{N+1} i^-s``, the size of the dominant truncation error."""
    with mpmath.workprec(prec + 16):
        s_val = _as_number(s)
        head = mpmath.fsum(mpmath.power(mpmath.mpf(i), -s_val) for i in range(1, N + 2))
        return zeta_reference(s_val, prec) - head


# --- reference evaluator -----------------------------------------------------

_LN_BORWEIN = math.log(3 + math.sqrt(8))


def _borwein_d(n: int) -> list[Fraction]:
    # d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    out = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(n * math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        out.append(acc)
    return out


def _eta(s, wp: int):
    t = abs(float(mpmath.im(s)))
    budget = wp * math.log(2) + t * math.pi / 2 + math.log1p(2 * t) + math.log(3) + 2
    n = max(4, math.ceil(budget / _LN_BORWEIN))
    d = _borwein_d(n)
    dn = d[n]
    acc = mpmath.mpf(0)
    for k in range(n):
        c = (d[k] - dn) * (-1) ** k
        acc += (mpmath.mpf(c.numerator) / c.denominator) * mpmath.power(k + 1, -s)
    return -acc / (mpmath.mpf(dn.numerator) / dn.denominator)


def zeta_reference(s: Any, prec: int = 128):
    """Reference zeta(s) independent of the double series.

    Nonpositive integers use the exact Bernoulli values.  For ``Re(s) > 0`` the
    eta series ``sum (-1)^(k) / (k+1)^s`` is accelerated with Borwein's
    weights and divided by ``1 - 2^(1-s)``.  Elsewhere no certified value is
    available and :class:`ZetaAccuracyError` is raised.
    """
    _check_prec(prec)
    wp = prec + 24
    with mpmath.workprec(wp):
        s = _as_number(s)
        if _is_pole(s):
            raise ValueError("pole of zeta at s = 1")
        if mpmath.im(s) == 0 and mpmath.re(s) <= 0 and mpmath.re(s) == int(mpmath.re(s)):
            exact = zeta_neg(int(-mpmath.re(s)))
            with mpmath.workprec(prec):
                return mpmath.mpf(exact.numerator) / exact.denominator
        if mpmath.re(s) <= 0:
            raise ZetaAccuracyError(
                f"reference accuracy not attainable at s = {mpmath.nstr(s, 10)}: "
                "eta acceleration is only certified for Re(s) > 0"
            )
        denom = 1 - mpmath.power(2, 1 - s)
        if denom == 0:
            raise ZetaAccuracyError("1 - 2^(1-s) vanishes; eta/zeta relation unusable")
        lost = max(0, -int(mpmath.floor(mpmath.log(abs(denom), 2))))
        # away from s = 1, a small denominator means eta is ~0 as well (0/0)
        k = int(mpmath.nint(mpmath.im(s) * mpmath.log(2) / (2 * mpmath.pi)))
        if k != 0 and lost > 16:
            raise ZetaAccuracyError(
                f"s is within 2^-{lost} of a zero of 1 - 2^(1-s); eta/zeta relation is 0/0 there"
            )
        if lost > wp:
            raise ZetaAccuracyError(
                f"1 - 2^(1-s) = {mpmath.nstr(denom, 5)} cancels more than {wp} bits"
            )
    wp += lost
    with mpmath.workprec(wp):
        s = _as_number(s)
        denom = 1 - mpmath.power(2, 1 - s)
        value = _eta(s, wp) / denom
    with mpmath.workprec(prec):
        return +value
