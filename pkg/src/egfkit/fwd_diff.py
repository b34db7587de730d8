"""Forward differences of tabulated values ``f(x), f(x+1), ...`` with unit step."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Sequence

import mpmath

from .seq_core import EgfSeq, geometric, make_seq, star

__all__ = [
    "ValueTable",
    "guard_bits",
    "forward_diff",
    "diff_table_recursive",
    "diff_seq_via_star",
]


@dataclass(frozen=True)
class ValueTable:
    """``values[i] = f(base + i)``.  Entries are exact (int/Fraction) or mpmath numbers."""

    values: tuple[Any, ...]
    base: Any = 0

    def __init__(self, values: Sequence[Any], base: Any = 0) -> None:
        if len(values) == 0:
            raise ValueError("empty value table")
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "base", base)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.values)


def guard_bits(n: int) -> int:
    """Extra working bits for an alternating binomial sum of ``n + 1`` terms."""
    return max(32, n)


def forward_diff(f: ValueTable, n: int, prec: int | None = None) -> Any:
    """``Delta^n f(base) = sum_{i=0}^n C(n,i) (-1)^(n-i) f(base+i)``.

    Exact tables give a Fraction.  Floating tables are summed in index order at
    ``prec + guard_bits(n)`` bits and rounded back to ``prec`` (default: the
    current mpmath precision).
    """
    if n < 0:
        raise ValueError("difference order must be nonnegative")
    if n >= len(f):
        raise IndexError("table too short")
    vals = f.values
    if f.is_exact:
        total = Fraction(0)
        for i in range(n + 1):
            total += comb(n, i) * (-1) ** (n - i) * Fraction(vals[i])
        return total
    target = mpmath.mp.prec if prec is None else prec
    with mpmath.workprec(target + guard_bits(n)):
        total = mpmath.mpf(0)
        for i in range(n + 1):
            total += comb(n, i) * (-1) ** (n - i) * vals[i]
    with mpmath.workprec(target):
        return +total


def diff_table_recursive(f: ValueTable) -> ValueTable:
    """All differences ``(Delta^0 f, ..., Delta^{L-1} f)`` at the base by repeated pairwise differencing."""
    row = list(f.values)
    out = [row[0]]
    while len(row) > 1:
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out.append(row[0])
    return ValueTable(out, f.base)


def diff_seq_via_star(f: ValueTable) -> EgfSeq:
    """Differences as the convolution of the value sequence with ``exp(-z)``."""
    if not f.is_exact:
        raise TypeError("convolution route needs exact rational values")
    values = make_seq(f.values)
    return star(values, geometric(-1, values.order))
