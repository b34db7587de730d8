"""Exact EGF sequence algebra, Bernoulli and zeta identities, and a forward-difference zeta evaluator."""

from .bernoulli import (
    H_seq,
    Poly,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_seq,
    faulhaber_sum,
    power_sum_bruteforce,
    s_poly,
)
from .calculus import ShiftedSeq, definite_integral_01, integrate_shifted, s_poly_shifted
from .fwd_diff import ValueTable, diff_seq_via_star, diff_table_recursive, forward_diff
from .seq_core import (
    EgfSeq,
    Rational,
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
)
from .zeta_series import ZetaReport, convergence_report, zeta_reference, zeta_via_differences
from .zeta_special import hurwitz_neg, zeta_neg, zeta_neg_vector

__version__ = "0.1.0"
