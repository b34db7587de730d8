"""Named identity suites, run exactly over rationals.

Each suite returns a list of :class:`CheckResult`; the CLI ``verify`` command
prints them and exits nonzero if any failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import bernoulli as bn
from . import calculus, fwd_diff, zeta_special as zs
from .seq_core import EgfSeq, add, geometric, hadamard, identity, inverse, scale, star


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def random_rational(rng: random.Random, bound: int = 50, den_bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den_bound))


def random_seq(rng: random.Random, order: int) -> EgfSeq:
    return EgfSeq(tuple(random_rational(rng) for _ in range(order)))


def _tally(suite: str, name: str, failures: list[str], total: int) -> CheckResult:
    if failures:
        return CheckResult(suite, name, False, f"{len(failures)}/{total} failed; first: {failures[0]}")
    return CheckResult(suite, name, True, f"{total} cases")


def convolution_laws(rng: random.Random, max_order: int = 16, cases: int = 200) -> list[CheckResult]:
    suite = "convolution-laws"
    bad: dict[str, list[str]] = {k: [] for k in ("commutative", "associative", "distributive", "scalar", "inverse")}
    for case in range(cases):
        k = rng.randint(1, max_order)
        a, b, c = (random_seq(rng, k) for _ in range(3))
        lam = random_rational(rng)
        if star(a, b) != star(b, a):
            bad["commutative"].append(f"case {case}")
        if star(star(a, b), c) != star(a, star(b, c)):
            bad["associative"].append(f"case {case}")
        if star(a, add(b, c)) != add(star(a, b), star(a, c)):
            bad["distributive"].append(f"case {case}")
        if not (star(a, scale(lam, b)) == scale(lam, star(a, b)) == star(scale(lam, a), b)):
            bad["scalar"].append(f"case {case}")
        if a[0] != 0 and star(a, inverse(a)) != identity(k):
            bad["inverse"].append(f"case {case}")
    return [_tally(suite, name, fails, cases) for name, fails in bad.items()]


def hadamard_laws(rng: random.Random, max_order: int = 16, cases: int = 200) -> list[CheckResult]:
    suite = "hadamard-laws"
    bad: dict[str, list[str]] = {k: [] for k in ("ones-unit", "id-unit", "geometric-distributes", "sign-flip")}
    for case in range(cases):
        k = rng.randint(1, max_order)
        a, b = random_seq(rng, k), random_seq(rng, k)
        j = random_rational(rng)
        while j == 0:
            j = random_rational(rng)
        g, neg = geometric(j, k), geometric(-1, k)
        if hadamard(geometric(1, k), b) != b:
            bad["ones-unit"].append(f"case {case}")
        if star(identity(k), a) != a:
            bad["id-unit"].append(f"case {case}")
        if hadamard(g, star(a, b)) != star(hadamard(g, a), hadamard(g, b)):
            bad["geometric-distributes"].append(f"case {case} j={j}")
        if star(hadamard(neg, a), b) != hadamard(neg, star(a, hadamard(neg, b))):
            bad["sign-flip"].append(f"case {case}")
    results = [_tally(suite, name, fails, cases) for name, fails in bad.items()]
    lhs, rhs = zs.alt_inverse_identity(30)
    results.append(CheckResult(suite, "alt-bernoulli-times-alt-harmonic", lhs == rhs, "order 30"))
    return results


def bernoulli_suite(rng: random.Random, max_order: int = 60, cases: int = 0) -> list[CheckResult]:
    suite = "bernoulli"
    K = max_order
    bs = bn.bernoulli_numbers(K)
    out = [CheckResult(suite, "recursion-equals-inverse-of-H", bs == inverse(bn.H_seq(K)), f"K={K}")]
    out.append(CheckResult(suite, "B-star-H-is-id", star(bs, bn.H_seq(K)) == identity(K), f"K={K}"))
    odd = [2 * k + 1 for k in range(1, (K - 1) // 2 + 1) if 2 * k + 1 < K and bs[2 * k + 1] != 0]
    out.append(CheckResult(suite, "odd-vanishing", not odd, f"nonzero at {odd}" if odd else f"up to {K - 1}"))
    n_max = min(50, K - 1)
    bad = [n for n in range(n_max + 1) if sum((comb(n, k) * bs[k] for k in range(n + 1)), Fraction(0)) != (-1) ** n * bs[n]]
    out.append(CheckResult(suite, "binomial-sum-reflects", not bad, f"n<={n_max}" if not bad else f"fails at {bad}"))
    ones = bn.bernoulli_poly_seq(1, K)
    out.append(CheckResult(suite, "B-star-ones-is-alt-B", ones == hadamard(geometric(-1, K), bs), f"K={K}"))
    return out


def faulhaber_suite(rng: random.Random, max_order: int = 10, cases: int = 0) -> list[CheckResult]:
    suite = "faulhaber"
    bad, gf_bad, total = [], [], 0
    for n in range(max_order + 1):
        for m in range(1, 101):
            total += 1
            f = bn.faulhaber_sum(n, m)
            if f != bn.power_sum_bruteforce(n, m):
                bad.append(f"n={n} m={m}")
            if f != (bn.bernoulli_poly(n + 1)(m + 1) - bn.bernoulli_poly(n + 1)(1)) / (n + 1):
                gf_bad.append(f"n={n} m={m}")
    out = [_tally(suite, "closed-form-vs-bruteforce", bad, total), _tally(suite, "bernoulli-poly-difference", gf_bad, total)]
    egf_bad = []
    for m in range(1, 21):
        K = 20
        sums = [bn.power_sum_bruteforce(n, m) for n in range(K - 1)]
        lhs = EgfSeq((Fraction(0),) + tuple((n + 1) * sums[n] for n in range(K - 1)))
        rhs = bn.bernoulli_poly_seq(m + 1, K) - bn.bernoulli_poly_seq(1, K)
        if lhs != rhs:
            egf_bad.append(f"m={m}")
    out.append(_tally(suite, "power-sum-egf", egf_bad, 20))
    return out


def polynomial_suite(rng: random.Random, max_order: int = 30, cases: int = 0) -> list[CheckResult]:
    suite = "polynomials"
    x = bn.Poly.x()
    names = ("H-star-B(x)-is-x^n", "binomial-sum-shifts", "difference-is-power", "reflection", "complement")
    bad: dict[str, list[int]] = {k: [] for k in names}
    for n in range(max_order + 1):
        bp = [bn.bernoulli_poly(k) for k in range(n + 2)]
        xn = bn.Poly.monomial(n)
        lhs = bn.Poly([0])
        for k in range(n + 1):
            lhs = lhs + bp[k] * Fraction(comb(n, k), n - k + 1)
        if lhs != xn:
            bad[names[0]].append(n)
        lhs = bn.Poly([0])
        for k in range(n + 2):
            lhs = lhs + bp[k] * comb(n + 1, k)
        if lhs != bp[n + 1].compose_linear(1, 1):
            bad[names[1]].append(n)
        if (bp[n + 1].compose_linear(1, 1) - bp[n + 1]) * Fraction(1, n + 1) != xn:
            bad[names[2]].append(n)
        if bp[n].compose_linear(-1, 1) != bp[n] * (-1) ** n:
            bad[names[3]].append(n)
        extra = bn.Poly.monomial(n - 1, n) if n else bn.Poly([0])
        if bp[n].compose_linear(-1, 0) * (-1) ** n != bp[n] + extra:
            bad[names[4]].append(n)
    return [_tally(suite, name, [str(v) for v in fails], max_order + 1) for name, fails in bad.items()]


def zeta_special_suite(rng: random.Random, max_order: int = 30, cases: int = 0) -> list[CheckResult]:
    suite = "zeta-special"
    out = []
    bad = [m for m in range(1, max_order + 1) if len(set(zs.alternating_zeta_identity(m))) != 1]
    out.append(_tally(suite, "alternating-zeta", [str(m) for m in bad], max_order))
    bad = [m for m in range(0, max_order + 1) if len(set(zs.alternating_zeta_identity_delta(m))) != 1]
    out.append(_tally(suite, "alternating-zeta-delta-form", [str(m) for m in bad], max_order + 1))
    bad = []
    grid = [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4)]
    for a in grid:
        for m in range(1, min(max_order, 20) + 1):
            lhs, rhs = zs.alternating_hurwitz_identity(m, a)
            if lhs != rhs:
                bad.append(f"m={m} a={a}")
    out.append(_tally(suite, "alternating-hurwitz", bad, len(grid) * min(max_order, 20)))
    bad = [str(n) for n in range(max_order + 1) if zs.hurwitz_neg(n, 1) != zs.zeta_neg(n)]
    out.append(_tally(suite, "hurwitz-at-one", bad, max_order + 1))
    bad = [str(k) for k in range(1, 15) if zs.zeta_neg(2 * k) != 0]
    out.append(_tally(suite, "trivial-zeros", bad, 14))
    return out


def vector_suite(rng: random.Random, max_order: int = 20, cases: int = 0) -> list[CheckResult]:
    suite = "vectors"
    K = max_order
    out = []
    for name, fn in (
        ("alt-harmonic", zs.alt_harmonic_identity),
        ("alt-bernoulli", zs.alt_bernoulli_identity),
        ("alt-inverse", zs.alt_inverse_identity),
    ):
        lhs, rhs = fn(K)
        out.append(CheckResult(suite, name, lhs == rhs, f"order {K}"))
    for a in (Fraction(1, 2), Fraction(1, 3)):
        lhs, rhs = zs.hurwitz_bernoulli_identity(a, K)
        out.append(CheckResult(suite, f"hurwitz-bernoulli a={a}", lhs == rhs, f"order {K}"))
        lhs, rhs = zs.hurwitz_exp_identity(a, K)
        out.append(CheckResult(suite, f"hurwitz-exp a={a}", lhs == rhs, f"order {K}"))
    return out


def forward_diff_suite(rng: random.Random, max_order: int = 20, cases: int = 100) -> list[CheckResult]:
    suite = "forward-diff"
    bad = []
    for case in range(cases):
        length = rng.randint(1, max_order)
        table = fwd_diff.ValueTable([random_rational(rng) for _ in range(length)])
        direct = [fwd_diff.forward_diff(table, n) for n in range(length)]
        recursive = list(fwd_diff.diff_table_recursive(table).values)
        via_star = list(fwd_diff.diff_seq_via_star(table).coeffs)
        if not direct == recursive == via_star:
            bad.append(f"case {case}")
    return [_tally(suite, "three-routes-agree", bad, cases)]


def integral_suite(rng: random.Random, max_order: int = 25, cases: int = 0) -> list[CheckResult]:
    suite = "integral"
    bad = [str(n) for n in range(max_order + 1) if calculus.definite_integral_01(calculus.s_poly_shifted(n)) != zs.zeta_neg(n)]
    out = [_tally(suite, "integral-of-power-sum-is-zeta", bad, max_order + 1)]
    bad = [str(n) for n in range(max_order + 1) if len(set(calculus.integral_closed_form(n))) != 1]
    out.append(_tally(suite, "closed-form-chain", bad, max_order + 1))
    bad = [str(n) for n in range(min(max_order, 15) + 1) if calculus.shifted_to_poly(calculus.s_poly_shifted(n)) != bn.s_poly(n)]
    out.append(_tally(suite, "basis-change-matches-monomial", bad, min(max_order, 15) + 1))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "convolution-laws": convolution_laws,
    "hadamard-laws": hadamard_laws,
    "bernoulli": bernoulli_suite,
    "faulhaber": faulhaber_suite,
    "polynomials": polynomial_suite,
    "zeta-special": zeta_special_suite,
    "vectors": vector_suite,
    "forward-diff": forward_diff_suite,
    "integral": integral_suite,
}

ALIASES = {"lemma-1-2": "convolution-laws", "lemma-1-4": "hadamard-laws"}


def suite_names() -> list[str]:
    return ["all", *SUITES, *ALIASES]


def run_suite(name: str, max_order: int | None = None, seed: int = 0, cases: int | None = None) -> list[CheckResult]:
    name = ALIASES.get(name, name)
    if name == "all":
        out: list[CheckResult] = []
        for sub in SUITES:
            out.extend(run_suite(sub, max_order, seed, cases))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    kwargs = {}
    if max_order is not None:
        kwargs["max_order"] = max_order
    if cases is not None:
        kwargs["cases"] = cases
    return SUITES[name](random.Random(seed), **kwargs)
