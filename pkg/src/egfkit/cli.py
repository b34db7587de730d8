"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
Exact results are written as ``p/q`` in text mode and as
``{"num": "...", "den": "..."}`` (decimal strings) in JSON mode.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import mpmath

from . import bernoulli as bn
from . import calculus, fwd_diff, seq_core, verify, zeta_series, zeta_special as zs
from .seq_core import EgfSeq

DEFAULT_PREC = 128
DEFAULT_TERMS = 40


class VerificationFailed(Exception):
    pass


# --- encoding -----------------------------------------------------------------

def exact(q: Fraction | int) -> dict[str, str]:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _decimal(x, prec: int) -> str:
    # ceil(prec * log10 2) + 1 significant digits round-trip at prec bits
    digits = math.ceil(prec * math.log10(2)) + 1
    with mpmath.workprec(prec):
        return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-math.inf, max_fixed=math.inf)


def floating(x, prec: int) -> dict[str, Any]:
    with mpmath.workprec(prec):
        x = mpmath.mpmathify(x)
        if isinstance(x, mpmath.mpc):
            return {"value": _decimal(x.real, prec), "imag": _decimal(x.imag, prec), "precision_bits": prec}
    return {"value": _decimal(x, prec), "precision_bits": prec}


def _seq_out(seq) -> list[dict[str, str]]:
    return [exact(c) for c in seq]


def record(command: str, inputs: dict[str, Any], result: Any, extras: dict[str, Any] | None = None) -> dict[str, Any]:
    rec = {"command": command, "inputs": inputs, "result": result}
    if extras:
        rec["extras"] = extras
    return rec


def _text(value: Any) -> str:
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return value["num"] if value["den"] == "1" else f"{value['num']}/{value['den']}"
    if isinstance(value, dict) and "value" in value:
        if "imag" in value:
            im = value["imag"]
            sign, mag = ("-", im[1:]) if im.startswith("-") else ("+", im)
            return f"{value['value']} {sign} {mag}j"
        return value["value"]
    if isinstance(value, list):
        return "(" + ", ".join(_text(v) for v in value) + ")"
    if isinstance(value, dict):
        return "\n".join(f"{k}: {_text(v)}" for k, v in value.items())
    return str(value)


def emit(rec: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rec))
        return
    print(_text(rec["result"]))
    for key, val in rec.get("extras", {}).items():
        if isinstance(val, list) and val and not isinstance(val[0], dict):
            print(f"{key}:")
            for line in val:
                print(f"  {line}")
        else:
            print(f"{key}: {_text(val)}")


# --- argument types -----------------------------------------------------------

def rational_arg(text: str) -> Fraction:
    try:
        return seq_core.to_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from exc


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def seq_arg(text: str) -> EgfSeq:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise argparse.ArgumentTypeError("empty sequence")
    return EgfSeq(tuple(rational_arg(p) for p in parts))


def load_config(path: str | None) -> dict[str, str]:
    if path is None:
        return {}
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"bad config line {raw!r}; expected key=value")
        out[key.strip()] = value.strip()
    return out


def resolve_numeric(args: argparse.Namespace) -> tuple[int, int]:
    cfg = load_config(getattr(args, "config", None))
    prec = args.prec
    if prec is None:
        prec = int(cfg.get("prec", os.environ.get("EGFKIT_PREC", DEFAULT_PREC)))
    terms = getattr(args, "terms", None)
    if terms is None:
        terms = int(cfg.get("terms", DEFAULT_TERMS))
    return prec, terms


def _parse_s(text: str, imag: str | None, prec: int):
    with mpmath.workprec(prec + 32):
        if "/" in text:
            q = rational_arg(text)
            s = mpmath.mpf(q.numerator) / q.denominator
        else:
            try:
                s = mpmath.mpf(text)
            except ValueError as exc:
                raise argparse.ArgumentTypeError(f"cannot parse s = {text!r}") from exc
        if imag is not None:
            s = mpmath.mpc(s, mpmath.mpf(imag))
        return s


# --- commands -----------------------------------------------------------------

def cmd_bernoulli(args) -> dict:
    if args.all:
        return record("bernoulli", {"n": args.n}, _seq_out(bn.bernoulli_numbers(args.n + 1)))
    return record("bernoulli", {"n": args.n}, exact(bn.bernoulli(args.n)))


def cmd_bernoulli_poly(args) -> dict:
    p = bn.bernoulli_poly(args.n)
    if args.x is None:
        return record("bernoulli-poly", {"n": args.n}, [exact(c) for c in p.coeffs], {"polynomial": str(p)})
    return record("bernoulli-poly", {"n": args.n, "x": str(args.x)}, exact(p(args.x)))


def cmd_faulhaber(args) -> dict:
    value = bn.faulhaber_sum(args.n, args.m)
    extras = {"bruteforce": exact(bn.power_sum_bruteforce(args.n, args.m))} if args.check else None
    if args.check and extras["bruteforce"] != exact(value):
        raise VerificationFailed(f"closed form {value} disagrees with direct sum")
    return record("faulhaber", {"n": args.n, "m": args.m}, exact(value), extras)


def cmd_zeta_neg(args) -> dict:
    if args.vector:
        return record("zeta-neg", {"n": args.n}, _seq_out(zs.zeta_neg_vector(args.n + 1).seq))
    return record("zeta-neg", {"n": args.n}, exact(zs.zeta_neg(args.n)))


def cmd_hurwitz_neg(args) -> dict:
    return record("hurwitz-neg", {"n": args.n, "a": str(args.a)}, exact(zs.hurwitz_neg(args.n, args.a)))


def cmd_zeta_eval(args) -> dict:
    prec, terms = resolve_numeric(args)
    s = _parse_s(args.s, args.imag, prec)
    rep = zeta_series.zeta_via_differences(s, terms, prec)
    inputs = {"s": args.s, "terms": terms, "prec": prec}
    if args.imag is not None:
        inputs["imag"] = args.imag
    extras: dict[str, Any] = {}
    if rep.reference is not None:
        extras["reference"] = floating(rep.reference, prec)
        extras["abs_error"] = floating(rep.abs_error, prec)
    else:
        extras["reference_error"] = rep.reference_error
    if args.report:
        extras["partial_sums"] = [floating(t, prec) for t in rep.partial_sums]
        if rep.errors is not None:
            extras["errors"] = [mpmath.nstr(e, 8) for e in rep.errors]
    return record("zeta-eval", inputs, floating(rep.final, prec), extras)


def cmd_zeta_ref(args) -> dict:
    prec, _ = resolve_numeric(args)
    s = _parse_s(args.s, args.imag, prec)
    return record("zeta-ref", {"s": args.s, "prec": prec}, floating(zeta_series.zeta_reference(s, prec), prec))


def cmd_seq(args) -> dict:
    a, b = args.a, args.b
    ops = {
        "star": lambda: seq_core.star(a, b),
        "add": lambda: seq_core.add(a, b),
        "hadamard": lambda: seq_core.hadamard(a, b),
        "inverse": lambda: seq_core.inverse(a),
        "derive": lambda: seq_core.shift_left(a),
        "integrate": lambda: seq_core.shift_right(a),
    }
    if args.op in ("star", "add", "hadamard") and b is None:
        raise ValueError(f"{args.op} needs two sequences")
    inputs = {"op": args.op, "a": [str(c) for c in a]}
    if b is not None:
        inputs["b"] = [str(c) for c in b]
    return record("seq", inputs, _seq_out(ops[args.op]()))


def cmd_special_seq(args) -> dict:
    makers = {
        "B": lambda k: bn.bernoulli_numbers(k),
        "H": lambda k: bn.H_seq(k),
        "id": lambda k: seq_core.identity(k),
        "geometric": lambda k: seq_core.geometric(args.j, k),
        "bernoulli-poly": lambda k: bn.bernoulli_poly_seq(args.j, k),
    }
    inputs = {"name": args.name, "order": args.order}
    if args.name in ("geometric", "bernoulli-poly"):
        inputs["j"] = str(args.j)
    return record("special-seq", inputs, _seq_out(makers[args.name](args.order)))


def cmd_fwd_diff(args) -> dict:
    table = fwd_diff.ValueTable(list(args.values))
    diffs = [fwd_diff.forward_diff(table, n) for n in range(len(table))]
    recursive = list(fwd_diff.diff_table_recursive(table).values)
    via_star = list(fwd_diff.diff_seq_via_star(table).coeffs)
    if not diffs == recursive == via_star:
        raise VerificationFailed("forward-difference routes disagree")
    return record("fwd-diff", {"values": [str(v) for v in args.values]}, _seq_out(diffs))


def cmd_s_poly(args) -> dict:
    if args.shifted:
        sh = calculus.s_poly_shifted(args.n)
        return record("s-poly", {"n": args.n, "basis": "shifted"}, _seq_out(sh.coeffs))
    p = bn.s_poly(args.n)
    return record("s-poly", {"n": args.n, "basis": "monomial"}, [exact(c) for c in p.coeffs], {"polynomial": str(p)})


def cmd_integral(args) -> dict:
    value = calculus.definite_integral_01(calculus.s_poly_shifted(args.n))
    z = zs.zeta_neg(args.n)
    if value != z:
        raise VerificationFailed(f"integral {value} differs from zeta(-{args.n}) = {z}")
    return record("integral", {"n": args.n}, exact(value), {"zeta_neg": exact(z)})


def cmd_verify(args) -> dict:
    results = verify.run_suite(args.suite, args.max_order, args.seed, args.cases)
    rows = [
        {"suite": r.suite, "check": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    failed = [r for r in results if not r.passed]
    rec = record(
        "verify",
        {"suite": args.suite, "max_order": args.max_order, "seed": args.seed},
        {"passed": len(results) - len(failed), "failed": len(failed)},
        {"checks": rows},
    )
    rec["_exit"] = 1 if failed else 0
    return rec


def _emit_verify(rec: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rec))
        return
    for row in rec["extras"]["checks"]:
        mark = "PASS" if row["passed"] else "FAIL"
        print(f"{mark}  {row['suite']}/{row['check']}  {row['detail']}")
    res = rec["result"]
    print(f"{res['passed']} passed, {res['failed']} failed")


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--prec", type=int, default=None, help="working precision in bits (default 128, or $EGFKIT_PREC)")
    numeric.add_argument("--config", default=None, help="file of key=value defaults (prec, terms)")

    parser = argparse.ArgumentParser(prog="egfkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number B_n")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("--all", action="store_true", help="print B_0 .. B_n")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("bernoulli-poly", parents=[common], help="coefficients of B_n(x) or its value at x")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("x", type=rational_arg, nargs="?")
    p.set_defaults(func=cmd_bernoulli_poly)

    p = sub.add_parser("faulhaber", parents=[common], help="sum_{j=1}^m j^n")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("m", type=nonneg_int)
    p.add_argument("--check", action="store_true", help="also sum directly and compare")
    p.set_defaults(func=cmd_faulhaber)

    p = sub.add_parser("zeta-neg", parents=[common], help="zeta(-n), exact")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("--vector", action="store_true", help="print zeta(0) .. zeta(-n)")
    p.set_defaults(func=cmd_zeta_neg)

    p = sub.add_parser("hurwitz-neg", parents=[common], help="zeta(-n, a), exact, 0 < a <= 1")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("a", type=rational_arg)
    p.set_defaults(func=cmd_hurwitz_neg)

    p = sub.add_parser("zeta-eval", parents=[common, numeric], help="zeta(s) from the forward-difference double series")
    p.add_argument("s", help="real part of s (decimal or p/q)")
    p.add_argument("--imag", default=None, help="imaginary part of s")
    p.add_argument("--terms", type=nonneg_int, default=None, help="outer terms N (default 40)")
    p.add_argument("--report", action="store_true", help="include every partial sum and its error")
    p.set_defaults(func=cmd_zeta_eval)

    p = sub.add_parser("zeta-ref", parents=[common, numeric], help="reference zeta(s) via accelerated eta series")
    p.add_argument("s")
    p.add_argument("--imag", default=None)
    p.set_defaults(func=cmd_zeta_ref)

    p = sub.add_parser("seq", parents=[common], help="sequence algebra on comma-separated rationals")
    p.add_argument("op", choices=("star", "add", "hadamard", "inverse", "derive", "integrate"))
    p.add_argument("a", type=seq_arg)
    p.add_argument("b", type=seq_arg, nargs="?")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("special-seq", parents=[common], help="named sequences: B, H, id, geometric, bernoulli-poly")
    p.add_argument("name", choices=("B", "H", "id", "geometric", "bernoulli-poly"))
    p.add_argument("order", type=nonneg_int)
    p.add_argument("--j", type=rational_arg, default=Fraction(1), help="parameter for geometric / bernoulli-poly")
    p.set_defaults(func=cmd_special_seq)

    p = sub.add_parser("fwd-diff", parents=[common], help="all forward differences of a rational table")
    p.add_argument("values", type=seq_arg)
    p.set_defaults(func=cmd_fwd_diff)

    p = sub.add_parser("s-poly", parents=[common], help="power-sum polynomial S_n(x) = sum_{j<x} j^n")
    p.add_argument("n", type=nonneg_int)
    p.add_argument("--shifted", action="store_true", help="coefficients in the (x-1)^k/k! basis")
    p.set_defaults(func=cmd_s_poly)

    p = sub.add_parser("integral", parents=[common], help="int_0^1 S_n(x) dx, checked against zeta(-n)")
    p.add_argument("n", type=nonneg_int)
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("verify", parents=[common], help="run an identity suite")
    p.add_argument("--suite", default="all", choices=verify.suite_names())
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec = args.func(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, IndexError, TypeError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        code = rec.pop("_exit")
        _emit_verify(rec, args.format)
        return code
    emit(rec, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
