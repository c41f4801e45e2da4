"""Command-line front end.

Single-value queries, range verification sweeps, bound reports, and
benchmarks over the row-lcm fast path. Human output by default; --json
switches to machine mode with exactly one JSON record per result line,
big integers serialized as decimal strings and factored values as
ascending [prime, exponent] pairs.

Exit codes: 0 success with all checks passed, 1 if any check failed,
2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from .errors import InternalInvariantError
from .exact import binomial, factored_value, lcm_list
from .identities import (
    lcm_binom_row_direct,
    lcm_binom_row_identity,
    lcm_range_factored,
    row_max_vp,
    row_max_vp_bruteforce,
)
from .padic import expand, vp, vp_binomial_kummer, vp_binomial_legendre
from .verify import CHECKS, psi_ratio, verify_range_detailed

__all__ = ["main", "build_parser"]

DEFAULT_BENCH_CUTOFF = 5000


def _emit(args: argparse.Namespace, op: str, inputs: dict[str, Any], output: Any,
          ok: bool, human: list[str]) -> None:
    """Print one result: a single JSON record in machine mode, plain lines otherwise."""
    if args.json:
        record = {
            "op": op,
            "input": {key: str(value) for key, value in inputs.items()},
            "output": output,
            "ok": ok,
        }
        print(json.dumps(record))
    else:
        for line in human:
            print(line)


def _factor_pairs(factors: dict[int, int]) -> list[list[int]]:
    return [[p, e] for p, e in sorted(factors.items())]


def _format_factored(factors: dict[int, int]) -> str:
    if not factors:
        return "1"
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factors.items()))


def _cmd_vp(args: argparse.Namespace) -> int:
    value = vp(args.n, args.p)
    _emit(args, "vp", {"n": args.n, "p": args.p}, str(value), True, [str(value)])
    return 0


def _cmd_vp_binom(args: argparse.Namespace) -> int:
    if args.method == "kummer":
        value = vp_binomial_kummer(args.n, args.k, args.p)
    elif args.method == "legendre":
        value = vp_binomial_legendre(args.n, args.k, args.p)
    else:
        value = vp(binomial(args.n, args.k), args.p)
    inputs = {"n": args.n, "k": args.k, "p": args.p, "method": args.method}
    _emit(args, "vp-binom", inputs, str(value), True, [str(value)])
    return 0


def _cmd_digits(args: argparse.Namespace) -> int:
    expansion = expand(args.k, args.p)
    digits = list(expansion.digits)
    human = [f"{args.k} in base {args.p}: {digits} (least significant first)"]
    _emit(args, "digits", {"k": args.k, "p": args.p}, digits, True, human)
    return 0


def _cmd_row_max(args: argparse.Namespace) -> int:
    result = row_max_vp(args.k, args.p)
    output: dict[str, Any] = {
        "max_valuation": result.max_valuation,
        "attained_at": None if result.attained_at is None else str(result.attained_at),
    }
    human = [
        f"max v_{args.p} over row {args.k}: {result.max_valuation}"
        + ("" if result.attained_at is None else f" (attained at index {result.attained_at})")
    ]
    ok = True
    if args.oracle:
        scanned = row_max_vp_bruteforce(args.k, args.p)
        output["oracle"] = scanned
        ok = scanned == result.max_valuation
        if ok and result.attained_at is not None:
            ok = vp_binomial_kummer(args.k, result.attained_at, args.p) == scanned
        human.append(f"row scan oracle: {scanned} ({'agrees' if ok else 'DISAGREES'})")
    _emit(args, "row-max", {"k": args.k, "p": args.p}, output, ok, human)
    return 0 if ok else 1


def _cmd_lcm_range(args: argparse.Namespace) -> int:
    factors = lcm_range_factored(args.n)
    output: dict[str, Any] = {"factors": _factor_pairs(factors)}
    text = f"lcm(1..{args.n}) = {_format_factored(factors)}"
    if args.value:
        value = factored_value(factors)
        output["value"] = str(value)
        text += f" = {value}"
    _emit(args, "lcm-range", {"n": args.n}, output, True, [text])
    return 0


def _cmd_lcm_binom_row(args: argparse.Namespace) -> int:
    inputs = {"k": args.k, "method": args.method}
    if args.method == "identity":
        factors = lcm_binom_row_identity(args.k)
        output: dict[str, Any] = {"factors": _factor_pairs(factors)}
        text = f"lcm of row {args.k} = {_format_factored(factors)}"
        if args.value:
            value = factored_value(factors)
            output["value"] = str(value)
            text += f" = {value}"
    else:
        value = lcm_binom_row_direct(args.k)
        output = {"value": str(value)}
        text = f"lcm of row {args.k} = {value}"
    _emit(args, "lcm-binom-row", inputs, output, True, [text])
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    workers = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    summary, failing = verify_range_detailed(args.check, args.lo, args.hi, workers)
    output = {
        "check": summary.check_name,
        "from": str(summary.lo),
        "to": str(summary.hi),
        "total": summary.total,
        "failures": summary.failures,
        "first_failure": None if summary.first_failure is None else str(summary.first_failure),
        "elapsed": round(summary.elapsed, 6),
        "failing": [str(value) for value in failing],
    }
    human = [
        f"check={summary.check_name} from={summary.lo} to={summary.hi} "
        f"total={summary.total} failures={summary.failures} elapsed={summary.elapsed:.3f}s"
    ]
    if failing and not args.quiet:
        shown = ", ".join(str(value) for value in failing[:20])
        more = f" (+{len(failing) - 20} more)" if len(failing) > 20 else ""
        human.append(f"failing inputs: {shown}{more}")
    ok = summary.failures == 0
    _emit(args, "verify", {"check": args.check, "from": args.lo, "to": args.hi}, output, ok, human)
    return 0 if ok else 1


def _cmd_psi_ratio(args: argparse.Namespace) -> int:
    ratio = psi_ratio(args.n)
    _emit(args, "psi-ratio", {"n": args.n}, ratio, True, [str(ratio)])
    return 0


def _bench_one(subject: str, size: int, cutoff: int) -> dict[str, Any]:
    started = time.perf_counter()
    if subject == "row-lcm":
        fast = factored_value(lcm_binom_row_identity(size))
    else:
        fast = factored_value(lcm_range_factored(size))
    fast_seconds = time.perf_counter() - started
    result: dict[str, Any] = {
        "size": size,
        "identity_seconds": round(fast_seconds, 6),
        "direct_seconds": None,
        "speedup": None,
        "match": None,
    }
    if size <= cutoff:
        started = time.perf_counter()
        if subject == "row-lcm":
            direct = lcm_binom_row_direct(size)
        else:
            direct = lcm_list(range(1, size + 1))
        direct_seconds = time.perf_counter() - started
        result["direct_seconds"] = round(direct_seconds, 6)
        result["speedup"] = round(direct_seconds / max(fast_seconds, 1e-9), 2)
        result["match"] = fast == direct
    return result


def _cmd_bench(args: argparse.Namespace) -> int:
    ok = True
    for size in args.sizes:
        row = _bench_one(args.subject, size, args.cutoff)
        if row["match"] is False:
            ok = False
        if row["direct_seconds"] is None:
            text = (
                f"{args.subject} size={size}: identity {row['identity_seconds']}s, "
                f"direct skipped (over cutoff {args.cutoff})"
            )
        else:
            verdict = "values match" if row["match"] else "VALUES DIFFER"
            text = (
                f"{args.subject} size={size}: identity {row['identity_seconds']}s, "
                f"direct {row['direct_seconds']}s, speedup {row['speedup']}x, {verdict}"
            )
        inputs = {"subject": args.subject, "size": size, "cutoff": args.cutoff}
        _emit(args, "bench", inputs, row, row["match"] is not False, [text])
    return 0 if ok else 1


def _sizes_arg(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be a comma-separated list of integers, got {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("at least one size is required")
    if any(size < 1 for size in sizes):
        raise argparse.ArgumentTypeError("every size must be >= 1")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine mode: one JSON record per result line")
    common.add_argument("--quiet", action="store_true", help="summary only; suppress per-item detail")

    parser = argparse.ArgumentParser(
        prog="binomlcm",
        description="Exact lcm identities for binomial rows: queries, verification sweeps, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vp", parents=[common], help="p-adic valuation of n")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(handler=_cmd_vp)

    p = sub.add_parser("vp-binom", parents=[common], help="p-adic valuation of C(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--method", choices=["kummer", "legendre", "direct"], default="kummer")
    p.set_defaults(handler=_cmd_vp_binom)

    p = sub.add_parser("digits", parents=[common], help="base-p digits of k, least significant first")
    p.add_argument("k", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(handler=_cmd_digits)

    p = sub.add_parser("row-max", parents=[common], help="maximum valuation over the row C(k, 0..k)")
    p.add_argument("k", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force row scan and compare")
    p.set_defaults(handler=_cmd_row_max)

    p = sub.add_parser("lcm-range", parents=[common], help="lcm(1..n), factored by default")
    p.add_argument("n", type=int)
    p.add_argument("--value", action="store_true", help="also expand to the exact decimal value")
    p.set_defaults(handler=_cmd_lcm_range)

    p = sub.add_parser("lcm-binom-row", parents=[common], help="lcm of the row C(k, 0..k)")
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=["identity", "direct"], default="identity")
    p.add_argument("--value", action="store_true", help="expand the factored result to its exact value")
    p.set_defaults(handler=_cmd_lcm_binom_row)

    p = sub.add_parser("verify", parents=[common], help="sweep a named check over an inclusive range")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker count (default: available parallelism)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("psi-ratio", parents=[common], help="log lcm(1..n) / n from the factored form")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_psi_ratio)

    p = sub.add_parser("bench", parents=[common], help="time the fast path against the direct oracle")
    p.add_argument("subject", choices=["row-lcm", "range-lcm"])
    p.add_argument("--sizes", type=_sizes_arg, required=True, help="comma-separated sizes, each >= 1")
    p.add_argument("--cutoff", type=int, default=DEFAULT_BENCH_CUTOFF,
                   help="largest size at which the direct path is still run")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    # Exact decimal output is the point; lift the interpreter's int->str cap.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InternalInvariantError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
