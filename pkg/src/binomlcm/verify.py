"""Verification harness: every check recomputes one identity or bound along
two independent routes and reports exact agreement. Failures are data, not
exceptions; sweeps finish the whole range and aggregate deterministically
regardless of worker count."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Union

from .errors import OutOfRangeError, UnknownCheckError, ZeroValueError
from .exact import binomial_row, factored_value, is_prime, lcm_list, lcm_pair, primes_upto
from .identities import (
    lcm_binom_row_direct,
    lcm_binom_row_identity,
    lcm_range_factored,
    row_max_vp,
    row_max_vp_bruteforce,
    vp_lcm_range,
    vp_row_lcm_formula,
    vp_successor_formula,
)
from .padic import vp, vp_binomial_kummer

__all__ = [
    "CheckReport",
    "RangeSummary",
    "check_theorem1",
    "check_prop1",
    "check_eq3",
    "check_eq4",
    "check_eq5",
    "check_lower_bound",
    "check_proof_chain",
    "check_hanson",
    "psi_ratio",
    "verify_range",
    "verify_range_detailed",
    "CHECKS",
]

# Per-input prime sweep bound for the digit-formula checks.
CHECK_PRIME_BOUND = 50

Side = Union[int, dict[int, int]]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check at one input: both sides, verdict, and on
    failure a witness naming the first divergence."""

    check_name: str
    input: int
    lhs: Side
    rhs: Side
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class RangeSummary:
    """Aggregate of a sweep over [lo, hi]; first_failure is the smallest
    failing input, independent of execution order."""

    check_name: str
    lo: int
    hi: int
    total: int
    failures: int
    first_failure: int | None
    elapsed: float


def _report(name: str, value: int, lhs: Side, rhs: Side, witness: str | None) -> CheckReport:
    return CheckReport(name, value, lhs, rhs, witness is None, witness)


def check_theorem1(k: int) -> CheckReport:
    """Row lcm two ways: factored fast path vs. big-integer fold over the row."""
    identity = factored_value(lcm_binom_row_identity(k))
    direct = lcm_binom_row_direct(k)
    witness = None
    if identity != direct:
        witness = f"k={k}: identity path {identity} != direct fold {direct}"
    return _report("theorem1", k, identity, direct, witness)


def check_prop1(k: int) -> CheckReport:
    """Row-maximum valuation: digit formula vs. brute-force row scan, plus
    attainment at the witness index, for every prime up to the sweep bound."""
    formula: dict[int, int] = {}
    brute: dict[int, int] = {}
    witness = None
    for p in primes_upto(CHECK_PRIME_BOUND):
        result = row_max_vp(k, p)
        scanned = row_max_vp_bruteforce(k, p)
        formula[p] = result.max_valuation
        brute[p] = scanned
        if witness is None and result.max_valuation != scanned:
            witness = f"p={p}: digit formula {result.max_valuation} != row scan {scanned}"
        if witness is None and result.attained_at is not None:
            at_witness = vp_binomial_kummer(k, result.attained_at, p)
            if at_witness != scanned:
                witness = (
                    f"p={p}: valuation {at_witness} at witness index "
                    f"{result.attained_at} != row maximum {scanned}"
                )
    return _report("prop1", k, formula, brute, witness)


def _next_prime_above(n: int) -> int:
    q = n + 1
    while not is_prime(q):
        q += 1
    return q


def check_eq3(n: int) -> CheckReport:
    """Range-lcm exponents: largest-power formula vs. valuations of the fold
    oracle, for every prime <= n and the first prime beyond n (expected 0)."""
    if n < 1:
        raise ZeroValueError(f"check_eq3 expects n >= 1, got {n}")
    fold = lcm_list(range(1, n + 1))
    formula: dict[int, int] = {}
    direct: dict[int, int] = {}
    witness = None
    for p in primes_upto(n):
        formula[p] = vp_lcm_range(n, p)
        direct[p] = vp(fold, p)
        if witness is None and formula[p] != direct[p]:
            witness = f"p={p}: power-fit exponent {formula[p]} != fold valuation {direct[p]}"
    beyond = _next_prime_above(n)
    formula[beyond] = 0
    direct[beyond] = vp(fold, beyond)
    if witness is None and direct[beyond] != 0:
        witness = f"p={beyond} exceeds n yet divides the fold lcm (valuation {direct[beyond]})"
    return _report("eq3", n, formula, direct, witness)


def check_eq4(k: int) -> CheckReport:
    """Successor valuation: digit-rollover formula vs. direct division count."""
    if k < 1:
        raise ZeroValueError(f"check_eq4 expects k >= 1, got {k}")
    formula: dict[int, int] = {}
    direct: dict[int, int] = {}
    witness = None
    for p in primes_upto(CHECK_PRIME_BOUND):
        formula[p] = vp_successor_formula(k, p)
        direct[p] = vp(k + 1, p)
        if witness is None and formula[p] != direct[p]:
            witness = f"p={p}: rollover formula {formula[p]} != v_p(k+1) {direct[p]}"
    return _report("eq4", k, formula, direct, witness)


def check_eq5(k: int) -> CheckReport:
    """Row-lcm exponent formula vs. the range/successor difference, and both
    against the row-maximum digit formula."""
    if k < 1:
        raise ZeroValueError(f"check_eq5 expects k >= 1, got {k}")
    formula: dict[int, int] = {}
    difference: dict[int, int] = {}
    witness = None
    for p in primes_upto(CHECK_PRIME_BOUND):
        formula[p] = vp_row_lcm_formula(k, p)
        difference[p] = vp_lcm_range(k + 1, p) - vp_successor_formula(k, p)
        row_maximum = row_max_vp(k, p).max_valuation
        if witness is None and not formula[p] == difference[p] == row_maximum:
            witness = (
                f"p={p}: row-lcm formula {formula[p]}, range/successor difference "
                f"{difference[p]}, row maximum {row_maximum}"
            )
    return _report("eq5", k, formula, difference, witness)


def check_lower_bound(n: int) -> CheckReport:
    """lcm(1..n) >= 2**(n-1), compared as exact integers."""
    if n < 1:
        raise ZeroValueError(f"check_lower_bound expects n >= 1, got {n}")
    range_lcm = factored_value(lcm_range_factored(n))
    floor = 1 << (n - 1)
    witness = None
    if range_lcm < floor:
        witness = f"n={n}: lcm(1..n) = {range_lcm} < 2^(n-1) = {floor}"
    return _report("lower-bound", n, range_lcm, floor, witness)


def check_proof_chain(n: int) -> CheckReport:
    """The three exact links from the row at n-1 up to the power-of-two floor:
    lcm(1..n) = n * row lcm, n * row max >= 2**(n-1), lcm(1..n) >= n * row max."""
    if n < 1:
        raise ZeroValueError(f"check_proof_chain expects n >= 1, got {n}")
    row_lcm = 1
    row_max = 1
    for entry in binomial_row(n - 1):
        row_lcm = lcm_pair(row_lcm, entry)
        if entry > row_max:
            row_max = entry
    range_lcm = factored_value(lcm_range_factored(n))
    floor = 1 << (n - 1)
    broken = []
    if range_lcm != n * row_lcm:
        broken.append(f"lcm(1..n) = {range_lcm} != n * row lcm = {n * row_lcm}")
    if n * row_max < floor:
        broken.append(f"n * row max = {n * row_max} < 2^(n-1) = {floor}")
    if range_lcm < n * row_max:
        broken.append(f"lcm(1..n) = {range_lcm} < n * row max = {n * row_max}")
    witness = "; ".join(broken) if broken else None
    return _report("proof-chain", n, range_lcm, floor, witness)


def check_hanson(n: int) -> CheckReport:
    """lcm(1..n) <= 3**n, compared as exact integers."""
    if n < 1:
        raise ZeroValueError(f"check_hanson expects n >= 1, got {n}")
    range_lcm = factored_value(lcm_range_factored(n))
    ceiling = 3**n
    witness = None
    if range_lcm > ceiling:
        witness = f"n={n}: lcm(1..n) = {range_lcm} > 3^n = {ceiling}"
    return _report("hanson", n, range_lcm, ceiling, witness)


def psi_ratio(n: int) -> float:
    """log lcm(1..n) divided by n, summed from the factored representation
    so the huge value itself is never constructed. Diagnostic output only."""
    if n < 1:
        raise ZeroValueError(f"psi_ratio expects n >= 1, got {n}")
    log_lcm = sum(vp_lcm_range(n, p) * math.log(p) for p in primes_upto(n))
    return log_lcm / n


CHECKS = {
    "theorem1": check_theorem1,
    "prop1": check_prop1,
    "eq3": check_eq3,
    "eq4": check_eq4,
    "eq5": check_eq5,
    "lower-bound": check_lower_bound,
    "proof-chain": check_proof_chain,
    "hanson": check_hanson,
}


def _run_one(item: tuple[str, int]) -> tuple[int, bool]:
    name, value = item
    return value, CHECKS[name](value).passed


def verify_range_detailed(
    check: str, lo: int, hi: int, workers: int = 1
) -> tuple[RangeSummary, list[int]]:
    """Run one named check on every input in [lo, hi], also returning the
    sorted failing inputs.

    Aggregation is keyed by input value, so totals, failure count, and
    first_failure never depend on worker count or scheduling.
    """
    if check not in CHECKS:
        raise UnknownCheckError(f"unknown check {check!r}; expected one of {sorted(CHECKS)}")
    if lo > hi:
        raise OutOfRangeError(f"empty range: from={lo} > to={hi}")
    if workers < 1:
        raise OutOfRangeError(f"workers must be >= 1, got {workers}")
    started = time.perf_counter()
    failing: list[int] = []
    if workers == 1:
        run = CHECKS[check]
        for value in range(lo, hi + 1):
            if not run(value).passed:
                failing.append(value)
    else:
        items = [(check, value) for value in range(lo, hi + 1)]
        chunk = max(1, len(items) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for value, passed in pool.map(_run_one, items, chunksize=chunk):
                if not passed:
                    failing.append(value)
    failing.sort()
    elapsed = time.perf_counter() - started
    summary = RangeSummary(
        check_name=check,
        lo=lo,
        hi=hi,
        total=hi - lo + 1,
        failures=len(failing),
        first_failure=failing[0] if failing else None,
        elapsed=elapsed,
    )
    return summary, failing


def verify_range(check: str, lo: int, hi: int, workers: int = 1) -> RangeSummary:
    """Sweep a named check over an inclusive range and summarize it."""
    summary, _ = verify_range_detailed(check, lo, hi, workers)
    return summary
