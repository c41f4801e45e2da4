"""Closed forms for binomial-row valuations and range lcms.

The centerpiece: the lcm of the row C(k, 0), ..., C(k, k) equals
lcm(1, ..., k+1) / (k+1), so the row lcm can be produced per prime from
digit data alone, never touching a binomial coefficient. The brute-force
row scan and the big-integer fold over the literal row live here too, as
the independent oracles everything is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, OutOfRangeError, ZeroValueError
from .exact import binomial_row, lcm_list, primes_upto, require_prime
from .padic import expand, first_non_max_digit, vp, vp_binomial_kummer

__all__ = [
    "RowMaxResult",
    "row_max_vp",
    "row_max_vp_bruteforce",
    "vp_lcm_range",
    "vp_successor_formula",
    "vp_row_lcm_formula",
    "lcm_range_factored",
    "lcm_binom_row_identity",
    "lcm_binom_row_direct",
]


@dataclass(frozen=True)
class RowMaxResult:
    """Maximum p-adic valuation over one binomial row.

    attained_at is an index realizing the maximum (p**N - 1 for the top
    digit index N of k); it is None only for the single-entry row k = 0.
    """

    k: int
    p: int
    max_valuation: int
    attained_at: int | None


def row_max_vp(k: int, p: int) -> RowMaxResult:
    """Row-maximum valuation computed from the digits of k alone.

    Zero when every base-p digit of k is p-1; otherwise the distance from
    the lowest non-maximal digit up to the top digit index.
    """
    require_prime(p)
    if k < 0:
        raise OutOfRangeError(f"row_max_vp expects k >= 0, got {k}")
    if k == 0:
        return RowMaxResult(k=0, p=p, max_valuation=0, attained_at=None)
    expansion = expand(k, p)
    top = len(expansion.digits) - 1
    lowest_open = first_non_max_digit(expansion)
    max_valuation = 0 if lowest_open is None else top - lowest_open
    return RowMaxResult(k=k, p=p, max_valuation=max_valuation, attained_at=p**top - 1)


def row_max_vp_bruteforce(k: int, p: int) -> int:
    """Independent oracle: scan the whole row, taking the largest borrow count."""
    require_prime(p)
    if k < 0:
        raise OutOfRangeError(f"row_max_vp_bruteforce expects k >= 0, got {k}")
    return max(vp_binomial_kummer(k, index, p) for index in range(k + 1))


def vp_lcm_range(n: int, p: int) -> int:
    """Largest e with p**e <= n, which is the exponent of p in lcm(1..n).

    Found by exact repeated multiplication, so boundaries at exact powers
    of p cannot be missed.
    """
    require_prime(p)
    if n < 1:
        raise ZeroValueError(f"vp_lcm_range expects n >= 1, got {n}")
    exponent = 0
    power = p
    while power <= n:
        exponent += 1
        power *= p
    return exponent


def vp_successor_formula(k: int, p: int) -> int:
    """Valuation of k+1 read off the digits of k: adding one rolls over
    exactly the low run of (p-1)-digits, whose length is the valuation."""
    require_prime(p)
    if k < 1:
        raise ZeroValueError(f"vp_successor_formula expects k >= 1, got {k}")
    expansion = expand(k, p)
    lowest_open = first_non_max_digit(expansion)
    if lowest_open is None:
        return len(expansion.digits)
    return lowest_open


def vp_row_lcm_formula(k: int, p: int) -> int:
    """Per-prime exponent of the row lcm straight from the digits of k:
    zero when every digit is p-1, else top index minus the lowest
    non-maximal digit index."""
    require_prime(p)
    if k < 1:
        raise ZeroValueError(f"vp_row_lcm_formula expects k >= 1, got {k}")
    expansion = expand(k, p)
    lowest_open = first_non_max_digit(expansion)
    if lowest_open is None:
        return 0
    return (len(expansion.digits) - 1) - lowest_open


def lcm_range_factored(n: int) -> dict[int, int]:
    """lcm(1..n) as a prime -> exponent map (largest power fitting in n)."""
    if n < 1:
        raise ZeroValueError(f"lcm_range_factored expects n >= 1, got {n}")
    return {p: vp_lcm_range(n, p) for p in primes_upto(n)}


def lcm_binom_row_identity(k: int) -> dict[int, int]:
    """Row lcm of C(k, 0..k) in factored form, via the fast path.

    For each prime p <= k+1 the exponent is the largest-power-of-p exponent
    for the range 1..k+1 minus the valuation of k+1 itself; zero exponents
    are dropped. Negative exponents cannot occur, so one is reported as an
    internal invariant failure rather than a user error.
    """
    if k < 0:
        raise OutOfRangeError(f"lcm_binom_row_identity expects k >= 0, got {k}")
    if k == 0:
        return {}
    successor = k + 1
    factors: dict[int, int] = {}
    for p in primes_upto(successor):
        exponent = vp_lcm_range(successor, p) - vp(successor, p)
        if exponent < 0:
            raise InternalInvariantError(
                f"negative exponent {exponent} for prime {p} at k={k}: "
                f"v_p(k+1) exceeded the range-lcm exponent"
            )
        if exponent:
            factors[p] = exponent
    return factors


def lcm_binom_row_direct(k: int) -> int:
    """Independent oracle: big-integer lcm fold over the literal row."""
    return lcm_list(binomial_row(k))
