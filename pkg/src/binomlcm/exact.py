"""Exact integer arithmetic: gcd/lcm folds, binomial coefficients, prime
sieving, and prime-exponent maps ("factored" values) whose lcm is a
pointwise exponent maximum."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import NotPrimeError, OutOfRangeError, ZeroOperandError

__all__ = [
    "gcd",
    "lcm_pair",
    "lcm_list",
    "binomial",
    "binomial_row",
    "primes_upto",
    "is_prime",
    "require_prime",
    "factored_value",
    "factored_lcm",
    "validate_factored",
]


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals; gcd(0, 0) == 0."""
    if a < 0 or b < 0:
        raise OutOfRangeError(f"gcd expects non-negative operands, got {a} and {b}")
    return math.gcd(a, b)


def lcm_pair(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a < 1 or b < 1:
        raise ZeroOperandError(f"lcm expects positive operands, got {a} and {b}")
    return a * b // math.gcd(a, b)


def lcm_list(xs: Iterable[int]) -> int:
    """Left fold of lcm_pair; the empty fold is 1."""
    acc = 1
    for x in xs:
        acc = lcm_pair(acc, x)
    return acc


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) by the multiplicative formula; every division is exact."""
    if n < 0 or k < 0:
        raise OutOfRangeError(f"binomial expects non-negative arguments, got n={n}, k={k}")
    if k > n:
        raise OutOfRangeError(f"binomial expects k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # out * (n - k + i) is divisible by i: the quotient is C(n - k + i, i).
        out = out * (n - k + i) // i
    return out


def binomial_row(n: int) -> Iterator[int]:
    """Yield C(n, 0), C(n, 1), ..., C(n, n) by successive exact updates."""
    if n < 0:
        raise OutOfRangeError(f"binomial_row expects n >= 0, got {n}")
    entry = 1
    yield entry
    for i in range(n):
        entry = entry * (n - i) // (i + 1)
        yield entry


def primes_upto(n: int) -> list[int]:
    """All primes p with 2 <= p <= n, ascending; empty for n < 2."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test: trial division, then strong-pseudoprime
    rounds over a fixed base set that is exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _is_prime_cached(n: int) -> bool:
    return is_prime(n)


def require_prime(p: int, name: str = "p") -> None:
    """Raise NotPrimeError unless p is prime. Verdicts are cached, so hot
    sweeps pay the primality test once per distinct prime."""
    if not _is_prime_cached(p):
        raise NotPrimeError(f"{name} must be prime, got {p}")


def factored_value(factors: Mapping[int, int]) -> int:
    """Multiply out a prime -> exponent map; the empty map is 1."""
    return math.prod(p**e for p, e in factors.items())


def factored_lcm(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    """lcm of two factored values: pointwise exponent max over the union of primes."""
    return {p: max(a.get(p, 0), b.get(p, 0)) for p in sorted(set(a) | set(b))}


def validate_factored(factors: Mapping[int, int]) -> None:
    """Check factored-map invariants: ascending prime keys, exponents >= 1."""
    previous = 1
    for p, e in factors.items():
        require_prime(p, name="factor key")
        if e < 1:
            raise ZeroOperandError(f"exponent of prime {p} must be >= 1, got {e}")
        if p <= previous:
            raise OutOfRangeError(f"prime keys must be ascending, saw {p} after {previous}")
        previous = p
