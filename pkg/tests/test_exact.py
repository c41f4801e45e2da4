import math
from bisect import bisect_right

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binomlcm import (
    NotPrimeError,
    OutOfRangeError,
    ZeroOperandError,
    binomial,
    binomial_row,
    factored_lcm,
    factored_value,
    gcd,
    is_prime,
    lcm_list,
    lcm_pair,
    primes_upto,
    validate_factored,
)

# ---------------------------------------------------------------- oracles


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def trial_factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def brute_lcm(values: list[int]) -> int:
    """Smallest positive integer divisible by every value; scan multiples."""
    if not values:
        return 1
    step = max(values)
    candidate = step
    while any(candidate % v for v in values):
        candidate += step
    return candidate


positive_small = st.integers(min_value=1, max_value=12)
naturals = st.integers(min_value=0, max_value=10**30)
positives = st.integers(min_value=1, max_value=10**30)


# -------------------------------------------------------------------- gcd


def test_gcd_examples():
    assert gcd(0, 5) == 5
    assert gcd(12, 18) == 6
    assert gcd(7, 7) == 7
    assert gcd(0, 0) == 0


def test_gcd_rejects_negatives():
    with pytest.raises(OutOfRangeError):
        gcd(-4, 2)


@given(naturals, naturals)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    if g:
        assert a % g == 0 and b % g == 0
    else:
        assert a == b == 0


# -------------------------------------------------------------------- lcm


def test_lcm_pair_examples():
    assert lcm_pair(1, 9) == 9
    assert lcm_pair(4, 6) == 12
    with pytest.raises(ZeroOperandError):
        lcm_pair(0, 3)
    with pytest.raises(ZeroOperandError):
        lcm_pair(3, 0)


@given(positives, positives)
def test_lcm_gcd_product_identity(a, b):
    assert lcm_pair(a, b) * gcd(a, b) == a * b


@given(st.lists(positive_small, max_size=4))
def test_lcm_list_matches_multiple_scan(values):
    assert lcm_list(values) == brute_lcm(values)


def test_lcm_list_examples():
    assert lcm_list([]) == 1
    assert lcm_list([1, 2, 3, 4, 5, 6]) == 60
    assert lcm_list([1, 5, 10, 10, 5, 1]) == 10


def test_lcm_list_rejects_zero_element():
    with pytest.raises(ZeroOperandError):
        lcm_list([3, 0, 5])


def test_huge_values_stay_exact():
    # well past 100,000 decimal digits once multiplied out
    x = 7**120000
    y = 3**120000
    assert gcd(x, y) == 1
    combined = lcm_pair(x, y)
    assert combined == x * y
    assert combined // x == y and combined % y == 0
    assert combined > x > y
    # anything above 332,193 bits exceeds 10^100000, i.e. 100,000 decimal digits
    assert combined.bit_length() > 332193


# --------------------------------------------------------------- binomial


def test_binomial_examples():
    assert binomial(12, 0) == 1
    assert binomial(5, 2) == 10
    assert binomial(7, 3) == 35


def test_binomial_domain_errors():
    with pytest.raises(OutOfRangeError):
        binomial(3, 5)
    with pytest.raises(OutOfRangeError):
        binomial(-1, 0)
    with pytest.raises(OutOfRangeError):
        binomial(4, -2)


@given(st.integers(min_value=0, max_value=800), st.data())
def test_binomial_matches_stdlib(n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    assert binomial(n, k) == math.comb(n, k)


def test_binomial_row_matches_binomial():
    for n in range(81):
        assert list(binomial_row(n)) == [binomial(n, k) for k in range(n + 1)]


def test_pascal_rule_up_to_500():
    prev = [1]
    for n in range(1, 501):
        row = list(binomial_row(n))
        assert row[0] == 1 and row[-1] == 1
        for k in range(1, n):
            assert row[k] == prev[k - 1] + prev[k]
        prev = row


# ----------------------------------------------------------------- primes


def test_primes_upto_examples():
    assert primes_upto(1) == []
    assert primes_upto(10) == [2, 3, 5, 7]
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_primes_upto_agrees_with_trial_division():
    reference = [i for i in range(2, 10001) if trial_division_is_prime(i)]
    for n in range(10001):
        assert primes_upto(n) == reference[: bisect_right(reference, n)]


def test_is_prime_examples():
    assert not is_prime(1)
    assert is_prime(2)
    assert not is_prime(91)  # 7 * 13
    assert not is_prime(0)


def test_is_prime_agrees_with_trial_division():
    for n in range(20001):
        assert is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_on_hard_composites_and_large_primes():
    # Carmichael numbers fool Fermat tests; the strong test must not budge.
    for carmichael in (561, 1105, 1729, 2465, 41041, 825265):
        assert not is_prime(carmichael)
    assert is_prime(2**61 - 1)
    assert is_prime(10**9 + 7)
    assert is_prime(2**64 - 59)
    assert not is_prime(2**64 - 1)


@given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=2, max_value=10**6))
def test_is_prime_rejects_products(a, b):
    assert not is_prime(a * b)


# --------------------------------------------------------- factored values


def test_factored_value_examples():
    assert factored_value({}) == 1
    assert factored_value({2: 2, 3: 1, 5: 1}) == 60
    assert factored_value({2: 3, 3: 2, 5: 1, 7: 1}) == 2520


def test_factored_lcm_examples():
    assert factored_lcm({}, {3: 2}) == {3: 2}
    assert factored_lcm({2: 1, 3: 1}, {2: 2}) == {2: 2, 3: 1}
    assert factored_lcm({5: 1}, {5: 1}) == {5: 1}


small_factored = st.dictionaries(
    st.sampled_from([2, 3, 5, 7, 11, 13]),
    st.integers(min_value=1, max_value=5),
    max_size=4,
)


@given(small_factored, small_factored)
def test_factored_lcm_is_value_lcm(f, g):
    assert factored_value(factored_lcm(f, g)) == lcm_pair(factored_value(f), factored_value(g))


@given(small_factored, small_factored)
def test_factored_lcm_output_is_valid(f, g):
    validate_factored(factored_lcm(f, g))


def test_factor_round_trip_is_identity():
    for n in range(1, 5001):
        factors = trial_factorize(n)
        validate_factored(factors)
        assert factored_value(factors) == n


@given(st.integers(min_value=1, max_value=10**6))
def test_factor_round_trip_random(n):
    assert factored_value(trial_factorize(n)) == n


def test_validate_factored_rejects_bad_maps():
    with pytest.raises(NotPrimeError):
        validate_factored({4: 1})
    with pytest.raises(ZeroOperandError):
        validate_factored({2: 0})
    with pytest.raises(OutOfRangeError):
        validate_factored({3: 1, 2: 1})
