"""Arithmetic layer: frozen examples against independent oracles, then the
inequality lemmas the connectivity case split leans on."""

from __future__ import annotations

from itertools import combinations
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerkappa.numtheory import (
    GREATER,
    LESS,
    Factorization,
    TotientDoublingEquality,
    divisors,
    factorize,
    is_prime,
    phi,
    radical,
    totient_doubling_test,
)

FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


# --- independent oracles -------------------------------------------------

def trial_division_oracle(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def gcd_count_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def scan_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def sieve_phi(limit: int) -> list[int]:
    table = list(range(limit + 1))
    for p in range(2, limit + 1):
        if table[p] == p:  # p prime
            for m in range(p, limit + 1, p):
                table[m] -= table[m] // p
    return table


def phi_from_pairs(pairs: list[tuple[int, int]]) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in pairs)


# --- factorize -----------------------------------------------------------

def test_factorize_examples():
    assert factorize(1) == Factorization((), (), 1)
    assert factorize(12).primes == (2, 3)
    assert factorize(12).exponents == (2, 1)
    assert factorize(2310).primes == (2, 3, 5, 7, 11)
    assert factorize(2310).exponents == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("n", [2, 12, 97, 360, 2310, 65536, 600851475143])
def test_factorize_matches_trial_division(n):
    f = factorize(n)
    assert list(zip(f.primes, f.exponents)) == trial_division_oracle(n)


@pytest.mark.parametrize("bad", [0, -1, -12])
def test_factorize_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization((3, 2), (1, 1), 6)  # not increasing
    with pytest.raises(ValueError):
        Factorization((4,), (1,), 4)  # not prime
    with pytest.raises(ValueError):
        Factorization((2,), (0,), 1)  # exponent < 1
    with pytest.raises(ValueError):
        Factorization((2,), (2,), 8)  # product mismatch


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert prod(p**e for p, e in zip(f.primes, f.exponents)) == n
    assert all(is_prime(p) for p in f.primes)
    assert all(a < b for a, b in zip(f.primes, f.primes[1:]))


# --- phi / divisors / radical --------------------------------------------

def test_phi_examples():
    assert phi(factorize(1)) == 1
    assert phi(factorize(12)) == gcd_count_phi(12) == 4
    assert phi(factorize(30)) == gcd_count_phi(30) == 8


def test_divisors_examples():
    assert divisors(factorize(1)) == [1]
    assert divisors(factorize(12)) == scan_divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(factorize(30)) == scan_divisors(30)
    f = factorize(360)
    assert len(divisors(f)) == prod(e + 1 for e in f.exponents)


def test_radical_examples():
    assert radical(factorize(1)) == 1
    assert radical(factorize(12)) == 6
    assert radical(factorize(300)) == 30


def test_totient_sum_identity_up_to_1e4():
    limit = 10_000
    totals = [0] * (limit + 1)
    phis = [0, 1] + [phi(factorize(d)) for d in range(2, limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            totals[m] += phis[d]
    assert all(totals[n] == n for n in range(1, limit + 1))


def test_phi_matches_sieve_up_to_1e4():
    table = sieve_phi(10_000)
    assert all(phi(factorize(n)) == table[n] for n in range(1, 10_001))


def test_phi_multiplicative_over_coprime_pairs():
    table = sieve_phi(1_000_000)
    lib = [0] + [phi(factorize(k)) for k in range(1, 1001)]
    for a in range(1, 1001):
        for b in range(a, 1001):
            if gcd(a, b) == 1:
                assert lib[a] * lib[b] == table[a * b]


# --- totient doubling ----------------------------------------------------

def test_totient_doubling_examples():
    assert totient_doubling_test([3, 5]) == GREATER
    assert totient_doubling_test([2, 3]) == LESS
    with pytest.raises(TotientDoublingEquality):
        totient_doubling_test([2])


def test_totient_doubling_input_validation():
    with pytest.raises(ValueError):
        totient_doubling_test([])
    with pytest.raises(ValueError):
        totient_doubling_test([3, 3])
    with pytest.raises(ValueError):
        totient_doubling_test([4])


# --- inequality lemma suites ----------------------------------------------

def test_scaled_totient_lower_bound():
    # q*phi(p_1...p_t) >= p_1...p_t for q >= t+1, equality exactly at
    # (t, p_1, q) = (1, 2, 2) and (t, p_1, p_2, q) = (2, 2, 3, 3)
    for t in range(1, len(FIRST_PRIMES) + 1):
        for ps in combinations(FIRST_PRIMES, t):
            m = prod(ps)
            ph = prod(p - 1 for p in ps)
            for q in range(t + 1, t + 5):
                assert q * ph >= m, (ps, q)
                is_equality_case = (t == 1 and ps[0] == 2 and q == 2) or (
                    t == 2 and ps == (2, 3) and q == 3
                )
                assert (q * ph == m) == is_equality_case, (ps, q)


def sieve_spf(limit: int) -> list[int]:
    spf = list(range(limit + 1))
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factor_pairs(m: int, spf: list[int]) -> list[tuple[int, int]]:
    out = []
    while m > 1:
        p = spf[m]
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    return out


def test_totient_ratio_bounds_up_to_1e5():
    # phi(m/p_i) >= p_k^(m_k-1) * phi(m/p_k^(m_k)) for i < k, strict except
    # k=2, (p_1,p_2)=(2,3), m_1>=2; and phi(m/p_i) >= phi(m/p_k), equality
    # iff (k,p_1,p_2)=(2,2,3) with m_1>=2 and m_2=1.
    limit = 100_000
    spf = sieve_spf(limit)
    for m in range(2, limit + 1):
        pairs = factor_pairs(m, spf)
        t = len(pairs)
        if t < 2:
            continue
        phis_over_p = [
            phi_from_pairs(
                [(p, e - 1) if idx == i else (p, e) for idx, (p, e) in enumerate(pairs) if not (idx == i and e == 1)]
            )
            for i in range(t)
        ]
        for k in range(2, t + 1):
            p_k, m_k = pairs[k - 1]
            stripped = [pq for idx, pq in enumerate(pairs) if idx != k - 1]
            rhs = p_k ** (m_k - 1) * phi_from_pairs(stripped)
            for i in range(1, k):
                lhs = phis_over_p[i - 1]
                assert lhs >= rhs, (m, i, k)
                exceptional = (
                    k == 2 and pairs[0][0] == 2 and pairs[1][0] == 3 and pairs[0][1] >= 2
                )
                if not exceptional:
                    assert lhs > rhs, (m, i, k)
                lhs_vs_k = phis_over_p[k - 1]
                assert lhs >= lhs_vs_k, (m, i, k)
                equality_case = (
                    k == 2
                    and pairs[0][0] == 2
                    and pairs[1][0] == 3
                    and pairs[0][1] >= 2
                    and pairs[1][1] == 1
                )
                assert (lhs == lhs_vs_k) == equality_case, (m, i, k)


def test_cototient_minimized_by_initial_prime_segments():
    # prod(S) - phi(prod(S)) >= prod(first k) - phi(prod(first k)) over
    # k-subsets S of the first 8 primes; equality iff k=1 or S is initial.
    for k in range(1, len(FIRST_PRIMES) + 1):
        base = prod(FIRST_PRIMES[:k])
        base_gap = base - prod(p - 1 for p in FIRST_PRIMES[:k])
        for subset in combinations(FIRST_PRIMES, k):
            m = prod(subset)
            gap = m - prod(p - 1 for p in subset)
            assert gap >= base_gap, subset
            is_equality = k == 1 or subset == FIRST_PRIMES[:k]
            assert (gap == base_gap) == is_equality, subset
