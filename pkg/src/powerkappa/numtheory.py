"""Exact integer arithmetic on prime-power decompositions.

Everything here is pure and deterministic: trial-division factorization,
Euler's totient, divisor enumeration, radicals, and the comparison of
2*phi(m) against m that the connectivity case analysis branches on.
Python integers are unbounded, so all results are exact for any input
the rest of the package will ever feed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from math import isqrt, prod

__all__ = [
    "Factorization",
    "factorize",
    "phi",
    "phi_int",
    "divisors",
    "radical",
    "is_prime",
    "totient_doubling_test",
    "TotientDoublingEquality",
    "LESS",
    "GREATER",
]

LESS = "LESS"
GREATER = "GREATER"


class TotientDoublingEquality(ValueError):
    """2*phi(m) == m, which happens only when m is a power of two."""


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers p_1^e_1 * ... * p_r^e_r.

    primes are strictly increasing, exponents all >= 1, and n = 1 is the
    empty product. This is the universal input record for the package.
    """

    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    value: int

    def __post_init__(self) -> None:
        if len(self.primes) != len(self.exponents):
            raise ValueError("primes and exponents differ in length")
        if any(e < 1 for e in self.exponents):
            raise ValueError("exponents must be >= 1")
        if any(p2 <= p1 for p1, p2 in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if not all(is_prime(p) for p in self.primes):
            raise ValueError("non-prime listed in factorization")
        if prod(p**e for p, e in zip(self.primes, self.exponents)) != self.value:
            raise ValueError("product of prime powers does not match value")

    @property
    def r(self) -> int:
        """Number of distinct prime factors."""
        return len(self.primes)


def factorize(n: int) -> Factorization:
    """Prime-power decomposition of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    primes: list[int] = []
    exponents: list[int] = []
    m = n
    d = 2
    while d <= isqrt(m):
        if m % d == 0:
            e = 0
            while m % d == 0:
                e += 1
                m //= d
            primes.append(d)
            exponents.append(e)
        d += 1 if d == 2 else 2
    if m > 1:
        primes.append(m)
        exponents.append(1)
    return Factorization(tuple(primes), tuple(exponents), n)


def phi(f: Factorization) -> int:
    """Euler's totient, multiplicative over the prime powers of f."""
    return prod(p ** (e - 1) * (p - 1) for p, e in zip(f.primes, f.exponents))


@lru_cache(maxsize=65536)
def phi_int(m: int) -> int:
    """Totient of a bare integer; convenience wrapper over factorize."""
    return phi(factorize(m))


def divisors(f: Factorization) -> list[int]:
    """All divisors of f.value in ascending order."""
    divs = [
        prod(p**k for p, k in zip(f.primes, ks))
        for ks in _cartesian(*(range(e + 1) for e in f.exponents))
    ]
    divs.sort()
    return divs


def radical(f: Factorization) -> int:
    """Product of the distinct primes dividing f.value (1 for n = 1)."""
    return prod(f.primes)


def totient_doubling_test(primes: list[int] | tuple[int, ...]) -> str:
    """Compare 2*phi(p_1*...*p_t) against p_1*...*p_t for distinct primes.

    Returns GREATER or LESS. Equality happens only for the single prime 2
    and is raised as TotientDoublingEquality rather than guessed at: the
    callers' theorems exclude that input.
    """
    ps = tuple(primes)
    if not ps:
        raise ValueError("need at least one prime")
    if len(set(ps)) != len(ps):
        raise ValueError("primes must be distinct")
    if not all(is_prime(p) for p in ps):
        raise ValueError("inputs must be prime")
    m = prod(ps)
    doubled = 2 * prod(p - 1 for p in ps)
    if doubled > m:
        return GREATER
    if doubled < m:
        return LESS
    raise TotientDoublingEquality(f"2*phi({m}) == {m}")
