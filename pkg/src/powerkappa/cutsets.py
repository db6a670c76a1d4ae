"""Cut-set constructions on the quotient graph and their size formulas.

Three families of vertex sets disconnect the power graph of C_n once n has
at least two prime factors: Y_j (generators plus the union of subgroups
S_{n/(p_j p_t)}), Z_j (Y_j's variant that additionally strips the classes
n/p_j^s), and X_{a,b} (generators, the full p_a- and p_b-towers, and the
subgroups S_{n/(p_i p_a p_b)}). Their cardinalities are the closed forms
alpha_j, beta_j and gamma_ab. All sets are stored as divisor sets: a
divisor d stands for the whole class of elements of order d, which is
lossless for minimal cut-sets and exponentially smaller than element sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from . import graphcore
from .numtheory import Factorization, divisors, factorize, phi, phi_int

__all__ = [
    "ClassSet",
    "Separation",
    "alpha_j",
    "beta_j",
    "gamma_ab",
    "build_Y",
    "build_Z",
    "build_X",
    "separation_of",
    "union_subgroups_size",
    "verify_cutset",
]


@dataclass(frozen=True)
class ClassSet:
    """A union of full order classes, stored as the set of their divisors."""

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        for d in self.members:
            if d < 1 or self.n % d != 0:
                raise ValueError(f"{d} is not a divisor of {self.n}")

    def cardinality(self) -> int:
        """Number of group elements covered: sum of phi over the members."""
        return sum(phi_int(d) for d in self.members)

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class Separation:
    """Two sides of surviving divisor classes with no comparable cross pair."""

    n: int
    side_a: frozenset[int]
    side_b: frozenset[int]

    def __post_init__(self) -> None:
        if not self.side_a or not self.side_b:
            raise ValueError("separation sides must be non-empty")
        if self.side_a & self.side_b:
            raise ValueError("separation sides must be disjoint")
        for d in self.side_a:
            for e in self.side_b:
                if d % e == 0 or e % d == 0:
                    raise ValueError(f"comparable cross pair ({d}, {e})")


def _check_r(f: Factorization, minimum: int) -> None:
    if f.r < minimum:
        raise ValueError(
            f"n={f.value} has {f.r} distinct prime factors; need at least {minimum}"
        )


def _check_index(f: Factorization, j: int) -> None:
    if not 1 <= j <= f.r:
        raise ValueError(f"index {j} out of range 1..{f.r}")


def _phi_squarefree(primes: tuple[int, ...] | list[int]) -> int:
    return prod(p - 1 for p in primes)


def alpha_j(f: Factorization, j: int) -> int:
    """|Y_j| = phi(n) + (n/rad) * [rad/p_j - phi(rad/p_j)]."""
    _check_r(f, 2)
    _check_index(f, j)
    rad = prod(f.primes)
    others = tuple(p for i, p in enumerate(f.primes, start=1) if i != j)
    return phi(f) + (f.value // rad) * (prod(others) - _phi_squarefree(others))


def beta_j(f: Factorization, j: int) -> int:
    """|Z_j|: alpha_j's analogue with the p_j-tower stripped to exact order.

    phi(n) + (n/rad)/p_j^(n_j-1) * [rad/p_j + phi(rad/p_j)*(p_j^(n_j-1)-2)].
    The division is exact because p_j^(n_j-1) divides n/rad; that is
    asserted rather than trusted.
    """
    _check_r(f, 2)
    _check_index(f, j)
    rad = prod(f.primes)
    p_j = f.primes[j - 1]
    tower = p_j ** (f.exponents[j - 1] - 1)
    cofactor = f.value // rad
    if cofactor % tower != 0:
        raise AssertionError(f"n/rad={cofactor} not divisible by {tower}")
    others = tuple(p for i, p in enumerate(f.primes, start=1) if i != j)
    bracket = prod(others) + _phi_squarefree(others) * (tower - 2)
    return phi(f) + (cofactor // tower) * bracket


def gamma_ab(f: Factorization, a: int, b: int) -> int:
    """|X_{a,b}| = phi(n) + (n/rad) * [phi(rad/p_a) + phi(rad/p_b)
    + rad/(p_a p_b) - phi(rad/(p_a p_b))]."""
    _check_r(f, 3)
    _check_index(f, a)
    _check_index(f, b)
    if a == b:
        raise ValueError("indices a and b must differ")
    rad = prod(f.primes)
    not_a = tuple(p for i, p in enumerate(f.primes, start=1) if i != a)
    not_b = tuple(p for i, p in enumerate(f.primes, start=1) if i != b)
    not_ab = tuple(p for i, p in enumerate(f.primes, start=1) if i not in (a, b))
    bracket = (
        _phi_squarefree(not_a)
        + _phi_squarefree(not_b)
        + prod(not_ab)
        - _phi_squarefree(not_ab)
    )
    return phi(f) + (f.value // rad) * bracket


def build_Y(f: Factorization, j: int) -> ClassSet:
    """Classes of the generators plus every subgroup S_{n/(p_j p_t)}, t != j."""
    _check_r(f, 2)
    _check_index(f, j)
    n = f.value
    p_j = f.primes[j - 1]
    members: set[int] = {n}
    for t, p_t in enumerate(f.primes, start=1):
        if t == j:
            continue
        members.update(divisors(factorize(n // (p_j * p_t))))
    return ClassSet(n=n, members=frozenset(members))


def build_Z(f: Factorization, j: int) -> ClassSet:
    """Y_j's variant through the full p_j-tower; equals Y_j when n_j = 1."""
    _check_r(f, 2)
    _check_index(f, j)
    n = f.value
    p_j = f.primes[j - 1]
    n_j = f.exponents[j - 1]
    members: set[int] = {n}
    members.update(n // p_j**s for s in range(1, n_j))
    full_tower = p_j**n_j
    for t, p_t in enumerate(f.primes, start=1):
        if t == j:
            continue
        members.update(divisors(factorize(n // (full_tower * p_t))))
    return ClassSet(n=n, members=frozenset(members))


def build_X(f: Factorization, a: int, b: int) -> ClassSet:
    """Generators, both full towers over p_a and p_b, and the subgroups
    S_{n/(p_i p_a p_b)} for the remaining prime indices i."""
    _check_r(f, 3)
    _check_index(f, a)
    _check_index(f, b)
    if a == b:
        raise ValueError("indices a and b must differ")
    n = f.value
    p_a, p_b = f.primes[a - 1], f.primes[b - 1]
    members: set[int] = {n}
    members.update(n // p_a**j_ for j_ in range(1, f.exponents[a - 1] + 1))
    members.update(n // p_b**k for k in range(1, f.exponents[b - 1] + 1))
    for i, p_i in enumerate(f.primes, start=1):
        if i in (a, b):
            continue
        members.update(divisors(factorize(n // (p_i * p_a * p_b))))
    return ClassSet(n=n, members=frozenset(members))


def _valuation(d: int, p: int) -> int:
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


def separation_of(f: Factorization, which: tuple) -> Separation:
    """The explicit two-sided separation left behind by a constructed cut.

    `which` is ("Y", j), ("Z", j) or ("X", a, b). Surviving divisors are
    classified by their exponent pattern rather than by search; BFS on the
    quotient is kept as an independent check in the tests.
    """
    kind = which[0]
    if kind == "Y":
        (_, j) = which
        cut = build_Y(f, j)
        p_j, n_j = f.primes[j - 1], f.exponents[j - 1]
        survivors = [d for d in divisors(f) if d not in cut.members]
        side_a = {d for d in survivors if _valuation(d, p_j) < n_j}
        side_b = {d for d in survivors if _valuation(d, p_j) == n_j}
    elif kind == "Z":
        (_, j) = which
        cut = build_Z(f, j)
        p_j = f.primes[j - 1]
        survivors = [d for d in divisors(f) if d not in cut.members]
        side_a = {d for d in survivors if _valuation(d, p_j) == 0}
        side_b = {d for d in survivors if _valuation(d, p_j) >= 1}
    elif kind == "X":
        (_, a, b) = which
        cut = build_X(f, a, b)
        p_a, n_a = f.primes[a - 1], f.exponents[a - 1]
        p_b, n_b = f.primes[b - 1], f.exponents[b - 1]
        survivors = [d for d in divisors(f) if d not in cut.members]
        side_a = {
            d
            for d in survivors
            if _valuation(d, p_a) < n_a and _valuation(d, p_b) < n_b
        }
        side_b = set(survivors) - side_a
    else:
        raise ValueError(f"unknown cut kind {kind!r}")
    if not side_a or not side_b:
        raise ValueError(f"{which}: a separation side is empty")
    return Separation(n=f.value, side_a=frozenset(side_a), side_b=frozenset(side_b))


def union_subgroups_size(
    f: Factorization, aset: set[int] | frozenset[int], bset: set[int] | frozenset[int]
) -> int:
    """Size of the union of the subgroups S_{n/(p_a * prod_b p_b)}, a in aset.

    Closed form: (n/rad) * [rad/prod_b(p_b) - prod_c(p_c) * phi(prod_a(p_a))]
    where the c-indices are the ones in neither set. The test suite checks
    this against a direct inclusion-exclusion over subgroup gcds.
    """
    aset, bset = frozenset(aset), frozenset(bset)
    if not aset or not bset:
        raise ValueError("aset and bset must be non-empty")
    if aset & bset:
        raise ValueError("aset and bset must be disjoint")
    allowed = set(range(1, f.r + 1))
    if not (aset | bset) <= allowed:
        raise ValueError(f"indices must lie in 1..{f.r}")
    rad = prod(f.primes)
    prod_b = prod(f.primes[i - 1] for i in bset)
    primes_a = tuple(f.primes[i - 1] for i in sorted(aset))
    prod_c = prod(
        f.primes[i - 1] for i in allowed - aset - bset
    )
    return (f.value // rad) * (rad // prod_b - prod_c * _phi_squarefree(primes_a))


def verify_cutset(f: Factorization, x: ClassSet) -> tuple[str, list[list[int]]]:
    """BFS verdict for a candidate cut: "cut" or "not-cut" plus components."""
    if x.n != f.value:
        raise ValueError("class set belongs to a different n")
    g = graphcore.build_divisor_graph(f)
    if not x.members or set(x.members) >= set(g.nodes):
        raise ValueError("candidate must be a proper non-empty subset of classes")
    disconnected, components = graphcore.is_disconnected_after_removal(g, x.members)
    return ("cut" if disconnected else "not-cut"), components
