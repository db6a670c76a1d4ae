"""Service layer: core results to wire models, shared by the API and CLI.

The FastAPI routes and the command line are both thin clients of these
functions, which keeps their outputs byte-identical for the same query.
"""

from __future__ import annotations

from math import prod

from . import schemas
from .connectivity import kappa
from .cutsets import (
    ClassSet,
    alpha_j,
    beta_j,
    build_X,
    build_Y,
    build_Z,
    gamma_ab,
    verify_cutset,
)
from .graphcore import build_divisor_graph, divisor_graph_json
from .numtheory import Factorization, factorize, phi_int

__all__ = [
    "kappa_response",
    "bounds_response",
    "cutset_response",
    "quotient_response",
    "sweep_response",
    "parse_which",
]

KAPPA_METHODS = ("auto", "closed", "quotient", "naive")


def _factorization(n: int, minimum: int = 2) -> Factorization:
    if n < minimum:
        raise ValueError(f"need n >= {minimum}, got {n}")
    return factorize(n)


def kappa_response(
    n: int, method: str = "auto", include_witness: bool = False
) -> schemas.KappaOut:
    if method not in KAPPA_METHODS:
        raise ValueError(f"unknown method {method!r}")
    res = kappa(_factorization(n), method)
    witness = None
    if include_witness and res.witness is not None:
        witness = [schemas.WitnessEntry(d=d, count=c) for d, c in res.witness]
    return schemas.KappaOut(
        n=res.n,
        kappa=res.kappa,
        method=res.method,
        alpha=res.alpha,
        beta=res.beta,
        gamma=res.gamma,
        witness=witness,
    )


def _orderings(f: Factorization) -> schemas.Orderings:
    r = f.r
    alphas = [alpha_j(f, j) for j in range(1, r + 1)]
    betas = [beta_j(f, j) for j in range(1, r + 1)]
    trichotomy = [
        "=" if a == b else ("<" if a < b else ">") for a, b in zip(alphas, betas)
    ]
    if r < 3:
        return schemas.Orderings(alpha_vs_beta=trichotomy)
    rad = prod(f.primes)
    deficient = [
        2 * prod(p - 1 for k, p in enumerate(f.primes, 1) if k != j) < rad // p_j
        for j, p_j in enumerate(f.primes, 1)
    ]
    beta_descends = all(
        betas[j - 1] > betas[k - 1]
        for j in range(1, r + 1)
        if deficient[j - 1]
        for k in range(j + 1, r + 1)
    )
    gamma = gamma_ab(f, r - 1, r)
    beta_below_gamma = betas[-1] < gamma if f.exponents[-1] >= 2 else None
    # alpha <= gamma iff (2(p_{r-1}-1) + p_r - 2) * phi(P) >= P * (p_{r-1}-1)
    # with P the product of the first r-2 primes; exact integers only.
    head = f.primes[: r - 2]
    p_prod = prod(head)
    p_phi = prod(p - 1 for p in head)
    p_rm1, p_r = f.primes[-2], f.primes[-1]
    iff_test = (2 * (p_rm1 - 1) + p_r - 2) * p_phi >= p_prod * (p_rm1 - 1)
    return schemas.Orderings(
        alpha_strictly_decreasing=all(
            a > b for a, b in zip(alphas, alphas[1:])
        ),
        alpha_vs_beta=trichotomy,
        beta_descends_when_doubling_deficient=beta_descends,
        beta_below_gamma=beta_below_gamma,
        alpha_le_gamma=alphas[-1] <= gamma,
        alpha_le_gamma_iff_test=iff_test,
    )


def bounds_response(n: int) -> schemas.BoundsOut:
    f = _factorization(n)
    if f.r < 2:
        raise ValueError(f"n={n} is a prime power (r=1): no bounds to report")
    r = f.r
    alphas = [alpha_j(f, j) for j in range(1, r + 1)]
    betas = [beta_j(f, j) for j in range(1, r + 1)]
    gammas = None
    gamma = None
    if r >= 3:
        gammas = {
            f"{a},{b}": gamma_ab(f, a, b)
            for a in range(1, r + 1)
            for b in range(a + 1, r + 1)
        }
        gamma = gamma_ab(f, r - 1, r)
    return schemas.BoundsOut(
        n=n,
        r=r,
        alpha_j=alphas,
        beta_j=betas,
        gamma_ab=gammas,
        alpha=alphas[-1],
        beta=betas[-1],
        gamma=gamma,
        orderings=_orderings(f),
    )


def parse_which(text: str) -> tuple:
    """Parse a cut selector: Y:j, Z:j, X:a,b or optimal."""
    if text == "optimal":
        return ("optimal",)
    kind, sep, rest = text.partition(":")
    if not sep or kind not in ("Y", "Z", "X"):
        raise ValueError(f"bad cut selector {text!r}: use Y:j, Z:j, X:a,b or optimal")
    try:
        indices = tuple(int(part) for part in rest.split(","))
    except ValueError as exc:
        raise ValueError(f"bad indices in cut selector {text!r}") from exc
    if kind in ("Y", "Z") and len(indices) != 1:
        raise ValueError(f"{kind} takes one index, got {text!r}")
    if kind == "X" and len(indices) != 2:
        raise ValueError(f"X takes two indices, got {text!r}")
    return (kind, *indices)


def _optimal_classes(f: Factorization) -> ClassSet:
    res = kappa(f, "auto")
    if res.witness is None:
        raise ValueError(
            f"n={f.value}: power graph is complete, no cut-set exists"
        )
    partial = [(d, c) for d, c in res.witness if c != phi_int(d)]
    if partial:
        raise AssertionError(f"optimal witness not class-shaped: {partial}")
    return ClassSet(n=f.value, members=frozenset(d for d, _ in res.witness))


def cutset_response(n: int, which: str) -> schemas.CutsetOut:
    f = _factorization(n)
    selector = parse_which(which)
    if selector[0] == "optimal":
        cut = _optimal_classes(f)
    elif selector[0] == "Y":
        cut = build_Y(f, selector[1])
    elif selector[0] == "Z":
        cut = build_Z(f, selector[1])
    else:
        cut = build_X(f, selector[1], selector[2])
    verdict, components = verify_cutset(f, cut)
    return schemas.CutsetOut(
        n=n,
        classes=cut.sorted_members(),
        size=cut.cardinality(),
        verdict=verdict,
        components=components if verdict == "cut" else None,
    )


def quotient_response(n: int) -> schemas.QuotientOut:
    f = _factorization(n, minimum=1)
    payload = divisor_graph_json(build_divisor_graph(f))
    return schemas.QuotientOut(**payload)


def sweep_row_out(row) -> schemas.SweepRowOut:
    return schemas.SweepRowOut(
        n=row.n,
        r=row.r,
        exps=list(row.exps),
        alpha=row.alpha,
        beta=row.beta,
        gamma=row.gamma,
        kappa=row.kappa,
        method=row.method,
        ok_closed=row.ok_closed,
        ok_naive=row.ok_naive,
    )


def sweep_response(
    lo: int, hi: int, oracle_cap: int = 0, jobs: int = 1
) -> schemas.SweepOut:
    from .sweep import sweep_range

    rows = sweep_range(lo, hi, oracle_cap=oracle_cap, jobs=jobs)
    return schemas.SweepOut(
        lo=lo,
        hi=hi,
        oracle_cap=oracle_cap,
        disagreements=sum(1 for row in rows if not row.agrees),
        rows=[sweep_row_out(row) for row in rows],
    )
