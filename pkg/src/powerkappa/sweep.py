"""Range sweeps that reconcile the closed forms against the exact solvers.

Each n yields one row: the bounds, the reported kappa (closed form when a
theorem applies, exact quotient solver otherwise), and agreement flags
against the quotient solver and, below the oracle cap, the naive explicit
solver. A sweep is the package's self-test mode: any false flag is a
finding.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .connectivity import (
    bounds_triple,
    kappa_closed_form,
    kappa_naive,
    kappa_quotient_exact,
)
from .graphcore import expand_explicit
from .numtheory import factorize

__all__ = ["SweepRow", "compute_row", "sweep_range", "TSV_COLUMNS", "tsv_line"]

TSV_COLUMNS = (
    "n",
    "r",
    "exps",
    "alpha",
    "beta",
    "gamma",
    "kappa",
    "method",
    "ok_closed",
    "ok_naive",
)


@dataclass(frozen=True)
class SweepRow:
    n: int
    r: int
    exps: tuple[int, ...]
    alpha: int | None
    beta: int | None
    gamma: int | None
    kappa: int
    method: str
    ok_closed: bool | None
    ok_naive: bool | None

    @property
    def agrees(self) -> bool:
        return self.ok_closed is not False and self.ok_naive is not False


def compute_row(n: int, oracle_cap: int = 0) -> SweepRow:
    f = factorize(n)
    closed = kappa_closed_form(f)
    quotient = kappa_quotient_exact(f)
    ok_closed = None if closed is None else closed.kappa == quotient.kappa
    ok_naive = None
    if n <= oracle_cap:
        naive = kappa_naive(expand_explicit(f, cap=oracle_cap), cap=oracle_cap)
        ok_naive = naive.kappa == quotient.kappa
    reported = closed if closed is not None else quotient
    alpha, beta, gamma = bounds_triple(f)
    return SweepRow(
        n=n,
        r=f.r,
        exps=f.exponents,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        kappa=reported.kappa,
        method=reported.method,
        ok_closed=ok_closed,
        ok_naive=ok_naive,
    )


def sweep_range(
    lo: int, hi: int, oracle_cap: int = 0, jobs: int = 1
) -> list[SweepRow]:
    """Rows for lo..hi inclusive, in n order regardless of worker count."""
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo} hi={hi}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    ns = range(lo, hi + 1)
    worker = partial(compute_row, oracle_cap=oracle_cap)
    if jobs == 1:
        return [worker(n) for n in ns]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, ns, chunksize=16))


def _cell(value) -> str:
    if value is None:
        return "NA"
    if value is True:
        return "1"
    if value is False:
        return "0"
    return str(value)


def tsv_line(row: SweepRow) -> str:
    cells = (
        row.n,
        row.r,
        ",".join(str(e) for e in row.exps),
        row.alpha,
        row.beta,
        row.gamma,
        row.kappa,
        row.method,
        row.ok_closed,
        row.ok_naive,
    )
    return "\t".join(_cell(c) for c in cells)
