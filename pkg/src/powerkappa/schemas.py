"""Pydantic request/response models: the package's wire formats.

Field order is part of the contract (CLI output and API responses must be
byte-identical and diff-stable), so models list fields exactly in the
serialized order and optional fields are dropped, not nulled, except in
sweep rows where every line keeps the full column set.
"""

from __future__ import annotations

from pydantic import BaseModel

__all__ = [
    "WitnessEntry",
    "KappaOut",
    "Orderings",
    "BoundsOut",
    "CutsetOut",
    "QuotientNode",
    "QuotientOut",
    "SweepRowOut",
    "SweepOut",
]


class WitnessEntry(BaseModel):
    d: int
    count: int


class KappaOut(BaseModel):
    n: int
    kappa: int
    method: str
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None
    witness: list[WitnessEntry] | None = None


class Orderings(BaseModel):
    """Which of the comparison predicates hold for this n."""

    alpha_strictly_decreasing: bool | None = None
    alpha_vs_beta: list[str] | None = None
    beta_descends_when_doubling_deficient: bool | None = None
    beta_below_gamma: bool | None = None
    alpha_le_gamma: bool | None = None
    alpha_le_gamma_iff_test: bool | None = None


class BoundsOut(BaseModel):
    n: int
    r: int
    alpha_j: list[int]
    beta_j: list[int]
    gamma_ab: dict[str, int] | None = None
    alpha: int
    beta: int
    gamma: int | None = None
    orderings: Orderings


class CutsetOut(BaseModel):
    n: int
    classes: list[int]
    size: int
    verdict: str
    components: list[list[int]] | None = None


class QuotientNode(BaseModel):
    d: int
    phi: int
    neighbors: list[int]


class QuotientOut(BaseModel):
    n: int
    nodes: list[QuotientNode]


class SweepRowOut(BaseModel):
    n: int
    r: int
    exps: list[int]
    alpha: int | None
    beta: int | None
    gamma: int | None
    kappa: int
    method: str
    ok_closed: bool | None
    ok_naive: bool | None


class SweepOut(BaseModel):
    lo: int
    hi: int
    oracle_cap: int
    disagreements: int
    rows: list[SweepRowOut]
