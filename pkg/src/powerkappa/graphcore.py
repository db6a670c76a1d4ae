"""Two views of the power graph of the cyclic group of order n.

The quotient view collapses each set of elements of order d into a single
node weighted phi(d); nodes are the divisors of n and two nodes are
adjacent exactly when one divides the other. The explicit view keeps all
n group elements (residues 0..n-1) and derives adjacency from element
orders on demand, so no quadratic edge list is ever materialized.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from math import gcd

from .numtheory import Factorization, divisors, phi_int

__all__ = [
    "DivisorGraph",
    "ExplicitGraph",
    "CapExceeded",
    "build_divisor_graph",
    "expand_explicit",
    "explicit_cap",
    "is_disconnected_after_removal",
    "components_after_removal",
    "divisor_graph_json",
    "neighbor_masks",
    "DEFAULT_EXPAND_CAP",
]

DEFAULT_EXPAND_CAP = 5000
EXPLICIT_CAP_ENV = "KAPPA_EXPLICIT_CAP"


class CapExceeded(ValueError):
    """Explicit-graph construction refused: n is above the configured cap."""


def explicit_cap(default: int) -> int:
    """Resolve an explicit-graph cap, honoring the override env var."""
    raw = os.environ.get(EXPLICIT_CAP_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"bad {EXPLICIT_CAP_ENV}={raw!r}: not an integer") from exc


@dataclass(frozen=True)
class DivisorGraph:
    """Weighted quotient of the power graph by order classes."""

    n: int
    nodes: tuple[int, ...]
    weight: dict[int, int]
    adjacency: dict[int, frozenset[int]]


def build_divisor_graph(f: Factorization) -> DivisorGraph:
    """Quotient graph on the divisors of n; d ~ e iff one divides the other."""
    nodes = tuple(divisors(f))
    weight = {d: phi_int(d) for d in nodes}
    adjacency = {
        d: frozenset(e for e in nodes if e != d and (e % d == 0 or d % e == 0))
        for d in nodes
    }
    return DivisorGraph(n=f.value, nodes=nodes, weight=weight, adjacency=adjacency)


@dataclass(frozen=True)
class ExplicitGraph:
    """The power graph itself: vertices 0..n-1, orders n/gcd(n, k).

    Two distinct vertices are adjacent iff one order divides the other;
    adjacency is computed from orders rather than stored.
    """

    n: int
    orders: tuple[int, ...]

    def adjacent(self, x: int, y: int) -> bool:
        if x == y:
            return False
        a, b = self.orders[x], self.orders[y]
        return a % b == 0 or b % a == 0


def expand_explicit(f: Factorization, cap: int | None = None) -> ExplicitGraph:
    """Build the explicit graph, refusing n above the memory cap."""
    limit = cap if cap is not None else explicit_cap(DEFAULT_EXPAND_CAP)
    n = f.value
    if n > limit:
        raise CapExceeded(f"n={n} exceeds explicit-graph cap {limit}")
    orders = tuple(n // gcd(n, k) for k in range(n))
    return ExplicitGraph(n=n, orders=orders)


def neighbor_masks(g: ExplicitGraph) -> list[int]:
    """Open-neighborhood bitmasks for every vertex of the explicit graph.

    Built classwise: vertices of equal order share a neighborhood up to
    their own bit, so one mask per distinct order suffices.
    """
    by_order: dict[int, list[int]] = {}
    for v, d in enumerate(g.orders):
        by_order.setdefault(d, []).append(v)
    class_bits = {
        d: sum(1 << v for v in members) for d, members in by_order.items()
    }
    closed = {}
    for d in by_order:
        m = 0
        for e, bits in class_bits.items():
            if e % d == 0 or d % e == 0:
                m |= bits
        closed[d] = m
    return [closed[g.orders[v]] & ~(1 << v) for v in range(g.n)]


def components_after_removal(
    g: DivisorGraph, removed: frozenset[int] | set[int]
) -> list[list[int]]:
    """Connected components (as sorted divisor lists) of the survivors."""
    bad = set(removed) - set(g.nodes)
    if bad:
        raise ValueError(f"not divisor classes of {g.n}: {sorted(bad)}")
    survivors = [d for d in g.nodes if d not in removed]
    if not survivors:
        raise ValueError("cannot remove every class")
    alive = set(survivors)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in survivors:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            d = queue.popleft()
            comp.append(d)
            for e in g.adjacency[d]:
                if e in alive and e not in seen:
                    seen.add(e)
                    queue.append(e)
        components.append(sorted(comp))
    components.sort(key=lambda comp: comp[0])
    return components


def is_disconnected_after_removal(
    g: DivisorGraph, removed: frozenset[int] | set[int]
) -> tuple[bool, list[list[int]]]:
    """Whether removing the given full classes disconnects the survivors.

    Because every class is a clique and inter-class edges are all-or-none,
    this quotient answer matches the explicit graph after removing the
    same full classes; the test suite asserts that agreement rather than
    assuming it silently.
    """
    components = components_after_removal(g, removed)
    return len(components) >= 2, components


def divisor_graph_json(g: DivisorGraph) -> dict:
    """Stable-order debug dump: {n, nodes:[{d, phi, neighbors:[...]}]}."""
    return {
        "n": g.n,
        "nodes": [
            {"d": d, "phi": g.weight[d], "neighbors": sorted(g.adjacency[d])}
            for d in g.nodes
        ],
    }
