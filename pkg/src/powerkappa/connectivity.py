"""Vertex connectivity of the power graph of C_n, computed three ways.

* closed form: case dispatch over the known theorems (complete graphs,
  two prime factors, r = 3, repeated largest prime, squarefree, and the
  sharp-alpha regime), returning None in the one region the theory leaves
  open;
* quotient-exact: weighted minimum vertex cut on the divisor quotient via
  max-flow between incomparable class pairs, with the class of each
  endpoint modelled as an uncuttable element plus a cuttable co-member
  node of capacity phi-1;
* naive oracle: textbook vertex connectivity on the explicit graph
  (vertex splitting + max-flow over non-adjacent pairs), kept slow and
  simple on purpose and capped at small n.

All three must agree; the test suite enforces that triangle.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, replace
from math import prod

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .cutsets import ClassSet, alpha_j, beta_j, build_X, build_Y, build_Z, gamma_ab
from .graphcore import (
    DivisorGraph,
    ExplicitGraph,
    build_divisor_graph,
    expand_explicit,
    explicit_cap,
    neighbor_masks,
)
from .numtheory import GREATER, Factorization, phi, phi_int, totient_doubling_test

__all__ = [
    "KappaResult",
    "NoClosedFormError",
    "kappa",
    "kappa_closed_form",
    "kappa_quotient_exact",
    "kappa_naive",
    "bounds_triple",
    "witness_disconnects_explicit",
    "OPEN_REGION_MESSAGE",
    "DEFAULT_NAIVE_CAP",
]

DEFAULT_NAIVE_CAP = 500

OPEN_REGION_MESSAGE = (
    "no closed form: r>=4, n_r=1, non-squarefree, 2*phi(rad/p_r) < rad/p_r"
)


class NoClosedFormError(ValueError):
    """Requested the closed form in the region the theory leaves open."""


@dataclass(frozen=True)
class KappaResult:
    """A kappa value, the method that produced it, and an optional witness.

    The witness is a weighted cut: (divisor, multiplicity) pairs whose
    removal disconnects the explicit graph, with multiplicity never above
    the class size phi(divisor).
    """

    n: int
    kappa: int
    method: str
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None
    witness: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self) -> None:
        if self.witness is not None:
            total = sum(count for _, count in self.witness)
            if total != self.kappa:
                raise ValueError(
                    f"witness weight {total} does not match kappa {self.kappa}"
                )


def bounds_triple(f: Factorization) -> tuple[int | None, int | None, int | None]:
    """(alpha, beta, gamma) where defined: alpha/beta need r>=2, gamma r>=3."""
    if f.r < 2:
        return None, None, None
    alpha = alpha_j(f, f.r)
    beta = beta_j(f, f.r)
    gamma = gamma_ab(f, f.r - 1, f.r) if f.r >= 3 else None
    return alpha, beta, gamma


def _class_witness(cut: ClassSet) -> tuple[tuple[int, int], ...]:
    return tuple((d, phi_int(d)) for d in cut.sorted_members())


def kappa_closed_form(f: Factorization) -> KappaResult | None:
    """Dispatch over the known theorems; None in the open region.

    Case order: complete graph, two primes, repeated largest prime
    (min{alpha,beta}), r=3 with squarefree tail (alpha=beta), squarefree
    (min{alpha,gamma}), sharp alpha. Ties prefer the Y_r witness.
    """
    n = f.value
    if n <= 1:
        raise ValueError("kappa is defined for n >= 2")
    if f.r <= 1:
        return KappaResult(n=n, kappa=n - 1, method="complete-graph")
    alpha, beta, gamma = bounds_triple(f)
    if f.r == 2:
        return KappaResult(
            n=n,
            kappa=alpha,
            method="two-primes",
            alpha=alpha,
            beta=beta,
            witness=_class_witness(build_Y(f, 2)),
        )
    if f.exponents[-1] >= 2:
        cut = build_Y(f, f.r) if alpha <= beta else build_Z(f, f.r)
        return KappaResult(
            n=n,
            kappa=min(alpha, beta),
            method="nr2-min-alpha-beta",
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            witness=_class_witness(cut),
        )
    if f.r == 3:
        # n_3 = 1 here, so alpha = beta and Y_3 = Z_3
        return KappaResult(
            n=n,
            kappa=alpha,
            method="r3-min-alpha-beta",
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            witness=_class_witness(build_Y(f, 3)),
        )
    if all(e == 1 for e in f.exponents):
        cut = build_Y(f, f.r) if alpha <= gamma else build_X(f, f.r - 1, f.r)
        return KappaResult(
            n=n,
            kappa=min(alpha, gamma),
            method="squarefree-min-alpha-gamma",
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            witness=_class_witness(cut),
        )
    if totient_doubling_test(f.primes[:-1]) == GREATER:
        return KappaResult(
            n=n,
            kappa=alpha,
            method="sharp-alpha",
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            witness=_class_witness(build_Y(f, f.r)),
        )
    return None


def _pair_min_cut(
    g: DivisorGraph,
    nodes: tuple[int, ...],
    masks: list[int],
    i: int,
    j: int,
) -> tuple[int, list[tuple[int, int]]]:
    """Minimum vertex cut between an element of class i and one of class j."""
    from .maxflow import NodeCapacitatedNetwork

    net = NodeCapacitatedNetwork(inf=g.n)
    node_of: dict[int, int] = {}
    for k in range(len(nodes)):
        if k not in (i, j):
            node_of[k] = net.add_node(g.weight[nodes[k]])
    source = net.add_node()
    sink = net.add_node()
    co_source = co_sink = None
    if g.weight[nodes[i]] > 1:
        co_source = net.add_node(g.weight[nodes[i]] - 1)
        net.add_arc(source, co_source)
    if g.weight[nodes[j]] > 1:
        co_sink = net.add_node(g.weight[nodes[j]] - 1)
        net.add_arc(co_sink, sink)
    for k, net_k in node_of.items():
        if masks[i] >> k & 1:
            net.add_arc(source, net_k)
            if co_source is not None:
                net.add_arc(co_source, net_k)
        if masks[j] >> k & 1:
            net.add_arc(net_k, sink)
            if co_sink is not None:
                net.add_arc(net_k, co_sink)
        m = masks[k]
        while m:
            low = m & -m
            l = low.bit_length() - 1
            m ^= low
            if l not in (i, j):
                net.add_arc(net_k, node_of[l])
    value = net.max_flow(source, sink)
    reverse = {net_k: k for k, net_k in node_of.items()}
    cut: list[tuple[int, int]] = []
    for net_node in net.min_cut_nodes(source):
        if net_node in reverse:
            d = nodes[reverse[net_node]]
            cut.append((d, g.weight[d]))
        elif net_node == co_source:
            cut.append((nodes[i], g.weight[nodes[i]] - 1))
        elif net_node == co_sink:
            cut.append((nodes[j], g.weight[nodes[j]] - 1))
    cut.sort()
    return value, cut


def kappa_quotient_exact(f: Factorization) -> KappaResult:
    """Exact kappa from weighted min cuts on the divisor quotient.

    Enumerates incomparable divisor pairs only (all non-adjacent element
    pairs live there), pruned branch-and-bound style: a pair whose common
    neighborhood already weighs at least the best cut found so far cannot
    improve it, since every separator contains the full common
    neighborhood.
    """
    n = f.value
    if n <= 1:
        raise ValueError("kappa is defined for n >= 2")
    g = build_divisor_graph(f)
    nodes = g.nodes
    idx = {d: k for k, d in enumerate(nodes)}
    masks = [
        sum(1 << idx[e] for e in g.adjacency[d]) for d in nodes
    ]
    weights = [g.weight[d] for d in nodes]
    pairs = [
        (i, j)
        for i in range(len(nodes))
        for j in range(i + 1, len(nodes))
        if not masks[i] >> j & 1
    ]
    alpha, beta, gamma = bounds_triple(f)
    if not pairs:
        return KappaResult(
            n=n, kappa=n - 1, method="quotient-exact", alpha=alpha, beta=beta,
            gamma=gamma,
        )

    def mask_weight(m: int) -> int:
        total = 0
        while m:
            low = m & -m
            total += weights[low.bit_length() - 1]
            m ^= low
        return total

    # isolating the cheapest class with an incomparable partner is a cut
    best = None
    best_cut = None
    seen_sides = {i for pair in pairs for i in pair}
    for i in sorted(seen_sides):
        ub = mask_weight(masks[i])
        if best is None or ub < best:
            best = ub
            best_cut = [
                (nodes[k], weights[k])
                for k in range(len(nodes))
                if masks[i] >> k & 1
            ]
    ranked = sorted(
        (mask_weight(masks[i] & masks[j]), i, j) for i, j in pairs
    )
    for lb, i, j in ranked:
        if lb >= best:
            break
        value, cut = _pair_min_cut(g, nodes, masks, i, j)
        if value < best:
            best = value
            best_cut = cut
    return KappaResult(
        n=n,
        kappa=best,
        method="quotient-exact",
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        witness=tuple(sorted(best_cut)),
    )


def _orders_form_chain(orders: tuple[int, ...]) -> bool:
    distinct = sorted(set(orders))
    return all(b % a == 0 for a, b in zip(distinct, distinct[1:]))


def _split_network(g: ExplicitGraph, masks: list[int]) -> csr_matrix:
    """Vertex-split arc network: entry 2v -> exit 2v+1 with capacity 1."""
    n = g.n
    inf = np.int32(n)
    rows = [np.arange(0, 2 * n, 2, dtype=np.int32)]
    cols = [np.arange(1, 2 * n, 2, dtype=np.int32)]
    data = [np.ones(n, dtype=np.int32)]
    for u in range(n):
        m = masks[u]
        targets = []
        while m:
            low = m & -m
            targets.append(low.bit_length() - 1)
            m ^= low
        if targets:
            t = np.asarray(targets, dtype=np.int32)
            rows.append(np.full(len(targets), 2 * u + 1, dtype=np.int32))
            cols.append(2 * t)
            data.append(np.full(len(targets), inf, dtype=np.int32))
    return csr_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(2 * n, 2 * n),
        dtype=np.int32,
    )


def _residual_cut_vertices(graph: csr_matrix, flow: csr_matrix, source: int) -> list[int]:
    """Explicit vertices saturated by the min cut, via residual reachability.

    graph - flow is elementwise the residual: cap - f on forward arcs and
    +f on the reverse arcs the flow matrix carries as negative entries.
    """
    residual = (graph - flow).tocsr()
    n2 = graph.shape[0]
    seen = np.zeros(n2, dtype=bool)
    seen[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        start, stop = residual.indptr[u], residual.indptr[u + 1]
        for v, slack in zip(residual.indices[start:stop], residual.data[start:stop]):
            if slack > 0 and not seen[v]:
                seen[v] = True
                queue.append(v)
    return [v for v in range(n2 // 2) if seen[2 * v] and not seen[2 * v + 1]]


def kappa_naive(g: ExplicitGraph, cap: int | None = None) -> KappaResult:
    """Exact kappa straight from the explicit graph.

    Minimum over non-adjacent vertex pairs of the s-t vertex cut, computed
    by max-flow on the vertex-split network. Pairs are pruned by the size
    of their common neighborhood (a lower bound on any s-t separator),
    deduplicated when closed neighborhoods coincide (such vertices are
    exchangeable by an automorphism), and seeded with the minimum degree
    (removing N(v) isolates v).
    """
    limit = cap if cap is not None else explicit_cap(DEFAULT_NAIVE_CAP)
    n = g.n
    if n > limit:
        raise ValueError(f"n={n} exceeds naive-oracle cap {limit}")
    if n <= 1:
        raise ValueError("kappa is defined for n >= 2")
    if _orders_form_chain(g.orders):
        return KappaResult(n=n, kappa=n - 1, method="naive-oracle")
    masks = neighbor_masks(g)
    degrees = [m.bit_count() for m in masks]
    v_min = min(range(n), key=lambda v: degrees[v])
    best = degrees[v_min]
    best_cut_vertices = [u for u in range(n) if masks[v_min] >> u & 1]

    candidates: dict[tuple[int, int], tuple[int, int, int]] = {}
    for s in range(n):
        ms = masks[s]
        closed_s = ms | (1 << s)
        for t in range(s + 1, n):
            if ms >> t & 1:
                continue
            closed_t = masks[t] | (1 << t)
            key = (closed_s, closed_t) if closed_s <= closed_t else (closed_t, closed_s)
            if key not in candidates:
                candidates[key] = ((ms & masks[t]).bit_count(), s, t)
    network = _split_network(g, masks)
    for lb, s, t in sorted(candidates.values()):
        if lb >= best:
            break
        result = maximum_flow(network, 2 * s + 1, 2 * t)
        if result.flow_value < best:
            best = int(result.flow_value)
            best_cut_vertices = _residual_cut_vertices(
                network, result.flow, 2 * s + 1
            )
    counts = Counter(g.orders[v] for v in best_cut_vertices)
    witness = tuple(sorted(counts.items()))
    return KappaResult(n=n, kappa=best, method="naive-oracle", witness=witness)


def kappa(f: Factorization, method: str = "auto") -> KappaResult:
    """Front door: auto picks the closed form, else the exact quotient solver.

    The result always carries the bounds that are defined for n, and the
    returned kappa is asserted against them (upper bounds alpha, beta,
    gamma; lower bound phi(n)+1 once n has two prime factors).
    """
    if f.value <= 1:
        raise ValueError("kappa is defined for n >= 2")
    if method == "closed":
        res = kappa_closed_form(f)
        if res is None:
            raise NoClosedFormError(OPEN_REGION_MESSAGE)
    elif method == "auto":
        res = kappa_closed_form(f)
        if res is None:
            res = kappa_quotient_exact(f)
    elif method == "quotient":
        res = kappa_quotient_exact(f)
    elif method == "naive":
        limit = explicit_cap(DEFAULT_NAIVE_CAP)
        res = kappa_naive(expand_explicit(f, cap=limit), cap=limit)
    else:
        raise ValueError(f"unknown method {method!r}")
    alpha, beta, gamma = bounds_triple(f)
    res = replace(res, alpha=alpha, beta=beta, gamma=gamma)
    for bound in (alpha, beta, gamma):
        if bound is not None and res.kappa > bound:
            raise AssertionError(
                f"kappa({f.value})={res.kappa} exceeds bound {bound}"
            )
    if f.r >= 2 and res.kappa < phi(f) + 1:
        raise AssertionError(
            f"kappa({f.value})={res.kappa} below phi(n)+1={phi(f) + 1}"
        )
    return res


def witness_disconnects_explicit(
    f: Factorization,
    witness: tuple[tuple[int, int], ...],
    cap: int | None = None,
) -> bool:
    """Check a weighted cut against the explicit graph by actual removal.

    Takes `count` arbitrary members of each order class (members of equal
    order are twins, so the choice is irrelevant) and BFSes the survivors.
    """
    g = expand_explicit(f, cap=cap)
    wanted = dict(witness)
    removed: set[int] = set()
    for v, d in enumerate(g.orders):
        need = wanted.get(d, 0)
        if need > 0:
            removed.add(v)
            wanted[d] = need - 1
    leftovers = {d: c for d, c in wanted.items() if c > 0}
    if leftovers:
        raise ValueError(f"witness multiplicities exceed class sizes: {leftovers}")
    survivors = [v for v in range(g.n) if v not in removed]
    if not survivors:
        return False
    masks = neighbor_masks(g)
    alive = 0
    for v in survivors:
        alive |= 1 << v
    seen = 1 << survivors[0]
    frontier = [survivors[0]]
    while frontier:
        next_frontier = []
        for u in frontier:
            fresh = masks[u] & alive & ~seen
            while fresh:
                low = fresh & -fresh
                fresh ^= low
                seen |= low
                next_frontier.append(low.bit_length() - 1)
        frontier = next_frontier
    return seen != alive
