"""Graph layer: quotient/explicit agreement, with numpy adjacency built
straight from the order-divisibility rule as the independent oracle."""

from __future__ import annotations

import random
from math import gcd

import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from powerkappa.graphcore import (
    CapExceeded,
    build_divisor_graph,
    components_after_removal,
    divisor_graph_json,
    expand_explicit,
    is_disconnected_after_removal,
    neighbor_masks,
)
from powerkappa.numtheory import divisors, factorize, phi_int


def explicit_adjacency(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense explicit-graph adjacency from scratch: order divisibility."""
    orders = np.array([n // gcd(n, k) for k in range(n)], dtype=np.int64)
    a = orders[:, None] % orders[None, :] == 0
    adj = a | a.T
    np.fill_diagonal(adj, False)
    return orders, adj


# --- divisor graph ---------------------------------------------------------

def test_prime_power_quotient_is_complete_chain():
    g = build_divisor_graph(factorize(4))
    assert g.nodes == (1, 2, 4)
    assert [g.weight[d] for d in g.nodes] == [1, 1, 2]
    assert all(g.adjacency[d] == frozenset(g.nodes) - {d} for d in g.nodes)


def test_divisor_graph_12_incomparable_pairs():
    g = build_divisor_graph(factorize(12))
    non_edges = {
        (d, e)
        for i, d in enumerate(g.nodes)
        for e in g.nodes[i + 1 :]
        if e not in g.adjacency[d]
    }
    assert non_edges == {(2, 3), (3, 4), (4, 6)}


def test_divisor_graph_30_weights():
    g = build_divisor_graph(factorize(30))
    assert g.nodes == (1, 2, 3, 5, 6, 10, 15, 30)
    assert tuple(g.weight[d] for d in g.nodes) == (1, 1, 2, 4, 2, 4, 8, 8)
    assert sum(g.weight.values()) == 30


def test_weights_always_sum_to_n_and_1_n_dominate():
    for n in range(1, 200):
        g = build_divisor_graph(factorize(n))
        assert sum(g.weight.values()) == n
        for hub in (1, n):
            assert g.adjacency[hub] == frozenset(g.nodes) - {hub}


def test_divisor_graph_json_shape():
    payload = divisor_graph_json(build_divisor_graph(factorize(4)))
    assert payload == {
        "n": 4,
        "nodes": [
            {"d": 1, "phi": 1, "neighbors": [2, 4]},
            {"d": 2, "phi": 1, "neighbors": [1, 4]},
            {"d": 4, "phi": 2, "neighbors": [1, 2]},
        ],
    }


# --- explicit graph --------------------------------------------------------

def test_explicit_examples():
    g2 = expand_explicit(factorize(2))
    assert g2.orders == (1, 2) and g2.adjacent(0, 1)

    g6 = expand_explicit(factorize(6))
    assert g6.orders == (1, 6, 3, 2, 3, 6)
    non_edges = {
        (x, y)
        for x in range(6)
        for y in range(x + 1, 6)
        if not g6.adjacent(x, y)
    }
    # exactly the order-2 vs order-3 vertex pairs
    assert non_edges == {(2, 3), (3, 4)}

    g8 = expand_explicit(factorize(8))
    assert all(g8.adjacent(x, y) for x in range(8) for y in range(x + 1, 8))


def test_explicit_cap_and_env_override(monkeypatch):
    with pytest.raises(CapExceeded):
        expand_explicit(factorize(6000))
    assert expand_explicit(factorize(6000), cap=6000).n == 6000
    monkeypatch.setenv("KAPPA_EXPLICIT_CAP", "40")
    with pytest.raises(CapExceeded):
        expand_explicit(factorize(41))
    assert expand_explicit(factorize(40)).n == 40
    monkeypatch.setenv("KAPPA_EXPLICIT_CAP", "banana")
    with pytest.raises(ValueError):
        expand_explicit(factorize(40))


def test_neighbor_masks_match_pairwise_adjacency():
    for n in (12, 30, 36):
        g = expand_explicit(factorize(n))
        masks = neighbor_masks(g)
        for x in range(n):
            for y in range(n):
                assert bool(masks[x] >> y & 1) == g.adjacent(x, y)


# --- removal queries --------------------------------------------------------

def test_removal_examples():
    g12 = build_divisor_graph(factorize(12))
    disconnected, comps = is_disconnected_after_removal(g12, {12, 1, 2})
    assert disconnected and comps == [[3, 6], [4]]

    g30 = build_divisor_graph(factorize(30))
    disconnected, comps = is_disconnected_after_removal(g30, {30, 1, 2, 3})
    assert disconnected and comps == [[5, 10, 15], [6]]

    disconnected, comps = is_disconnected_after_removal(g30, {30})
    assert not disconnected and len(comps) == 1


def test_removal_error_cases():
    g = build_divisor_graph(factorize(12))
    with pytest.raises(ValueError):
        components_after_removal(g, set(g.nodes))
    with pytest.raises(ValueError):
        components_after_removal(g, {5})


# --- quotient vs explicit, the structural invariants ------------------------

@pytest.mark.parametrize("n", range(1, 301))
def test_class_partition_matches_quotient(n):
    orders, adj = explicit_adjacency(n)
    g = build_divisor_graph(factorize(n))
    classes = {d: np.flatnonzero(orders == d) for d in g.nodes}
    for d, members in classes.items():
        assert len(members) == phi_int(d)
        block = adj[np.ix_(members, members)]
        assert block.sum() == len(members) * (len(members) - 1)  # clique
    for d in g.nodes:
        for e in g.nodes:
            if d >= e:
                continue
            block = adj[np.ix_(classes[d], classes[e])]
            if e in g.adjacency[d]:
                assert block.all(), (n, d, e)
            else:
                assert not block.any(), (n, d, e)


def test_complete_iff_prime_power_up_to_300():
    for n in range(2, 301):
        _, adj = explicit_adjacency(n)
        complete = adj.sum() == n * (n - 1)
        assert complete == (factorize(n).r <= 1), n


def test_quotient_removal_agrees_with_explicit_bfs():
    rng = random.Random(20260809)
    for n in range(2, 301):
        orders, adj = explicit_adjacency(n)
        g = build_divisor_graph(factorize(n))
        nodes = list(g.nodes)
        sparse = csr_matrix(adj)
        for _ in range(200):
            k = rng.randint(0, len(nodes) - 1)
            removed = set(rng.sample(nodes, k))
            survivors = np.flatnonzero(~np.isin(orders, list(removed)))
            if survivors.size == 0:
                continue
            sub = sparse[np.ix_(survivors, survivors)]
            n_comp, _ = connected_components(sub, directed=False)
            quotient_answer, comps = is_disconnected_after_removal(g, removed)
            assert quotient_answer == (n_comp >= 2), (n, sorted(removed))
            assert len(comps) == n_comp, (n, sorted(removed))
