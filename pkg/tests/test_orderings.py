import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subcol.bounds import path_bound
from subcol.errors import BudgetExceeded, GraphError, InvalidConstruction
from subcol.generators import cycle_graph, generate, path_graph
from subcol.graph import Graph
from subcol.orderings import (
    KTreeConstruction,
    VertexOrdering,
    exact_gcol,
    gcol_of_ordering,
    greach,
    greach_sets,
    path_ordering,
    semiweak_of_ordering,
    simplicial_ordering,
    strong_reach,
    subreach,
    subreach_sets,
    weak_reach,
)

from . import oracles
from .conftest import random_graph


def shuffled(n, seed):
    order = list(range(n))
    random.Random(seed).shuffle(order)
    return VertexOrdering(tuple(order))


P3 = path_graph(3).graph  # a=0, b=1, c=2
NAT3 = VertexOrdering.identity(3)


def test_vertex_ordering_rejects_non_permutations():
    with pytest.raises(GraphError):
        VertexOrdering((0, 0, 1))
    with pytest.raises(GraphError):
        VertexOrdering((0, 2))
    sigma = VertexOrdering((2, 0, 1))
    assert sigma.position == (1, 2, 0)
    assert sigma.less(2, 1)
    assert VertexOrdering.from_positions(sigma.position) == sigma


def test_greach_examples():
    assert greach(P3, NAT3, 2, 1, 2) == {1, 2}
    assert greach(P3, NAT3, 2, 2, 2) == {0, 1, 2}
    g = random_graph(8, 0.4, 7)
    sigma = shuffled(8, 7)
    low = sigma.order[0]
    assert greach(g, sigma, low, 3, math.inf) == {low}


def test_subreach_examples():
    p5 = path_graph(5).graph
    nat5 = VertexOrdering.identity(5)
    assert subreach(p5, nat5, 4, 4) == {2, 3, 4}
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert subreach(k3, NAT3, 2, 2) == {0, 1, 2}
    g = random_graph(7, 0.5, 1)
    sigma = shuffled(7, 1)
    for k in (1, 2, 5):
        assert subreach(g, sigma, sigma.order[0], k) == {sigma.order[0]}


def test_colouring_number_examples():
    k5 = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert gcol_of_ordering(k5, shuffled(5, 0), 1, 1) == 5
    for k, l in ((1, 1), (2, 3), (4, 4)):
        assert gcol_of_ordering(Graph.empty(6), shuffled(6, 2), k, l) == 1
        assert semiweak_of_ordering(Graph.empty(6), shuffled(6, 2), l) == 1
    assert gcol_of_ordering(path_graph(5).graph, VertexOrdering.identity(5), 2, 2) == 3
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert semiweak_of_ordering(k3, shuffled(3, 4), 2) == 3
    assert semiweak_of_ordering(path_graph(2).graph, VertexOrdering.identity(2), 4) == 2


def test_exact_gcol_examples():
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert exact_gcol(k3, 1, 1)[0] == 3
    assert exact_gcol(P3, 1, 2)[0] == 2
    c5 = cycle_graph(5).graph
    val, sigma = exact_gcol(c5, 2, 2)
    assert val == oracles.exact_gcol(c5, 2, 2) == 4
    assert gcol_of_ordering(c5, sigma, 2, 2) == val
    with pytest.raises(BudgetExceeded):
        exact_gcol(path_graph(9).graph, 1, 1)


def test_exact_gcol_is_submultiplicative():
    for seed in range(12):
        rnd = random.Random(seed)
        g = random_graph(rnd.randint(4, 7), rnd.choice([0.3, 0.5]), seed)
        memo = {}

        def val(k, l):
            if (k, l) not in memo:
                memo[k, l] = exact_gcol(g, k, l)[0]
            return memo[k, l]

        for (k, l), (k2, l2) in (((1, 1), (1, 1)), ((1, 2), (1, 1)), ((1, 1), (1, 2)), ((2, 2), (1, 1))):
            assert val(k + k2, l + l2) <= val(k, l) * val(k2, l2)
        # the col and wcol products, as a consistency check
        for k, l in ((1, 2), (2, 2), (2, 3), (3, 3)):
            assert val(k, l) <= val(1, l - k + 1) * val(1, 1) ** (k - 1) <= val(l - k + 1, l - k + 1) * val(1, 1) ** (k - 1)


@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(1, 6))
def test_greach_matches_path_enumeration(seed, k, l):
    rnd = random.Random(seed)
    n = rnd.randint(1, 9)
    g = random_graph(n, rnd.choice([0.2, 0.35, 0.5]), seed)
    sigma = shuffled(n, seed)
    pos = sigma.position
    for v in range(n):
        assert greach(g, sigma, v, k, l) == oracles.greach(g, pos, v, k, l)


@given(st.integers(0, 10_000), st.integers(1, 7))
def test_subreach_matches_path_enumeration(seed, k):
    rnd = random.Random(seed)
    n = rnd.randint(1, 9)
    g = random_graph(n, rnd.choice([0.2, 0.35, 0.5]), seed)
    sigma = shuffled(n, seed)
    for y in range(n):
        assert subreach(g, sigma, y, k) == oracles.subreach(g, sigma.position, y, k)


@given(st.integers(0, 10_000), st.integers(1, 5))
def test_strong_and_weak_reach_match_direct_definitions(seed, l):
    g = random_graph(10, 0.25, seed)
    sigma = shuffled(10, seed)
    pos = sigma.position
    for v in range(10):
        assert strong_reach(g, sigma, v, l) == oracles.strong_reach(g, pos, v, l)
        assert weak_reach(g, sigma, v, l) == oracles.weak_reach(g, pos, v, l)


@given(st.integers(0, 10_000), st.integers(1, 7))
def test_subreach_inside_greach_half(seed, l):
    g = random_graph(12, 0.25, seed)
    sigma = shuffled(12, seed)
    sub = subreach_sets(g, sigma, l)
    gr = greach_sets(g, sigma, -(-l // 2), l)
    assert all(a <= b for a, b in zip(sub, gr))
    assert semiweak_of_ordering(g, sigma, l) <= gcol_of_ordering(g, sigma, -(-l // 2), l)


@given(st.integers(0, 10_000))
def test_greach_monotone_in_k_and_l(seed):
    g = random_graph(11, 0.3, seed)
    sigma = shuffled(11, seed)
    for v in range(11):
        sets = {(k, l): greach(g, sigma, v, k, l) for k in (1, 2, 3) for l in (3, 4, 5) if k <= l}
        for (k, l), s in sets.items():
            if (k + 1, l) in sets:
                assert s <= sets[(k + 1, l)]
            if (k, l + 1) in sets:
                assert s <= sets[(k, l + 1)]


def test_infinite_radius_equals_n_minus_one():
    g = random_graph(9, 0.3, 4)
    sigma = shuffled(9, 4)
    assert greach_sets(g, sigma, math.inf, math.inf) == greach_sets(g, sigma, 8, 8)
    assert greach_sets(g, sigma, 2, None) == greach_sets(g, sigma, 2, 8)


def test_invalid_radius():
    with pytest.raises(GraphError):
        greach(P3, NAT3, 0, 0, 2)
    with pytest.raises(GraphError):
        gcol_of_ordering(P3, VertexOrdering.identity(2), 1, 1)


def test_budget_exceeded():
    g = generate("random-plane-triangulation", {"n": 60}, 1).graph
    with pytest.raises(BudgetExceeded):
        gcol_of_ordering(g, shuffled(60, 1), 4, 8, budget=50)


# simplicial orderings of k-trees


def test_simplicial_examples():
    base = KTreeConstruction((0, 1, 2), ())
    assert simplicial_ordering(base).order == (0, 1, 2)
    fan = KTreeConstruction((0, 1, 2), ((3, (0, 2)), (4, (0, 3))))
    assert simplicial_ordering(fan).order == (0, 1, 2, 3, 4)
    with pytest.raises(InvalidConstruction):
        KTreeConstruction((0, 1, 2), ((3, (0, 5)),)).replay()


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_simplicial_back_neighbourhoods_are_cliques(seed, k):
    inst = generate("random-k-tree", {"k": k, "n": 20}, seed)
    g = inst.graph
    sigma = simplicial_ordering(inst.construction)
    pos = sigma.position
    for v in range(g.n):
        back = [u for u in g.adj[v] if pos[u] < pos[v]]
        assert len(back) <= k
        assert all(g.has_edge(a, b) for i, a in enumerate(back) for b in back[i + 1:])


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_k_tree_reach_identities(seed, t):
    inst = generate("random-k-tree", {"k": t, "n": 25}, seed)
    g = inst.graph
    sigma = simplicial_ordering(inst.construction)
    assert greach_sets(g, sigma, 1, 1) == greach_sets(g, sigma, 1, math.inf)
    for k in range(1, 4):
        base = greach_sets(g, sigma, k, k)
        for l in range(k, 2 * k + 3):
            assert greach_sets(g, sigma, k, l) == base


# path orderings


def test_path_ordering_examples():
    assert path_ordering(5, 1).order == (0, 1, 2, 3, 4)
    assert gcol_of_ordering(path_graph(5).graph, path_ordering(5, 1), 1, 6) <= 2
    sigma = path_ordering(7, 3)
    assert sigma.order[:3] == (0, 3, 6)
    assert set(sigma.order) == set(range(7))
    assert path_ordering(1, 4).order == (0,)


@given(st.integers(1, 80), st.integers(1, 8), st.integers(1, 16))
def test_path_ordering_bound(n, k, l):
    if k > l:
        k, l = l, k
    g = path_graph(n).graph
    assert gcol_of_ordering(g, path_ordering(n, k), k, l) <= path_bound(k, l)
