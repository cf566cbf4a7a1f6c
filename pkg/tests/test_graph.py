from itertools import combinations

import pytest
from hypothesis import given

from kvcover import (
    InvalidVertex,
    InvalidWeight,
    WeightedGraph,
    covered_weight,
    cross_weight,
    degree_order,
    induced_subgraph,
    wdeg_set,
)

from conftest import close, graph_and_subset, graphs


def test_covered_weight_examples(G1):
    assert covered_weight(G1, {1}) == 3.0
    assert covered_weight(G1, set()) == 0.0
    assert covered_weight(G1, {0, 1, 2}) == 3.5


def test_cross_weight_examples(G1):
    assert cross_weight(G1, {0}, {1}) == 2.0
    assert cross_weight(G1, {0}, {2}) == 0.0
    for r in range(4):
        for S in combinations(range(3), r):
            assert cross_weight(G1, S, S) == covered_weight(G1, S)


def test_wdeg_set_examples(G1):
    assert wdeg_set(G1, {1}) == 3.0
    assert wdeg_set(G1, {2}) == 1.5
    assert wdeg_set(G1, set()) == 0.0


def test_degree_order_examples(G1):
    assert degree_order(G1) == [1, 0, 2]
    assert degree_order(WeightedGraph(5, [(0, 1, 0.0), (3, 3, 0.0)])) == [0, 1, 2, 3, 4]
    assert degree_order(WeightedGraph(1)) == [0]


def test_induced_subgraph_examples(G1):
    H, old = induced_subgraph(G1, [0, 1])
    assert H == WeightedGraph(2, [(0, 1, 2.0)]) and old == [0, 1]
    H, old = induced_subgraph(G1, [0, 1, 2])
    assert H == G1
    H, old = induced_subgraph(G1, [])
    assert H.n == 0 and old == []


def test_induced_subgraph_relabels_in_given_order(G1):
    H, old = induced_subgraph(G1, [2, 1])
    assert old == [2, 1]
    assert H.weight(0) == 0.5 and H.weight(0, 1) == 1.0


def test_errors(G1):
    with pytest.raises(InvalidVertex):
        covered_weight(G1, {3})
    with pytest.raises(InvalidVertex):
        cross_weight(G1, {0}, {-1})
    with pytest.raises(InvalidVertex):
        wdeg_set(G1, {5})
    with pytest.raises(InvalidVertex):
        induced_subgraph(G1, [0, 0])
    with pytest.raises(InvalidWeight):
        WeightedGraph(2, [(0, 1, -1.0)])
    with pytest.raises(InvalidVertex):
        WeightedGraph(2, [(0, 2, 1.0)])


def test_duplicates_summed_and_zero_dropped():
    G = WeightedGraph(3, [(0, 1, 1.0), (1, 0, 2.5), (2, 2, 0.0)])
    assert G.weight(0, 1) == 3.5
    assert G.num_edges == 1
    assert G == WeightedGraph(3, {(0, 1): 3.5})


@given(graphs())
def test_degree_sum_identity(G):
    loops = sum(w for u, v, w in G.edges() if u == v)
    plain = sum(w for u, v, w in G.edges() if u != v)
    assert close(sum(G.degrees), 2 * plain + loops)


@given(graph_and_subset())
def test_inclusion_exclusion(case):
    G, S = case
    internal = sum(G.weight(u, v) for u, v in combinations(S, 2))
    assert close(covered_weight(G, S), wdeg_set(G, S) - internal)


@given(graph_and_subset())
def test_wdeg_at_most_twice_coverage(case):
    G, S = case
    assert wdeg_set(G, S) <= 2 * covered_weight(G, S) + 1e-9


@given(graph_and_subset(), graph_and_subset())
def test_cross_weight_symmetric(a, b):
    G, S = a
    T = [v for v in b[1] if v < G.n]
    assert cross_weight(G, S, T) == cross_weight(G, T, S)


@given(graph_and_subset())
def test_monotone(case):
    G, S = case
    for v in G.vertices:
        assert covered_weight(G, S) <= covered_weight(G, set(S) | {v}) + 1e-12


@given(graphs())
def test_degree_order_is_sorted_permutation(G):
    order = degree_order(G)
    assert sorted(order) == list(G.vertices)
    deg = [G.wdeg(v) for v in order]
    assert all(a >= b for a, b in zip(deg, deg[1:]))
