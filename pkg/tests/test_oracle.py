from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kvcover import (
    Infeasible,
    InvalidColoring,
    InvalidK,
    WeightedGraph,
    brute_max_kvc,
    brute_min_kvc,
    brute_multicolored_min_kvc,
    covered_weight,
)

from conftest import close, graphs


def test_max_examples(G1):
    assert tuple(brute_max_kvc(G1, 1)) == ((1,), 3.0)
    assert tuple(brute_max_kvc(G1, 2)) == ((0, 2), 3.5)
    assert tuple(brute_max_kvc(G1, 0)) == ((), 0.0)


def test_min_examples(G1):
    assert tuple(brute_min_kvc(G1, 1)) == ((2,), 1.5)
    assert tuple(brute_min_kvc(G1, 3)) == ((0, 1, 2), 3.5)
    assert tuple(brute_min_kvc(WeightedGraph(6), 3)) == ((0, 1, 2), 0.0)


def test_multicolored_examples(G1):
    assert tuple(brute_multicolored_min_kvc(G1, 2, [1, 2, 1])) == ((0, 1), 3.0)
    with pytest.raises(Infeasible):
        brute_multicolored_min_kvc(G1, 2, [1, 1, 1])
    assert tuple(brute_multicolored_min_kvc(G1, 1, [1, 1, 1])) == ((2,), 1.5)


def test_errors(G1):
    with pytest.raises(InvalidK):
        brute_max_kvc(G1, 4)
    with pytest.raises(InvalidK):
        brute_min_kvc(G1, -1)
    with pytest.raises(InvalidColoring):
        brute_multicolored_min_kvc(G1, 2, [1, 3, 1])
    with pytest.raises(InvalidColoring):
        brute_multicolored_min_kvc(G1, 2, [1, 2])


def _exhaustive(G, k, best):
    values = {S: covered_weight(G, S) for S in combinations(G.vertices, k)}
    target = best(values.values())
    first = next(S for S in values if close(values[S], target, 1e-12))
    return first, target


@given(graphs(max_n=7), st.integers(0, 7))
def test_oracles_match_enumeration(G, k):
    k = min(k, G.n)
    mx, mn = brute_max_kvc(G, k), brute_min_kvc(G, k)
    S, v = _exhaustive(G, k, max)
    assert mx.members == S and close(mx.value, v)
    S, v = _exhaustive(G, k, min)
    assert mn.members == S and close(mn.value, v)
    assert close(covered_weight(G, mx.members), mx.value)
    for T in combinations(G.vertices, k):
        assert mn.value - 1e-9 <= covered_weight(G, T) <= mx.value + 1e-9


@given(graphs(max_n=7, min_n=1), st.integers(1, 3), st.data())
def test_min_below_multicolored(G, k, data):
    k = min(k, G.n)
    colors = data.draw(st.lists(st.integers(1, k), min_size=G.n, max_size=G.n))
    base = brute_min_kvc(G, k).value
    try:
        sol = brute_multicolored_min_kvc(G, k, colors)
    except Infeasible:
        assert len(set(colors)) < k
        return
    assert len({colors[v] for v in sol.members}) == k
    assert base <= sol.value + 1e-12


def test_deterministic(G1):
    assert brute_max_kvc(G1, 2) == brute_max_kvc(G1, 2)
