from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kvcover import SolverContractError, WeightedGraph, brute_max_kvc, covered_weight, fptas_max
from kvcover.maxkvc import (
    brute_force_2sat_cc,
    format_wcnf_cc,
    local_search_2sat_cc,
    parse_wcnf_cc,
    satisfied_weight,
    solve_via_2sat_pipeline,
    to_max2sat_cc,
)
from kvcover.errors import ParseError

from conftest import close, graphs, random_instance


def test_translation_example(G1):
    inst = to_max2sat_cc(G1, 2)
    assert inst.num_vars == 3 and inst.cardinality == 2
    assert set(inst.clauses) == {((0, 1), 2.0), ((1, 2), 1.0), ((2,), 0.5)}
    assert to_max2sat_cc(WeightedGraph(4), 1).clauses == ()


def test_wcnf_format(G1):
    text = format_wcnf_cc(to_max2sat_cc(G1, 2))
    lines = text.splitlines()
    assert lines[0] == "p wcnf-cc 3 3 2"
    assert "2.0 1 2 0" in lines and "0.5 3 0" in lines
    assert parse_wcnf_cc(text) == to_max2sat_cc(G1, 2)


def test_wcnf_parse_errors():
    with pytest.raises(ParseError):
        parse_wcnf_cc("p wcnf-cc 2 1 1\n1.0 1 2\n")
    with pytest.raises(ParseError):
        parse_wcnf_cc("1.0 1 0\n")


@given(graphs(max_n=8), st.integers(0, 8))
def test_wcnf_round_trip(G, k):
    inst = to_max2sat_cc(G, min(k, G.n))
    assert parse_wcnf_cc(format_wcnf_cc(inst)) == inst


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_objective_equivalence(G):
    inst = to_max2sat_cc(G, 0)
    for k in range(G.n + 1):
        for S in combinations(G.vertices, k):
            assert close(satisfied_weight(inst, S), covered_weight(G, S))


def test_pipeline_examples(G1):
    assert tuple(solve_via_2sat_pipeline(G1, 1, 0.5)) == ((1,), 3.0)
    assert tuple(solve_via_2sat_pipeline(G1, 0, 0.5)) == ((), 0.0)


def test_pipeline_with_brute_solver():
    for seed in range(40):
        G = random_instance(seed, (6, 10))
        for k in (1, 2, 3):
            for eps in (0.3, 1.0):
                sol = solve_via_2sat_pipeline(G, k, eps, solver=brute_force_2sat_cc)
                assert sol.value >= (1 - eps) * brute_max_kvc(G, k).value - 1e-9
                assert sol.value == fptas_max(G, k, eps).value or close(
                    sol.value, fptas_max(G, k, eps).value
                )


def test_pipeline_rejects_bad_solver(G1):
    with pytest.raises(SolverContractError):
        solve_via_2sat_pipeline(G1, 1, 0.5, solver=lambda inst: [0, 1])


@given(graphs(max_n=8), st.integers(0, 8), st.integers(0, 5))
def test_local_search_respects_cardinality(G, k, seed):
    k = min(k, G.n)
    inst = to_max2sat_cc(G, k)
    chosen = local_search_2sat_cc(inst, restarts=3, seed=seed)
    assert len(set(chosen)) == k


def test_local_search_deterministic():
    G = random_instance(7, (10, 10))
    inst = to_max2sat_cc(G, 3)
    assert sorted(local_search_2sat_cc(inst, seed=4)) == sorted(local_search_2sat_cc(inst, seed=4))
