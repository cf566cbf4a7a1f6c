import pytest
from hypothesis import given, strategies as st

from kvcover import InvalidParams, InvalidWeight, ParseError, WeightedGraph
from kvcover.instances import (
    format_coloring,
    format_graph,
    gen_random,
    parse_coloring,
    parse_graph,
    read_graph,
    write_graph,
)

from conftest import graphs


def test_parse_reference(G1):
    assert parse_graph("p wvc 3 3\n0 1 2.0\n1 2 1.0\n2 2 0.5\n") == G1
    assert parse_graph("c a comment\n\np wvc 1 0\n") == WeightedGraph(1)


def test_parse_sums_duplicates():
    G = parse_graph("p wvc 2 2\n0 1 1.5\n1 0 1.0\n")
    assert G.weight(0, 1) == 2.5


@pytest.mark.parametrize(
    "text, line",
    [
        ("p wvc 2\n", 1),
        ("c x\nq wvc 2 0\n", 2),
        ("p wvc 2 1\n0 1\n", 2),
        ("p wvc 2 1\n0 5 1.0\n", 2),
        ("p wvc 2 1\n0 x 1.0\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_parse_other_errors():
    with pytest.raises(ParseError):
        parse_graph("c only comments\n")
    with pytest.raises(ParseError):
        parse_graph("p wvc 2 2\n0 1 1.0\n")
    with pytest.raises(InvalidWeight):
        parse_graph("p wvc 2 1\n0 1 -2\n")


@given(graphs(max_n=9))
def test_round_trip(G):
    assert parse_graph(format_graph(G, ["note"])) == G


def test_file_round_trip(tmp_path, G1):
    path = tmp_path / "g.wvc"
    write_graph(G1, path)
    assert read_graph(path) == G1


def test_gen_examples():
    assert gen_random(5, 0.0, seed=3).num_edges == 0
    K5 = gen_random(5, 1.0, seed=3, unweighted=True)
    assert K5.num_edges == 10 and K5.is_unweighted_simple()


def test_gen_deterministic():
    a = format_graph(gen_random(12, 0.4, "uniform", 0.3, seed=17))
    b = format_graph(gen_random(12, 0.4, "uniform", 0.3, seed=17))
    assert a == b
    assert a != format_graph(gen_random(12, 0.4, "uniform", 0.3, seed=18))


@given(st.integers(0, 12), st.floats(0, 1), st.sampled_from(["uniform", "int", "unit"]), st.integers(0, 99))
def test_gen_text_round_trip(n, p, weights, seed):
    G = gen_random(n, p, weights, 0.2, seed=seed)
    assert parse_graph(format_graph(G)) == G
    assert all(w > 0 for _, _, w in G.edges())


def test_gen_errors():
    with pytest.raises(InvalidParams):
        gen_random(-1, 0.5)
    with pytest.raises(InvalidParams):
        gen_random(4, 1.5)
    with pytest.raises(InvalidParams):
        gen_random(4, 0.5, "lognormal")
    with pytest.raises(InvalidParams):
        gen_random(4, 0.5, loop_prob=-0.1)


def test_coloring_io():
    assert parse_coloring("c colors\n1 2\n1\n") == [1, 2, 1]
    assert parse_coloring(format_coloring([3, 1, 2])) == [3, 1, 2]
    with pytest.raises(ParseError):
        parse_coloring("1 a\n")
