import math
import random

import pytest
from hypothesis import strategies as st

from kvcover import WeightedGraph
from kvcover.instances import gen_random

RTOL = 1e-9


def close(a: float, b: float, rtol: float = RTOL) -> bool:
    return math.isclose(a, b, rel_tol=rtol, abs_tol=rtol)


@pytest.fixture
def G1() -> WeightedGraph:
    """Reference instance: edges {0,1}:2.0, {1,2}:1.0 and loop {2}:0.5."""
    return WeightedGraph(3, [(0, 1, 2.0), (1, 2, 1.0), (2, 2, 0.5)])


def random_instance(seed: int, n_range=(3, 10), unweighted=False, loops=True) -> WeightedGraph:
    r = random.Random(seed)
    n = r.randint(*n_range)
    p = r.choice([0.15, 0.3, 0.5, 0.7, 0.9])
    weights = r.choice(["uniform", "int"])
    return gen_random(n, p, weights, 0.25 if loops else 0.0, seed=seed, unweighted=unweighted)


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    weight = st.integers(0, 20).map(lambda x: x / 4)
    edges = []
    for u in range(n):
        for v in range(u, n):
            if draw(st.booleans()):
                edges.append((u, v, draw(weight)))
    return WeightedGraph(n, edges)


@st.composite
def graph_and_subset(draw, max_n: int = 8):
    G = draw(graphs(max_n=max_n))
    S = draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    return G, sorted(S)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
