"""
Instance files and seeded random instances.

Graph files are plain text::

    c optional comment lines start with 'c'
    p wvc <n> <m>
    <u> <v> <w>        (m records; u == v is a self-loop)

Repeated pairs are summed on load.  Coloring files hold one color per
vertex (whitespace separated, ``c`` comments allowed).
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .errors import InvalidParams, InvalidWeight, ParseError
from .graph import WeightedGraph

__all__ = [
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "gen_random",
    "parse_coloring",
    "format_coloring",
    "WEIGHT_DISTRIBUTIONS",
]


def parse_graph(text: str) -> WeightedGraph:
    header: tuple[int, int] | None = None
    records = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 4 or tok[:2] != ["p", "wvc"]:
                raise ParseError("expected header 'p wvc <n> <m>'", lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError("header fields must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header fields must be non-negative", lineno)
            header = (n, m)
            continue
        if len(tok) != 3:
            raise ParseError(f"expected '<u> <v> <w>', got {line!r}", lineno)
        try:
            u, v, w = int(tok[0]), int(tok[1]), float(tok[2])
        except ValueError:
            raise ParseError(f"malformed edge record {line!r}", lineno) from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"vertex out of range 0..{header[0] - 1}", lineno)
        if not w >= 0.0 or math.isinf(w):
            raise InvalidWeight(f"line {lineno}: weight must be finite and non-negative, got {tok[2]}")
        records.append((u, v, w))
    if header is None:
        raise ParseError("missing 'p wvc' header")
    if len(records) != header[1]:
        raise ParseError(f"header declares {header[1]} edge records, found {len(records)}")
    return WeightedGraph(header[0], records)


def format_graph(G: WeightedGraph, comments: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p wvc {G.n} {G.num_edges}")
    lines.extend(f"{u} {v} {w!r}" for u, v, w in G.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> WeightedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(G: WeightedGraph, path: str | Path, comments=()) -> None:
    Path(path).write_text(format_graph(G, comments))


def _uniform(rng: np.random.Generator) -> float:
    return round(float(rng.uniform(0.0, 1.0)), 3)


def _integer(rng: np.random.Generator) -> float:
    return float(rng.integers(1, 11))


WEIGHT_DISTRIBUTIONS = {
    "uniform": _uniform,
    "int": _integer,
    "unit": lambda rng: 1.0,
}


def gen_random(
    n: int,
    p: float,
    weights: str = "uniform",
    loop_prob: float = 0.0,
    seed: int = 0,
    unweighted: bool = False,
) -> WeightedGraph:
    """Erdos-Renyi style graph with i.i.d. weights.

    ``weights`` is one of :data:`WEIGHT_DISTRIBUTIONS`; the default is uniform
    on [0, 1] rounded to 3 decimals so text files round-trip exactly.
    ``unweighted=True`` forces unit weights and no self-loops.
    """
    if int(n) != n or n < 0:
        raise InvalidParams(f"n must be a non-negative integer, got {n!r}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParams(f"density must lie in [0, 1], got {p!r}")
    if not 0.0 <= loop_prob <= 1.0:
        raise InvalidParams(f"loop probability must lie in [0, 1], got {loop_prob!r}")
    if unweighted:
        weights, loop_prob = "unit", 0.0
    if weights not in WEIGHT_DISTRIBUTIONS:
        raise InvalidParams(f"unknown weight distribution {weights!r}")
    draw = WEIGHT_DISTRIBUTIONS[weights]
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, draw(rng)))
    if loop_prob > 0.0:
        for u in range(n):
            if rng.random() < loop_prob:
                edges.append((u, u, draw(rng)))
    return WeightedGraph(int(n), edges)


def parse_coloring(text: str) -> list[int]:
    colors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        try:
            colors.extend(int(t) for t in line.split())
        except ValueError:
            raise ParseError(f"colors must be integers, got {line!r}", lineno) from None
    return colors


def format_coloring(colors) -> str:
    return " ".join(str(int(c)) for c in colors) + "\n"
