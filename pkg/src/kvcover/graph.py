"""
Edge-weighted graphs with self-loops, and the coverage primitives.

A graph on ``n`` vertices (ids ``0..n-1``) assigns a non-negative weight to
every unordered pair ``{u, v}`` and to every singleton ``{u}`` (a self-loop).
Pairs that are not stored have weight zero.  An edge is *covered* by a vertex
set ``S`` when at least one of its endpoints lies in ``S``; a self-loop
``{u}`` is covered iff ``u`` is in ``S``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidVertex, InvalidWeight

__all__ = [
    "WeightedGraph",
    "Solution",
    "as_vertex_set",
    "covered_weight",
    "cross_weight",
    "wdeg_set",
    "degree_order",
    "induced_subgraph",
]

Edge = tuple[int, int]


def _key(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class WeightedGraph:
    """Immutable edge-weighted graph; self-loops allowed, parallel edges merged.

    ``edges`` may be a mapping ``{(u, v): w}`` or an iterable of ``(u, v, w)``
    triples.  Repeated pairs are summed and zero-weight pairs are dropped, so
    two graphs compare equal iff they have the same weight function.
    """

    def __init__(self, n: int, edges: Mapping[Edge, float] | Iterable[tuple[int, int, float]] = ()):
        if int(n) != n or n < 0:
            raise InvalidVertex(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        items = edges.items() if isinstance(edges, Mapping) else ((e[:2], e[2]) for e in edges)
        weights: dict[Edge, float] = {}
        for (u, v), w in items:
            u, v = _check_vertex(n, u), _check_vertex(n, v)
            w = float(w)
            if not w >= 0.0 or math.isinf(w):
                raise InvalidWeight(f"weight of {{{u}, {v}}} must be finite and non-negative, got {w!r}")
            key = _key(u, v)
            weights[key] = weights.get(key, 0.0) + w
        self._n = n
        self._weights = {e: w for e, w in sorted(weights.items()) if w > 0.0}
        adj: list[dict[int, float]] = [{} for _ in range(n)]
        loops = [0.0] * n
        for (u, v), w in self._weights.items():
            if u == v:
                loops[u] = w
            else:
                adj[u][v] = w
                adj[v][u] = w
        self._adj = tuple(adj)
        self._loops = tuple(loops)
        wdeg = []
        for u in range(n):
            wdeg.append(math.fsum(adj[u].values()) + loops[u])
        self._wdeg = tuple(wdeg)

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def num_edges(self) -> int:
        """Number of stored (positive-weight) edges, self-loops included."""
        return len(self._weights)

    def edges(self) -> Iterable[tuple[int, int, float]]:
        """Yield ``(u, v, w)`` with ``u <= v`` in sorted order; ``u == v`` is a loop."""
        for (u, v), w in self._weights.items():
            yield u, v, w

    def weight(self, u: int, v: int | None = None) -> float:
        """Weight of ``{u, v}``, or of the self-loop ``{u}`` when ``v`` is omitted."""
        u = _check_vertex(self._n, u)
        v = u if v is None else _check_vertex(self._n, v)
        return self._weights.get(_key(u, v), 0.0)

    def loop(self, u: int) -> float:
        return self._loops[u]

    def neighbors(self, u: int) -> Mapping[int, float]:
        """Non-loop neighbours of ``u`` with their edge weights (read-only view)."""
        return self._adj[u]

    def wdeg(self, v: int) -> float:
        return self._wdeg[_check_vertex(self._n, v)]

    @property
    def degrees(self) -> tuple[float, ...]:
        return self._wdeg

    @property
    def total_weight(self) -> float:
        return math.fsum(self._weights.values())

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix; self-loop weights on the diagonal."""
        m = np.zeros((self._n, self._n))
        for (u, v), w in self._weights.items():
            m[u, v] = w
            m[v, u] = w
        return m

    def is_unweighted_simple(self) -> bool:
        return all(u != v and w == 1.0 for (u, v), w in self._weights.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and self._weights == other._weights

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._weights.items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, edges={self.num_edges})"


@dataclass(frozen=True)
class Solution:
    """A k-vertex solution.

    ``value`` is always the covered weight of ``members`` in the input graph.
    DP-based minimisers also fill ``estimate`` with the table value they
    certify, which satisfies ``value <= estimate``.
    """

    members: tuple[int, ...]
    value: float
    estimate: float | None = None

    @property
    def k(self) -> int:
        return len(self.members)

    def __iter__(self):
        # unpacks as ``members, value``
        return iter((self.members, self.value))


def _check_vertex(n: int, v) -> int:
    if isinstance(v, (bool, np.bool_)) or int(v) != v:
        raise InvalidVertex(f"vertex id must be an integer, got {v!r}")
    v = int(v)
    if not 0 <= v < n:
        raise InvalidVertex(f"vertex {v} out of range 0..{n - 1}")
    return v


def as_vertex_set(G: WeightedGraph, S: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a vertex set: sorted tuple of distinct valid ids."""
    return tuple(sorted({_check_vertex(G.n, v) for v in S}))


def covered_weight(G: WeightedGraph, S: Iterable[int]) -> float:
    """Total weight of edges with at least one endpoint in ``S``."""
    members = set(as_vertex_set(G, S))
    return math.fsum(w for u, v, w in G.edges() if u in members or v in members)


def cross_weight(G: WeightedGraph, S: Iterable[int], T: Iterable[int]) -> float:
    """Total weight of edges touching both ``S`` and ``T``."""
    s = set(as_vertex_set(G, S))
    t = set(as_vertex_set(G, T))
    return math.fsum(
        w for u, v, w in G.edges() if (u in s or v in s) and (u in t or v in t)
    )


def wdeg_set(G: WeightedGraph, S: Iterable[int]) -> float:
    return math.fsum(G.degrees[v] for v in as_vertex_set(G, S))


def degree_order(G: WeightedGraph) -> list[int]:
    """Vertex ids by weighted degree, descending; ties by ascending id."""
    deg = G.degrees
    return sorted(G.vertices, key=lambda v: (-deg[v], v))


def induced_subgraph(G: WeightedGraph, U: Sequence[int]) -> tuple[WeightedGraph, list[int]]:
    """Subgraph induced by ``U``.

    New vertex ``i`` is old vertex ``U[i]``, so ``U`` may be given in any order
    (the kernels pass degree order).  Returns the graph and the new-to-old map.
    """
    old = [_check_vertex(G.n, v) for v in U]
    if len(set(old)) != len(old):
        raise InvalidVertex("induced_subgraph needs distinct vertices")
    new_id = {v: i for i, v in enumerate(old)}
    edges = {}
    for u, v, w in G.edges():
        if u in new_id and v in new_id:
            edges[_key(new_id[u], new_id[v])] = w
    return WeightedGraph(len(old), edges), old
