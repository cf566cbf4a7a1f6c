"""
Approximate kernels for Max k-VC and the matching solution-lifting map.

The weighted kernel keeps the ``prefix_size(n, k, eps)`` vertices of largest
weighted degree and folds each kept vertex's weight towards discarded vertices
into its self-loop, so every kept subset covers exactly what it covered before.

The unweighted kernel must output a simple unit-weight graph, so it cannot use
self-loops.  It first commits high-degree vertices, then replaces the folded
weight by unit edges to fresh padded vertices.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from ..errors import InvalidEpsilon, LiftError, NotUnweighted
from ..graph import WeightedGraph, degree_order, induced_subgraph
from .fptas import check_epsilon, check_k, prefix_size

__all__ = ["KernelResult", "kernel_weighted", "kernel_unweighted", "lift_solution"]


@dataclass(frozen=True)
class KernelResult:
    """Reduced instance plus what is needed to lift its solutions.

    ``id_map[i]`` is the original id of reduced vertex ``i`` or ``None`` for a
    padded vertex.  ``k`` is the original parameter; the reduced instance is
    solved with ``reduced_k = k - len(committed)``.
    """

    reduced: WeightedGraph
    k: int
    id_map: tuple[int | None, ...]
    committed: tuple[int, ...]
    epsilon: float
    original_n: int

    @property
    def reduced_k(self) -> int:
        return self.k - len(self.committed)

    @property
    def num_padded(self) -> int:
        return sum(1 for v in self.id_map if v is None)


def kernel_weighted(G: WeightedGraph, k: int, eps: float) -> KernelResult:
    """Exact-coverage kernel on ``k + ceil(k/eps)`` vertices (weighted, with loops).

    Reduced vertex ``i`` is the ``i``-th vertex in degree order.  When nothing
    would be discarded the graph is returned as is with the identity map.
    """
    k = check_k(G, k)
    eps = check_epsilon(eps)
    size = prefix_size(G.n, k, eps)
    if size == G.n:
        return KernelResult(G, k, tuple(G.vertices), (), eps, G.n)

    kept = degree_order(G)[:size]
    keep = set(kept)
    sub, old = induced_subgraph(G, kept)
    edges = {(u, v): w for u, v, w in sub.edges()}
    for i, u in enumerate(old):
        outside = math.fsum(w for v, w in G.neighbors(u).items() if v not in keep)
        if outside > 0.0:
            edges[(i, i)] = edges.get((i, i), 0.0) + outside
    return KernelResult(WeightedGraph(size, edges), k, tuple(old), (), eps, G.n)


def kernel_unweighted(G: WeightedGraph, k: int, eps: float) -> KernelResult:
    """Simple unit-weight kernel with ``O(k / eps^2)`` vertices.

    Both stages run with ``eps / 2``.  Stage 1 repeatedly commits the
    highest-degree vertex among the current top ``k'`` if its degree is at
    least ``ceil(k' / (eps/2))``, removing it and decrementing ``k'``.  Stage 2
    keeps the top ``n'`` residual vertices and routes each kept vertex's edges
    to discarded vertices onto ``ceil(k' n' / (eps/2))`` padded vertices,
    round-robin in id order.
    """
    if not G.is_unweighted_simple():
        raise NotUnweighted("kernel_unweighted needs unit weights and no self-loops")
    k = check_k(G, k)
    eps = check_epsilon(eps)
    if eps > 1.0:
        raise InvalidEpsilon(f"the unweighted kernel needs epsilon in (0, 1], got {eps}")
    half = eps / 2

    H, orig = G, list(G.vertices)
    committed: list[int] = []
    k_left = k
    while k_left > 0:
        deg = H.degrees
        top = degree_order(H)[:k_left]
        threshold = math.ceil(k_left / half)
        heavy = [v for v in top if deg[v] >= threshold]
        if not heavy:
            break
        v = heavy[0]
        committed.append(orig[v])
        rest = [u for u in H.vertices if u != v]
        H, local = induced_subgraph(H, rest)
        orig = [orig[u] for u in local]
        k_left -= 1

    size = prefix_size(H.n, k_left, half)
    if size == H.n:
        return KernelResult(H, k, tuple(orig), tuple(sorted(committed)), eps, G.n)

    kept = degree_order(H)[:size]
    sub, local = induced_subgraph(H, kept)
    n_pad = math.ceil(k_left * size / half)
    edges = [(u, v, 1.0) for u, v, _ in sub.edges()]
    slot = 0
    for i, u in enumerate(local):
        boundary = round(H.degrees[u] - sub.degrees[i])
        # consecutive slots are distinct while boundary <= n_pad, keeping G' simple
        assert boundary <= n_pad, "stage 1 left a vertex of too large degree"
        for _ in range(boundary):
            edges.append((i, size + slot, 1.0))
            slot = (slot + 1) % n_pad
    reduced = WeightedGraph(size + n_pad, edges)
    id_map = tuple(orig[u] for u in local) + (None,) * n_pad
    return KernelResult(reduced, k, id_map, tuple(sorted(committed)), eps, G.n)


def lift_solution(kr: KernelResult, S: Iterable[int]) -> tuple[int, ...]:
    """Map a reduced-instance solution back to a k-set of original vertices.

    Padded vertices are dropped, committed vertices added, and the set is
    filled up to ``k`` with the lowest unused original ids.
    """
    members = set()
    for v in S:
        if int(v) != v or not 0 <= v < kr.reduced.n:
            raise LiftError(f"vertex {v!r} is not in the reduced graph")
        members.add(int(v))
    if len(members) + len(kr.committed) > kr.k:
        raise LiftError(
            f"{len(members)} kernel vertices plus {len(kr.committed)} committed exceed k={kr.k}"
        )
    lifted = {kr.id_map[v] for v in members if kr.id_map[v] is not None}
    lifted.update(kr.committed)
    for v in range(kr.original_n):
        if len(lifted) >= kr.k:
            break
        lifted.add(v)
    if len(lifted) != kr.k:
        raise LiftError(f"cannot build a {kr.k}-set from {kr.original_n} vertices")
    return tuple(sorted(lifted))
