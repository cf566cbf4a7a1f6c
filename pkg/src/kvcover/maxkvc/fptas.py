"""Max k-VC by brute force over the highest-degree prefix, plus the greedy baseline."""

from __future__ import annotations

import math
from itertools import combinations, islice

import numpy as np

from ..errors import InvalidEpsilon, InvalidK
from ..graph import Solution, WeightedGraph, covered_weight, degree_order

__all__ = ["prefix_size", "fptas_max", "greedy_max"]

_CHUNK = 1 << 15


def check_k(G: WeightedGraph, k: int) -> int:
    if int(k) != k or k < 0 or k > G.n:
        raise InvalidK(f"k must be an integer in 0..{G.n}, got {k!r}")
    return int(k)


def check_epsilon(eps: float) -> float:
    eps = float(eps)
    if not eps > 0.0 or math.isinf(eps):
        raise InvalidEpsilon(f"epsilon must be a positive finite real, got {eps!r}")
    return eps


def prefix_size(n: int, k: int, eps: float) -> int:
    """``min(k + ceil(k / eps), n)``: how many top-degree vertices suffice."""
    return min(k + math.ceil(k / eps), n)


def fptas_max(G: WeightedGraph, k: int, eps: float) -> Solution:
    """(1 - eps)-approximate Max k-VC.

    Some optimal-up-to-(1 - eps) k-set lies inside the ``prefix_size`` vertices
    of largest weighted degree, so every k-subset of that prefix is scored and
    the best is returned (ties: lexicographically smallest member tuple).
    Cost is ``C(n', k)`` evaluations with ``n' = O(k / eps)``.
    """
    k = check_k(G, k)
    eps = check_epsilon(eps)
    prefix = sorted(degree_order(G)[: prefix_size(G.n, k, eps)])
    if k == 0:
        return Solution((), 0.0)

    sub = G.matrix[np.ix_(prefix, prefix)]
    off = sub - np.diag(np.diag(sub))
    deg = np.asarray(G.degrees)[prefix]
    local = range(len(prefix))
    pairs = list(combinations(range(k), 2))

    best_value = -1.0
    best: tuple[int, ...] = ()
    it = combinations(local, k)
    while True:
        block = np.array(list(islice(it, _CHUNK)), dtype=np.intp)
        if block.size == 0:
            break
        block = block.reshape(-1, k)
        # covered weight = sum of degrees minus internal non-loop weight
        values = deg[block].sum(axis=1)
        for i, j in pairs:
            values -= off[block[:, i], block[:, j]]
        idx = int(np.argmax(values))  # first maximiser within the chunk
        if values[idx] > best_value:
            best_value = float(values[idx])
            best = tuple(prefix[i] for i in block[idx])
    return Solution(best, covered_weight(G, best))


def greedy_max(G: WeightedGraph, k: int) -> Solution:
    """Add the vertex of largest marginal covered weight, k times (ties: lowest id)."""
    k = check_k(G, k)
    chosen: list[int] = []
    in_set = [False] * G.n
    # gain[v] = wdeg(v) - weight from v into the current set
    gain = list(G.degrees)
    for _ in range(k):
        v = max((u for u in G.vertices if not in_set[u]), key=lambda u: (gain[u], -u))
        chosen.append(v)
        in_set[v] = True
        for u, w in G.neighbors(v).items():
            gain[u] -= w
    members = tuple(sorted(chosen))
    return Solution(members, covered_weight(G, members))
