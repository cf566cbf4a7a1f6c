"""
Exhaustive ground-truth solvers for desk-scale instances (n <= ~20, k <= ~5).

Subsets are visited depth-first in lexicographic order while the covered
weight is maintained incrementally: adding ``v`` to ``S`` gains
``wdeg(v) - sum_{u in S} w(u, v)``.  Only strict improvements replace the
incumbent, so among optimal sets the lexicographically smallest is returned.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import Infeasible, InvalidColoring, InvalidK
from .graph import Solution, WeightedGraph

__all__ = ["brute_max_kvc", "brute_min_kvc", "brute_multicolored_min_kvc", "check_coloring"]

# Relative slack under which two float totals count as a tie.
_TIE_RTOL = 1e-12


def _check_k(G: WeightedGraph, k: int) -> int:
    if int(k) != k or k < 0 or k > G.n:
        raise InvalidK(f"k must be an integer in 0..{G.n}, got {k!r}")
    return int(k)


def check_coloring(G: WeightedGraph, k: int, coloring: Sequence[int]) -> tuple[int, ...]:
    """Validate a coloring ``V -> {1..k}`` and return it as a tuple."""
    colors = tuple(int(c) for c in coloring)
    if len(colors) != G.n:
        raise InvalidColoring(f"coloring has {len(colors)} entries for {G.n} vertices")
    bad = [c for c in colors if not 1 <= c <= max(k, 1)]
    if bad:
        raise InvalidColoring(f"colors must lie in 1..{k}, got {bad[0]}")
    return colors


def _search(G: WeightedGraph, k: int, maximize: bool, colors: Sequence[int] | None = None):
    n = G.n
    w = G.matrix.tolist()
    deg = G.degrees
    sign = 1.0 if maximize else -1.0
    best_value: float | None = None
    best_set: tuple[int, ...] | None = None
    chosen: list[int] = []
    used = set()

    def visit(start: int, value: float) -> None:
        nonlocal best_value, best_set
        if len(chosen) == k:
            if best_value is None or sign * (value - best_value) > _TIE_RTOL * max(1.0, abs(best_value)):
                best_value, best_set = value, tuple(chosen)
            return
        for v in range(start, n - (k - len(chosen)) + 1):
            if colors is not None and colors[v] in used:
                continue
            row = w[v]
            gain = deg[v] - sum(row[u] for u in chosen)
            chosen.append(v)
            if colors is not None:
                used.add(colors[v])
            visit(v + 1, value + gain)
            chosen.pop()
            if colors is not None:
                used.discard(colors[v])

    visit(0, 0.0)
    if best_set is None:
        return None
    return Solution(best_set, max(best_value, 0.0))


def brute_max_kvc(G: WeightedGraph, k: int) -> Solution:
    """Exact Max k-VC by enumerating all k-subsets."""
    return _search(G, _check_k(G, k), maximize=True)


def brute_min_kvc(G: WeightedGraph, k: int) -> Solution:
    """Exact Min k-VC by enumerating all k-subsets."""
    return _search(G, _check_k(G, k), maximize=False)


def brute_multicolored_min_kvc(G: WeightedGraph, k: int, coloring: Sequence[int]) -> Solution:
    """Exact minimum over colorful k-sets; raises :class:`Infeasible` if none exist."""
    k = _check_k(G, k)
    colors = check_coloring(G, k, coloring)
    sol = _search(G, k, maximize=False, colors=colors)
    if sol is None:
        raise Infeasible(f"no colorful {k}-set under the given coloring")
    return sol
