"""Min k-VC solvers: multicolored DP scheme, color coding, greedy, and proof-replay hooks."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import Infeasible
from ..graph import Solution, WeightedGraph, covered_weight
from ..maxkvc.fptas import check_epsilon, check_k
from ..oracle import check_coloring
from .repfamily import rep_pick
from .subgraph import DpTable, SubgraphGenerator, dp_combine

__all__ = [
    "Coloring",
    "multicolored_min_kvc",
    "min_kvc_fptas",
    "auto_trials",
    "greedy_min",
    "leaf_catalog",
    "dp_from_catalog",
    "replay_branch",
    "replay_decomposition",
    "branching_stats",
]


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per vertex."""

    assignment: tuple[int, ...]
    k: int

    @classmethod
    def validated(cls, G: WeightedGraph, k: int, colors: Sequence[int]) -> Coloring:
        return cls(check_coloring(G, k, colors), k)

    def is_colorful(self, S) -> bool:
        seen = [self.assignment[v] for v in S]
        return len(set(seen)) == len(seen)


def _colors(G: WeightedGraph, k: int, coloring) -> tuple[int, ...]:
    if isinstance(coloring, Coloring):
        coloring = coloring.assignment
    return check_coloring(G, k, coloring)


def _answer(G: WeightedGraph, dp: DpTable) -> Solution:
    combined = dp_combine(dp)
    estimate = combined.values[combined.full]
    if estimate == math.inf:
        raise Infeasible("no colorful k-set under the given coloring")
    members = combined.reconstruct()
    return Solution(members, covered_weight(G, members), estimate)


def multicolored_min_kvc(G: WeightedGraph, k: int, coloring, eps: float) -> Solution:
    """(1 + eps)-approximate minimum over colorful k-sets.

    Runs SubgraphGen from every start vertex, combines the table over color
    partitions and returns the full-color entry as ``estimate`` with a
    witness set.  ``opt <= value <= estimate <= (1 + eps) * opt``.
    """
    k = check_k(G, k)
    eps = check_epsilon(eps)
    colors = _colors(G, k, coloring)
    if k == 0:
        return Solution((), 0.0, 0.0)
    dp = DpTable(k)
    gen = SubgraphGenerator(G, k, colors, eps)
    for u in G.vertices:
        gen.run({u}, {u}, dp)
    return _answer(G, dp)


def leaf_catalog(G: WeightedGraph, k: int, eps: float) -> dict[int, float]:
    """All leaf sets (as vertex bitmasks) of the uncolored SubgraphGen trees, with covered weights."""
    gen = SubgraphGenerator(G, k, None, eps)
    for u in G.vertices:
        gen.run({u}, {u}, None)
    return gen.catalog


def dp_from_catalog(catalog: dict[int, float], colors: Sequence[int], k: int) -> DpTable:
    """The SubgraphGen table for one coloring, read off the uncolored leaf catalog."""
    dp = DpTable(k)
    for mask, value in catalog.items():
        cmask, ok = 0, True
        members = []
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            bit = 1 << (colors[v] - 1)
            if cmask & bit:
                ok = False
                break
            cmask |= bit
            members.append(v)
        if ok:
            dp.update(cmask, value, tuple(members))
    return dp


def auto_trials(k: int, p_fail: float = 1e-3) -> int:
    """``ceil(e^k ln(1/p_fail))`` uniform colorings make a fixed k-set colorful w.p. >= 1 - p_fail."""
    if not 0.0 < p_fail < 1.0:
        raise ValueError(f"p_fail must lie in (0, 1), got {p_fail}")
    return max(1, math.ceil(math.exp(k) * math.log(1.0 / p_fail)))


def min_kvc_fptas(
    G: WeightedGraph,
    k: int,
    eps: float,
    trials: int | None = None,
    seed: int = 0,
    p_fail: float = 1e-3,
) -> Solution:
    """(1 + eps)-approximate Min k-VC by color coding over random colorings.

    Draws ``trials`` uniform colorings (``None`` means :func:`auto_trials`),
    solves the multicolored problem for each and keeps the smallest estimate.
    The estimate never drops below the optimum; it exceeds ``(1 + eps)`` times
    the optimum only if no trial made an optimal set colorful.
    """
    k = check_k(G, k)
    eps = check_epsilon(eps)
    if k == 0:
        return Solution((), 0.0, 0.0)
    if trials is None:
        trials = auto_trials(k, p_fail)
    catalog = leaf_catalog(G, k, eps)
    rng = np.random.default_rng(seed)
    best: Solution | None = None
    for _ in range(trials):
        colors = rng.integers(1, k + 1, size=G.n).tolist()
        try:
            sol = _answer(G, dp_from_catalog(catalog, colors, k))
        except Infeasible:
            continue
        if best is None or sol.estimate < best.estimate:
            best = sol
    if best is None:
        raise Infeasible(f"none of {trials} colorings admitted a colorful {k}-set")
    return best


def greedy_min(G: WeightedGraph, k: int) -> Solution:
    """The k vertices of smallest weighted degree (ties: lowest id)."""
    k = check_k(G, k)
    deg = G.degrees
    members = tuple(sorted(sorted(G.vertices, key=lambda v: (deg[v], v))[:k]))
    return Solution(members, covered_weight(G, members))


@dataclass(frozen=True)
class ReplayStep:
    vertex: int
    picked: tuple[int, ...]
    residual: float
    allowance: float


def replay_branch(
    G: WeightedGraph, k: int, coloring, eps: float, S: Sequence[int], start: int | None = None
) -> tuple[tuple[int, ...], list[ReplayStep]]:
    """Follow the single SubgraphGen branch that stays inside a colorful set ``S``.

    At each processed vertex ``u`` the branch takes ``T = rep_pick(S - included)``;
    the step records the weight from ``u`` to the part of ``S`` left behind and
    the allowance ``delta * sum_{v != u} w(u, v)`` it must respect.  Returns the
    leaf set and the steps.
    """
    k = check_k(G, k)
    eps = check_epsilon(eps)
    colors = _colors(G, k, coloring)
    S = sorted(set(S))
    assert len({colors[v] for v in S}) == len(S) <= k, "S must be a colorful set of size <= k"
    gen = SubgraphGenerator(G, k, colors, eps)
    v0 = S[0] if start is None else start
    active, included = {v0}, {v0}
    steps = []
    while active:
        u = min(active)
        active.discard(u)
        fam, others = gen.family(u)
        index = {v: i for i, v in enumerate(others)}
        remaining = [v for v in S if v not in included]
        T = tuple(others[i] for i in rep_pick(fam, [index[v] for v in remaining]))
        left = [v for v in remaining if v not in T]
        steps.append(
            ReplayStep(u, T, math.fsum(G.weight(u, v) for v in left), gen.delta * fam.total)
        )
        included.update(T)
        active.update(T)
    return tuple(sorted(included)), steps


def replay_decomposition(G: WeightedGraph, k: int, coloring, eps: float, S: Sequence[int]):
    """Peel ``S`` into the successive leaf sets the approximation argument uses."""
    rest = sorted(set(S))
    parts = []
    while rest:
        rep, _ = replay_branch(G, k, coloring, eps, rest)
        parts.append(rep)
        rest = [v for v in rest if v not in rep]
    return parts


def branching_stats(G: WeightedGraph, k: int, eps: float) -> dict[str, float]:
    """Leaf counts of the uncolored, unmemoized SubgraphGen trees (reported, never asserted)."""
    k = check_k(G, k)
    eps = check_epsilon(eps)
    per_start = []
    for u in G.vertices:
        gen = SubgraphGenerator(G, k, None, eps, memoize=False)
        gen.run({u}, {u}, None)
        per_start.append(gen.leaves)
    worst = max(per_start, default=0)
    exponent = max(2 * k - 1, 1)
    return {
        "leaves_total": float(sum(per_start)),
        "leaves_max_per_start": float(worst),
        "branching_factor": worst ** (1.0 / exponent) if worst else 0.0,
    }
