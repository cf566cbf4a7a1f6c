"""
Benchmark harness: run solvers over an instance x algorithm x (k, eps) grid.

Each cell yields one :class:`RunReport`; :func:`summarize` reduces a stream
of reports to the worst realized ratio per algorithm.  Ratios follow the
value / optimum convention, so they are <= 1 for maximization and >= 1 for
minimization.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import asdict, dataclass, field

from .errors import OracleTooLarge
from .graph import Solution, WeightedGraph, covered_weight
from .maxkvc import fptas_max, greedy_max, kernel_unweighted, lift_solution, solve_via_2sat_pipeline
from .minkvc import auto_trials, branching_stats, greedy_min, min_kvc_fptas
from .oracle import brute_max_kvc, brute_min_kvc

__all__ = ["RunReport", "ALGORITHMS", "ORACLE_MAX_N", "ORACLE_MAX_K", "bench", "summarize", "realized_ratio"]

ORACLE_MAX_N = 20
ORACLE_MAX_K = 5


@dataclass
class RunReport:
    cell: int
    instance: str
    algorithm: str
    sense: str
    n: int
    k: int
    epsilon: float | None
    seed: int | None
    trials: int | None
    value: float
    witness: list[int]
    wall_time: float
    oracle_value: float | None = None
    ratio: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class _Algo:
    sense: str
    uses_eps: bool
    run: Callable[..., tuple[Solution, dict]]
    applies: Callable[[WeightedGraph], bool] = lambda G: True


def _unweighted_kernel_brute(G, k, eps, seed):
    kr = kernel_unweighted(G, k, eps)
    inner = brute_max_kvc(kr.reduced, kr.reduced_k)
    members = lift_solution(kr, inner.members)
    return Solution(members, covered_weight(G, members)), {
        "kernel_n": kr.reduced.n,
        "committed": list(kr.committed),
    }


def _min_fptas(G, k, eps, seed):
    sol = min_kvc_fptas(G, k, eps, seed=seed)
    extra = {"estimate": sol.estimate, "trials": auto_trials(k) if k else 0}
    extra.update(branching_stats(G, k, eps))
    return sol, extra


ALGORITHMS: dict[str, _Algo] = {
    "fptas-max": _Algo("max", True, lambda G, k, eps, seed: (fptas_max(G, k, eps), {})),
    "greedy-max": _Algo("max", False, lambda G, k, eps, seed: (greedy_max(G, k), {})),
    "pipeline-max": _Algo(
        "max", True, lambda G, k, eps, seed: (solve_via_2sat_pipeline(G, k, eps), {})
    ),
    "kernel-unweighted-max": _Algo(
        "max", True, _unweighted_kernel_brute, lambda G: G.is_unweighted_simple()
    ),
    "min-kvc": _Algo("min", True, _min_fptas),
    "greedy-min": _Algo("min", False, lambda G, k, eps, seed: (greedy_min(G, k), {})),
}


def realized_ratio(value: float, optimum: float) -> float:
    if optimum == 0.0:
        return 1.0 if value == 0.0 else math.inf
    return value / optimum


def bench(
    instances: Iterable[tuple[str, WeightedGraph]],
    algorithms: Iterable[str],
    ks: Iterable[int],
    epsilons: Iterable[float],
    seed: int = 0,
    oracle: bool | str = "auto",
) -> Iterator[RunReport]:
    """Yield one report per (instance, algorithm, k, eps) cell.

    ``oracle='auto'`` compares against brute force only when ``n <= 20`` and
    ``k <= 5``; ``oracle=True`` demands it and raises :class:`OracleTooLarge`
    beyond that cap.  Cells with ``k > n`` are skipped.
    """
    algorithms = list(algorithms)
    for a in algorithms:
        if a not in ALGORITHMS:
            raise KeyError(f"unknown algorithm {a!r}; choose from {sorted(ALGORITHMS)}")
    ks, epsilons = list(ks), list(epsilons)
    cell = 0
    for name, G in instances:
        optima: dict[tuple[str, int], float] = {}
        for algo_name in algorithms:
            algo = ALGORITHMS[algo_name]
            if not algo.applies(G):
                continue
            for k in ks:
                if k > G.n:
                    continue
                small = G.n <= ORACLE_MAX_N and k <= ORACLE_MAX_K
                if oracle is True and not small:
                    raise OracleTooLarge(
                        f"oracle capped at n <= {ORACLE_MAX_N}, k <= {ORACLE_MAX_K}; got n={G.n}, k={k}"
                    )
                use_oracle = small if oracle == "auto" else bool(oracle)
                for eps in epsilons if algo.uses_eps else [None]:
                    start = time.perf_counter()
                    sol, extra = algo.run(G, k, eps, seed)
                    elapsed = time.perf_counter() - start
                    report = RunReport(
                        cell=cell,
                        instance=name,
                        algorithm=algo_name,
                        sense=algo.sense,
                        n=G.n,
                        k=k,
                        epsilon=eps,
                        seed=seed if algo_name == "min-kvc" else None,
                        trials=extra.pop("trials", None),
                        value=sol.value,
                        witness=list(sol.members),
                        wall_time=elapsed,
                        extra=extra,
                    )
                    if use_oracle:
                        key = (algo.sense, k)
                        if key not in optima:
                            brute = brute_max_kvc if algo.sense == "max" else brute_min_kvc
                            optima[key] = brute(G, k).value
                        report.oracle_value = optima[key]
                        report.ratio = realized_ratio(sol.value, optima[key])
                    cell += 1
                    yield report


def summarize(reports: Iterable[RunReport]) -> dict[str, dict]:
    """Worst realized ratio, cell count and total time per algorithm."""
    out: dict[str, dict] = {}
    for r in reports:
        s = out.setdefault(
            r.algorithm, {"sense": r.sense, "cells": 0, "worst_ratio": None, "wall_time": 0.0}
        )
        s["cells"] += 1
        s["wall_time"] += r.wall_time
        if r.ratio is not None:
            worst = s["worst_ratio"]
            if worst is None:
                s["worst_ratio"] = r.ratio
            elif r.sense == "max":
                s["worst_ratio"] = min(worst, r.ratio)
            else:
                s["worst_ratio"] = max(worst, r.ratio)
    return out
