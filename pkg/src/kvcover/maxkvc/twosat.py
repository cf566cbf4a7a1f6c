"""
Max k-VC as weighted Max 2SAT with a cardinality constraint.

Each vertex becomes a variable and each edge ``{u, v}`` the monotone clause
``(x_u or x_v)`` with the edge's weight (a self-loop gives the unit clause
``(x_u)``).  An assignment with exactly ``k`` true variables then satisfies
precisely the covered weight of its true set.

The pipeline kernelizes first, so any 2SAT-CC solver only ever sees
``O(k / eps)`` variables.  The shipped solver is a swap local search; it
carries no approximation guarantee of its own.
"""

from __future__ import annotations

from collections.abc import Callable, Collection, Iterable
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..errors import ParseError, SolverContractError
from ..graph import Solution, WeightedGraph, covered_weight
from .fptas import check_k
from .kernel import kernel_weighted, lift_solution

__all__ = [
    "Max2SatCCInstance",
    "to_max2sat_cc",
    "satisfied_weight",
    "format_wcnf_cc",
    "parse_wcnf_cc",
    "local_search_2sat_cc",
    "brute_force_2sat_cc",
    "solve_via_2sat_pipeline",
]

Clause = tuple[tuple[int, ...], float]


@dataclass(frozen=True)
class Max2SatCCInstance:
    """Monotone weighted clauses over variables ``0..num_vars-1``; exactly ``cardinality`` true."""

    num_vars: int
    clauses: tuple[Clause, ...]
    cardinality: int


def to_max2sat_cc(G: WeightedGraph, k: int) -> Max2SatCCInstance:
    k = check_k(G, k)
    clauses = tuple(((u,) if u == v else (u, v), w) for u, v, w in G.edges())
    return Max2SatCCInstance(G.n, clauses, k)


def satisfied_weight(inst: Max2SatCCInstance, true_vars: Iterable[int]) -> float:
    true = set(true_vars)
    return sum(w for lits, w in inst.clauses if any(x in true for x in lits))


def format_wcnf_cc(inst: Max2SatCCInstance) -> str:
    """Serialize as ``p wcnf-cc <vars> <clauses> <k>`` then ``<w> <lit> [<lit>] 0`` lines.

    Literals are written 1-based since ``0`` terminates a clause.
    """
    lines = [f"p wcnf-cc {inst.num_vars} {len(inst.clauses)} {inst.cardinality}"]
    for lits, w in inst.clauses:
        lines.append(" ".join([repr(float(w))] + [str(x + 1) for x in lits] + ["0"]))
    return "\n".join(lines) + "\n"


def parse_wcnf_cc(text: str) -> Max2SatCCInstance:
    header = None
    clauses: list[Clause] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 5 or tok[:2] != ["p", "wcnf-cc"]:
                raise ParseError("expected header 'p wcnf-cc <vars> <clauses> <k>'", lineno)
            try:
                header = tuple(int(t) for t in tok[2:])
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            continue
        try:
            w = float(tok[0])
            lits = [int(t) for t in tok[1:]]
        except (ValueError, IndexError):
            raise ParseError(f"malformed clause {line!r}", lineno) from None
        if not lits or lits[-1] != 0 or len(lits) not in (2, 3):
            raise ParseError("clause must hold 1 or 2 literals followed by 0", lineno)
        if any(not 1 <= x <= header[0] for x in lits[:-1]):
            raise ParseError("literal out of range (only positive literals are produced)", lineno)
        clauses.append((tuple(x - 1 for x in lits[:-1]), w))
    if header is None:
        raise ParseError("missing 'p wcnf-cc' header")
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return Max2SatCCInstance(header[0], tuple(clauses), header[2])


def brute_force_2sat_cc(inst: Max2SatCCInstance) -> set[int]:
    """Exact solver over all cardinality-k assignments (for small instances)."""
    best, best_value = set(range(inst.cardinality)), -1.0
    for combo in combinations(range(inst.num_vars), inst.cardinality):
        value = satisfied_weight(inst, combo)
        if value > best_value:
            best, best_value = set(combo), value
    return best


def local_search_2sat_cc(
    inst: Max2SatCCInstance,
    restarts: int = 50,
    patience: int | None = None,
    seed: int = 0,
) -> set[int]:
    """Restarted swap local search; every visited assignment has exactly k true variables.

    Each restart starts from a uniformly random k-set and proposes random
    (true, false) swaps, taking only strict improvements; it stops after
    ``patience`` (default ``10 * num_vars``) proposals in a row fail.
    """
    n, k = inst.num_vars, inst.cardinality
    if k == 0 or k == n:
        return set(range(k))
    if patience is None:
        patience = 10 * n
    a = np.array([lits[0] for lits, _ in inst.clauses], dtype=np.intp)
    b = np.array([lits[-1] for lits, _ in inst.clauses], dtype=np.intp)
    w = np.array([wt for _, wt in inst.clauses], dtype=float)

    def score(x: np.ndarray) -> float:
        return float(w[x[a] | x[b]].sum())

    rng = np.random.default_rng(seed)
    best_set, best_value = None, -1.0
    for _ in range(restarts):
        x = np.zeros(n, dtype=bool)
        x[rng.choice(n, size=k, replace=False)] = True
        value = score(x)
        stale = 0
        while stale < patience:
            i = rng.choice(np.flatnonzero(x))
            j = rng.choice(np.flatnonzero(~x))
            x[i], x[j] = False, True
            trial = score(x)
            if trial > value:
                value, stale = trial, 0
            else:
                x[i], x[j] = True, False
                stale += 1
        if value > best_value:
            best_value, best_set = value, set(np.flatnonzero(x).tolist())
    return best_set


TwoSatSolver = Callable[[Max2SatCCInstance], Collection[int]]


def solve_via_2sat_pipeline(
    G: WeightedGraph, k: int, eps: float, solver: TwoSatSolver | None = None
) -> Solution:
    """Kernelize, hand the kernel to a 2SAT-CC solver, and lift its answer.

    ``solver`` maps an instance to the set of true variables.  A solver with
    ratio ``beta`` yields a ``(1 - eps) * beta`` approximation.
    """
    kr = kernel_weighted(G, k, eps)
    inst = to_max2sat_cc(kr.reduced, kr.k)
    if solver is None:
        solver = local_search_2sat_cc
    true_vars = set(solver(inst))
    if len(true_vars) != inst.cardinality or any(
        int(x) != x or not 0 <= x < inst.num_vars for x in true_vars
    ):
        raise SolverContractError(
            f"solver returned {len(true_vars)} true variables, expected {inst.cardinality} "
            f"distinct ids in 0..{inst.num_vars - 1}"
        )
    members = lift_solution(kr, true_vars)
    return Solution(members, covered_weight(G, members))
