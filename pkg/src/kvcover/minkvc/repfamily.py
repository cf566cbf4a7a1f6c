"""
Small representative set families.

Given non-negative values ``a_1..a_l`` and ``delta > 0``, let ``pi`` rank the
elements by value (descending, ties by index) and ``c = ceil(1 / delta)``.
The family holds every ``j``-subset of the ``min(j * c, l)`` top-ranked
elements, for ``j = 0..max_size``.  So it has at most ``C(j c, j) = O(1/delta)^j``
members of size ``j``, yet every set ``S`` contains a member ``T`` whose
leftover ``S \\ T`` carries at most ``delta * sum(a)`` of the total value.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from ..errors import InvalidDelta, InvalidParams

__all__ = ["RepFamily", "rep_family_build", "rep_pick"]


@dataclass(frozen=True)
class RepFamily:
    values: tuple[float, ...]
    pi: tuple[int, ...]
    delta: float
    max_size: int

    @property
    def block(self) -> int:
        """``ceil(1 / delta)``: prefix length grows by this much per member size."""
        return math.ceil(1.0 / self.delta)

    @property
    def total(self) -> float:
        return math.fsum(self.values)

    def prefix_length(self, j: int) -> int:
        return min(j * self.block, len(self.values))

    def count(self, j: int) -> int:
        if not 0 <= j <= self.max_size:
            return 0
        return math.comb(self.prefix_length(j), j)

    def members(self, j: int) -> Iterator[tuple[int, ...]]:
        """Size-``j`` members, lexicographic over ranks; each tuple is in rank order."""
        if not 0 <= j <= self.max_size:
            return iter(())
        return combinations(self.pi[: self.prefix_length(j)], j)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for j in range(self.max_size + 1):
            yield from self.members(j)

    def __contains__(self, T: Iterable[int]) -> bool:
        T = set(T)
        if len(T) > self.max_size:
            return False
        rank = self.ranks
        return all(0 <= x < len(rank) and rank[x] < self.prefix_length(len(T)) for x in T)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """``ranks[x]`` is the 0-based position of element ``x`` in ``pi``."""
        r = [0] * len(self.pi)
        for pos, x in enumerate(self.pi):
            r[x] = pos
        return tuple(r)


def rep_family_build(a: Sequence[float], delta: float, j_max: int | None = None) -> RepFamily:
    delta = float(delta)
    if not delta > 0.0 or math.isinf(delta):
        raise InvalidDelta(f"delta must be a positive finite real, got {delta!r}")
    values = tuple(float(x) for x in a)
    if any(not x >= 0.0 for x in values):
        raise InvalidParams("family values must be non-negative")
    if j_max is None:
        j_max = len(values)
    if not 0 <= j_max <= len(values):
        raise InvalidParams(f"j_max must lie in 0..{len(values)}, got {j_max}")
    pi = tuple(sorted(range(len(values)), key=lambda i: (-values[i], i)))
    return RepFamily(values, pi, delta, int(j_max))


def rep_pick(fam: RepFamily, S: Iterable[int]) -> tuple[int, ...]:
    """Member ``T`` of ``fam`` with ``T <= S`` and ``sum(a[S - T]) <= delta * sum(a)``.

    With ``S = {pi(i_1), .., pi(i_m)}`` (1-based ranks ``i_1 < .. < i_m``),
    ``t`` is the largest index with ``i_t <= t * c`` and ``T`` is the first
    ``t`` elements.
    """
    rank = fam.ranks
    ordered = sorted(set(S), key=lambda x: rank[x])
    c = fam.block
    t = 0
    for g, x in enumerate(ordered, 1):
        if rank[x] + 1 <= g * c:
            t = g
    if t > fam.max_size:
        raise InvalidParams(f"set needs a member of size {t} but the family stops at {fam.max_size}")
    return tuple(ordered[:t])
