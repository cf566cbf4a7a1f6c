"""
Subgraph generation and the color-subset DP behind the Min k-VC scheme.

``SubgraphGen(active, included)`` picks the lowest active vertex ``u``,
deactivates it, and branches on every member ``T`` of the representative
family built from ``a_v = w(u, v)`` (``v != u``, ``delta = eps / 2``) that is
disjoint from ``included`` and keeps it colorful.  Each leaf (no active
vertex left) lowers ``DP[colors(included)]`` to the set's covered weight.
Combining the table over color partitions then yields the answer.

Vertex and color sets are bitmasks internally; color ``c`` is bit ``c - 1``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from ..graph import WeightedGraph
from .repfamily import RepFamily, rep_family_build

__all__ = ["INF", "DpTable", "SubgraphGenerator", "subgraph_gen", "dp_combine", "color_mask"]

INF = math.inf


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def color_mask(colors: Iterable[int]) -> int:
    """Bitmask of a set of 1-based colors."""
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


class DpTable:
    """Per color subset: best value, its witness set, and (after combining) the split.

    Values only ever decrease.  Equal values keep the lexicographically
    smaller witness, which makes :meth:`merge` commutative and associative.
    """

    def __init__(self, k: int):
        self.k = k
        size = 1 << k
        self.values: list[float] = [INF] * size
        self.witness: list[tuple[int, ...] | None] = [None] * size
        self.split: list[int | None] = [None] * size
        self.values[0] = 0.0
        self.witness[0] = ()

    @property
    def full(self) -> int:
        return (1 << self.k) - 1

    def update(self, mask: int, value: float, members: tuple[int, ...]) -> bool:
        cur = self.values[mask]
        if value < cur or (value == cur and members < (self.witness[mask] or members)):
            self.values[mask] = value
            self.witness[mask] = members
            self.split[mask] = None
            return True
        return False

    def merge(self, other: DpTable) -> None:
        for mask, (value, members) in enumerate(zip(other.values, other.witness)):
            if members is not None:
                self.update(mask, value, members)

    def copy(self) -> DpTable:
        out = DpTable.__new__(DpTable)
        out.k = self.k
        out.values = list(self.values)
        out.witness = list(self.witness)
        out.split = list(self.split)
        return out

    def __getitem__(self, colors: int | Iterable[int]) -> float:
        mask = colors if isinstance(colors, int) else color_mask(colors)
        return self.values[mask]

    def reconstruct(self, mask: int | None = None) -> tuple[int, ...] | None:
        """Vertex set realising ``values[mask]`` (``None`` when the entry is infinite)."""
        if mask is None:
            mask = self.full
        if self.values[mask] == INF:
            return None
        sub = self.split[mask]
        if sub is None:
            return self.witness[mask]
        return tuple(sorted(self.reconstruct(sub) + self.reconstruct(mask ^ sub)))


def dp_combine(dp: DpTable) -> DpTable:
    """Relax ``DP[C]`` by ``DP[C'] + DP[C - C']`` over proper non-empty ``C' < C``.

    Subsets are processed by increasing size, so the result is the minimum
    over all partitions of ``C`` of the summed input entries.  The input
    table is left untouched.
    """
    out = dp.copy()
    order = sorted(range(1, 1 << dp.k), key=lambda m: (m.bit_count(), m))
    values, split = out.values, out.split
    for C in order:
        sub = (C - 1) & C
        while sub:
            cand = values[sub] + values[C ^ sub]
            if cand < values[C]:
                values[C] = cand
                split[C] = sub
            sub = (sub - 1) & C
    return out


class SubgraphGenerator:
    """Shared state for SubgraphGen calls on one ``(G, k, coloring, eps)``.

    With ``colors=None`` the generator runs uncolored: only the size bound
    ``|included| <= k`` is enforced and leaves are collected in
    :attr:`catalog`.  A coloring only prunes nodes whose included set stops
    being colorful, and included sets grow monotonically along each branch,
    so the colored leaves are exactly the catalog sets that are colorful.

    ``memoize`` skips repeated ``(active, included)`` states; a repeat would
    visit the same leaves again and the min-update is idempotent.  Switch it
    off to count leaves the way the running-time argument does.
    """

    def __init__(
        self,
        G: WeightedGraph,
        k: int,
        colors: Sequence[int] | None,
        eps: float,
        memoize: bool = True,
    ):
        self.G = G
        self.k = k
        self.colors = None if colors is None else tuple(int(c) for c in colors)
        self.eps = eps
        self.delta = eps / 2
        self.memo: set[tuple[int, int]] | None = set() if memoize else None
        self.calls = 0
        self.leaves = 0
        self.catalog: dict[int, float] = {}
        self._w = G.matrix.tolist()
        self._families: dict[int, tuple[RepFamily, tuple[int, ...]]] = {}
        self._members: dict[int, list[list[tuple[int, int, bool]]]] = {}
        self._cover: dict[int, float] = {}

    def family(self, u: int) -> tuple[RepFamily, tuple[int, ...]]:
        """Representative family for branching at ``u`` and its element-to-vertex map."""
        if u not in self._families:
            others = tuple(v for v in self.G.vertices if v != u)
            row = self._w[u]
            fam = rep_family_build(
                [row[v] for v in others], self.delta, min(max(self.k - 1, 0), len(others))
            )
            self._families[u] = (fam, others)
        return self._families[u]

    def _member_table(self, u: int) -> list[list[tuple[int, int, bool]]]:
        table = self._members.get(u)
        if table is None:
            fam, others = self.family(u)
            table = []
            for j in range(fam.max_size + 1):
                row = []
                for T in fam.members(j):
                    vmask, cmask, ok = 0, 0, True
                    for i in T:
                        v = others[i]
                        vmask |= 1 << v
                        if self.colors is not None:
                            bit = 1 << (self.colors[v] - 1)
                            ok = ok and not cmask & bit
                            cmask |= bit
                    row.append((vmask, cmask, ok))
                table.append(row)
            self._members[u] = table
        return table

    def covered(self, mask: int) -> float:
        value = self._cover.get(mask)
        if value is None:
            members = _bits(mask)
            deg = self.G.degrees
            value = math.fsum(deg[v] for v in members) - math.fsum(
                self._w[u][v] for i, u in enumerate(members) for v in members[i + 1 :]
            )
            value = max(value, 0.0)
            self._cover[mask] = value
        return value

    def run(self, active: Iterable[int], included: Iterable[int], dp: DpTable | None) -> None:
        amask = sum(1 << v for v in set(active))
        imask = sum(1 << v for v in set(included))
        assert amask & ~imask == 0, "active must be a subset of included"
        members = _bits(imask)
        assert len(members) <= self.k, "included set larger than k"
        cmask = 0
        if self.colors is not None:
            cmask = color_mask(self.colors[v] for v in members)
            assert cmask.bit_count() == len(members), "included set is not colorful"
        self._gen(amask, imask, cmask, len(members), dp)

    def _gen(self, active: int, included: int, inc_colors: int, size: int, dp: DpTable | None) -> None:
        self.calls += 1
        if self.memo is not None:
            key = (active, included)
            if key in self.memo:
                return
            self.memo.add(key)
        if not active:
            self.leaves += 1
            value = self.covered(included)
            if dp is not None:
                dp.update(inc_colors, value, _bits(included))
            if self.colors is None:
                self.catalog[included] = value
            return
        u = (active & -active).bit_length() - 1
        active ^= 1 << u
        table = self._member_table(u)
        for t in range(min(self.k - size, len(table) - 1) + 1):
            for vmask, cmask, ok in table[t]:
                if vmask & included or not ok or cmask & inc_colors:
                    continue
                self._gen(active | vmask, included | vmask, inc_colors | cmask, size + t, dp)


def subgraph_gen(
    G: WeightedGraph,
    k: int,
    coloring: Sequence[int],
    active: Iterable[int],
    included: Iterable[int],
    eps: float,
    dp: DpTable,
    generator: SubgraphGenerator | None = None,
) -> SubgraphGenerator:
    """One SubgraphGen call; ``dp`` is updated in place.

    Pass the returned generator back in to share family and memo caches
    across calls on the same instance.
    """
    if generator is None:
        generator = SubgraphGenerator(G, k, coloring, eps)
    generator.run(active, included, dp)
    return generator
