"""Enumeration of bipartitions and their grouping into families.

Two bipartitions of n lie in the same family exactly when their kappa
vectors agree; the table below groups the whole of the rank-n set at the
common admissible size N = n, attaches a-values, and exposes the Hasse
diagram of the dominance order on the distinct kappa values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from ._util import iter_bits
from .partitions import Parts, dominance_leq, partitions_of
from .symbols import EMPTY, Bipartition, Kappa, kappa, n_stat


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of rank n, sorted by their textual form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bips = [
        Bipartition(a, c)
        for k in range(n + 1)
        for a in partitions_of(k)
        for c in partitions_of(n - k)
    ]
    return tuple(sorted(bips, key=Bipartition.text))


class Family(NamedTuple):
    kappa: Kappa
    members: tuple[Bipartition, ...]  # sorted by textual form
    a: int


@dataclass(frozen=True)
class FamilyTable:
    n: int
    b: int
    N: int
    families: tuple[Family, ...]  # sorted by decreasing kappa

    @property
    def a_values(self) -> dict[Kappa, int]:
        return {f.kappa: f.a for f in self.families}


@lru_cache(maxsize=None)
def family_table(n: int, b: int) -> FamilyTable:
    """Group the bipartitions of n by kappa at the common size N = n."""
    if b < 0:
        raise ValueError("weight b must be >= 0")
    N = n
    groups: dict[Parts, list[Bipartition]] = {}
    for bp in enumerate_bipartitions(n):
        groups.setdefault(kappa(bp, b, N).entries, []).append(bp)
    base = n_stat(kappa(EMPTY, b, N))
    families = tuple(
        Family(Kappa(entries, b, N), tuple(members), n_stat(entries) - base)
        for entries, members in sorted(groups.items(), reverse=True)
    )
    return FamilyTable(n, b, N, families)


class HasseDiagram(NamedTuple):
    nodes: tuple[Kappa, ...]  # decreasing kappa, same order as the family table
    edges: tuple[tuple[int, int], ...]  # (i, j) with nodes[i] covered by nodes[j]


def family_hasse(table: FamilyTable) -> HasseDiagram:
    """Covering relation of dominance on the distinct kappa values."""
    nodes = tuple(f.kappa for f in table.families)
    entries = [k.entries for k in nodes]
    m = len(entries)
    above = [0] * m  # strict dominance, as bitmasks
    below = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and dominance_leq(entries[i], entries[j]):
                above[i] |= 1 << j
                below[j] |= 1 << i
    edges = tuple(
        sorted(
            (i, j)
            for i in range(m)
            for j in iter_bits(above[i])
            if not above[i] & below[j]
        )
    )
    return HasseDiagram(nodes, edges)
