"""Adjacency of bipartitions under the dominance order on kappa vectors.

Two bipartitions of n with distinct kappa values are adjacent when no
bipartition of n has a kappa strictly between them.  Adjacent pairs differ
by a single box move on their kappa vectors; this module decides adjacency
by exhaustive enumeration (the trustworthy oracle at this scale), extracts
the move, refines arbitrary comparisons into saturated chains, and checks
the structural facts about adjacency frames used elsewhere.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

from ._util import iter_bits
from .errors import (
    NoSingleMove,
    NotAdjacent,
    NotComparable,
    NotStrictlyDominated,
    PreconditionViolated,
    RankMismatch,
    SizeMismatch,
)
from .families import family_table
from .partitions import BoxMove, Parts, break_points, dominance_leq, gap, part, size
from .symbols import Bipartition, Kappa, kappa


class AdjacencyFrame(NamedTuple):
    kappa_low: Kappa
    kappa_high: Kappa
    i: int  # first position where the low vector falls short
    j: int  # first later position where the prefix sums agree again


def frame(k: Kappa, k2: Kappa) -> AdjacencyFrame:
    """Frame (i, j) of a strict dominance pair of kappa vectors."""
    if (k.b, k.N) != (k2.b, k2.N):
        raise NotComparable(f"different parameters: ({k.b},{k.N}) vs ({k2.b},{k2.N})")
    lo, hi = k.entries, k2.entries
    if size(lo) != size(hi):
        raise SizeMismatch(f"|{lo}| != |{hi}|")
    if lo == hi or not dominance_leq(lo, hi):
        raise NotStrictlyDominated(f"{lo} is not strictly dominated by {hi}")
    i = next(t for t, (x, y) in enumerate(zip(lo, hi), 1) if x != y)
    sl = sum(lo[:i])
    sh = sum(hi[:i])
    j = i
    while sl != sh:
        sl += lo[j]
        sh += hi[j]
        j += 1
    assert part(lo, j) > part(hi, j) >= part(hi, j + 1) >= part(lo, j + 1)
    return AdjacencyFrame(k, k2, i, j)


@lru_cache(maxsize=None)
def _poset(n: int, b: int):
    """Dominance poset of the distinct kappa vectors of rank n at N = n.

    Returns (entries, index, above, below, cover_up, cover_set) where above
    and below are strict-dominance bitmasks and cover_up[i] lists the covers
    of node i sorted by increasing kappa.
    """
    entries = tuple(f.kappa.entries for f in family_table(n, b).families)
    m = len(entries)
    above = [0] * m
    below = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and dominance_leq(entries[i], entries[j]):
                above[i] |= 1 << j
                below[j] |= 1 << i
    cover_up: list[tuple[int, ...]] = []
    for i in range(m):
        ups = [j for j in iter_bits(above[i]) if not above[i] & below[j]]
        cover_up.append(tuple(sorted(ups, key=lambda j: entries[j])))
    cover_set = frozenset((i, j) for i in range(m) for j in cover_up[i])
    index = {e: i for i, e in enumerate(entries)}
    return entries, index, tuple(above), tuple(below), tuple(cover_up), cover_set


def _located(a: Bipartition, c: Bipartition, b: int):
    n = a.rank
    if c.rank != n:
        raise RankMismatch(f"ranks differ: {a.text()} has {n}, {c.text()} has {c.rank}")
    entries, index, above, below, cover_up, cover_set = _poset(n, b)
    return n, index[kappa(a, b, n).entries], index[kappa(c, b, n).entries]


def is_adjacent(a: Bipartition, c: Bipartition, b: int) -> bool:
    """True when kappa(a) is covered by kappa(c) among all rank-n values."""
    n, ia, ic = _located(a, c, b)
    entries, index, above, below, cover_up, cover_set = _poset(n, b)
    if ia == ic:
        raise NotComparable(f"{a.text()} and {c.text()} have equal kappa")
    if not above[ia] >> ic & 1:
        raise NotComparable(f"kappa of {a.text()} is not strictly below that of {c.text()}")
    return (ia, ic) in cover_set


def _single_move(lo: Parts, hi: Parts) -> BoxMove:
    """The unique box move with hi = up(lo), or a NoSingleMove tripwire."""
    plus = [t for t, (x, y) in enumerate(zip(lo, hi), 1) if y == x + 1]
    minus = [t for t, (x, y) in enumerate(zip(lo, hi), 1) if y == x - 1]
    stray = [t for t, (x, y) in enumerate(zip(lo, hi), 1) if abs(y - x) > 1]
    if stray or len(plus) != 1 or len(minus) != 1 or plus[0] >= minus[0]:
        raise NoSingleMove(f"{hi} is not a single raised box away from {lo}")
    return BoxMove(plus[0], minus[0])


def adjacency_move(a: Bipartition, c: Bipartition, b: int) -> BoxMove:
    """The single box move turning kappa(a) into kappa(c)."""
    if not is_adjacent(a, c, b):
        raise NotAdjacent(f"{a.text()} and {c.text()} are not adjacent at b={b}")
    n = a.rank
    return _single_move(kappa(a, b, n).entries, kappa(c, b, n).entries)


def saturated_chain(a: Bipartition, c: Bipartition, b: int) -> list[Bipartition]:
    """A chain from a to c whose consecutive kappa values are adjacent.

    Ties are broken towards the lexicographically smallest kappa, and
    intermediate steps are represented by the textually first member of
    their family, so the chain is deterministic.
    """
    n, ia, ic = _located(a, c, b)
    entries, index, above, below, cover_up, cover_set = _poset(n, b)
    if ia == ic:
        return [a] if a == c else [a, c]
    if not above[ia] >> ic & 1:
        raise NotComparable(f"kappa of {a.text()} is not below that of {c.text()}")
    path = [ia]
    while path[-1] != ic:
        path.append(
            next(j for j in cover_up[path[-1]] if j == ic or above[j] >> ic & 1)
        )
    table = family_table(n, b)
    reps = [table.families[i].members[0] for i in path]
    return [a] + reps[1:-1] + [c]


def verify_double_break(k2: Kappa, fr: AdjacencyFrame) -> bool:
    """Check that a flat stretch of the upper kappa has two break points.

    Requires k2 to be the frame's upper vector with every gap on
    [i, j-1] equal to 0 or 1; under that hypothesis the count of break
    points in [i, j-1] must be at least two for adjacent pairs.
    """
    if k2 != fr.kappa_high:
        raise ValueError("k2 must be the upper kappa of the frame")
    entries = k2.entries
    for m in range(fr.i, fr.j):
        g = gap(entries, m)
        if g is math.inf or g > 1:
            raise PreconditionViolated(f"gap at {m} of {entries} exceeds 1")
    return len(break_points(entries, fr.i, fr.j - 1)) >= 2
