"""Integer partitions: dominance order, conjugation, overlaps and box moves.

A partition is stored as a tuple of weakly decreasing nonnegative integers.
Trailing zeros are legal and significant where a fixed length is mandated by
context (the kappa vectors of the symbols module keep their zeros); abstract
partitions are normally handled in normalized form without them.

Out-of-range indices follow the usual boundary conventions: entries below
the diagram are 0 and entries above the first row are +infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterator, Sequence

from .errors import NotAPartition, SizeMismatch

Parts = tuple[int, ...]


@dataclass(frozen=True, order=True)
class BoxMove:
    """A single box moved from row k2 up to row k1 (1-based, k1 < k2)."""

    k1: int
    k2: int

    def __post_init__(self) -> None:
        if not 1 <= self.k1 < self.k2:
            raise ValueError(f"box move needs 1 <= k1 < k2, got ({self.k1}, {self.k2})")

    def __str__(self) -> str:
        return f"Up({self.k1},{self.k2})"


def as_partition(seq: Sequence[int]) -> Parts:
    """Validate seq as a partition and return it as a tuple, zeros kept."""
    parts = tuple(int(v) for v in seq)
    if parts and parts[-1] < 0:
        raise NotAPartition(f"negative part in {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotAPartition(f"not weakly decreasing: {parts}")
    return parts


def normalize(seq: Sequence[int]) -> Parts:
    """Drop trailing zeros."""
    parts = tuple(seq)
    end = len(parts)
    while end > 0 and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def padded(seq: Sequence[int], length: int) -> Parts:
    """Extend with zeros up to the requested length."""
    parts = tuple(seq)
    if len(parts) > length:
        raise ValueError(f"{parts} is longer than {length}")
    return parts + (0,) * (length - len(parts))


def size(p: Sequence[int]) -> int:
    return sum(p)


def part(p: Sequence[int], i: int) -> int | float:
    """Entry p_i (1-based) with the boundary conventions."""
    if i <= 0:
        return math.inf
    if i <= len(p):
        return p[i - 1]
    return 0


def dominance_leq(p: Sequence[int], q: Sequence[int]) -> bool:
    """Prefix-sum comparison of two partitions of the same total."""
    if size(p) != size(q):
        raise SizeMismatch(f"|{tuple(p)}| = {size(p)} but |{tuple(q)}| = {size(q)}")
    sp = sq = 0
    for a, b in zip(padded(p, max(len(p), len(q))), padded(q, max(len(p), len(q)))):
        sp += a
        sq += b
        if sp > sq:
            return False
    return True


def dominance_lt(p: Sequence[int], q: Sequence[int]) -> bool:
    return dominance_leq(p, q) and normalize(p) != normalize(q)


def transpose(p: Sequence[int]) -> Parts:
    """Conjugate partition, always returned in normalized form."""
    q = normalize(as_partition(p))
    if not q:
        return ()
    return tuple(sum(1 for v in q if v > i) for i in range(q[0]))


def overlap_count(p: Sequence[int], l: int) -> int:
    """Number of maximal runs of equal entries of length exactly l.

    Entries are taken as stored, so explicit zeros count like any value.
    """
    if l < 1:
        raise ValueError("run length must be >= 1")
    return sum(1 for _, run in groupby(p) if sum(1 for _ in run) == l)


def up(p: Sequence[int], move: BoxMove) -> Parts:
    """Move one box from row move.k2 to row move.k1."""
    parts = as_partition(p)
    if move.k2 > len(parts):
        raise NotAPartition(f"index {move.k2} out of range for {parts}")
    q = list(parts)
    q[move.k1 - 1] += 1
    q[move.k2 - 1] -= 1
    return as_partition(q)


def down(p: Sequence[int], move: BoxMove) -> Parts:
    """Move one box from row move.k1 to row move.k2; inverse of up."""
    parts = as_partition(p)
    if move.k2 > len(parts):
        raise NotAPartition(f"index {move.k2} out of range for {parts}")
    q = list(parts)
    q[move.k1 - 1] -= 1
    q[move.k2 - 1] += 1
    return as_partition(q)


def gap(p: Sequence[int], k: int) -> int | float:
    """Difference p_k - p_{k+1}; +infinity when k = 0 by convention."""
    if k < 0:
        raise ValueError("gap index must be >= 0")
    return part(p, k) - part(p, k + 1)


def break_points(p: Sequence[int], i: int, j: int) -> list[int]:
    """Indices k in [i, j] flanked by two positive gaps."""
    if i < 1:
        raise ValueError("break point range is 1-based")
    return [k for k in range(i, j + 1) if gap(p, k - 1) >= 1 and gap(p, k) >= 1]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Parts, ...]:
    """All partitions of n in decreasing lexicographic order, normalized."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, cap: int) -> Iterator[Parts]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def format_partition(p: Sequence[int]) -> str:
    """Comma-separated decimal parts; the empty partition renders as "-"."""
    return ",".join(str(v) for v in p) if len(p) else "-"


def parse_partition(text: str) -> Parts:
    """Inverse of format_partition."""
    text = text.strip()
    if text == "-":
        return ()
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise NotAPartition(f"cannot parse partition {text!r}") from exc
    return as_partition(values)
