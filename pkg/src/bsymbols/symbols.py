"""Bipartitions, their two-row symbols and kappa vectors.

A bipartition (l1, l2) of rank n labels an irreducible representation of the
type B_n Weyl group; the weight parameter b is the value of the weight
function on the order-2 generator t.  For N admissible (at least the index
of the last nonzero part of either component) the symbol rows are

    row1_j = l1_j - j + N + b   for j = 1, ..., N + b,
    row2_j = l2_j - j + N       for j = 1, ..., N,

and kappa is the multiset of all 2N+b row entries sorted decreasingly.
Equality of kappa vectors cuts out the families, and their dominance order
is the order studied by the rest of the package.  The a-function is the
weighted sum n_stat(kappa) normalized so that the empty bipartition gets 0.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, NamedTuple, Sequence, Set

from . import partitions as pt
from .errors import NotAdmissible, NotSympartition
from .partitions import Parts, format_partition, normalize, parse_partition

class Bipartition(NamedTuple):
    first: Parts
    second: Parts

    @property
    def rank(self) -> int:
        return sum(self.first) + sum(self.second)

    def transpose(self) -> "Bipartition":
        """Conjugate both components and swap them (tensoring by the sign)."""
        return Bipartition(pt.transpose(self.second), pt.transpose(self.first))

    def text(self) -> str:
        return f"{format_partition(self.first)}|{format_partition(self.second)}"

    @classmethod
    def parse(cls, text: str) -> "Bipartition":
        left, sep, right = text.partition("|")
        if not sep or "|" in right:
            raise pt.NotAPartition(f"expected '<first>|<second>', got {text!r}")
        return bipartition(parse_partition(left), parse_partition(right))


def bipartition(first: Sequence[int], second: Sequence[int]) -> Bipartition:
    """Validated, normalized constructor."""
    return Bipartition(normalize(pt.as_partition(first)), normalize(pt.as_partition(second)))


EMPTY = Bipartition((), ())


class Symbol(NamedTuple):
    b: int
    N: int
    row2: Parts  # N entries, increasing
    row1: Parts  # N + b entries, increasing


class Kappa(NamedTuple):
    entries: Parts  # 2N + b entries, decreasing, zeros kept
    b: int
    N: int


def min_admissible(bp: Bipartition) -> int:
    """Smallest N whose symbol rows accommodate every nonzero part."""
    return max(len(normalize(bp.first)), len(normalize(bp.second)))


def symbol(bp: Bipartition, b: int, N: int | None = None) -> Symbol:
    """The (b, N)-symbol of bp; N defaults to the minimal admissible value."""
    if b < 0:
        raise ValueError("weight b must be >= 0")
    least = min_admissible(bp)
    if N is None:
        N = least
    if N < least:
        raise NotAdmissible(f"N={N} is below the minimal admissible {least} for {bp.text()}")
    first = pt.padded(normalize(bp.first), N + b)
    second = pt.padded(normalize(bp.second), N)
    row1 = tuple(first[j - 1] - j + N + b for j in range(N + b, 0, -1))
    row2 = tuple(second[j - 1] - j + N for j in range(N, 0, -1))
    return Symbol(b, N, row2, row1)


def kappa(bp: Bipartition, b: int, N: int | None = None) -> Kappa:
    """All 2N+b symbol entries of bp sorted decreasingly."""
    s = symbol(bp, b, N)
    return Kappa(tuple(sorted(s.row1 + s.row2, reverse=True)), s.b, s.N)


def f_stat(b: int, N: int, n: int) -> int:
    """Total size of any kappa vector at (b, N) for rank n."""
    return n + N * (N - 1) // 2 + (N + b) * (N + b - 1) // 2


def n_stat(k: Kappa | Sequence[int]) -> int:
    """Weighted sum of the entries, position i (1-based) weighted by i - 1."""
    entries = k.entries if isinstance(k, Kappa) else tuple(k)
    return sum(i * v for i, v in enumerate(entries))


def a_value(bp: Bipartition, b: int) -> int:
    """Value of the a-function on the representation labelled by bp.

    Computed at the minimal admissible N; the result does not depend on
    that choice (checked by the verification suites).
    """
    N = min_admissible(bp)
    return n_stat(kappa(bp, b, N)) - n_stat(kappa(EMPTY, b, N))


def is_sympartition(p: Sequence[int], b: int, N: int, n: int) -> bool:
    """True when p is the kappa vector of some bipartition of n at (b, N).

    Conditions, after padding p with zeros to exactly 2N+b entries:
    total f(b,N,n); no value repeated three times; at most N values repeated
    twice; every value 0..b-1 present.  The last condition is forced on
    kappa images because the bottom of the long row of any symbol with N
    admissible is the staircase b-1, ..., 1, 0.
    """
    if b < 0 or N < 0 or n < 0:
        raise ValueError("b, N, n must all be >= 0")
    parts = pt.as_partition(p)
    if len(parts) > 2 * N + b:
        return False
    if pt.size(parts) != f_stat(b, N, n):
        return False
    full = pt.padded(parts, 2 * N + b)
    doubles = 0
    run = 1
    for prev, cur in zip(full, full[1:] + (-1,)):
        if cur == prev:
            run += 1
            continue
        if run > 2:
            return False
        doubles += run == 2
        run = 1
    if doubles > N:
        return False
    values = set(full)
    return all(v in values for v in range(b))


def _row_splits(p: Sequence[int], b: int, N: int, n: int) -> Iterator[tuple[Parts, Parts]]:
    """All ways to write the sympartition p as row1 + row2 of a symbol.

    Every doubled value contributes one copy to each row; the staircase
    values 0..b-1 sit at the bottom of row1; the remaining singletons of
    value >= b are split between the top of row1 and row2, which is the
    only freedom.  Yields (row1, row2) with both rows strictly decreasing.
    """
    if not is_sympartition(p, b, N, n):
        raise NotSympartition(f"{tuple(p)} is not a ({b},{N},{n})-sympartition")
    full = pt.padded(pt.as_partition(p), 2 * N + b)
    counts: dict[int, int] = {}
    for v in full:
        counts[v] = counts.get(v, 0) + 1
    doubles = sorted((v for v, c in counts.items() if c == 2), reverse=True)
    singles = sorted((v for v, c in counts.items() if c == 1), reverse=True)
    low_singles = [v for v in singles if v < b]
    high_singles = [v for v in singles if v >= b]
    room = N - sum(1 for v in doubles if v >= b)
    assert 0 <= room <= len(high_singles)
    for chosen in combinations(high_singles, room):
        taken = set(chosen)
        row1 = tuple(sorted(doubles + low_singles + list(chosen), reverse=True))
        row2 = tuple(sorted(doubles + [v for v in high_singles if v not in taken], reverse=True))
        yield row1, row2


def _rows_to_bipartition(row1: Parts, row2: Parts, b: int, N: int) -> Bipartition:
    first = normalize(tuple(v + j - (N + b) for j, v in enumerate(row1, 1)))
    second = normalize(tuple(v + j - N for j, v in enumerate(row2, 1)))
    return Bipartition(first, second)


def from_sympartition(p: Sequence[int], b: int, N: int, n: int) -> Bipartition:
    """One bipartition of n whose kappa at (b, N) equals p.

    The canonical choice keeps the largest free singletons in row1, so the
    result is deterministic; the full fiber is family_members.
    """
    row1, row2 = next(_row_splits(p, b, N, n))
    return _rows_to_bipartition(row1, row2, b, N)


def family_members(p: Sequence[int], b: int, N: int, n: int) -> Set[Bipartition]:
    """The whole family: every bipartition of n with kappa equal to p."""
    return {_rows_to_bipartition(r1, r2, b, N) for r1, r2 in _row_splits(p, b, N, n)}
