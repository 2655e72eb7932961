"""The induction preorder on bipartitions and its dominance description.

The preorder is generated by elementary steps: for a decomposition
n = k + l and bipartitions nu, nu' of k already related at rank k, every
bipartition whose kappa arises from kappa(nu) by incrementing l entries is
placed below every bipartition whose kappa arises from kappa(nu') by
incrementing its l largest entries; a second kind of step does the same
through transposition.  Members of one family are mutually related.

preceq decides the relation through dominance of kappa vectors, which is
what the order amounts to; preceq_oracle builds the relation from the
elementary steps alone, bottom-up in rank, so the two can be compared on
every pair as an end-to-end check.  witness_step turns one adjacent
dominance step into the elementary step certifying it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Set

from ._util import iter_bits
from .adjacency import _single_move, adjacency_move
from .errors import NotAPartition, NotSympartition, RankMismatch, WitnessInvalid
from .families import enumerate_bipartitions
from .partitions import Parts, dominance_leq
from .symbols import Bipartition, from_sympartition, is_sympartition, kappa


class InductionWitness(NamedTuple):
    nu: Bipartition
    l: int
    transposed: bool  # certificate goes through the transposed bipartitions


@lru_cache(maxsize=None)
def _kappas_at(n: int, b: int) -> tuple[Parts, ...]:
    """kappa entries of every bipartition of n at N = n, in canonical order."""
    return tuple(kappa(bp, b, n).entries for bp in enumerate_bipartitions(n))


def _is_increment(base: Parts, target: Parts, l: int) -> bool:
    """Whether target arises from base by adding 1 to l of its entries."""
    total = 0
    for x, y in zip(base, target):
        d = y - x
        if d < 0 or d > 1:
            return False
        total += d
    return total == l


def _truncated(base: Parts, l: int) -> Parts:
    """base with its l largest entries incremented; still sorted."""
    return tuple(v + 1 if t < l else v for t, v in enumerate(base))


def induction_targets(nu: Bipartition, l: int, b: int) -> Set[Bipartition]:
    """Bipartitions of rank(nu)+l whose kappa adds 1 to l entries of kappa(nu)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if b < 0:
        raise ValueError("weight b must be >= 0")
    n = nu.rank + l
    base = kappa(nu, b, n).entries
    bips = enumerate_bipartitions(n)
    kaps = _kappas_at(n, b)
    return {bp for bp, e in zip(bips, kaps) if _is_increment(base, e, l)}


def truncated_targets(nu: Bipartition, l: int, b: int) -> Set[Bipartition]:
    """The family obtained by incrementing the l largest entries of kappa(nu)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if b < 0:
        raise ValueError("weight b must be >= 0")
    n = nu.rank + l
    target = _truncated(kappa(nu, b, n).entries, l)
    bips = enumerate_bipartitions(n)
    kaps = _kappas_at(n, b)
    return {bp for bp, e in zip(bips, kaps) if e == target}


def witness_is_valid(w: InductionWitness, a: Bipartition, c: Bipartition, b: int) -> bool:
    """Check the two increment conditions an induction witness must satisfy."""
    n = a.rank
    if c.rank != n or w.l < 1 or w.nu.rank != n - w.l:
        return False
    base = kappa(w.nu, b, n).entries
    x, y = (a, c) if not w.transposed else (c.transpose(), a.transpose())
    return _is_increment(base, kappa(x, b, n).entries, w.l) and kappa(
        y, b, n
    ).entries == _truncated(base, w.l)


def witness_step(a: Bipartition, c: Bipartition, b: int) -> InductionWitness:
    """The elementary step certifying one adjacent dominance step a -> c.

    When the entry of kappa(a) just above the lowered box is distinct from
    the lowered one, the certificate removes one box from each of the
    k2 - 1 largest entries of kappa(c); otherwise it is built on the
    transposed pair, removing a box from each entry above the raised one.
    """
    move = adjacency_move(a, c, b)
    n = a.rank
    lo = kappa(a, b, n).entries
    hi = kappa(c, b, n).entries
    try:
        if lo[move.k2 - 2] != lo[move.k2 - 1]:
            l = move.k2 - 1
            core = tuple(v - 1 if t < l else v for t, v in enumerate(hi))
            w = InductionWitness(from_sympartition(core, b, n, n - l), l, False)
        else:
            t_lo = kappa(c.transpose(), b, n).entries
            t_hi = kappa(a.transpose(), b, n).entries
            l = _single_move(t_lo, t_hi).k1
            core = tuple(v - 1 if t < l else v for t, v in enumerate(t_hi))
            w = InductionWitness(from_sympartition(core, b, n, n - l), l, True)
    except (NotAPartition, NotSympartition, ValueError) as exc:
        raise WitnessInvalid(f"no witness for {a.text()} -> {c.text()}: {exc}") from exc
    if not witness_is_valid(w, a, c, b):
        raise WitnessInvalid(f"constructed witness fails its invariants: {w}")
    return w


def preceq(a: Bipartition, c: Bipartition, b: int) -> bool:
    """Decide the preorder through dominance of the kappa vectors."""
    n = a.rank
    if c.rank != n:
        raise RankMismatch(f"ranks differ: {a.text()} has {n}, {c.text()} has {c.rank}")
    return dominance_leq(kappa(a, b, n).entries, kappa(c, b, n).entries)


class PreceqOracle:
    """The relation generated by the elementary steps at one rank."""

    def __init__(self, n: int, b: int, bipartitions: tuple[Bipartition, ...], rows: tuple[int, ...]):
        self.n = n
        self.b = b
        self.bipartitions = bipartitions
        self._index = {bp: i for i, bp in enumerate(bipartitions)}
        self._rows = rows

    def holds(self, a: Bipartition, c: Bipartition) -> bool:
        return bool(self._rows[self._index[a]] >> self._index[c] & 1)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        m = len(self.bipartitions)
        return tuple(tuple(row >> j & 1 for j in range(m)) for row in self._rows)

    def render(self) -> str:
        """Square 0/1 matrix with a header row of bipartition labels."""
        header = "\t".join(bp.text() for bp in self.bipartitions)
        lines = [header]
        for bp, row in zip(self.bipartitions, self.matrix()):
            lines.append(bp.text() + "\t" + "\t".join(str(v) for v in row))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _oracle_rows(n: int, b: int) -> tuple[int, ...]:
    bips = enumerate_bipartitions(n)
    kaps = _kappas_at(n, b)
    m = len(bips)
    index = {bp: i for i, bp in enumerate(bips)}
    tr = [index[bp.transpose()] for bp in bips]

    def transported(mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << tr[i]
        return out

    rows = [0] * m
    groups: dict[Parts, int] = {}
    for i, e in enumerate(kaps):
        groups[e] = groups.get(e, 0) | 1 << i
    for i, e in enumerate(kaps):
        rows[i] |= groups[e]  # reflexivity and family equivalence

    for k in range(n):
        l = n - k
        sub_bips = enumerate_bipartitions(k)
        sub_rows = _oracle_rows(k, b)
        ind_masks = []
        trunc_masks = []
        for nu in sub_bips:
            base = kappa(nu, b, n).entries
            target = _truncated(base, l)
            imask = tmask = 0
            for j, e in enumerate(kaps):
                if _is_increment(base, e, l):
                    imask |= 1 << j
                if e == target:
                    tmask |= 1 << j
            ind_masks.append(imask)
            trunc_masks.append(tmask)
        for i_nu in range(len(sub_bips)):
            union_trunc = 0
            for j_nu in iter_bits(sub_rows[i_nu]):
                union_trunc |= trunc_masks[j_nu]
            for x in iter_bits(ind_masks[i_nu]):
                rows[x] |= union_trunc
            t_ind = transported(ind_masks[i_nu])
            for x in iter_bits(transported(union_trunc)):
                rows[x] |= t_ind

    changed = True
    while changed:
        changed = False
        for i in range(m):
            new = rows[i]
            for j in iter_bits(new):
                new |= rows[j]
            if new != rows[i]:
                rows[i] = new
                changed = True
    return tuple(rows)


def preceq_oracle(n: int, b: int) -> PreceqOracle:
    """Build the relation from the elementary steps alone, bottom-up in rank."""
    if n < 0 or b < 0:
        raise ValueError("n and b must be >= 0")
    return PreceqOracle(n, b, enumerate_bipartitions(n), _oracle_rows(n, b))
