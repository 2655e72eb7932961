import pytest

from bsymbols.adjacency import (
    adjacency_move,
    frame,
    is_adjacent,
    saturated_chain,
    verify_double_break,
)
from bsymbols.errors import (
    NotAdjacent,
    NotComparable,
    NotStrictlyDominated,
    PreconditionViolated,
)
from bsymbols.families import enumerate_bipartitions
from bsymbols.partitions import BoxMove, dominance_leq, up
from bsymbols.symbols import Bipartition, Kappa, kappa


def K(entries, b=1, N=3):
    return Kappa(tuple(entries), b, N)


def brute_adjacent(a, c, b):
    """Betweenness oracle: quantify over every bipartition of the rank."""
    n = a.rank
    ka = kappa(a, b, n).entries
    kc = kappa(c, b, n).entries
    assert ka != kc and dominance_leq(ka, kc)
    for nu in enumerate_bipartitions(n):
        e = kappa(nu, b, n).entries
        if e in (ka, kc):
            continue
        if dominance_leq(ka, e) and dominance_leq(e, kc):
            return False
    return True


def test_frame_examples():
    fr = frame(K((5, 3, 2, 1, 1, 0, 0)), K((6, 2, 2, 1, 1, 0, 0)))
    assert (fr.i, fr.j) == (1, 2)
    fr = frame(K((4, 3, 3, 1, 1, 0, 0)), K((4, 4, 2, 1, 1, 0, 0)))
    assert (fr.i, fr.j) == (2, 3)
    with pytest.raises(NotStrictlyDominated):
        frame(K((4, 4, 2, 1, 1, 0, 0)), K((4, 4, 2, 1, 1, 0, 0)))


def test_is_adjacent_examples():
    a = Bipartition.parse("1,1|1")
    c = Bipartition.parse("1|2")
    assert is_adjacent(a, c, 1)
    assert brute_adjacent(a, c, 1)

    lo = Bipartition.parse("-|1,1,1")
    hi = Bipartition.parse("3|-")
    assert not is_adjacent(lo, hi, 1)
    assert not brute_adjacent(lo, hi, 1)

    with pytest.raises(NotComparable):
        is_adjacent(a, a, 1)


def test_is_adjacent_agrees_with_brute_force():
    for n in range(6):
        for b in (0, 1, 2):
            bips = enumerate_bipartitions(n)
            for a in bips:
                for c in bips:
                    ka = kappa(a, b, n).entries
                    kc = kappa(c, b, n).entries
                    if ka == kc or not dominance_leq(ka, kc):
                        continue
                    assert is_adjacent(a, c, b) == brute_adjacent(a, c, b)


def test_adjacency_move_examples():
    move = adjacency_move(Bipartition.parse("1,1|1"), Bipartition.parse("1|2"), 1)
    assert move == BoxMove(2, 3)
    move = adjacency_move(Bipartition.parse("2,1|-"), Bipartition.parse("3|-"), 1)
    assert move == BoxMove(1, 2)
    with pytest.raises(NotAdjacent):
        adjacency_move(Bipartition.parse("-|1,1,1"), Bipartition.parse("3|-"), 1)


def test_adjacency_move_reproduces_kappa():
    for n in range(6):
        for b in (0, 1, 2, 3):
            bips = enumerate_bipartitions(n)
            for a in bips:
                for c in bips:
                    ka = kappa(a, b, n).entries
                    kc = kappa(c, b, n).entries
                    if ka == kc or not dominance_leq(ka, kc):
                        continue
                    if not is_adjacent(a, c, b):
                        continue
                    assert up(ka, adjacency_move(a, c, b)) == kc


def test_saturated_chain_through_figure_poset():
    lo = Bipartition.parse("-|1,1,1")
    hi = Bipartition.parse("3|-")
    chain = saturated_chain(lo, hi, 1)
    assert chain[0] == lo and chain[-1] == hi
    kappas = [kappa(bp, 1, 3).entries for bp in chain]
    # the six kappa values of rank 3 at b=1 are totally ordered, so the
    # saturated chain must walk through all of them
    assert kappas == [
        (3, 3, 2, 2, 1, 1, 0),
        (4, 3, 2, 2, 1, 0, 0),
        (4, 3, 3, 1, 1, 0, 0),
        (4, 4, 2, 1, 1, 0, 0),
        (5, 3, 2, 1, 1, 0, 0),
        (6, 2, 2, 1, 1, 0, 0),
    ]
    for x, y in zip(chain, chain[1:]):
        assert is_adjacent(x, y, 1)


def test_saturated_chain_trivial_and_family_hop():
    a = Bipartition.parse("2,1|-")
    assert saturated_chain(a, a, 1) == [a]
    other = Bipartition.parse("-|3")  # same kappa as a
    assert saturated_chain(a, other, 1) == [a, other]


def test_saturated_chain_incomparable():
    with pytest.raises(NotComparable):
        saturated_chain(Bipartition.parse("1|2"), Bipartition.parse("1,1|1"), 1)


def test_saturated_chain_deterministic_and_adjacent_everywhere():
    for n in range(6):
        for b in (0, 1, 2):
            bips = enumerate_bipartitions(n)
            for a in bips:
                for c in bips:
                    ka = kappa(a, b, n).entries
                    kc = kappa(c, b, n).entries
                    if not dominance_leq(ka, kc):
                        continue
                    chain = saturated_chain(a, c, b)
                    assert chain == saturated_chain(a, c, b)
                    assert chain[0] == a and chain[-1] == c
                    for x, y in zip(chain, chain[1:]):
                        kx = kappa(x, b, n).entries
                        ky = kappa(y, b, n).entries
                        assert kx == ky or is_adjacent(x, y, b)


def test_verify_double_break():
    lo = K((3, 3, 2, 2, 1, 1, 0))
    hi = K((4, 3, 2, 2, 1, 0, 0))
    fr = frame(lo, hi)
    assert (fr.i, fr.j) == (1, 6)
    assert verify_double_break(hi, fr)

    lo2 = K((4, 3, 3, 1, 1, 0, 0))
    hi2 = K((4, 4, 2, 1, 1, 0, 0))
    fr2 = frame(lo2, hi2)
    with pytest.raises(PreconditionViolated):
        verify_double_break(hi2, fr2)  # gap 2 inside the window

    with pytest.raises(ValueError):
        verify_double_break(hi, fr2)


def test_double_break_staircase_window():
    # all gaps equal to 1 on the window: every interior index is a break point
    lo = K((3, 3, 2, 2, 1, 1, 0))
    hi = K((4, 3, 2, 2, 1, 0, 0))
    fr = frame(lo, hi)
    from bsymbols.partitions import break_points

    assert break_points((5, 4, 3, 2, 1), 1, 4) == [1, 2, 3, 4]
    assert len(break_points(hi.entries, fr.i, fr.j - 1)) >= 2
