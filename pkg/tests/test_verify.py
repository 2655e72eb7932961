from bsymbols.partitions import padded, partitions_of
from bsymbols.symbols import f_stat, is_sympartition
from bsymbols.verify import run_suites, sympartitions_by_definition


def test_generator_matches_predicate_brute_force():
    # the recursive generator must produce exactly the padded partitions
    # accepted by is_sympartition, here cross-checked by filtering every
    # partition of the target total
    for b in range(4):
        for N in range(4):
            for n in range(5):
                total = f_stat(b, N, n)
                if total > 12:
                    continue
                expected = set()
                for p in partitions_of(total):
                    if len(p) <= 2 * N + b and is_sympartition(p, b, N, n):
                        expected.add(padded(p, 2 * N + b))
                got = set(sympartitions_by_definition(b, N, n))
                assert got == expected, (b, N, n)


def test_generator_yields_padded_sorted_vectors():
    for vec in sympartitions_by_definition(2, 2, 4):
        assert len(vec) == 6
        assert all(x >= y for x, y in zip(vec, vec[1:]))
        assert is_sympartition(vec, 2, 2, 4)


def test_run_suites_all_pass_small():
    results = run_suites(3, (0, 1, 2), oracle=True)
    assert len(results) == 18
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
    names = [r.name for r in results]
    assert names == sorted(names, key=names.index)  # stable, deterministic order
    assert names[-1] == "preceq-matches-oracle"
