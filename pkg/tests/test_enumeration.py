import json
from itertools import combinations, permutations, product

import pytest

from coxbij.enumeration import (
    DEFAULT_MAX_RANK,
    ENV_MAX_RANK,
    catalan_count,
    check_bounds,
    enumerate_antichains,
    enumerate_nc,
    max_rank,
    verify_bijection,
)
from coxbij.errors import RankBoundError
from coxbij.partitions import SignedPermutation
from coxbij.roots import comparable, positive_roots

from conftest import A, B, span


def catalan_by_recurrence(n):
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def central_binomial_by_pascal(n):
    row = [1]
    for _ in range(2 * n):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return row[n]


def brute_force_antichains(system):
    roots = positive_roots(system)
    found = set()
    for size in range(len(roots) + 1):
        for subset in combinations(roots, size):
            if not any(comparable(a, b) for a, b in combinations(subset, 2)):
                found.add(frozenset(subset))
    return found


def brute_force_nc(family, n):
    """Canonical noncrossing elements found by scanning the whole group."""
    if family == "A":
        circle = list(range(1, n + 1))
        group = [tuple(p) for p in permutations(range(1, n + 1))]
    else:
        circle = list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
        group = [
            tuple(s * x for s, x in zip(signs, perm))
            for perm in permutations(range(1, n + 1))
            for signs in product((1, -1), repeat=n)
        ]
    where = {x: i for i, x in enumerate(circle)}
    out = set()
    for images in group:
        def image(x):
            return images[x - 1] if x > 0 else -images[-x - 1]

        cycles, seen = [], set()
        for x in circle:
            if x in seen:
                continue
            cyc = [x]
            seen.add(x)
            while image(cyc[-1]) != x:
                cyc.append(image(cyc[-1]))
                seen.add(cyc[-1])
            cycles.append(cyc)
        ok = True
        for cyc in cycles:
            # starting from its first circle point the cycle must climb the circle
            pos = [where[x] for x in cyc]
            if pos != sorted(pos):
                ok = False
        blocks = [sorted(where[x] for x in cyc) for cyc in cycles]
        for x in blocks:
            for y in blocks:
                if x is not y and any(a < b < c < d for a in x for c in x for b in y for d in y):
                    ok = False
        if ok:
            out.add(SignedPermutation(family, n, images))
    return out


def test_catalan_examples():
    assert catalan_count(A(4)) == 42
    assert catalan_count(B(4)) == 70
    assert catalan_count(A(1)) == 2


def test_catalan_matches_recurrences():
    for k in range(1, 15):
        assert catalan_count(A(k)) == catalan_by_recurrence(k + 1)
        assert catalan_count(B(k)) == central_binomial_by_pascal(k)


def test_antichains_a2():
    S = A(2)
    got = enumerate_antichains(S)
    assert len(got) == 5
    assert set(got) == {
        (),
        (span(S, 1, 1),),
        (span(S, 2, 2),),
        (span(S, 1, 2),),
        (span(S, 1, 1), span(S, 2, 2)),
    }
    assert got[0] == ()


def test_antichains_small():
    assert len(enumerate_antichains(B(2))) == 6
    assert enumerate_antichains(A(1)) == [(), (span(A(1), 1, 1),)]


@pytest.mark.parametrize("system", [A(k) for k in range(1, 5)] + [B(k) for k in range(1, 4)], ids=str)
def test_antichains_match_power_set_filter(system):
    got = enumerate_antichains(system)
    assert len(got) == len(set(got))
    assert {frozenset(a) for a in got} == brute_force_antichains(system)


def test_nc_a2():
    got = enumerate_nc(A(2))
    expected = {
        SignedPermutation.identity("A", 3),
        SignedPermutation.from_cycles("A", 3, [(1, 2)]),
        SignedPermutation.from_cycles("A", 3, [(2, 3)]),
        SignedPermutation.from_cycles("A", 3, [(1, 3)]),
        SignedPermutation.from_cycles("A", 3, [(1, 2, 3)]),
    }
    assert len(got) == 5 and set(got) == expected


def test_nc_small():
    assert len(enumerate_nc(B(2))) == 6
    assert set(enumerate_nc(A(1))) == {SignedPermutation.identity("A", 2), SignedPermutation.from_cycles("A", 2, [(1, 2)])}


@pytest.mark.parametrize("family,n", [("A", n) for n in range(2, 8)] + [("B", n) for n in range(1, 6)])
def test_nc_matches_group_scan(family, n):
    system = A(n - 1) if family == "A" else B(n)
    got = enumerate_nc(system)
    assert len(got) == len(set(got))
    assert set(got) == brute_force_nc(family, n)


def test_counts_at_default_bounds():
    for family in "AB":
        for k in range(1, DEFAULT_MAX_RANK[family] + 1):
            system = A(k) if family == "A" else B(k)
            assert len(enumerate_antichains(system)) == catalan_count(system)
            assert len(enumerate_nc(system)) == catalan_count(system)


def test_enumeration_is_deterministic():
    for system in (A(5), B(4)):
        first = json.dumps([[r.to_json() for r in a] for a in enumerate_antichains(system)])
        second = json.dumps([[r.to_json() for r in a] for a in enumerate_antichains(system)])
        assert first == second
        assert [p.to_json() for p in enumerate_nc(system)] == [p.to_json() for p in enumerate_nc(system)]


def test_rank_bounds(monkeypatch):
    monkeypatch.delenv(ENV_MAX_RANK, raising=False)
    with pytest.raises(RankBoundError, match=ENV_MAX_RANK):
        enumerate_antichains(B(7))
    with pytest.raises(RankBoundError):
        enumerate_nc(A(10))
    monkeypatch.setenv(ENV_MAX_RANK, "7")
    assert max_rank("B") == 7
    check_bounds(B(7))
    monkeypatch.setenv(ENV_MAX_RANK, "3")
    with pytest.raises(RankBoundError):
        check_bounds(A(4))


def test_verify_examples():
    r = verify_bijection(A(4))
    assert r.bijective and r.nn_count == r.nc_count == r.expected_count == 42
    assert r.lmap_agrees is True
    r = verify_bijection(B(3))
    assert r.bijective and r.nn_count == r.nc_count == 20
    assert r.lmap_agrees is None
    r = verify_bijection(A(1))
    assert r.ok and r.nn_count == 2


def test_report_json_field_order():
    keys = list(verify_bijection(B(2)).to_json())
    assert keys == [
        "system",
        "nn_count",
        "nc_count",
        "expected_count",
        "bijective",
        "triples_preserved",
        "lmap_agrees",
        "structural_ok",
        "case_a_steps",
        "case_b_steps",
        "roundtrip_failures",
        "triple_failures",
        "lmap_failures",
        "structural_failures",
    ]
