import itertools

import pytest
from hypothesis import given, settings

from monopos import families as fam
from monopos.budget import Budget
from monopos.errors import BudgetExceeded, DisconnectedError, DomainError
from monopos.graph import Graph
from monopos.paths import (
    find_bad_path,
    find_induced_path_through,
    interval_table,
    is_induced_path,
    iter_induced_paths,
    monophonic_interval,
)
from oracles import all_induced_paths, brute_interval, brute_is_mp
from strategies import graphs


@pytest.mark.parametrize("g,seq,expected", [
    (fam.path(4), [0, 1, 2, 3], True),
    (fam.cycle(3), [0, 1, 2], False),
    (fam.cycle(5), [0, 1, 2, 3], True),
    (fam.cycle(5), [0, 1, 2, 3, 4], False),
    (fam.path(4), [0, 2], False),
    (fam.path(4), [1, 1], False),
    (fam.path(4), [2], True),
])
def test_is_induced_path(g, seq, expected):
    assert is_induced_path(g, seq) is expected


def test_is_induced_path_range():
    with pytest.raises(DomainError):
        is_induced_path(fam.path(3), [0, 3])


def test_through_examples():
    assert find_induced_path_through(fam.path(5), 0, 4, [2]) == [0, 1, 2, 3, 4]
    assert find_induced_path_through(fam.cycle(4), 0, 2, [1]) == [0, 1, 2]
    assert find_induced_path_through(fam.complete(4), 0, 1, [2]) is None


def test_through_endpoints_not_interior():
    assert find_induced_path_through(fam.path(3), 0, 2, [0, 2]) is None
    with pytest.raises(DomainError):
        find_induced_path_through(fam.path(3), 1, 1, [0])


def test_interval_examples():
    assert monophonic_interval(fam.path(4), 0, 3).to_list() == [0, 1, 2, 3]
    assert monophonic_interval(fam.cycle(5), 0, 2).to_list() == [0, 1, 2, 3, 4]
    assert monophonic_interval(fam.complete(4), 0, 1).to_list() == [0, 1]


def test_interval_c5_by_enumeration():
    # both arcs 0-1-2 and 0-4-3-2 are induced in C5
    assert brute_interval(fam.cycle(5), 0, 2) == {0, 1, 2, 3, 4}


def test_interval_disconnected():
    with pytest.raises(DisconnectedError):
        monophonic_interval(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 3)


def test_bad_path_examples():
    assert find_bad_path(fam.path(5), [0, 2, 4]) == [0, 1, 2, 3, 4]
    assert find_bad_path(fam.complete(4), range(4)) is None
    path = find_bad_path(fam.cycle(5), [0, 1, 2])
    assert path is not None and is_induced_path(fam.cycle(5), path)
    assert len(set(path) & {0, 1, 2}) >= 3


def test_budget_is_enforced():
    g = fam.cycle(12)
    with pytest.raises(BudgetExceeded):
        find_bad_path(g, [0, 3, 6, 9], Budget(2))
    with pytest.raises(BudgetExceeded):
        interval_table(g, 5)
    assert find_bad_path(g, [0, 3, 6, 9], Budget(10_000)) is not None


def test_interval_matches_brute_force(small_connected):
    for g in small_connected:
        table = interval_table(g)
        for u, v in itertools.combinations(range(g.n), 2):
            expected = brute_interval(g, u, v)
            assert set(monophonic_interval(g, u, v)) == expected, (g, u, v)
            assert set(monophonic_interval(g, v, u)) == expected
            assert table[u][v] == table[v][u] == sum(1 << w for w in expected)


def test_bad_path_agrees_with_interval_reduction(small_connected):
    for g in small_connected:
        if g.n > 5:
            continue
        table = interval_table(g)
        paths = all_induced_paths(g)
        for k in range(3, g.n + 1):
            for s in itertools.combinations(range(g.n), k):
                mask = sum(1 << x for x in s)
                reduced = all(not (table[a][b] & mask & ~(1 << a) & ~(1 << b))
                              for a, b in itertools.combinations(s, 2))
                found = find_bad_path(g, s)
                assert (found is None) == reduced == brute_is_mp(paths, s)
                if found is not None:
                    assert is_induced_path(g, found) and len(set(found) & set(s)) >= 3


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8, connected=True))
def test_returned_paths_are_induced(g):
    for a, b in itertools.combinations(range(g.n), 2):
        for w in range(g.n):
            path = find_induced_path_through(g, a, b, [w])
            if path is not None:
                assert is_induced_path(g, path) and path[0] == a and path[-1] == b
                assert w in path[1:-1]


def test_iter_induced_paths_counts():
    g = fam.cycle(5)
    paths = list(iter_induced_paths(g, 0))
    # from one vertex of C5: the trivial path plus 1..3 steps in each direction
    assert len(paths) == 7
    assert all(is_induced_path(g, p) for p in paths)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, connected=True))
def test_adjacent_pair_interval_contains_edge(g):
    for u, v in g.edges():
        j = monophonic_interval(g, u, v)
        assert u in j and v in j
