import itertools

import pytest
from hypothesis import given, settings

from monopos import families as fam
from monopos.errors import DisconnectedError, PreconditionError
from monopos.graph import Graph, clique_number
from monopos.positions import (
    enumerate_mp_profiles,
    gp_number,
    is_maximal_mp_set,
    is_mp_set,
    maximum_mp_sets,
    mp_decomposition,
    mp_independent,
    mp_lower,
    mp_number,
    mp_system,
    profile_representatives,
)
from oracles import all_induced_paths, brute_gp_number, brute_is_mp, brute_mp_number, brute_mp_sets, pareto, profile
from strategies import graphs


def test_pairs_always_mp():
    g = fam.gear(5)
    for s in itertools.combinations(range(g.n), 2):
        assert is_mp_set(g, s)
    assert is_mp_set(g, [3]) and is_mp_set(g, [])


def test_is_mp_set_examples():
    assert not is_mp_set(fam.cycle(5), [0, 1, 2])
    for n in range(1, 7):
        assert is_mp_set(fam.complete(n), range(n))


def test_maximal_examples():
    assert is_maximal_mp_set(fam.cycle(6), [0, 3])
    assert not is_maximal_mp_set(fam.complete(4), [0, 1])
    with pytest.raises(PreconditionError):
        is_maximal_mp_set(fam.path(3), [0, 1, 2])


def test_maximal_p4_brute_force():
    # candidates 1 and 2: 0-1-2-3 is induced, so neither can join {0, 3}
    g = fam.path(4)
    paths = all_induced_paths(g)
    expected = not any(brute_is_mp(paths, {0, 3, x}) for x in (1, 2))
    assert is_maximal_mp_set(g, [0, 3]) is expected is True


@pytest.mark.parametrize("n", range(1, 7))
def test_mp_complete(n):
    res = mp_number(fam.complete(n))
    assert res.value == n and res.witness.to_list() == list(range(n))


@pytest.mark.parametrize("g,value", [(fam.gear(4), 2), (fam.gear(6), 2), (fam.cycle(4), 2), (fam.cycle(3), 3)])
def test_mp_examples(g, value):
    assert mp_number(g).value == value


def test_small_cycles_by_exhaustion():
    assert brute_mp_number(fam.cycle(4)) == 2
    assert brute_mp_number(fam.cycle(3)) == 3


def test_mp_independent_examples():
    assert mp_independent(fam.star(4)).value == 4
    assert brute_mp_number(fam.star(4)) == 4
    assert mp_independent(fam.complete(5)).value == 1
    assert mp_independent(fam.cycle(4)).value == 2


def test_mp_lower_examples():
    for n in range(1, 6):
        assert mp_lower(fam.complete(n)).value == n
    assert mp_lower(fam.cycle(4)).value == 2


def test_mp_lower_p4_by_enumeration():
    g = fam.path(4)
    sets = brute_mp_sets(g)
    maximal = [s for s in sets if not any(s < t for t in sets)]
    assert mp_lower(g).value == min(len(s) for s in maximal) == 2


def test_gp_examples():
    assert gp_number(fam.gear(4)).value == 4
    assert gp_number(fam.complete(5)).value == 5
    assert gp_number(fam.cycle(5)).value == brute_gp_number(fam.cycle(5)) == 3


def test_solvers_require_connected():
    g = Graph.from_edges(3, [(0, 1)])
    for solver in (mp_number, mp_independent, mp_lower, gp_number):
        with pytest.raises(DisconnectedError):
            solver(g)


def test_decomposition_examples():
    prof = mp_decomposition(fam.complete(4), range(4))
    assert [c.to_list() for c in prof.clique_components] == [[0, 1, 2, 3]]
    assert (prof.n_M, prof.r_M) == (4, 0)
    prof = mp_decomposition(fam.cycle(6), [0, 3])
    assert (prof.n_M, prof.r_M) == (0, 2)
    star = fam.star(3)
    assert brute_is_mp(all_induced_paths(star), {1, 2, 3})
    assert mp_decomposition(star, [1, 2, 3]).r_M == 3
    with pytest.raises(PreconditionError):
        mp_decomposition(fam.path(3), [0, 1, 2])


def test_profiles_examples():
    assert enumerate_mp_profiles(fam.complete(3)) == {(3, 0), (0, 1)}
    assert enumerate_mp_profiles(fam.complete(5)) == {(5, 0), (0, 1)}
    p3 = enumerate_mp_profiles(fam.path(3))
    assert {(2, 0), (0, 2)} <= p3
    c5 = enumerate_mp_profiles(fam.cycle(5))
    assert {(2, 0), (0, 2)} <= c5 and all(r < 3 for _, r in c5)


def test_mp_matches_brute_force(small_connected):
    for g in small_connected:
        res = mp_number(g)
        assert res.value == brute_mp_number(g), g
        assert len(res.witness) == res.value and is_mp_set(g, res.witness)


def test_witness_is_lexicographically_smallest(small_connected):
    for g in small_connected:
        if g.n > 5:
            continue
        best = mp_number(g)
        sets = [tuple(sorted(s)) for s in brute_mp_sets(g) if len(s) == best.value]
        assert best.witness.to_list() == list(min(sets))


def test_family_tables_agree_with_brute_force(small_connected):
    for g in small_connected:
        if g.n > 5:
            continue
        sets = brute_mp_sets(g)
        maximal = [s for s in sets if not any(s < t for t in sets)]
        indep = [s for s in sets if g.is_independent(sum(1 << x for x in s))]
        assert mp_lower(g).value == min(len(s) for s in maximal)
        assert mp_independent(g).value == max(len(s) for s in indep)
        assert gp_number(g).value == brute_gp_number(g)
        frontier = pareto(profile(g, s) for s in sets)
        assert enumerate_mp_profiles(g) == frontier, g
        reps = profile_representatives(g)
        for (n_m, r_m), prof in reps.items():
            assert (prof.n_M, prof.r_M) == (n_m, r_m)
            assert is_mp_set(g, prof.members)
        system = mp_system(g)
        for s in itertools.combinations(range(g.n), 3):
            mask = sum(1 << x for x in s)
            assert system.is_position_set(mask) == (set(s) in sets)


def test_all_maximum_sets_listed(small_connected):
    for g in small_connected:
        if g.n > 5:
            continue
        value = mp_number(g).value
        expected = sorted(tuple(sorted(s)) for s in brute_mp_sets(g) if len(s) == value)
        assert [tuple(s) for s in maximum_mp_sets(g)] == expected


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_position_invariants(g):
    res = mp_number(g)
    w = res.witness.to_list()
    for k in range(len(w) + 1):
        for sub in itertools.combinations(w, k):
            assert is_mp_set(g, sub)
    assert clique_number(g) <= res.value <= g.n
    assert (res.value == g.n) == g.is_complete()
    assert res.value <= gp_number(g).value
    low = mp_lower(g)
    assert low.value <= res.value
    assert is_maximal_mp_set(g, low.witness)
    assert is_maximal_mp_set(g, res.witness)
    mp_decomposition(g, res.witness)
    assert mp_independent(g).value <= res.value


@pytest.mark.parametrize("n", range(1, 6))
def test_lower_mp_of_complete_graph_is_whole_vertex_set(n):
    # V is the only maximal mp-set of K_n
    res = mp_lower(fam.complete(n))
    assert res.value == n and res.witness.to_list() == list(range(n))
