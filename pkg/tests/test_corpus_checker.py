import dataclasses
import json

import networkx as nx
import pytest

from monopos import families as fam
from monopos.checker import CHECKS, parse_check_ids, run_checks
from monopos.corpus import CorpusSpec, canonical_code, canonical_form, generate_connected_graphs, load_corpus
from monopos.errors import DomainError
from monopos.io import from_graph6, to_graph6
from oracles import to_nx

ATLAS = nx.graph_atlas_g()


def atlas_connected(n):
    return [g for g in ATLAS if g.number_of_nodes() == n and nx.is_connected(g)]


def test_tiny_counts():
    assert [g.n for g in generate_connected_graphs(1)] == [1]
    three = list(generate_connected_graphs(3))
    assert sorted(g.size for g in three) == [2, 3]
    assert len(list(generate_connected_graphs(4))) == 6


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_atlas(n):
    ours = list(generate_connected_graphs(n))
    reference = atlas_connected(n)
    assert len(ours) == len(reference)
    # one representative per class, covering every class of the atlas
    ours_nx = [to_nx(g) for g in ours]
    for g in reference:
        assert sum(nx.is_isomorphic(g, h) for h in ours_nx if h.number_of_edges() == g.number_of_edges()) == 1


@pytest.mark.parametrize("n,count", [(3, 4), (4, 38), (5, 728)])
def test_labelled_counts(n, count):
    graphs = list(generate_connected_graphs(n, dedup=False))
    assert len(graphs) == count
    assert len({g.adj for g in graphs}) == count
    assert all(g.is_connected() for g in graphs)


def test_internal_ceiling():
    with pytest.raises(DomainError, match="graph6"):
        list(generate_connected_graphs(8))


def test_canonical_form_is_invariant():
    for g in generate_connected_graphs(5, dedup=False):
        c = canonical_form(g)
        assert nx.is_isomorphic(to_nx(c), to_nx(g))
        perm = list(range(g.n))[::-1]
        relabelled = fam.Graph.from_edges(g.n, [(perm[a], perm[b]) for a, b in g.edges()])
        assert canonical_code(relabelled)[0] == canonical_code(g)[0]


def test_corpus_spec_validation():
    with pytest.raises(DomainError):
        CorpusSpec(max_order=500)
    with pytest.raises(DomainError):
        CorpusSpec(connected_only=False)


def test_graph6_file_corpus(tmp_path):
    lines = [to_graph6(fam.path(4)), to_graph6(fam.star(3)), to_graph6(fam.path(4)),
             to_graph6(fam.Graph.from_edges(4, [(0, 1), (2, 3)])), to_graph6(fam.cycle(7))]
    f = tmp_path / "small.g6"
    f.write_text("\n".join(lines) + "\n")
    got = load_corpus(CorpusSpec(str(f), max_order=5))
    assert [to_graph6(g) for g in got] == lines[:2]
    got = load_corpus(CorpusSpec(str(f), max_order=5, dedup=False))
    assert len(got) == 3
    got = load_corpus(CorpusSpec(str(f), max_order=7, connected_only=False, dedup=False))
    assert len(got) == 5


def test_parse_check_ids():
    assert parse_check_ids(None) == list(CHECKS)
    assert parse_check_ids("C5, c1,C5") == ["C1", "C5"]
    with pytest.raises(KeyError):
        parse_check_ids("C99")


def test_c5_pairs_up_to_four():
    (rep,) = run_checks(pair_corpus=CorpusSpec(max_order=4), checks="C5")
    assert rep.passed and not rep.failures and rep.skipped == 0
    # 10 connected graphs of order <= 4, unordered pairs with repetition
    assert rep.tested == 10 * 11 // 2


def test_c14_lex_pairs():
    (rep,) = run_checks(lex_corpus=(CorpusSpec(min_order=1, max_order=4), CorpusSpec(max_order=3)),
                        checks="C14")
    assert rep.passed and not rep.failures and rep.skipped == 0


def test_c17_found_on_p2_p3():
    (rep,) = run_checks(checks="C17", instance=[fam.path(2), fam.path(3)])
    assert rep.found >= 1 and rep.passed
    ex = rep.examples[0]
    assert ex["graphs"] == [to_graph6(fam.path(2)), to_graph6(fam.path(3))]


def test_c17_absent_is_a_failure():
    (rep,) = run_checks(checks="C17", instance=[fam.path(2), fam.path(2)])
    assert rep.found == 0 and not rep.passed


def test_hypothesis_filtering_counts_not_applicable():
    (rep,) = run_checks(pair_corpus=CorpusSpec(max_order=3), checks="C13")
    assert rep.not_applicable > 0 and rep.tested > 0


def test_budget_exhaustion_is_skipped():
    (rep,) = run_checks(pair_corpus=CorpusSpec(min_order=3, max_order=3), checks="C5", budget=5)
    assert rep.skipped > 0 and rep.tested == 0


def test_report_json_schema():
    reports = run_checks(corpus=CorpusSpec(max_order=3), checks="C1,C17",
                         instance=None, lex_corpus=([fam.path(2)], [fam.path(3)]))
    data = json.loads(json.dumps([r.to_dict() for r in reports]))
    for d in data:
        assert {"check_id", "tested", "not_applicable", "skipped", "failures", "passed"} <= set(d)
    assert "found" in data[1] and "found" not in data[0]


def test_failures_replay(monkeypatch):
    # force a failure by corrupting the check predicate, then replay its bundle
    from monopos import checker

    broken = dataclasses.replace(checker.CHECKS["C5"], run=lambda case: [case.fail(None, "x", "y")])
    monkeypatch.setitem(checker.CHECKS, "C5", broken)
    (rep,) = run_checks(pair_corpus=CorpusSpec(min_order=2, max_order=2), checks="C5")
    assert len(rep.failures) == 1 and not rep.passed
    bundle = rep.to_dict()["failures"][0]["graphs"]
    replay = [from_graph6(s) for s in bundle]
    (again,) = run_checks(checks="C5", instance=replay)
    assert len(again.failures) == 1


def test_c11_excludes_trivial_factor():
    from monopos.graph import invariants
    from monopos.positions import mp_independent, mp_number

    # the bound genuinely fails when one factor is K1, so such pairs are out of scope
    h = from_graph6("D@{")
    inv = invariants(h)
    literal_bound = max(1, inv.omega, 1 * mp_independent(h).value, inv.sigma * 1)
    assert mp_number(h).value == 4 > literal_bound == 3
    (rep,) = run_checks(checks="C11", instance=[fam.complete(1), h])
    assert rep.not_applicable == 1 and rep.tested == 0 and rep.passed


@pytest.mark.slow
def test_extended_sweep():
    reports = run_checks(corpus=CorpusSpec(max_order=7), pair_corpus=CorpusSpec(max_order=5),
                         lex_corpus=(CorpusSpec(min_order=2, max_order=4), CorpusSpec(min_order=2, max_order=4)))
    for rep in reports:
        assert not rep.failures and rep.skipped == 0 and rep.passed, rep.to_dict()
