"""Exhaustive property checks of the structural results on small graphs.

Each check is a named predicate over one instance: a single graph, an
unordered pair (Cartesian checks) or an ordered pair (lexicographic checks).
Instances outside a check's hypothesis count as not applicable, budget
exhaustion counts as skipped, and neither is ever reported as a pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .bits import iter_bits, popcount
from .budget import Budget
from .corpus import CorpusSpec, load_corpus
from .errors import BudgetExceeded, InternalConsistencyError
from .graph import Graph, bfs_distances, invariants
from .io import to_graph6
from .lex import lex_mp
from .paths import find_bad_path
from .positions import (
    check_component_structure,
    iter_position_sets,
    mp_independent,
    mp_lower,
    mp_number,
    mp_system,
)
from .products import (
    Shape,
    cartesian_product,
    classify_mp_set,
    lex_distance,
    lexicographic_product,
    shape_predicates,
)

DEFAULT_INSTANCE_BUDGET = 20_000_000

SINGLE, CARTESIAN, LEX = "single", "cartesian", "lexicographic"


@dataclass
class Failure:
    graphs: list[str]
    witness: object
    expected: object
    actual: object

    def to_dict(self) -> dict:
        return {"graphs": self.graphs, "witness": self.witness, "expected": self.expected, "actual": self.actual}


@dataclass
class CheckReport:
    check_id: str
    title: str
    tested: int = 0
    not_applicable: int = 0
    skipped: int = 0
    found: int = 0
    needs_instance: bool = False
    failures: list[Failure] = field(default_factory=list)
    examples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.failures:
            return False
        return self.found > 0 if self.needs_instance else True

    def to_dict(self) -> dict:
        out = {
            "check_id": self.check_id,
            "title": self.title,
            "tested": self.tested,
            "not_applicable": self.not_applicable,
            "skipped": self.skipped,
            "failures": [f.to_dict() for f in self.failures],
            "passed": self.passed,
        }
        if self.needs_instance:
            out["found"] = self.found
            out["examples"] = self.examples
        return out


class NotApplicable(Exception):
    """The instance does not meet the hypothesis of a check."""


# ---------------------------------------------------------------- instances


class Case:
    def __init__(self, graphs: Sequence[Graph], budget: int | None):
        self.graphs = list(graphs)
        self.budget = Budget(budget)

    @property
    def labels(self) -> list[str]:
        return [to_graph6(g) for g in self.graphs]

    def fail(self, witness, expected, actual) -> Failure:
        return Failure(self.labels, witness, expected, actual)


class SingleCase(Case):
    @cached_property
    def g(self) -> Graph:
        return self.graphs[0]

    @cached_property
    def mp_sets(self) -> list[int]:
        return list(iter_position_sets(mp_system(self.g, self.budget), self.budget))


class PairCase(Case):
    def __init__(self, g: Graph, h: Graph, kind: str, budget: int | None):
        super().__init__([g, h], budget)
        self.kind = kind

    @cached_property
    def g(self) -> Graph:
        return self.graphs[0]

    @cached_property
    def h(self) -> Graph:
        return self.graphs[1]

    @cached_property
    def product(self):
        if self.kind == CARTESIAN:
            return cartesian_product(self.g, self.h)
        return lexicographic_product(self.g, self.h)

    @cached_property
    def inv_g(self):
        return invariants(self.g)

    @cached_property
    def inv_h(self):
        return invariants(self.h)

    @cached_property
    def mp_product(self) -> int:
        return mp_number(self.product.graph, self.budget).value

    @cached_property
    def mp_sets(self) -> list[int]:
        system = mp_system(self.product.graph, self.budget)
        return list(iter_position_sets(system, self.budget))

    @cached_property
    def maximum_sets(self) -> list[int]:
        return [s for s in self.mp_sets if popcount(s) == self.mp_product]

    def mp_factor(self, which: str) -> int:
        return mp_number(self.g if which == "G" else self.h, self.budget).value

    def mp_i_factor(self, which: str) -> int:
        return mp_independent(self.g if which == "G" else self.h, self.budget).value

    def pairs(self, s: int) -> list[list[int]]:
        return [list(p) for p in self.product.pairs(s)]

    def projections(self, s: int) -> tuple[int, int]:
        hn = self.h.n
        pg = ph = 0
        for i in iter_bits(s):
            a, b = divmod(i, hn)
            pg |= 1 << a
            ph |= 1 << b
        return pg, ph


# ---------------------------------------------------------------- checks


@dataclass(frozen=True)
class Check:
    check_id: str
    title: str
    scope: str
    run: Callable[[Case], list[Failure] | int]
    needs_instance: bool = False


def _c1(case: SingleCase) -> list[Failure]:
    out = []
    for s in case.mp_sets:
        try:
            check_component_structure(case.g, s)
        except InternalConsistencyError as exc:
            out.append(case.fail(list(iter_bits(s)), "union of cliques with common outside neighbours", str(exc)))
    return out


def _c2(case: PairCase) -> list[Failure]:
    """Projections of mp-sets of G□H are mp-sets of the factors (all mp-sets, both sides)."""
    out = []
    for s in case.mp_sets:
        if popcount(s) < 3:
            continue
        pg, ph = case.projections(s)
        for factor, graph, proj in (("G", case.g, pg), ("H", case.h, ph)):
            bad = find_bad_path(graph, proj, case.budget)
            if bad is not None:
                out.append(case.fail(case.pairs(s), f"projection on {factor} in mp position", bad))
    return out


def _c3(case: PairCase) -> list[Failure]:
    g, h, p = case.g, case.h, case.product
    if g.n < 2 or h.n < 2:
        raise NotApplicable
    out = []
    for u, v in itertools.product(range(g.n), range(h.n)):
        for u2 in range(g.n):
            for v2 in range(h.n):
                if u2 == u or v2 == v:
                    continue
                triple = [p.index(u, v), p.index(u2, v), p.index(u, v2)]
                if find_bad_path(p.graph, triple, case.budget) is None:
                    out.append(case.fail([[u, v], [u2, v], [u, v2]], "not in mp position", "mp-set"))
    return out


def _c4(case: PairCase) -> list[Failure]:
    out = []
    for s in case.mp_sets:
        if popcount(s) < 2:
            continue
        try:
            classify_mp_set(case.product, s, verify=False)
        except InternalConsistencyError as exc:
            out.append(case.fail(case.pairs(s), "layered, varied or cliquey", str(exc)))
    return out


def _c5(case: PairCase) -> list[Failure]:
    lower = max(case.inv_g.omega, case.inv_h.omega)
    upper = max(case.mp_factor("G"), case.mp_factor("H"))
    value = case.mp_product
    if lower <= value <= upper:
        return []
    return [case.fail(None, f"{lower} <= mp <= {upper}", value)]


def _c6(case: PairCase) -> list[Failure]:
    g, h, p = case.g, case.h, case.product
    system = mp_system(p.graph, case.budget)
    candidates = []
    for u, u2 in itertools.combinations(range(g.n), 2):
        g_edge = g.has_edge(u, u2)
        for v, v2 in itertools.permutations(range(h.n), 2):
            if g_edge == h.has_edge(v, v2):
                candidates.append((u, v, u2, v2))
    if not candidates:
        raise NotApplicable
    out = []
    for u, v, u2, v2 in candidates:
        s = (1 << p.index(u, v)) | (1 << p.index(u2, v2))
        if not system.is_maximal(s):
            extra = list(p.coords(x) for x in iter_bits(system.extensions(s)))
            out.append(case.fail([[u, v], [u2, v2]], "maximal mp-set", f"extends by {extra}"))
    return out


def _c7(case: PairCase) -> list[Failure]:
    if case.g.n < 2 or case.h.n < 2:
        raise NotApplicable
    res = mp_lower(case.product.graph, case.budget)
    if res.value == 2:
        return []
    return [case.fail(res.witness.to_list(), 2, res.value)]


def _c8(case: PairCase) -> list[Failure]:
    out = []
    for s in case.mp_sets:
        if popcount(s) >= 3 and Shape.VARIED in shape_predicates(case.product, s)[0]:
            out.append(case.fail(case.pairs(s), "varied sets have at most 2 vertices", popcount(s)))
    return out


def _large_sets(case: PairCase) -> list[int]:
    bound = max(case.inv_g.omega, case.inv_h.omega)
    return [s for s in case.mp_sets if popcount(s) > bound]


def _c9(case: PairCase) -> list[Failure]:
    out = []
    applicable = False
    for s in _large_sets(case):
        pg, ph = case.projections(s)
        for clique_side, other_side, cg, og in ((pg, ph, case.g, case.h), (ph, pg, case.h, case.g)):
            if popcount(clique_side) >= 2 and cg.is_clique(clique_side) and popcount(other_side) == popcount(s):
                applicable = True
                if not og.is_independent(other_side):
                    out.append(case.fail(case.pairs(s), "other projection independent",
                                         list(iter_bits(other_side))))
    if not applicable:
        raise NotApplicable
    return out


def _c10(case: PairCase) -> list[Failure]:
    out = []
    applicable = False
    simp = {"G": case.inv_g.simplicials.bits, "H": case.inv_h.simplicials.bits}
    for s in _large_sets(case):
        shapes = shape_predicates(case.product, s)[0]
        if not shapes & (Shape.LAYERED | Shape.CLIQUEY):
            continue
        pg, ph = case.projections(s)
        for name, proj, graph in (("G", pg, case.g), ("H", ph, case.h)):
            if graph.is_clique(proj):
                applicable = True
                if proj & ~simp[name]:
                    out.append(case.fail(case.pairs(s), f"pi_{name} simplicial",
                                         list(iter_bits(proj & ~simp[name]))))
    if not applicable:
        raise NotApplicable
    return out


def _c11(case: PairCase) -> list[Failure]:
    # with a K1 factor the product is the other factor and the bound can fail
    # (e.g. K1 x D@{ has mp 4 against a bound of 3), so both factors must be nontrivial
    if case.g.n < 2 or case.h.n < 2:
        raise NotApplicable
    ig, ih = case.inv_g, case.inv_h
    lower = max(ig.omega, ih.omega)
    upper = max(lower, ig.sigma * case.mp_i_factor("H"), ih.sigma * case.mp_i_factor("G"))
    value = case.mp_product
    out = []
    if value > upper:
        out.append(case.fail(None, f"mp <= {upper}", value))
    if ig.sigma == 0 and ih.sigma == 0 and value != lower:
        out.append(case.fail(None, f"mp == {lower} without simplicial vertices", value))
    return out


def _c12(case: PairCase) -> list[Failure]:
    ig, ih = case.inv_g, case.inv_h
    if case.g.n < 3 or case.h.n < 3 or ig.delta1 == 0 or ih.delta1 == 0:
        raise NotApplicable
    bound = max(ig.delta1, ih.delta1)
    value = case.mp_product
    return [] if value >= bound else [case.fail(None, f"mp >= {bound}", value)]


def _c13(case: PairCase) -> list[Failure]:
    ig, ih = case.inv_g, case.inv_h
    if case.g.n < 3 or case.h.n < 3 or not ig.triangle_free or not ih.triangle_free:
        raise NotApplicable
    bound = max(2, ig.sigma * ih.max_degree, ih.sigma * ig.max_degree)
    value = case.mp_product
    return [] if value <= bound else [case.fail(None, f"mp <= {bound}", value)]


def _c14(case: PairCase) -> list[Failure]:
    if case.g.n < 2:
        raise NotApplicable
    formula = lex_mp(case.g, case.h, case.budget).value
    direct = case.mp_product
    return [] if formula == direct else [case.fail(None, direct, formula)]


def _c15(case: PairCase) -> list[Failure]:
    out = []
    hn = case.h.n
    for s in case.mp_sets:
        if popcount(s) < 3:
            continue
        pg, _ = case.projections(s)
        bad = find_bad_path(case.g, pg, case.budget)
        if bad is not None:
            out.append(case.fail(case.pairs(s), "pi_G in mp position", bad))
        for u in iter_bits(pg):
            layer = (s >> (u * hn)) & ((1 << hn) - 1)
            bad = find_bad_path(case.h, layer, case.budget)
            if bad is not None:
                out.append(case.fail(case.pairs(s), f"slice over {u} in mp position", bad))
    return out


def _c16(case: PairCase) -> list[Failure]:
    p = case.product
    out = []
    for a in range(p.graph.n):
        dist = bfs_distances(p.graph, a)
        for b in range(p.graph.n):
            formula = lex_distance(p, a, b)
            if formula != dist[b]:
                out.append(case.fail([list(p.coords(a)), list(p.coords(b))], dist[b], formula))
    return out


def _c17(case: PairCase) -> int:
    """Number of mp-sets of G∘H whose full H-projection is not an mp-set of H."""
    count = 0
    example = None
    for s in case.mp_sets:
        if popcount(s) < 3:
            continue
        _, ph = case.projections(s)
        if find_bad_path(case.h, ph, case.budget) is not None:
            count += 1
            if example is None:
                example = case.pairs(s)
    case.example = example
    return count


CHECKS: dict[str, Check] = {c.check_id: c for c in [
    Check("C1", "mp-set components are cliques with common outside neighbours", SINGLE, _c1),
    Check("C2", "projections of Cartesian mp-sets are mp-sets", CARTESIAN, _c2),
    Check("C3", "no mp-set meets both layers through one of its vertices", CARTESIAN, _c3),
    Check("C4", "every Cartesian mp-set is layered, varied or cliquey", CARTESIAN, _c4),
    Check("C5", "max omega <= mp(G□H) <= max mp", CARTESIAN, _c5),
    Check("C6", "separated and edge-times-edge pairs are maximal", CARTESIAN, _c6),
    Check("C7", "lower mp-number of G□H is 2", CARTESIAN, _c7),
    Check("C8", "varied mp-sets have at most two vertices", CARTESIAN, _c8),
    Check("C9", "large cliquey sets project independently", CARTESIAN, _c9),
    Check("C10", "large layered/cliquey sets sit over simplicial vertices", CARTESIAN, _c10),
    Check("C11", "simplicial upper bound for mp(G□H)", CARTESIAN, _c11),
    Check("C12", "leaf lower bound for mp(G□H)", CARTESIAN, _c12),
    Check("C13", "triangle-free upper bound for mp(G□H)", CARTESIAN, _c13),
    Check("C14", "lexicographic formula equals the direct solver", LEX, _c14),
    Check("C15", "lexicographic projections and layer slices are mp-sets", LEX, _c15),
    Check("C16", "lexicographic distance formula equals BFS", LEX, _c16),
    Check("C17", "some mp-set of G∘H has a non-mp H-projection", LEX, _c17, needs_instance=True),
]}


def parse_check_ids(text: str | Iterable[str] | None) -> list[str]:
    if text is None:
        return list(CHECKS)
    items = text.split(",") if isinstance(text, str) else list(text)
    ids = []
    for item in items:
        item = item.strip().upper()
        if not item:
            continue
        if item not in CHECKS:
            raise KeyError(f"unknown check {item!r}; known: {', '.join(CHECKS)}")
        if item not in ids:
            ids.append(item)
    order = list(CHECKS)
    return sorted(ids, key=order.index)


# ---------------------------------------------------------------- driver


DEFAULT_SINGLE = CorpusSpec(max_order=6)
DEFAULT_CARTESIAN = CorpusSpec(max_order=4)
DEFAULT_LEX = (CorpusSpec(min_order=2, max_order=4), CorpusSpec(min_order=2, max_order=3))


def _run_one(check: Check, case: Case, report: CheckReport) -> None:
    try:
        result = check.run(case)
    except NotApplicable:
        report.not_applicable += 1
        return
    except BudgetExceeded:
        report.skipped += 1
        return
    report.tested += 1
    if check.needs_instance:
        if result:
            report.found += 1
            if len(report.examples) < 5:
                report.examples.append({"graphs": case.labels, "count": result,
                                        "witness": getattr(case, "example", None)})
    else:
        report.failures.extend(result)


def run_checks(corpus: CorpusSpec | Sequence[Graph] | None = None,
               pair_corpus: CorpusSpec | Sequence[Graph] | None = None,
               checks: str | Iterable[str] | None = None,
               lex_corpus: tuple | None = None,
               budget: int | None = DEFAULT_INSTANCE_BUDGET,
               instance: Sequence[Graph] | None = None) -> list[CheckReport]:
    """Run the named checks and return one report per check, in id order.

    ``corpus`` feeds the single-graph checks, ``pair_corpus`` the Cartesian
    checks (unordered pairs with repetition) and ``lex_corpus``, a
    ``(G-corpus, H-corpus)`` tuple, the lexicographic checks (ordered
    pairs).  Each may also be a ready list of graphs.  Instances are built
    once per scope and shared between the checks, each with its own node
    budget.

    ``instance`` replays one reported counterexample instead: ``[G]`` or
    ``[G, H]`` from the ``graphs`` field of a failure.
    """
    ids = parse_check_ids(checks)

    def graphs(spec):
        return spec if isinstance(spec, (list, tuple)) and (not spec or isinstance(spec[0], Graph)) \
            else load_corpus(spec)

    reports = {cid: CheckReport(cid, CHECKS[cid].title, needs_instance=CHECKS[cid].needs_instance)
               for cid in ids}
    by_scope: dict[str, list[Check]] = {}
    for cid in ids:
        by_scope.setdefault(CHECKS[cid].scope, []).append(CHECKS[cid])

    if instance is not None:
        _replay(list(instance), by_scope, reports, budget)
        return [reports[cid] for cid in ids]

    if SINGLE in by_scope:
        for g in graphs(corpus or DEFAULT_SINGLE):
            case = SingleCase([g], budget)
            for check in by_scope[SINGLE]:
                _run_one(check, case, reports[check.check_id])

    if CARTESIAN in by_scope:
        factors = graphs(pair_corpus or DEFAULT_CARTESIAN)
        for g, h in itertools.combinations_with_replacement(factors, 2):
            case = PairCase(g, h, CARTESIAN, budget)
            for check in by_scope[CARTESIAN]:
                _run_one(check, case, reports[check.check_id])

    if LEX in by_scope:
        g_spec, h_spec = lex_corpus or DEFAULT_LEX
        hs = graphs(h_spec)
        for g in graphs(g_spec):
            for h in hs:
                case = PairCase(g, h, LEX, budget)
                for check in by_scope[LEX]:
                    _run_one(check, case, reports[check.check_id])

    return [reports[cid] for cid in ids]


def _replay(graphs: list[Graph], by_scope: dict[str, list[Check]], reports: dict[str, CheckReport],
            budget: int | None) -> None:
    for check in by_scope.get(SINGLE, []):
        for g in graphs:
            _run_one(check, SingleCase([g], budget), reports[check.check_id])
    if len(graphs) == 2:
        g, h = graphs
        for scope in (CARTESIAN, LEX):
            if scope in by_scope:
                case = PairCase(g, h, scope, budget)
                for check in by_scope[scope]:
                    _run_one(check, case, reports[check.check_id])
