"""Monophonic (and general) position sets: verification and exact optimisation.

Both position properties are decided by triples: a set is in position iff
none of its 3-subsets is "bad".  A :class:`TripleSystem` precomputes, for
every pair ``x, y``, the mask of vertices ``a`` that make ``{a, x, y}`` bad,
so a set grows one vertex at a time with a handful of mask tests.  The
families are down-closed, which is what every search below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .bits import iter_bits, popcount
from .budget import Budget, as_budget
from .errors import DisconnectedError, InternalConsistencyError, PreconditionError
from .graph import Graph, VertexSet, as_mask, distance_matrix, INF
from .paths import find_bad_path, interval_table


class TripleSystem:
    """Bad-triple table of a graph for one notion of position.

    ``bad[x][y]`` holds every ``a`` such that one of ``a, x, y`` lies on an
    admissible path (induced for ``kind="mp"``, geodesic for ``kind="gp"``)
    between the other two.
    """

    def __init__(self, g: Graph, intervals: list[list[int]], kind: str):
        self.graph = g
        self.kind = kind
        self.intervals = intervals
        n = g.n
        bad = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x + 1, n):
                mask = intervals[x][y] & ~(1 << x) & ~(1 << y)
                for a in range(n):
                    if a == x or a == y:
                        continue
                    if intervals[a][y] >> x & 1 or intervals[a][x] >> y & 1:
                        mask |= 1 << a
                bad[x][y] = bad[y][x] = mask
        self.bad = bad

    def is_position_set(self, s: int) -> bool:
        members = list(iter_bits(s))
        for i, x in enumerate(members):
            row = self.bad[x]
            for y in members[i + 1:]:
                if row[y] & s:
                    return False
        return True

    def can_add(self, s: int, c: int) -> bool:
        """Whether position set ``s`` stays one after adding ``c``."""
        row = self.bad[c]
        return all(not row[x] & s for x in iter_bits(s))

    def extensions(self, s: int) -> int:
        """Mask of outside vertices that can be added to ``s``."""
        out = 0
        for c in iter_bits(self.graph.full_mask & ~s):
            if self.can_add(s, c):
                out |= 1 << c
        return out

    def is_maximal(self, s: int) -> bool:
        return not self.extensions(s)


_CACHE: dict[tuple[Graph, str], TripleSystem] = {}
_CACHE_LIMIT = 512


def _cached(g: Graph, kind: str, build: Callable[[], TripleSystem]) -> TripleSystem:
    key = (g, kind)
    system = _CACHE.get(key)
    if system is None:
        system = build()
        if len(_CACHE) >= _CACHE_LIMIT:
            _CACHE.clear()
        _CACHE[key] = system
    return system


def mp_system(g: Graph, budget: Budget | int | None = None) -> TripleSystem:
    return _cached(g, "mp", lambda: TripleSystem(g, interval_table(g, budget), "mp"))


def geodesic_intervals(g: Graph) -> list[list[int]]:
    d = distance_matrix(g)
    n = g.n
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            if d[u][v] == INF:
                continue
            table[u][v] = sum(1 << w for w in range(n) if d[u][w] + d[w][v] == d[u][v])
    return table


def gp_system(g: Graph) -> TripleSystem:
    return _cached(g, "gp", lambda: TripleSystem(g, geodesic_intervals(g), "gp"))


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedError(f"{g!r} is not connected")


# ---------------------------------------------------------------- results


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    nodes_explored: int

    def to_dict(self) -> dict:
        return {"value": self.value, "witness": self.witness.to_list(), "nodes": self.nodes_explored}


@dataclass(frozen=True)
class ComponentProfile:
    """Components of G[M]: cliques of order >= 2 and isolated vertices."""

    clique_components: tuple[VertexSet, ...]
    singletons: VertexSet

    @property
    def n_M(self) -> int:
        return sum(len(c) for c in self.clique_components)

    @property
    def r_M(self) -> int:
        return len(self.singletons)

    @property
    def members(self) -> VertexSet:
        bits = self.singletons.bits
        for c in self.clique_components:
            bits |= c.bits
        return VertexSet(bits, self.singletons.host_n)

    def to_dict(self) -> dict:
        return {
            "clique_components": [c.to_list() for c in self.clique_components],
            "singletons": self.singletons.to_list(),
            "n_M": self.n_M,
            "r_M": self.r_M,
        }


# ---------------------------------------------------------------- verification


def is_mp_set(g: Graph, s: VertexSet | Iterable[int] | int, budget: Budget | int | None = None) -> bool:
    """No induced path of ``g`` carries three vertices of ``s``.

    Use :func:`monopos.paths.find_bad_path` to get the offending path.
    """
    return find_bad_path(g, s, budget) is None


def is_maximal_mp_set(g: Graph, s: VertexSet | Iterable[int] | int,
                      budget: Budget | int | None = None) -> bool:
    mask = as_mask(g, s)
    budget = as_budget(budget)
    if not is_mp_set(g, mask, budget):
        raise PreconditionError("set is not a monophonic position set")
    return not any(is_mp_set(g, mask | (1 << x), budget)
                   for x in range(g.n) if not mask >> x & 1)


def _components(g: Graph, m: int) -> tuple[list[int], int]:
    cliques, singles = [], 0
    for comp in g.components(m):
        if comp & (comp - 1):
            cliques.append(comp)
        else:
            singles |= comp
    return cliques, singles


def _profile_counts(g: Graph, m: int) -> tuple[int, int]:
    cliques, singles = _components(g, m)
    return sum(popcount(c) for c in cliques), popcount(singles)


def check_component_structure(g: Graph, m: int) -> None:
    """Raise :class:`InternalConsistencyError` unless G[m] has the mp-set shape.

    The shape: every component is a clique and, with two or more components,
    each pair inside a component has a common neighbour outside ``m``.
    """
    cliques, singles = _components(g, m)
    k = len(cliques) + popcount(singles)
    outside = g.full_mask & ~m
    for comp in cliques:
        if not g.is_clique(comp):
            raise InternalConsistencyError(
                f"component {list(iter_bits(comp))} of an mp-set is not a clique")
        if k >= 2:
            members = list(iter_bits(comp))
            for i, x in enumerate(members):
                for y in members[i + 1:]:
                    if not g.adj[x] & g.adj[y] & outside:
                        raise InternalConsistencyError(
                            f"clique vertices {x},{y} have no common neighbour outside the mp-set")


def mp_decomposition(g: Graph, m: VertexSet | Iterable[int] | int,
                     budget: Budget | int | None = None) -> ComponentProfile:
    """Split an mp-set into clique components and singletons.

    The structure is validated with :func:`check_component_structure`.
    """
    _require_connected(g)
    mask = as_mask(g, m)
    if not is_mp_set(g, mask, budget):
        raise PreconditionError("set is not a monophonic position set")
    check_component_structure(g, mask)
    cliques, singles = _components(g, mask)
    return ComponentProfile(tuple(VertexSet(c, g.n) for c in cliques), VertexSet(singles, g.n))


# ---------------------------------------------------------------- searches


def _search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _maximise(system: TripleSystem, budget: Budget, independent: bool = False) -> tuple[int, int]:
    """Largest position set, returned as (size, lexicographically smallest witness).

    Phase one is branch and bound in descending-degree order with the bound
    ``|current| + |compatible candidates|``.  Phase two re-searches in
    ascending index order for the first set of that size, which is the
    lexicographically smallest one.
    """
    g = system.graph
    bad = system.bad
    adj = g.adj
    best = [0]

    def grow(s: int, size: int, cand: list[int]) -> None:
        budget.tick()
        if size > best[0]:
            best[0] = size
        for i, x in enumerate(cand):
            if size + len(cand) - i <= best[0]:
                return
            row = bad[x]
            nxt = [c for c in cand[i + 1:] if not row[c] & s and not (independent and adj[x] >> c & 1)]
            grow(s | (1 << x), size + 1, nxt)

    grow(0, 0, _search_order(g))
    target = best[0]

    def first(s: int, size: int, cand: list[int]) -> int | None:
        budget.tick()
        if size == target:
            return s
        for i, x in enumerate(cand):
            if size + len(cand) - i < target:
                return None
            row = bad[x]
            nxt = [c for c in cand[i + 1:] if not row[c] & s and not (independent and adj[x] >> c & 1)]
            found = first(s | (1 << x), size + 1, nxt)
            if found is not None:
                return found
        return None

    witness = first(0, 0, list(range(g.n)))
    if witness is None:
        raise InternalConsistencyError("optimum found in phase one was not reproducible")
    return target, witness


def _solve(g: Graph, system: TripleSystem, budget: Budget, independent: bool = False) -> SolveResult:
    start = budget.used
    value, witness = _maximise(system, budget, independent)
    return SolveResult(value, VertexSet(witness, g.n), budget.used - start)


def mp_number(g: Graph, budget: Budget | int | None = None) -> SolveResult:
    """mp(G) with a lexicographically smallest maximum witness."""
    _require_connected(g)
    budget = as_budget(budget)
    return _solve(g, mp_system(g, budget), budget)


def mp_independent(g: Graph, budget: Budget | int | None = None) -> SolveResult:
    """Largest set that is both independent and in monophonic position."""
    _require_connected(g)
    budget = as_budget(budget)
    return _solve(g, mp_system(g, budget), budget, independent=True)


def gp_number(g: Graph, budget: Budget | int | None = None) -> SolveResult:
    """gp(G); triples are tested with d(x,y) + d(y,z) == d(x,z)."""
    _require_connected(g)
    budget = as_budget(budget)
    return _solve(g, gp_system(g), budget)


def mp_lower(g: Graph, budget: Budget | int | None = None) -> SolveResult:
    """Smallest maximal mp-set, searched level by level in increasing size.

    mp-sets are down-closed, so the first maximal set met at level k is a
    smallest maximal one.  When V itself is the only maximal set the answer
    is n.
    """
    _require_connected(g)
    budget = as_budget(budget)
    start = budget.used
    system = mp_system(g, budget)
    bad = system.bad

    def level(s: int, size: int, cand: list[int], k: int) -> int | None:
        budget.tick()
        if size == k:
            return s if system.is_maximal(s) else None
        for i, x in enumerate(cand):
            if size + len(cand) - i < k:
                return None
            row = bad[x]
            found = level(s | (1 << x), size + 1, [c for c in cand[i + 1:] if not row[c] & s], k)
            if found is not None:
                return found
        return None

    for k in range(1, g.n + 1):
        found = level(0, 0, list(range(g.n)), k)
        if found is not None:
            return SolveResult(k, VertexSet(found, g.n), budget.used - start)
    raise InternalConsistencyError("no maximal monophonic position set found")


def iter_position_sets(system: TripleSystem, budget: Budget | int | None = None,
                       min_size: int = 0) -> Iterator[int]:
    """Every position set of the system (as masks), in ascending-DFS order."""
    budget = as_budget(budget)
    bad = system.bad
    n = system.graph.n

    def walk(s: int, size: int, cand: list[int]) -> Iterator[int]:
        budget.tick()
        if size >= min_size:
            yield s
        for i, x in enumerate(cand):
            row = bad[x]
            yield from walk(s | (1 << x), size + 1, [c for c in cand[i + 1:] if not row[c] & s])

    yield from walk(0, 0, list(range(n)))


def iter_mp_sets(g: Graph, budget: Budget | int | None = None, min_size: int = 0) -> Iterator[VertexSet]:
    budget = as_budget(budget)
    for s in iter_position_sets(mp_system(g, budget), budget, min_size):
        yield VertexSet(s, g.n)


def maximum_mp_sets(g: Graph, budget: Budget | int | None = None) -> list[VertexSet]:
    """All mp-sets of maximum size, in lexicographic order."""
    budget = as_budget(budget)
    value = mp_number(g, budget).value
    return [s for s in iter_mp_sets(g, budget, min_size=value) if len(s) == value]


def _frontier(g: Graph, budget: Budget) -> dict[tuple[int, int], int]:
    """Pareto-maximal (n_M, r_M) pairs over all mp-sets, each with a representative."""
    system = mp_system(g, budget)
    bad = system.bad
    found: dict[tuple[int, int], int] = {}

    def dominated(n_hi: int, r_hi: int) -> bool:
        return any(pn >= n_hi and pr >= r_hi for pn, pr in found)

    def walk(s: int, size: int, cand: list[int]) -> None:
        budget.tick()
        n_m, r_m = _profile_counts(g, s)
        if not dominated(n_m, r_m):
            for key in [k for k in found if n_m >= k[0] and r_m >= k[1]]:
                del found[key]
            found[(n_m, r_m)] = s
        # n_M can absorb every singleton and candidate; r_M can gain every candidate
        if dominated(n_m + r_m + len(cand), r_m + len(cand)):
            return
        for i, x in enumerate(cand):
            row = bad[x]
            walk(s | (1 << x), size + 1, [c for c in cand[i + 1:] if not row[c] & s])

    walk(0, 0, list(range(g.n)))
    return found


def enumerate_mp_profiles(g: Graph, budget: Budget | int | None = None) -> set[tuple[int, int]]:
    """Dominance-maximal (n_M, r_M) pairs achieved by mp-sets of ``g``."""
    _require_connected(g)
    return set(_frontier(g, as_budget(budget)))


def profile_representatives(g: Graph, budget: Budget | int | None = None) -> dict[tuple[int, int], ComponentProfile]:
    """Frontier pairs mapped to the component profile of a witnessing mp-set."""
    _require_connected(g)
    out = {}
    for key, s in sorted(_frontier(g, as_budget(budget)).items()):
        cliques, singles = _components(g, s)
        out[key] = ComponentProfile(tuple(VertexSet(c, g.n) for c in cliques), VertexSet(singles, g.n))
    return out
