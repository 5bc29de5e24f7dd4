"""Induced (monophonic) path search.

Every search here extends a path from its current end while keeping a
``blocked`` mask: the union of closed neighbourhoods of all path vertices
except the end.  A vertex may extend the path iff it is adjacent to the end
and not blocked, which is exactly the "no chord" condition.  Searches are
exponential in the worst case; each takes a node budget and raises
:class:`~monopos.errors.BudgetExceeded` instead of guessing.

Practical ceiling: interval queries are comfortable up to about 40 vertices
on sparse graphs; whole interval tables are meant for products of desk-scale
factors (tens of vertices).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .bits import iter_bits, popcount
from .budget import Budget, as_budget
from .errors import DisconnectedError, DomainError, InternalConsistencyError
from .graph import Graph, VertexSet, as_mask


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a path of ``g`` with no chord."""
    for v in seq:
        g.check_vertex(v)
    if len(set(seq)) != len(seq):
        return False
    for i, u in enumerate(seq):
        for j in range(i + 1, len(seq)):
            adjacent = g.has_edge(u, seq[j])
            if adjacent != (j == i + 1):
                return False
    return True


def _reach(g: Graph, start: int, region: int) -> int:
    """Vertices reachable from ``start`` inside ``region`` (start always included)."""
    adj = g.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _shortest_path(g: Graph, start: int, goal: int, region: int) -> list[int] | None:
    """BFS path from start to goal using only ``region`` vertices beyond start."""
    adj = g.adj
    parent = {start: start}
    frontier = [start]
    seen = 1 << start
    while frontier and goal not in parent:
        nxt = []
        for u in frontier:
            for v in iter_bits(adj[u] & region & ~seen):
                seen |= 1 << v
                parent[v] = u
                nxt.append(v)
        frontier = nxt
    if goal not in parent:
        return None
    out = [goal]
    while out[-1] != start:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def _checked(g: Graph, path: list[int]) -> list[int]:
    if not is_induced_path(g, path):
        raise InternalConsistencyError(f"search returned a non-induced path {path}")
    return path


def find_induced_path_through(g: Graph, a: int, b: int, via: VertexSet | Iterable[int] | int,
                              budget: Budget | int | None = None) -> list[int] | None:
    """An induced a,b-path whose interior meets ``via``, or None.

    Before the path has touched ``via`` the search branches in ascending
    vertex order; once it has, the remaining stretch is any shortest path to
    ``b`` avoiding the blocked region, which is automatically chord-free.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise DomainError("endpoints must be distinct")
    via_mask = as_mask(g, via) & ~(1 << a) & ~(1 << b)
    if not via_mask:
        return None
    budget = as_budget(budget)
    adj = g.adj
    bbit = 1 << b
    full = g.full_mask

    def dfs(path: list[int], blocked: int, hit: bool) -> list[int] | None:
        budget.tick()
        end = path[-1]
        region = full & ~blocked
        if hit:
            tail = _shortest_path(g, end, b, region)
            return None if tail is None else path + tail[1:]
        if adj[end] & bbit:
            # b adjacent to the end: any further step would create a chord to b
            return None
        reach = _reach(g, end, region)
        if not reach & bbit or not reach & via_mask:
            return None
        nxt_blocked = blocked | adj[end] | (1 << end)
        for x in iter_bits(adj[end] & region):
            found = dfs(path + [x], nxt_blocked, bool(via_mask >> x & 1))
            if found is not None:
                return found
        return None

    found = dfs([a], 0, False)
    return None if found is None else _checked(g, found)


def monophonic_interval(g: Graph, u: int, v: int, budget: Budget | int | None = None) -> VertexSet:
    """J[u,v]: all vertices on at least one induced u,v-path."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise DomainError("monophonic interval needs distinct endpoints")
    if not g.component_of(u) >> v & 1:
        raise DisconnectedError(f"vertices {u} and {v} lie in different components")
    budget = as_budget(budget)
    result = (1 << u) | (1 << v)
    for w in range(g.n):
        if result >> w & 1:
            continue
        path = find_induced_path_through(g, u, v, 1 << w, budget)
        if path is not None:
            for x in path:
                result |= 1 << x
    return VertexSet(result, g.n)


def iter_induced_paths(g: Graph, source: int, budget: Budget | int | None = None) -> Iterator[list[int]]:
    """Every induced path starting at ``source`` (including the trivial one), DFS order."""
    budget = as_budget(budget)
    adj = g.adj
    stack = [([source], 0)]
    while stack:
        path, blocked = stack.pop()
        budget.tick()
        yield path
        end = path[-1]
        nxt_blocked = blocked | adj[end] | (1 << end)
        for x in reversed(list(iter_bits(adj[end] & ~blocked))):
            stack.append((path + [x], nxt_blocked))


def interval_table(g: Graph, budget: Budget | int | None = None) -> list[list[int]]:
    """All monophonic intervals as masks: ``table[u][v] == J[u,v]``.

    Built by enumerating every induced path once per source, which is far
    cheaper than per-vertex membership queries when all pairs are needed.
    ``table[u][u]`` is ``{u}``; pairs in different components get 0.
    """
    budget = as_budget(budget)
    adj = g.adj
    n = g.n
    table = [[0] * n for _ in range(n)]
    for src in range(n):
        row = table[src]
        stack = [(src, 1 << src, 0)]
        while stack:
            end, pmask, blocked = stack.pop()
            budget.tick()
            row[end] |= pmask
            nxt_blocked = blocked | adj[end] | (1 << end)
            for x in iter_bits(adj[end] & ~blocked):
                stack.append((x, pmask | (1 << x), nxt_blocked))
    return table


def find_bad_path(g: Graph, s: VertexSet | Iterable[int] | int,
                  budget: Budget | int | None = None) -> list[int] | None:
    """An induced path holding at least three members of ``s``, or None.

    Searches directly over induced paths that start in ``s``; a branch dies
    once too few members of ``s`` remain reachable outside the blocked
    region.  None means ``s`` is a monophonic position set.
    """
    smask = as_mask(g, s)
    if popcount(smask) < 3:
        return None
    budget = as_budget(budget)
    adj = g.adj
    full = g.full_mask

    def dfs(path: list[int], blocked: int, count: int) -> list[int] | None:
        budget.tick()
        if count >= 3:
            return path
        end = path[-1]
        region = full & ~blocked
        reach = _reach(g, end, region) & ~(1 << end)
        if popcount(reach & smask) < 3 - count:
            return None
        nxt_blocked = blocked | adj[end] | (1 << end)
        for x in iter_bits(adj[end] & region):
            found = dfs(path + [x], nxt_blocked, count + (smask >> x & 1))
            if found is not None:
                return found
        return None

    for a in iter_bits(smask):
        found = dfs([a], 0, 1)
        if found is not None:
            return _checked(g, found)
    return None
