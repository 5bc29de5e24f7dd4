"""Core graph type, vertex sets and basic invariants.

Vertices are the dense indices ``0..n-1``.  Adjacency is a tuple of Python
integers used as bitsets, so neighbourhood algebra is plain ``&``/``|``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bits import iter_bits, popcount, to_mask
from .errors import CapacityError, DomainError, ValidationError

MAX_ORDER = 128
INF = math.inf


class Graph:
    """Immutable simple undirected graph on ``range(n)``."""

    __slots__ = ("n", "adj", "name", "_hash")

    def __init__(self, n: int, adj: Sequence[int], name: str | None = None):
        if n < 1:
            raise ValidationError("a graph needs at least one vertex")
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
        if len(adj) != n:
            raise ValidationError(f"expected {n} adjacency sets, got {len(adj)}")
        full = (1 << n) - 1
        adj = tuple(int(a) for a in adj)
        for u, a in enumerate(adj):
            if a & ~full or a < 0:
                raise ValidationError(f"vertex {u} has a neighbour outside range({n})")
            if a >> u & 1:
                raise ValidationError(f"loop at vertex {u}")
            for v in iter_bits(a):
                if not adj[v] >> u & 1:
                    raise ValidationError(f"adjacency not symmetric on edge {u}-{v}")
        self.n = n
        self.adj = adj
        self.name = name
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
        """Build a graph from an edge list; loops and repeated edges are rejected."""
        if n > MAX_ORDER:
            raise CapacityError(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValidationError(f"duplicate edge {u}-{v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, name)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def closed(self, u: int) -> int:
        """Closed neighbourhood N[u] as a mask."""
        return self.adj[u] | (1 << u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, [full & ~a & ~(1 << u) for u, a in enumerate(self.adj)],
                     f"co-{self.name}" if self.name else None)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = [to_mask(pos[w] for w in iter_bits(self.adj[v]) if w in pos) for v in vs]
        return Graph(len(vs), adj)

    def is_clique(self, mask: int) -> bool:
        for u in iter_bits(mask):
            if (mask & ~(1 << u)) & ~self.adj[u]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[u] & mask) for u in iter_bits(mask))

    def is_complete(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.component_of(0) == self.full_mask

    def component_of(self, u: int, within: int | None = None) -> int:
        """Mask of the component containing ``u`` in the subgraph induced by ``within``."""
        allowed = self.full_mask if within is None else within
        seen = 1 << u
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self, within: int | None = None) -> list[int]:
        rest = self.full_mask if within is None else within
        out = []
        while rest:
            c = self.component_of((rest & -rest).bit_length() - 1, rest)
            out.append(c)
            rest &= ~c
        return out

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise DomainError(f"vertex {v!r} out of range for a graph of order {self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.size}>"


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of a host graph with ``host_n`` vertices."""

    bits: int
    host_n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.host_n:
            raise DomainError(f"vertex set {self.bits:#x} has members outside range({self.host_n})")

    @classmethod
    def of(cls, host_n: int, vertices: Iterable[int]) -> VertexSet:
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < host_n:
                raise DomainError(f"vertex {v} out of range({host_n})")
        return cls(to_mask(vs), host_n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


def as_mask(g: Graph, s: VertexSet | Iterable[int] | int) -> int:
    """Normalise the vertex-set arguments accepted across the public API."""
    if isinstance(s, VertexSet):
        if s.host_n != g.n:
            raise DomainError(f"vertex set belongs to a graph of order {s.host_n}, not {g.n}")
        return s.bits
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise DomainError("vertex mask out of range")
        return s
    mask = 0
    for v in s:
        g.check_vertex(v)
        mask |= 1 << v
    return mask


# ---------------------------------------------------------------- cliques


def _degree_order(g: Graph, cand: int) -> list[int]:
    return sorted(iter_bits(cand), key=lambda v: (-popcount(g.adj[v] & cand), v))


def max_clique(g: Graph, within: int | None = None) -> int:
    """Maximum clique (as a mask) by branch and bound with a greedy colouring bound.

    Candidates are coloured greedily in descending-degree order; a branch is
    cut as soon as ``|clique| + colours`` cannot beat the incumbent.  Ties are
    resolved by search order, so the witness is deterministic.
    """
    adj = g.adj
    best = [0, 0]  # size, mask

    def colour_sort(cand: int) -> list[tuple[int, int]]:
        order = _degree_order(g, cand)
        classes: list[int] = []
        out = []
        for v in order:
            for k, cls in enumerate(classes):
                if not adj[v] & cls:
                    classes[k] |= 1 << v
                    break
            else:
                classes.append(1 << v)
        for k, cls in enumerate(classes, start=1):
            for v in iter_bits(cls):
                out.append((v, k))
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        ordered = colour_sort(cand)
        for v, colour in reversed(ordered):
            if size + colour <= best[0]:
                return
            new_clique = clique | (1 << v)
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, new_clique
            cand &= ~(1 << v)

    cand = g.full_mask if within is None else within
    if cand:
        expand(0, 0, cand)
    return best[1]


def clique_number(g: Graph) -> int:
    return popcount(max_clique(g))


def max_independent_set(g: Graph) -> int:
    """Maximum independent set by include/exclude branching (no complement).

    Kept deliberately separate from :func:`max_clique` so the two can check
    each other through ``alpha(G) == omega(complement G)``.
    """
    adj = g.adj
    best = [0, 0]

    def branch(chosen: int, size: int, cand: int) -> None:
        if size + popcount(cand) <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # vertices with no candidate neighbours are always taken
        free = 0
        for v in iter_bits(cand):
            if not adj[v] & cand:
                free |= 1 << v
        if free:
            branch(chosen | free, size + popcount(free), cand & ~free)
            return
        v = max(iter_bits(cand), key=lambda x: (popcount(adj[x] & cand), -x))
        branch(chosen | (1 << v), size + 1, cand & ~adj[v] & ~(1 << v))
        branch(chosen, size, cand & ~(1 << v))

    branch(0, 0, g.full_mask)
    return best[1]


# ---------------------------------------------------------------- invariants


def simplicial_vertices(g: Graph) -> int:
    return to_mask(u for u in range(g.n) if g.is_clique(g.adj[u]))


def leaf_neighbour_max(g: Graph) -> int:
    """Largest number of leaf neighbours of a single vertex (0 without leaves)."""
    leaves = to_mask(u for u in range(g.n) if popcount(g.adj[u]) == 1)
    return max((popcount(g.adj[u] & leaves) for u in range(g.n)), default=0)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges())


@dataclass(frozen=True)
class Invariants:
    omega: int
    alpha: int
    max_degree: int
    delta1: int
    sigma: int
    simplicials: VertexSet
    triangle_free: bool
    connected: bool
    max_clique: VertexSet = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "omega": self.omega,
            "alpha": self.alpha,
            "max_degree": self.max_degree,
            "delta1": self.delta1,
            "sigma": self.sigma,
            "simplicials": self.simplicials.to_list(),
            "triangle_free": self.triangle_free,
            "connected": self.connected,
        }


def invariants(g: Graph) -> Invariants:
    clique = max_clique(g)
    simp = simplicial_vertices(g)
    omega = popcount(clique)
    return Invariants(
        omega=omega,
        alpha=clique_number(g.complement()),
        max_degree=max(popcount(a) for a in g.adj),
        delta1=leaf_neighbour_max(g),
        sigma=1 if simp else 0,
        simplicials=VertexSet(simp, g.n),
        triangle_free=omega <= 2,
        connected=g.is_connected(),
        max_clique=VertexSet(clique, g.n),
    )


# ---------------------------------------------------------------- distances


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj[u]):
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs hop distances; unreachable pairs hold ``INF``."""
    return [bfs_distances(g, u) for u in range(g.n)]
