"""Small-graph corpora: internal enumeration and graph6 files.

Isomorphism classes are separated by brute-force canonical labelling: the
canonical code of a graph is the smallest upper-triangle bit string over all
relabellings that list vertices in order of a cheap invariant (degree, then
sorted neighbour degrees).  Any isomorphism preserves that invariant, so the
minimum is still a complete invariant, and the search stays far below n!
for irregular graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .bits import iter_bits, popcount
from .errors import DomainError
from .graph import MAX_ORDER, Graph
from .io import read_graph6_stream

INTERNAL_MAX_ORDER = 7


def _vertex_key(adj: tuple[int, ...], v: int) -> tuple:
    return (popcount(adj[v]), tuple(sorted(popcount(adj[w]) for w in iter_bits(adj[v]))))


def canonical_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(code, permutation): minimal upper-triangle code and the labelling achieving it.

    ``perm[i]`` is the original vertex placed at canonical position ``i``.
    """
    adj = g.adj
    n = g.n
    keys = {v: _vertex_key(adj, v) for v in range(n)}
    classes: dict[tuple, list[int]] = {}
    for v in sorted(range(n), key=lambda v: keys[v]):
        classes.setdefault(keys[v], []).append(v)
    blocks = list(classes.values())
    best_code, best_perm = None, None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [v for block in choice for v in block]
        code = 0
        for j in range(1, n):
            row = adj[perm[j]]
            for i in range(j):
                code = code << 1 | (row >> perm[i] & 1)
        if best_code is None or code < best_code:
            best_code, best_perm = code, tuple(perm)
    return best_code, best_perm


def canonical_form(g: Graph) -> Graph:
    _, perm = canonical_code(g)
    pos = {v: i for i, v in enumerate(perm)}
    adj = [0] * g.n
    for v in range(g.n):
        for w in iter_bits(g.adj[v]):
            adj[pos[v]] |= 1 << pos[w]
    return Graph(g.n, adj)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of order ``n``.

    Every graph of order n is some graph of order n-1 plus a vertex joined
    to a subset of the old vertices, so extending every class of order n-1
    in every way and deduplicating reaches all classes.
    """
    if n == 1:
        return (Graph(1, [0]),)
    seen: dict[int, Graph] = {}
    for base in _all_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for v in iter_bits(nbrs):
                adj[v] |= 1 << (n - 1)
            g = Graph(n, adj)
            code, _ = canonical_code(g)
            if code not in seen:
                seen[code] = canonical_form(g)
    return tuple(seen[c] for c in sorted(seen))


def _labelled_connected(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for choice in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, adj)
        if g.is_connected():
            yield g


def generate_connected_graphs(n: int, dedup: bool = True) -> Iterator[Graph]:
    """Connected graphs of order ``n``.

    With ``dedup`` one representative per isomorphism class, ordered by
    size and then canonical code; without it every labelled graph.
    """
    if n < 1:
        raise DomainError("order must be at least 1")
    if n > INTERNAL_MAX_ORDER:
        raise DomainError(f"the internal generator stops at order {INTERNAL_MAX_ORDER}; "
                          "supply a graph6 corpus file (e.g. from nauty geng -c) for larger orders")
    if not dedup:
        yield from _labelled_connected(n)
        return
    graphs = [g for g in _all_classes(n) if g.is_connected()]
    graphs.sort(key=lambda g: (g.size, canonical_code(g)[0]))
    for i, g in enumerate(graphs):
        yield Graph(g.n, g.adj, f"c{n}_{i}")


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs a check runs over.

    ``source`` is ``"internal"`` or a path to a graph6 file (one graph per
    line).  Orders outside ``min_order..max_order`` are dropped.
    """

    source: str = "internal"
    max_order: int = 6
    min_order: int = 1
    connected_only: bool = True
    dedup: bool = True

    def __post_init__(self):
        if self.max_order > MAX_ORDER:
            raise DomainError(f"max_order {self.max_order} exceeds capacity {MAX_ORDER}")
        if self.source == "internal" and not self.connected_only:
            raise DomainError("the internal generator only produces connected graphs")


def load_corpus(spec: CorpusSpec) -> list[Graph]:
    if spec.source == "internal":
        out: list[Graph] = []
        for n in range(max(spec.min_order, 1), spec.max_order + 1):
            out.extend(generate_connected_graphs(n, spec.dedup))
        return out
    out = []
    seen: set[int] = set()
    with Path(spec.source).open() as fh:
        for i, g in enumerate(read_graph6_stream(fh)):
            if not spec.min_order <= g.n <= spec.max_order:
                continue
            if spec.connected_only and not g.is_connected():
                continue
            if spec.dedup:
                key = (g.n, canonical_code(g)[0])
                if key in seen:
                    continue
                seen.add(key)
            out.append(Graph(g.n, g.adj, f"{Path(spec.source).stem}_{i}"))
    return out
