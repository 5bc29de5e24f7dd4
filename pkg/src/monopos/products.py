"""Cartesian and lexicographic products, projections and the mp-set trichotomy.

Product vertex ``(g, h)`` has flat index ``g * |H| + h``; this numbering is
part of the output contract.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .bits import iter_bits, popcount, to_mask
from .errors import CapacityError, DomainError, InternalConsistencyError, PreconditionError
from .graph import MAX_ORDER, Graph, VertexSet, as_mask, bfs_distances
from .paths import find_bad_path

CARTESIAN = "cartesian"
LEXICOGRAPHIC = "lexicographic"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    g: Graph
    h: Graph
    kind: str

    @property
    def g_order(self) -> int:
        return self.g.n

    @property
    def h_order(self) -> int:
        return self.h.n

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.g.n and 0 <= h < self.h.n):
            raise DomainError(f"({g},{h}) is not a vertex of this product")
        return g * self.h.n + h

    def coords(self, i: int) -> tuple[int, int]:
        self.graph.check_vertex(i)
        return divmod(i, self.h.n)

    def vertex_set(self, pairs: Iterable[tuple[int, int]]) -> VertexSet:
        return VertexSet(to_mask(self.index(a, b) for a, b in pairs), self.graph.n)

    def pairs(self, s: VertexSet | Iterable[int] | int) -> list[tuple[int, int]]:
        return [divmod(i, self.h.n) for i in iter_bits(as_mask(self.graph, s))]

    def layer(self, factor: str, coord: int) -> int:
        """Mask of the layer fixing the *other* coordinate.

        ``layer("H", u)`` is the H-layer {u} x V(H); ``layer("G", v)`` is the
        G-layer V(G) x {v}.
        """
        hn = self.h.n
        if factor == "H":
            return to_mask(coord * hn + b for b in range(hn))
        if factor == "G":
            return to_mask(a * hn + coord for a in range(self.g.n))
        raise DomainError(f"factor must be 'G' or 'H', got {factor!r}")


def _check_capacity(g: Graph, h: Graph) -> None:
    if g.n * h.n > MAX_ORDER:
        raise CapacityError(f"product order {g.n}*{h.n} exceeds {MAX_ORDER}")


def _label(g: Graph, h: Graph, op: str) -> str | None:
    if g.name and h.name:
        return f"{g.name}{op}{h.name}"
    return None


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    _check_capacity(g, h)
    hn = h.n
    adj = []
    for a in range(g.n):
        for b in range(hn):
            mask = h.adj[b] << (a * hn)
            for c in iter_bits(g.adj[a]):
                mask |= 1 << (c * hn + b)
            adj.append(mask)
    return ProductGraph(Graph(g.n * hn, adj, _label(g, h, "□")), g, h, CARTESIAN)


def lexicographic_product(g: Graph, h: Graph) -> ProductGraph:
    _check_capacity(g, h)
    hn = h.n
    block = (1 << hn) - 1
    adj = []
    for a in range(g.n):
        across = 0
        for c in iter_bits(g.adj[a]):
            across |= block << (c * hn)
        for b in range(hn):
            adj.append(across | h.adj[b] << (a * hn))
    return ProductGraph(Graph(g.n * hn, adj, _label(g, h, "∘")), g, h, LEXICOGRAPHIC)


def project(p: ProductGraph, s: VertexSet | Iterable[int] | int, factor: str) -> VertexSet:
    """pi_G(S) or pi_H(S) as a vertex set of that factor."""
    pairs = p.pairs(s)
    if factor == "G":
        return VertexSet(to_mask(a for a, _ in pairs), p.g.n)
    if factor == "H":
        return VertexSet(to_mask(b for _, b in pairs), p.h.n)
    raise DomainError(f"factor must be 'G' or 'H', got {factor!r}")


def layer_slice(p: ProductGraph, s: VertexSet | Iterable[int] | int, u: int) -> VertexSet:
    """pi_H of S restricted to the H-layer of ``u``."""
    return VertexSet(to_mask(b for a, b in p.pairs(s) if a == u), p.h.n)


def _as_pair(p: ProductGraph, x: int | tuple[int, int]) -> tuple[int, int]:
    if isinstance(x, tuple):
        p.index(*x)
        return x
    return p.coords(x)


def lex_distance(p: ProductGraph, a: int | tuple[int, int], b: int | tuple[int, int]) -> float:
    """Distance in G∘H from the factor distances alone.

    d_G(g, g') when g != g'; otherwise d_H(h, h') if g is isolated in G, and
    min(d_H(h, h'), 2) if it is not.  Unreachable pairs give ``INF``.
    """
    if p.kind != LEXICOGRAPHIC:
        raise PreconditionError("lex_distance needs a lexicographic product")
    (g1, h1), (g2, h2) = _as_pair(p, a), _as_pair(p, b)
    if (g1, h1) == (g2, h2):
        return 0
    if g1 != g2:
        return bfs_distances(p.g, g1)[g2]
    dh = bfs_distances(p.h, h1)[h2]
    if p.g.adj[g1] == 0:
        return dh
    return min(dh, 2)


# ---------------------------------------------------------------- trichotomy


class Shape(enum.Flag):
    NONE = 0
    LAYERED = enum.auto()
    VARIED = enum.auto()
    CLIQUEY = enum.auto()


@dataclass(frozen=True)
class MpClass:
    """Canonical shape of an mp-set of G□H.

    ``tag`` is one of ``layered``, ``cliquey``, ``varied``, ``small``.
    ``orientation`` names the factor that carries the structure: for a
    layered set the factor whose layer holds it ("G" for a G-layer), for a
    cliquey set the factor whose projection is the clique.  ``shapes`` has
    every predicate that holds, since small sets can satisfy several.
    """

    tag: str
    orientation: str | None
    shapes: Shape

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "orientation": self.orientation,
            "predicates": [f.name.lower() for f in Shape if f and f in self.shapes],
        }


def shape_predicates(p: ProductGraph, s: VertexSet | Iterable[int] | int) -> tuple[Shape, str | None, str | None]:
    """Evaluate the layered / varied / cliquey predicates on ``s``.

    Returns the predicate flags plus the orientation of the layered and of
    the cliquey predicate (None when that predicate fails).
    """
    pairs = p.pairs(s)
    r = len(pairs)
    pg = to_mask(a for a, _ in pairs)
    ph = to_mask(b for _, b in pairs)
    ng, nh = popcount(pg), popcount(ph)
    shapes = Shape.NONE
    layered_or = cliquey_or = None
    if nh == 1:
        shapes |= Shape.LAYERED
        layered_or = "G"
    elif ng == 1:
        shapes |= Shape.LAYERED
        layered_or = "H"
    g_distinct, h_distinct = ng == r, nh == r
    g_clique, h_clique = p.g.is_clique(pg), p.h.is_clique(ph)
    if g_distinct and h_distinct and not g_clique and not h_clique:
        shapes |= Shape.VARIED
    if g_clique and ng >= 2 and h_distinct:
        shapes |= Shape.CLIQUEY
        cliquey_or = "G"
    elif h_clique and nh >= 2 and g_distinct:
        shapes |= Shape.CLIQUEY
        cliquey_or = "H"
    return shapes, layered_or, cliquey_or


def classify_mp_set(p: ProductGraph, s: VertexSet | Iterable[int] | int, verify: bool = True) -> MpClass:
    """Canonical layered / cliquey / varied tag of an mp-set of a Cartesian product.

    Precedence is layered, then cliquey, then varied.  Sets with fewer than
    two vertices are tagged ``small``.  If no predicate holds the structure
    theorem would be violated, which raises :class:`InternalConsistencyError`.
    """
    if p.kind != CARTESIAN:
        raise PreconditionError("the trichotomy applies to Cartesian products")
    mask = as_mask(p.graph, s)
    if verify and find_bad_path(p.graph, mask) is not None:
        raise PreconditionError("set is not a monophonic position set of the product")
    if popcount(mask) <= 1:
        return MpClass("small", None, Shape.NONE)
    shapes, layered_or, cliquey_or = shape_predicates(p, mask)
    if Shape.LAYERED in shapes:
        return MpClass("layered", layered_or, shapes)
    if Shape.CLIQUEY in shapes:
        return MpClass("cliquey", cliquey_or, shapes)
    if Shape.VARIED in shapes:
        return MpClass("varied", None, shapes)
    raise InternalConsistencyError(f"mp-set {p.pairs(mask)} is neither layered, varied nor cliquey")

