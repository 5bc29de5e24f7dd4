"""Named graph families and the ``family:params`` descriptor syntax."""

from __future__ import annotations

from .errors import DomainError
from .graph import Graph

_MIN = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "star": 1,
    "complete_bipartite": 1,
    "wheel": 3,
    "gear": 3,
}

_ALIASES = {"P": "path", "C": "cycle", "K": "complete", "S": "star", "W": "wheel",
            "kbip": "complete_bipartite", "bipartite": "complete_bipartite"}


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], f"K1,{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def wheel(r: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..r."""
    edges = [(0, i) for i in range(1, r + 1)]
    edges += [(i, i % r + 1) for i in range(1, r + 1)]
    return Graph.from_edges(r + 1, edges, f"W{r}")


def gear(r: int) -> Graph:
    """Wheel W_r with each rim edge subdivided once.

    Hub 0, rim vertices 1..r, and vertex r+i subdivides the rim edge between
    i and i % r + 1.  Order 2r+1, size 3r.
    """
    edges = [(0, i) for i in range(1, r + 1)]
    for i in range(1, r + 1):
        edges += [(i, r + i), (r + i, i % r + 1)]
    return Graph.from_edges(2 * r + 1, edges, f"gear{r}")


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "wheel": wheel,
    "gear": gear,
}


def generate_family(family: str, *params: int) -> Graph:
    family = _ALIASES.get(family, family)
    if family not in _BUILDERS:
        raise DomainError(f"unknown family {family!r}; known: {', '.join(sorted(_BUILDERS))}")
    arity = 2 if family == "complete_bipartite" else 1
    if len(params) != arity:
        raise DomainError(f"{family} takes {arity} parameter(s), got {len(params)}")
    for p in params:
        if p < _MIN[family]:
            raise DomainError(f"{family} needs parameters >= {_MIN[family]}, got {p}")
    return _BUILDERS[family](*params)


def is_descriptor(text: str) -> bool:
    head, sep, _ = text.partition(":")
    return bool(sep) and _ALIASES.get(head, head) in _BUILDERS


def from_descriptor(text: str) -> Graph:
    """Parse ``"gear:4"`` or ``"complete_bipartite:2,3"``."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise DomainError(f"family descriptor {text!r} lacks ':'")
    try:
        params = [int(p) for p in tail.split(",") if p.strip()]
    except ValueError:
        raise DomainError(f"bad parameters in family descriptor {text!r}") from None
    return generate_family(head, *params)


def families() -> list[str]:
    return sorted(_BUILDERS)
