"""mp-number of lexicographic products from the factors' structure.

mp(G∘H) is the maximum of ``n_M * omega(H) + r_M * mp(H)`` over mp-sets M
of G, where n_M counts vertices in clique components of G[M] of order at
least two and r_M counts isolated vertices of G[M].  Both coefficients are
non-negative, so only the Pareto frontier of (n_M, r_M) pairs matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import popcount
from .budget import Budget, as_budget
from .errors import DomainError, InternalConsistencyError, PreconditionError
from .graph import Graph, VertexSet, is_triangle_free, max_clique
from .positions import ComponentProfile, _require_connected, is_mp_set, mp_number, profile_representatives
from .products import ProductGraph, lexicographic_product

SHORTCUT_NONE = "none"
SHORTCUT_TRIANGLE_FREE = "triangle_free"
SHORTCUT_COMPLETE_G = "complete_G"


@dataclass(frozen=True)
class LexResult:
    value: int
    best_profile: ComponentProfile
    witness: VertexSet
    shortcut_used: str
    product: ProductGraph = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "profile": self.best_profile.to_dict(),
            "shortcut": self.shortcut_used,
            "witness": [list(pair) for pair in self.product.pairs(self.witness)],
            "witness_flat": self.witness.to_list(),
        }


def build_lex_witness(g: Graph, profile: ComponentProfile, h: Graph,
                      budget: Budget | int | None = None) -> VertexSet:
    """Lift an mp-set of G to an mp-set of G∘H.

    Layers over clique components receive a maximum clique of H, layers over
    isolated vertices a maximum mp-set of H.  The result is checked on the
    product before it is returned.
    """
    budget = as_budget(budget)
    if profile.singletons.host_n != g.n:
        raise DomainError("profile does not belong to G")
    if not is_mp_set(g, profile.members, budget):
        raise PreconditionError("profile does not come from an mp-set of G")
    p = lexicographic_product(g, h)
    clique = max_clique(h)
    spread = mp_number(h, budget).witness.bits
    hn = h.n
    s = 0
    for comp in profile.clique_components:
        for u in comp:
            s |= clique << (u * hn)
    for u in profile.singletons:
        s |= spread << (u * hn)
    if not is_mp_set(p.graph, s, budget):
        raise InternalConsistencyError(f"lifted set {p.pairs(s)} is not in monophonic position")
    return VertexSet(s, p.graph.n)


def _shortcut(g: Graph, h: Graph, omega_h: int, mp_h: int, budget: Budget) -> tuple[str, int | None]:
    if g.n >= 3 and is_triangle_free(g):
        return SHORTCUT_TRIANGLE_FREE, mp_number(g, budget).value * mp_h
    if g.is_complete():
        return SHORTCUT_COMPLETE_G, max(g.n * omega_h, mp_h)
    return SHORTCUT_NONE, None


def lex_mp(g: Graph, h: Graph, budget: Budget | int | None = None) -> LexResult:
    """mp(G∘H) through the profile formula, with a verified witness.

    When G is triangle-free of order at least 3, or complete, the closed
    forms mp(G)·mp(H) and max(n·omega(H), mp(H)) are evaluated as well and
    must agree with the general formula.
    """
    if g.n < 2:
        raise DomainError("G must have at least two vertices; for G = K1 the product is H, use mp(H)")
    _require_connected(g)
    _require_connected(h)
    budget = as_budget(budget)
    omega_h = popcount(max_clique(h))
    mp_h = mp_number(h, budget).value

    best_key = None
    best_value = -1
    reps = profile_representatives(g, budget)
    for (n_m, r_m) in reps:
        value = n_m * omega_h + r_m * mp_h
        if value > best_value or (value == best_value and r_m > best_key[1]):
            best_key, best_value = (n_m, r_m), value

    shortcut, short_value = _shortcut(g, h, omega_h, mp_h, budget)
    if short_value is not None and short_value != best_value:
        raise InternalConsistencyError(
            f"{shortcut} closed form gives {short_value}, profile formula gives {best_value}")

    profile = reps[best_key]
    witness = build_lex_witness(g, profile, h, budget)
    if len(witness) != best_value:
        raise InternalConsistencyError("witness size differs from the formula value")
    return LexResult(best_value, profile, witness, shortcut, lexicographic_product(g, h))
