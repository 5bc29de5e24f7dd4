"""Exact monophonic position computations on graphs and their products."""

from .budget import Budget
from .errors import (
    BudgetExceeded,
    CapacityError,
    DisconnectedError,
    DomainError,
    InternalConsistencyError,
    MonoposError,
    ParseError,
    PreconditionError,
    ValidationError,
)
from .families import from_descriptor, generate_family
from .graph import INF, Graph, Invariants, VertexSet, distance_matrix, invariants
from .io import parse_graph, serialize_graph
from .lex import LexResult, build_lex_witness, lex_mp
from .paths import find_bad_path, find_induced_path_through, is_induced_path, monophonic_interval
from .positions import (
    ComponentProfile,
    SolveResult,
    enumerate_mp_profiles,
    gp_number,
    is_maximal_mp_set,
    is_mp_set,
    mp_decomposition,
    mp_independent,
    mp_lower,
    mp_number,
)
from .products import (
    MpClass,
    ProductGraph,
    cartesian_product,
    classify_mp_set,
    lex_distance,
    lexicographic_product,
    project,
)

__version__ = "0.1.0"
