"""Exact Roman domination and related invariants on direct and rooted product graphs."""

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    HypothesisFailed,
    InvalidFamilyParams,
    InvalidVertex,
    InvalidWitness,
    LoopRejected,
    ParseError,
    RomdomError,
    Undefined,
    WouldBeEmpty,
)
from .graph import (
    Graph,
    ProductIndexMap,
    RootedProduct,
    build_from_edges,
    delete_vertex,
    direct_product,
    generate,
    rooted_product,
    structure_queries,
)
from .labelings import RomanLabeling, VertexSet, is_rdf, is_trdf, set_predicates, weight
from .solvers import (
    InvariantResult,
    SolverBudget,
    enumerate_gamma_tR_functions,
    gamma,
    gamma_R,
    gamma_R_forced,
    gamma_t,
    gamma_tR,
    kernel_number,
    rho,
    rho_o,
)

__version__ = "0.1.0"
