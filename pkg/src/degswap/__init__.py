"""Switching Markov chains for graphs and digraphs with prescribed degrees.

The package constructs realizations of degree sequences, samples them
uniformly via degree-preserving switching chains, recognizes the degree
sequences for which plain arc swaps already suffice, and enumerates the
explicit chain state graphs at desk scale to verify their structure.
"""

from .arcswap import (
    ArcBias,
    ArcSwapReport,
    InducedCycleSet,
    arc_probability_bias,
    detect_induced_cycle_sets,
    find_breaking_walk,
    recognize,
    reduce_sequence,
)
from .chain import (
    DEFAULT_SEED,
    ChainConfig,
    ChainResult,
    MoveUniverse,
    derive_seed,
    run_chain,
    step_directed_full,
    step_directed_plain,
    step_undirected,
)
from .core import (
    AlternatingCycle,
    AlternatingWalk,
    CanonicalKey,
    DegreeSequence,
    DiDegreeSequence,
    Digraph,
    Graph,
    SymmetricDifference,
    canonical_key,
    decompose_alternating,
    find_disjoint_3walk,
    format_degree_sequence,
    format_edgelist,
    parse_degree_sequence,
    parse_edgelist,
    symmetric_difference,
)
from .errors import (
    InternalInconsistencyError,
    InvalidInputError,
    InvalidMoveError,
    RealizationError,
    ResourceLimitError,
)
from .generators import BlockedInstanceSpec, generate_blocked
from .moves import (
    swap_alternating_cycle,
    try_2swap_directed,
    try_2swap_undirected,
    try_reorient_3cycle,
)
from .realize import (
    RealizabilityReport,
    is_digraphical,
    is_graphical,
    realize_directed,
    realize_undirected,
)
from .statespace import (
    BoundReport,
    ComparisonReport,
    PropertyReport,
    StateGraph,
    build_state_graph,
    check_diameter_bounds,
    check_properties,
    empirical_transition_check,
    enumerate_realizations,
)
from .stats import StatsReport, count_directed_3cycles, ensemble_stats

__version__ = "0.1.0"
