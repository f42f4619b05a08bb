"""Reconstruction of permutations from min/max betweenness profiles."""

from ._kernels import backend
from .errors import (
    BadEndpoints,
    COutOfRange,
    CyclicGraph,
    InternalInconsistency,
    KMismatch,
    MinMaxError,
    MismatchedN,
    NotBijection,
    NotDirected,
    NotLinear,
    PreconditionViolation,
    ProfileSyntaxError,
    ProfileValidationError,
    TooLarge,
)
from .formats import emit_permutation, emit_profile, parse_permutation, parse_profile
from .graph import (
    ArcKind,
    BArcPair,
    EasyArcsResult,
    PrecedenceGraph,
    Verdict,
    b_arc_pairs,
    build_closure,
    build_easy_arcs,
    endpoint_seeded_graph,
    has_cycle,
    is_settled,
    to_dot,
    topo_sort,
)
from .profiles import (
    BConstraintPair,
    Direction,
    KConstraint,
    NBRecord,
    Permutation,
    Profile,
    ProfileViolation,
    b_constraints,
    compute_profile,
    compute_set_profile,
    is_linear,
    nb_records,
    nb_set,
    validate_permutation,
    validate_profile,
)
from .reconstruction import (
    MinKResult,
    UniquenessReport,
    collision_pair,
    fixed_positions_check,
    is_unique,
    min_unique_k,
)
from .solvers import (
    BOrientation,
    Orientation,
    Setting,
    SolveOutcome,
    brute_force_solutions,
    solve_fpt_directed,
    solve_linear,
    solve_undirected,
    verify,
)

__version__ = "0.1.0"
