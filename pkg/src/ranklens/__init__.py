"""Rationalizability and minimum-rank analysis of observed play in
two-player games: exact equilibrium checks, structural classification,
revealed-preference graphs, rationalizing-game synthesis, and
Hadamard-patterned adversarial instances."""

from .errors import (
    BudgetExceeded,
    ChoiceOutsideSubgame,
    CyclicGraph,
    DataError,
    DocumentError,
    EmptySubgame,
    IndexOutOfRange,
    InvalidSize,
    NotDeduped,
    NotLaminar,
    NotPowerOfTwo,
    NotRationalizable,
    NotTwoRegular,
    PreconditionError,
    ProfileOutsideSubgame,
    RanklensError,
    SizeLimitExceeded,
    SizeMismatch,
    SubgameNotFull,
    UniquenessViolated,
    ZeroSignEntry,
)
from .documents import (
    canonical_json,
    dataset_from_document,
    dataset_from_text,
    dataset_to_document,
    dataset_to_text,
    game_from_document,
    game_from_text,
    game_to_document,
    game_to_text,
    parse_json,
)
from .graphs import (
    COL,
    ROW,
    AcyclicityCheck,
    Edge,
    RPGraph,
    SplitRPGraph,
    SplitVertex,
    assign_payoffs_split,
    assign_payoffs_topological,
    build_split_graph,
    build_strong_laminar_graph,
    implement_edges,
    is_acyclic,
    topological_levels,
)
from .hadamard import (
    BlockDifferenceOperator,
    block_difference_certificate,
    hadamard_minrank_bound,
    sylvester_hadamard,
    two_regular_dataset,
    two_regular_sign_pattern,
    uniqueness_variant,
)
from .model import (
    BimatrixGame,
    DataSet,
    Observation,
    SignMatrix,
    StrategyProfile,
    Subgame,
    VerificationReport,
    full_subgame,
    game_rank,
    is_strict_equilibrium,
    rational_matrix_rank,
    rationalizes,
    sign_pattern,
    strict_equilibria,
    validate_dataset,
)
from .oracle import SearchConfig, all_subgame_equilibria, brute_force_min_rank, zero_sum_feasible
from .rationalize import (
    CycleWitness,
    RationalizabilityResult,
    RationalizationCertificate,
    is_rationalizable,
    rationalize_auto,
    rationalize_bounded_rank,
    rationalize_general,
    rationalize_rank_one,
    rationalize_zero_sum,
)
from .structure import (
    LaminarForest,
    StructureReport,
    UniquenessCheck,
    analyze,
    crossing_set,
    crossing_span,
    dedupe_nested,
    is_laminar,
    laminar_forest,
    satisfies_uniqueness,
    subgames_cross,
)

__version__ = "0.1.0"
