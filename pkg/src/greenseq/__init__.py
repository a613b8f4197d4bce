"""Exact integer engine for exchange-matrix mutation, c-/g-vector patterns,
green/reddening sequence calculus, and bounded exchange-graph search."""

from .intmat import (
    DirectedGraph,
    IntMatrix,
    Permutation,
    admissible_source_sequence,
    gamma_graph,
    is_acyclic,
    is_sign_skew_symmetric,
    is_sink,
    is_source,
    mutate_matrix,
    perm_matrix,
    positive_part_row,
    signed_diagonal,
    skew_symmetrizer,
    submatrix,
)
from .pattern import (
    InvariantViolation,
    PatternContext,
    Seed,
    SeedPair,
    SignCoherenceError,
    check_first_duality,
    check_second_duality,
    column_sign,
    hemisphere,
    initial_seed,
    is_nonpositive_C,
    mutate_seed,
    rebase_c_matrix,
    row_sign,
)
from .seqcalc import (
    ConjugationDifference,
    MutabilityError,
    SequenceTrace,
    SequenceVerdict,
    check_reddening_wellformed,
    classify,
    conjugate,
    conjugation_difference,
    green_tail,
    restrict_to_submatrix,
    rotate,
    run_sequence,
    verify_no_heavy_target_mutation,
    verify_tbs_cvectors,
    verify_target_before_source,
)
from .explorer import (
    ExchangeGraphStore,
    Rank2Certificate,
    SearchBudget,
    SearchResult,
    StoreFormatError,
    build_exchange_graph,
    canonical_form,
    canonical_key,
    certify_rank2_nontermination,
    enumerate_greening,
    enumerate_mgs,
    enumerate_reddening,
    find_mgs,
    find_reddening,
    load_store,
    random_acyclic_matrix,
    save_store,
    verify_total_mutability,
)

__version__ = "0.1.0"
