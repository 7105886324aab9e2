"""
Analysis module for the monomial quiver pipeline.

Contains the word automaton, path enumeration and counting, the Ufnarovskii
graph, arrow splitting, truncated graded representations, and the
verification suites built on them.
"""

from analysis.legal_words import (
    BudgetExceededError,
    DegreeSeries,
    FactorAutomaton,
    UnknownLetterError,
    build_automaton,
    count_by_degree,
    count_by_length,
    enumerate_by_length,
    is_legal,
)
from analysis.paths import iter_paths
from analysis.ufnarovskii import (
    Growth,
    LabeledPath,
    PathSum,
    UfnGraph,
    apply_f,
    build_ufnarovskii,
    classify_growth,
    ell,
    path_from_label_target,
)
from analysis.arrow_split import (
    SplitError,
    SplitStep,
    SplitTrace,
    normalize_to_degree_one,
    split_arrow,
    transfer_path,
    weight_discrepancy,
)
from analysis.hilbert import (
    PathCountTable,
    compare_series,
    monomial_path_counts,
    path_counts,
    path_counts_by_length,
)
from analysis.graded_reps import (
    RepMorphism,
    RepresentationError,
    TruncatedGradedRep,
    WindowError,
    check_adjunction,
    counit_eps,
    functor_F,
    functor_G,
    is_torsion_window,
    shift,
    torsion_transfer_check,
)
from analysis.suites import SUITES, UnknownSuiteError, run_suite

__all__ = [
    # Legal words
    "BudgetExceededError",
    "DegreeSeries",
    "FactorAutomaton",
    "UnknownLetterError",
    "build_automaton",
    "count_by_degree",
    "count_by_length",
    "enumerate_by_length",
    "is_legal",
    # Paths
    "iter_paths",
    # Ufnarovskii graph
    "Growth",
    "LabeledPath",
    "PathSum",
    "UfnGraph",
    "apply_f",
    "build_ufnarovskii",
    "classify_growth",
    "ell",
    "path_from_label_target",
    # Arrow splitting
    "SplitError",
    "SplitStep",
    "SplitTrace",
    "normalize_to_degree_one",
    "split_arrow",
    "transfer_path",
    "weight_discrepancy",
    # Path counts
    "PathCountTable",
    "compare_series",
    "monomial_path_counts",
    "path_counts",
    "path_counts_by_length",
    # Graded representations
    "RepMorphism",
    "RepresentationError",
    "TruncatedGradedRep",
    "WindowError",
    "check_adjunction",
    "counit_eps",
    "functor_F",
    "functor_G",
    "is_torsion_window",
    "shift",
    "torsion_transfer_check",
    # Suites
    "SUITES",
    "UnknownSuiteError",
    "run_suite",
]
