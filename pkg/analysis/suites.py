"""
Named verification suites.

A suite takes any validated input, derives the object it needs (the
Ufnarovskii graph of a presentation, the quiver of a quiver input) and returns
the CheckReports of its checks. Suites never raise on a failed identity.
"""

from typing import Optional, Union

from analysis.arrow_split import (
    check_against_golden,
    check_normalization,
    check_order_independence,
    normalize_to_degree_one,
)
from analysis.graded_reps import check_adjunction
from analysis.hilbert import check_counts_against_enumeration, compare_series, monomial_path_counts
from analysis.legal_words import build_automaton, count_by_degree
from analysis.ufnarovskii import (
    build_ufnarovskii,
    check_arrow_degrees,
    check_bijection,
    check_f_is_graded_hom,
    check_graded_generation,
    check_round_trip,
    classify_growth,
)
from config import VerificationConfig, get_pipeline_config
from core.logging_config import get_logger
from core.models import (
    CheckReport,
    MonomialPresentation,
    QuiverMonomialAlgebra,
    WeightedQuiver,
)
from data_processing.transforms import connectify, reduce_forbidden

logger = get_logger(__name__)

AlgebraInput = Union[WeightedQuiver, MonomialPresentation, QuiverMonomialAlgebra]

SUITES = ("ufgraph", "split", "adjunction", "hilbert")


class UnknownSuiteError(ValueError):
    """Raised for a suite name outside SUITES."""


def _presentation_of(value: AlgebraInput, reduce: bool) -> MonomialPresentation:
    presentation = value if isinstance(value, MonomialPresentation) else connectify(value)
    return reduce_forbidden(presentation) if reduce else presentation


def _quiver_of(value: AlgebraInput, reduce: bool) -> WeightedQuiver:
    if isinstance(value, MonomialPresentation):
        return build_ufnarovskii(_presentation_of(value, reduce)).quiver
    if isinstance(value, QuiverMonomialAlgebra):
        return value.quiver
    return value


def ufgraph_suite(presentation: MonomialPresentation, settings: VerificationConfig) -> list[CheckReport]:
    graph = build_ufnarovskii(presentation)
    reports = [
        check_arrow_degrees(graph),
        check_bijection(graph, settings.bijection_max_length),
        check_round_trip(graph, settings.round_trip_max_length),
        check_f_is_graded_hom(
            graph, settings.multiplicativity_pairs, settings.max_word_length, settings.seed
        ),
        check_graded_generation(graph, settings.max_degree),
    ]
    reports[0].note(f"growth: {classify_growth(graph)}")
    return reports


def split_suite(
    quiver: WeightedQuiver,
    settings: VerificationConfig,
    golden: Optional[WeightedQuiver] = None,
    policy: Optional[str] = None,
) -> list[CheckReport]:
    reports = [
        check_normalization(quiver, settings.split_max_degree, policy),
        check_order_independence(quiver, settings.split_max_degree),
    ]
    if golden is not None:
        _, trace = normalize_to_degree_one(quiver, policy=policy)
        reports.append(check_against_golden(quiver, trace, golden, settings.split_max_degree))
    return reports


def adjunction_suite(quiver: WeightedQuiver, settings: VerificationConfig) -> list[CheckReport]:
    return [
        check_adjunction(
            quiver,
            samples=settings.trials,
            window=(settings.window_low, settings.window_high),
            seed=settings.seed,
            max_dimension=settings.max_dimension,
        )
    ]


def hilbert_suite(value: AlgebraInput, settings: VerificationConfig, reduce: bool) -> list[CheckReport]:
    if isinstance(value, MonomialPresentation):
        presentation = _presentation_of(value, reduce)
        comparison = compare_series(presentation, settings.max_degree, settings.bijection_max_length)
        graph = build_ufnarovskii(presentation)
        return [
            comparison.report,
            check_counts_against_enumeration(graph.quiver, settings.max_degree),
        ]
    reports = [check_counts_against_enumeration(_quiver_of(value, reduce), settings.max_degree)]
    if isinstance(value, QuiverMonomialAlgebra) or value.arrows:
        reports.append(check_connectify(value, settings.max_degree))
    return reports


def check_connectify(
    value: Union[QuiverMonomialAlgebra, WeightedQuiver],
    max_degree: int,
) -> CheckReport:
    """
    Check that k + A_{>=1} has the graded dimensions of A in every degree >= 1.

    Degree 0 is skipped: A_0 has one idempotent per vertex, the
    connected algebra only the unit.
    """
    presentation = connectify(value)
    algebra_series = monomial_path_counts(value, max_degree)
    connected = count_by_degree(build_automaton(presentation), max_degree)

    report = CheckReport(name="connectify.graded_dimension")
    for d in range(1, max_degree + 1):
        report.record(
            algebra_series[d] == connected[d],
            f"degree {d}: kQ/I has {algebra_series[d]} paths, k + A_>=1 has {connected[d]} words",
        )
    report.record(connected[0] == 1, f"connected algebra has dimension {connected[0]} in degree 0")
    return report


def run_suite(
    name: str,
    value: AlgebraInput,
    settings: Optional[VerificationConfig] = None,
    golden: Optional[WeightedQuiver] = None,
    reduce: Optional[bool] = None,
    policy: Optional[str] = None,
) -> list[CheckReport]:
    """
    Run one named suite on a validated input.

    Args:
        name: One of SUITES
        value: Parsed input
        settings: Verification settings (defaults to the loaded config)
        golden: Stored normalization to check (split suite only)
        reduce: Reduce the forbidden set before building Q(A)
        policy: Split policy for the split suite

    Raises:
        UnknownSuiteError: If the suite name is not known
    """
    config = get_pipeline_config()
    settings = settings or config.verification
    reduce = config.enumeration.reduce_forbidden if reduce is None else reduce

    logger.info(f"Running suite {name!r}")
    if name == "ufgraph":
        return ufgraph_suite(_presentation_of(value, reduce), settings)
    if name == "split":
        return split_suite(_quiver_of(value, reduce), settings, golden, policy)
    if name == "adjunction":
        return adjunction_suite(_quiver_of(value, reduce), settings)
    if name == "hilbert":
        return hilbert_suite(value, settings, reduce)
    raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
