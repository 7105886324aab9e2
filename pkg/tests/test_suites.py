"""
Tests for analysis/suites.py and analysis/corpus.py - named verification suites.

Tests cover:
- Each suite on the bundled examples with small settings
- Connectification graded dimensions
- Seeded random corpora (slow)
- Each check family at the configured default scale (slow)
"""

import pytest

from analysis.arrow_split import check_normalization, check_order_independence, normalize_to_degree_one
from analysis.corpus import presentation_corpus, quiver_corpus
from analysis.graded_reps import check_adjunction
from analysis.suites import SUITES, UnknownSuiteError, check_connectify, run_suite
from analysis.ufnarovskii import (
    build_ufnarovskii,
    check_bijection,
    check_f_is_graded_hom,
    check_graded_generation,
    check_round_trip,
)
from config import VerificationConfig, get_pipeline_config
from core.models import Arrow, QuiverMonomialAlgebra, WeightedQuiver

SMALL = VerificationConfig(
    max_degree=5,
    trials=3,
    seed=1,
    bijection_max_length=4,
    round_trip_max_length=4,
    multiplicativity_pairs=40,
    max_word_length=4,
    window_low=0,
    window_high=3,
    max_dimension=2,
    split_max_degree=5,
)


class TestRunSuite:
    """Test run_suite() on the bundled examples."""

    @pytest.mark.parametrize("suite", SUITES)
    @pytest.mark.parametrize("fixture", ["three_letter", "weighted_xy", "free_loops"])
    def test_suites_pass(self, suite, fixture, request):
        """Every suite passes on every example."""
        reports = run_suite(suite, request.getfixturevalue(fixture), settings=SMALL)
        assert reports
        for report in reports:
            assert report.passed, str(report)

    def test_ufgraph_growth_note(self, weighted_xy):
        """The ufgraph suite records the growth class."""
        reports = run_suite("ufgraph", weighted_xy, settings=SMALL)
        assert "growth: Polynomial(1)" in reports[0].notes

    def test_split_with_golden(self, free_loops):
        """A golden quiver adds one more report."""
        golden, _ = normalize_to_degree_one(free_loops)
        reports = run_suite("split", free_loops, settings=SMALL, golden=golden)
        assert [report.name for report in reports] == [
            "split.normalize",
            "split.order_independence",
            "split.golden",
        ]
        assert all(report.passed for report in reports)

    def test_unknown_suite(self, weighted_xy):
        """Unknown suite names raise."""
        with pytest.raises(UnknownSuiteError):
            run_suite("everything", weighted_xy, settings=SMALL)


class TestCheckConnectify:
    """Test check_connectify()."""

    def test_free_loops(self, free_loops):
        """Graded dimensions agree in every positive degree."""
        report = check_connectify(free_loops, 6)
        assert report.passed
        assert report.checks_run == 7

    def test_with_relations(self):
        """Relations are carried into the forbidden words."""
        quiver = WeightedQuiver(
            vertices=("a", "b"),
            arrows=(Arrow("u", "a", "b", 1), Arrow("w", "b", "a", 2)),
        )
        algebra = QuiverMonomialAlgebra(quiver=quiver, relations=(("u", "w", "u"),))
        assert check_connectify(algebra, 8).passed


@pytest.mark.slow
class TestRandomCorpora:
    """Run the suites over seeded random corpora."""

    @pytest.mark.parametrize("suite", ["ufgraph", "hilbert"])
    def test_presentations(self, suite):
        """Presentation suites pass on a random corpus."""
        for presentation in presentation_corpus(seed=2024, size=15, max_degree=2):
            for report in run_suite(suite, presentation, settings=SMALL):
                assert report.passed, f"{presentation}: {report}"

    @pytest.mark.parametrize("suite", ["split", "adjunction", "hilbert"])
    def test_quivers(self, suite):
        """Quiver suites pass on a random corpus of weighted quivers."""
        for quiver in quiver_corpus(seed=2024, size=10, heavy=True):
            for report in run_suite(suite, quiver, settings=SMALL):
                assert report.passed, f"{quiver}: {report}"

    def test_corpus_is_reproducible(self):
        """The same seed gives the same corpus."""
        assert quiver_corpus(seed=9, size=5) == quiver_corpus(seed=9, size=5)
        assert presentation_corpus(seed=9, size=5) == presentation_corpus(seed=9, size=5)


@pytest.mark.slow
class TestDefaultScale:
    """Run each check family over seeded corpora with the bundled verification settings."""

    @pytest.fixture
    def defaults(self) -> VerificationConfig:
        return get_pipeline_config().verification

    def test_bundled_settings(self, defaults):
        """The bundled settings are the scale the checks below rely on."""
        assert (defaults.bijection_max_length, defaults.round_trip_max_length) == (8, 6)
        assert (defaults.multiplicativity_pairs, defaults.max_degree) == (1000, 8)
        assert defaults.split_max_degree == 10
        assert (defaults.window_low, defaults.window_high, defaults.max_dimension) == (0, 8, 4)

    def test_bijection_and_round_trip(self, defaults):
        """Length bijection up to 8 and round trip up to 6 on fifty presentations."""
        corpus = presentation_corpus(seed=defaults.seed, size=50)
        assert all(len(word) <= 8 for presentation in corpus for word in presentation.forbidden)
        for presentation in corpus:
            graph = build_ufnarovskii(presentation)
            for report in (
                check_bijection(graph, defaults.bijection_max_length),
                check_round_trip(graph, defaults.round_trip_max_length),
            ):
                assert report.passed, f"{presentation}: {report}"

    def test_graded_hom_and_generation(self, defaults):
        """A thousand word pairs per presentation and every path of degree <= 8 generated from its label."""
        for presentation in presentation_corpus(seed=defaults.seed, size=50, max_degree=2):
            graph = build_ufnarovskii(presentation)
            hom = check_f_is_graded_hom(
                graph, defaults.multiplicativity_pairs, defaults.max_word_length, defaults.seed
            )
            assert hom.passed, f"{presentation}: {hom}"
            assert hom.checks_run >= defaults.multiplicativity_pairs
            generation = check_graded_generation(graph, defaults.max_degree)
            assert generation.passed, f"{presentation}: {generation}"

    def test_split_invariance(self, defaults):
        """Normalization and order independence with counts up to degree 10."""
        for quiver in quiver_corpus(seed=defaults.seed, size=20, heavy=True):
            for report in (
                check_normalization(quiver, defaults.split_max_degree),
                check_order_independence(quiver, defaults.split_max_degree),
            ):
                assert report.passed, f"{quiver}: {report}"

    def test_adjunction(self, defaults):
        """At least a hundred sampled representations over ten quivers, window 0..8, dimensions <= 4."""
        samples = 10
        quivers = quiver_corpus(seed=defaults.seed, size=10, heavy=True)
        sampled = 0
        for quiver in quivers:
            report = check_adjunction(
                quiver,
                samples=samples,
                window=(defaults.window_low, defaults.window_high),
                seed=defaults.seed,
                max_dimension=defaults.max_dimension,
            )
            assert report.passed, f"{quiver}: {report}"
            sampled += samples * sum(1 for arrow in quiver.arrows if arrow.degree > 1)
        assert sampled >= 100
