"""
Tests for data_processing/pipeline.py - chained constructions between algebra classes.
"""

import pytest

from core.models import AlgebraClass, Generator, MonomialPresentation, WeightedQuiver
from data_processing.pipeline import UnreachableTargetError, plan_route, run_pipeline


class TestPlanRoute:
    """Test the breadth-first route search."""

    def test_already_in_class(self, weighted_xy):
        """No steps when the input already belongs to the target class."""
        assert plan_route(weighted_xy, AlgebraClass.MA) == []

    def test_presentation_to_pa1(self, weighted_xy):
        """A weighted presentation reaches PA1 via Q(A) and normalization."""
        route = plan_route(weighted_xy, AlgebraClass.PA1)
        assert [name for name, _, _ in route] == ["ufgraph", "normalize"]
        final = route[-1][1]
        assert final.vertices == ("xx", "xy", "yy", "z1")
        assert final.arrow_names == ("xxy", "xyy", "yyy'", "yyy''")

    def test_presentation_to_cma1(self, weighted_xy):
        """CMA1 needs a further connectification."""
        route = plan_route(weighted_xy, AlgebraClass.CMA1)
        assert [name for name, _, _ in route] == ["ufgraph", "normalize", "connectify"]
        final = route[-1][1]
        assert isinstance(final, MonomialPresentation)
        x1, x2, x3, x4 = "xxy", "xyy", "yyy'", "yyy''"
        assert final.generators == tuple(Generator(name, 1) for name in (x1, x2, x3, x4))
        assert final.forbidden == (
            (x1, x1), (x1, x3), (x1, x4),
            (x2, x1), (x2, x2), (x2, x4),
            (x3, x1), (x3, x2), (x3, x3),
            (x4, x1), (x4, x2), (x4, x4),
        )

    def test_quiver_to_cma(self, free_loops):
        """A quiver reaches CMA by connectification alone."""
        route = plan_route(free_loops, AlgebraClass.CMA)
        assert [name for name, _, _ in route] == ["connectify"]

    def test_unreachable(self):
        """A quiver with no arrows cannot leave its class."""
        with pytest.raises(UnreachableTargetError):
            plan_route(WeightedQuiver(vertices=("a",)), AlgebraClass.CMA)


class TestRunPipeline:
    """Test run_pipeline() reports."""

    def test_steps_verified(self, weighted_xy):
        """Every executed step carries passing reports."""
        report = run_pipeline(weighted_xy, AlgebraClass.PA1, max_degree=5, seed=3)
        assert report.passed
        assert [step.name for step in report.steps] == ["ufgraph", "normalize"]
        assert report.steps[0].before.primary == AlgebraClass.CMA
        assert report.steps[0].after.primary == AlgebraClass.WPA
        assert report.steps[1].after.primary == AlgebraClass.PA1
        assert len(report.steps[1].trace) == 1
        assert all(step.reports for step in report.steps)

    def test_final_artifact(self, free_loops):
        """The last artifact is in the target class."""
        report = run_pipeline(free_loops, AlgebraClass.PA1, max_degree=4)
        assert isinstance(report.final, WeightedQuiver)
        assert report.final.all_degree_one
        assert report.steps[0].reports[0].name == "split.normalize"

    def test_no_steps(self, three_letter):
        """A CMA1 input needs nothing to reach CMA."""
        report = run_pipeline(three_letter, AlgebraClass.CMA)
        assert report.steps == []
        assert report.final is None
        assert "no steps needed" in str(report)

    def test_to_dict(self, weighted_xy):
        """Serialized reports include the trace of normalize steps."""
        data = run_pipeline(weighted_xy, AlgebraClass.PA1, max_degree=4).to_dict()
        assert data["input_class"] == "CMA (also MA)"
        assert data["target"] == "PA1"
        assert data["passed"] is True
        assert data["steps"][1]["trace"] == [
            {"arrow": "yyy", "new_vertex": "z1", "b_prime": "yyy'", "b_dblprime": "yyy''"}
        ]
        assert data["steps"][0]["artifact"]["kind"] == "quiver"
