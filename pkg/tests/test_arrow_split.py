"""
Tests for analysis/arrow_split.py - arrow splitting and degree-one normalization.

Tests cover:
- Single splits: endpoints, degrees, naming and errors
- Normalization traces and policies
- Path transfer and path-count invariance, per vertex pair on random quivers
- Golden comparison, including a tampered golden quiver
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis.arrow_split import (
    SplitError,
    check_against_golden,
    check_normalization,
    check_order_independence,
    check_split_step,
    normalize_to_degree_one,
    split_arrow,
    transfer_path,
    transfer_path_through,
    weight_discrepancy,
)
from analysis.hilbert import old_vertex_series, path_counts
from core.models import Arrow, WeightedQuiver


@st.composite
def weighted_quivers(draw):
    """Small weighted quivers with loops and parallel arrows allowed."""
    vertices = tuple(f"v{i}" for i in range(1, draw(st.integers(1, 3)) + 1))
    endpoint = st.sampled_from(vertices)
    arrows = tuple(
        Arrow(f"a{k}", draw(endpoint), draw(endpoint), draw(st.integers(1, 4)))
        for k in range(1, draw(st.integers(1, 4)) + 1)
    )
    return WeightedQuiver(vertices=vertices, arrows=arrows)


class TestSplitArrow:
    """Test split_arrow()."""

    def test_heavy_edge(self, heavy_edge):
        """A degree-2 arrow becomes two degree-1 arrows through z1."""
        split, step = split_arrow(heavy_edge, "b1")
        assert split.vertices == ("a", "b", "z1")
        assert split.arrows == (Arrow("b1'", "a", "z1", 1), Arrow("b1''", "z1", "b", 1))
        assert step.new_vertex == "z1"
        assert step.arrow == Arrow("b1", "a", "b", 2)

    def test_arrow_order_kept(self, kronecker):
        """New arrows take the split arrow's position."""
        split, _ = split_arrow(kronecker, "q")
        assert split.arrow_names == ("p", "q'", "q''")

    def test_degree_three_leaves_degree_two(self, free_loops):
        """b'' carries deg(b) - 1."""
        split, step = split_arrow(free_loops, "x3")
        assert step.b_prime.degree == 1
        assert step.b_dblprime.degree == 2
        assert weight_discrepancy(split) == weight_discrepancy(free_loops) - 1

    def test_fresh_vertex_skips_taken(self):
        """Generated vertex names skip existing ones."""
        quiver = WeightedQuiver(vertices=("z1",), arrows=(Arrow("a", "z1", "z1", 2),))
        split, step = split_arrow(quiver, "a")
        assert step.new_vertex == "z2"

    def test_arrow_name_collision(self):
        """A taken primed name gets a #k suffix."""
        quiver = WeightedQuiver(
            vertices=("v",),
            arrows=(Arrow("b", "v", "v", 2), Arrow("b'", "v", "v", 1)),
        )
        split, step = split_arrow(quiver, "b")
        assert step.b_prime.name == "b'#2"
        assert step.b_dblprime.name == "b''"
        assert split.validate() == []

    def test_explicit_vertex_taken(self, heavy_edge):
        """An explicit vertex name must be fresh."""
        with pytest.raises(SplitError, match="already exists"):
            split_arrow(heavy_edge, "b1", new_vertex="a")

    def test_degree_one_arrow(self, kronecker):
        """Degree-1 arrows cannot be split."""
        with pytest.raises(SplitError):
            split_arrow(kronecker, "p")

    def test_unknown_arrow(self, kronecker):
        """Unknown arrows raise SplitError."""
        with pytest.raises(SplitError):
            split_arrow(kronecker, "r")


class TestNormalize:
    """Test normalize_to_degree_one()."""

    def test_free_loops(self, free_loops):
        """D = 3 gives three splits, four vertices and six arrows."""
        normalized, trace = normalize_to_degree_one(free_loops)
        assert len(trace) == 3
        assert normalized.vertices == ("v", "z1", "z2", "z3")
        assert normalized.arrow_names == ("x1", "x2'", "x2''", "x3'", "x3'''", "x3''''")
        assert normalized.all_degree_one

    def test_highest_policy_order(self, free_loops):
        """The highest policy splits the last heavy arrow first."""
        _, trace = normalize_to_degree_one(free_loops, policy="highest")
        assert [step.arrow.name for step in trace] == ["x3", "x3''", "x2"]

    def test_already_degree_one(self):
        """Nothing to split means an empty trace."""
        quiver = WeightedQuiver(vertices=("a",), arrows=(Arrow("x", "a", "a"),))
        normalized, trace = normalize_to_degree_one(quiver)
        assert normalized == quiver
        assert len(trace) == 0

    def test_custom_prefix(self, heavy_edge):
        """Generated vertices use the requested prefix."""
        normalized, trace = normalize_to_degree_one(heavy_edge, vertex_prefix="w")
        assert trace.new_vertices == ("w1",)

    def test_unknown_policy(self, heavy_edge):
        """Only lowest and highest are accepted."""
        with pytest.raises(SplitError, match="unknown split policy"):
            normalize_to_degree_one(heavy_edge, policy="random")

    def test_old_vertex_counts_preserved(self, free_loops):
        """Paths v -> v are counted the same before and after normalization."""
        normalized, _ = normalize_to_degree_one(free_loops)
        before = path_counts(free_loops, 8).restricted(["v"])
        after = path_counts(normalized, 8).restricted(["v"])
        assert before == after

    @given(weighted_quivers(), st.sampled_from(["lowest", "highest"]))
    @settings(max_examples=80, deadline=None)
    def test_counts_between_old_vertices_preserved(self, quiver, policy):
        """For every pair of old vertices, paths of each degree <= 10 keep their number."""
        normalized, trace = normalize_to_degree_one(quiver, policy=policy)
        assert normalized.all_degree_one
        assert len(trace) == sum(arrow.degree - 1 for arrow in quiver.arrows)
        before = path_counts(quiver, 10)
        after = path_counts(normalized, 10)
        for source in quiver.vertices:
            for target in quiver.vertices:
                for degree in range(11):
                    assert before.count(source, target, degree) == after.count(source, target, degree), (
                        source, target, degree,
                    )
        assert old_vertex_series(before, quiver.vertices) == old_vertex_series(after, quiver.vertices)


class TestTransferPath:
    """Test path transfer through splits."""

    def test_replaces_each_occurrence(self, free_loops):
        """Every b becomes b'·b'', degree unchanged."""
        _, step = split_arrow(free_loops, "x2")
        path = free_loops.path(["x2", "x1", "x2"])
        image = transfer_path(step, path)
        assert image.arrows == ("x2'", "x2''", "x1", "x2'", "x2''")
        assert image.degree == path.degree

    def test_through_trace(self, free_loops):
        """A path transferred through the full trace uses only degree-1 arrows."""
        normalized, trace = normalize_to_degree_one(free_loops)
        image = transfer_path_through(trace, free_loops.path(["x3"]))
        assert image.arrows == ("x3'", "x3'''", "x3''''")
        assert normalized.path(image.arrows) == image


class TestSplitChecks:
    """Test the split verification checks."""

    @pytest.mark.parametrize("fixture", ["free_loops", "kronecker", "heavy_edge"])
    def test_normalization_passes(self, fixture, request):
        """Every step of a normalization passes its checks."""
        report = check_normalization(request.getfixturevalue(fixture), max_degree=6)
        assert report.passed, str(report)

    def test_single_step(self, kronecker):
        """check_split_step passes on a real split."""
        split, step = split_arrow(kronecker, "q")
        assert check_split_step(kronecker, step, split, max_degree=5).passed

    def test_order_independence(self, free_loops):
        """Both policies agree on sizes and old-vertex counts."""
        assert check_order_independence(free_loops, max_degree=6).passed

    def test_golden_passes(self, free_loops):
        """The computed normalization matches itself as a golden quiver."""
        normalized, trace = normalize_to_degree_one(free_loops)
        report = check_against_golden(free_loops, trace, normalized, max_degree=6)
        assert report.passed, str(report)

    def test_retargeted_golden_fails(self, free_loops):
        """Retargeting one arrow of the golden quiver is detected."""
        normalized, trace = normalize_to_degree_one(free_loops)
        arrows = tuple(
            Arrow(a.name, a.source, "z1", a.degree) if a.name == "x3''''" else a
            for a in normalized.arrows
        )
        tampered = WeightedQuiver(normalized.vertices, arrows)
        report = check_against_golden(free_loops, trace, tampered, max_degree=6)
        assert not report.passed
        assert report.failure_count > 0

    def test_tampered_step_fails(self, heavy_edge):
        """A split quiver with a wrong b'' target fails check_split_step."""
        split, step = split_arrow(heavy_edge, "b1")
        broken = WeightedQuiver(
            split.vertices,
            (split.arrows[0], Arrow("b1''", "z1", "a", 1)),
        )
        report = check_split_step(heavy_edge, step, broken, max_degree=4)
        assert not report.passed
