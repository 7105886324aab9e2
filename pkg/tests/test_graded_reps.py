"""
Tests for analysis/graded_reps.py - truncated graded representations and the split functors.

Tests cover:
- Representation validation, shifts and direct sums
- Projectives, element morphisms, kernels and cokernels
- The functors F and G and the counit on hand-built and sampled representations
- Torsion in a window
- Negative controls: perturbed morphisms across a random corpus and a tampered functor image
"""

import numpy as np
import pytest
from sympy import ImmutableMatrix

from analysis.graded_reps import (
    RepMorphism,
    RepresentationError,
    TruncatedGradedRep,
    WindowError,
    check_adjunction,
    check_counit,
    check_functors_on_morphism,
    check_perturbation_rejected,
    check_split_functors,
    cokernel,
    counit_eps,
    direct_sum,
    element_morphism,
    functor_F,
    functor_G,
    identity_morphism,
    is_identity,
    is_torsion_window,
    kernel,
    perturb_morphism,
    projective,
    random_morphism_into,
    random_sample,
    rep_from_dict,
    rep_to_dict,
    shift,
    split_context,
    torsion_transfer_check,
    validate_morphism,
    zero_rep,
)
from analysis.corpus import quiver_corpus
from analysis.ufnarovskii import build_ufnarovskii
from core.models import CheckReport


def _edge_rep(heavy_edge) -> TruncatedGradedRep:
    """k in degree 0 at a, mapped isomorphically to k in degree 2 at b."""
    return TruncatedGradedRep(
        quiver=heavy_edge,
        low=0,
        high=3,
        dims={"a": (1, 0, 0, 0), "b": (0, 0, 1, 0)},
        maps={
            ("b1", 0): ImmutableMatrix([[1]]),
            ("b1", 1): ImmutableMatrix(0, 0, []),
        },
    )


class TestTruncatedGradedRep:
    """Test basic representation operations."""

    def test_validate(self, heavy_edge):
        """A consistent representation validates cleanly."""
        assert _edge_rep(heavy_edge).validate() == []

    def test_validate_bad_shape(self, heavy_edge):
        """A map of the wrong shape is reported."""
        rep = _edge_rep(heavy_edge)
        broken = TruncatedGradedRep(
            rep.quiver, rep.low, rep.high, rep.dims,
            {**rep.maps, ("b1", 0): ImmutableMatrix([[1, 0]])},
        )
        assert broken.validate() == ["arrow b1 degree 0: shape (1, 2), expected (1, 1)"]

    def test_below_window_is_zero(self, heavy_edge):
        """Components below the window are zero."""
        rep = _edge_rep(heavy_edge)
        assert rep.dim("a", -1) == 0
        assert rep.map("b1", -1).shape == (0, 0)

    def test_shift(self, heavy_edge):
        """M(1) moves the window down by one."""
        shifted = shift(_edge_rep(heavy_edge), 1)
        assert (shifted.low, shifted.high) == (-1, 2)
        assert shifted.dim("a", -1) == 1
        assert shifted.map("b1", -1) == ImmutableMatrix([[1]])

    def test_direct_sum(self, heavy_edge):
        """Dimensions add and maps become block diagonal."""
        rep = _edge_rep(heavy_edge)
        total = direct_sum(rep, rep)
        assert total.dims["a"] == (2, 0, 0, 0)
        assert total.map("b1", 0) == ImmutableMatrix([[1, 0], [0, 1]])

    def test_zero_rep(self, kronecker):
        """The zero representation has total dimension zero."""
        assert zero_rep(kronecker, 0, 2).is_zero()

    def test_empty_window(self, kronecker):
        """An empty window is rejected."""
        with pytest.raises(WindowError):
            zero_rep(kronecker, 3, 2)

    def test_round_trip_dict(self, heavy_edge):
        """Serialized representations load back unchanged."""
        rep = _edge_rep(heavy_edge)
        data = rep_to_dict(rep)
        assert data["maps"][0]["matrix"] == [["1/1"]]
        assert rep_from_dict(heavy_edge, data) == rep


class TestProjectives:
    """Test truncated projectives and element morphisms."""

    def test_kronecker_projective(self, kronecker):
        """e_a kQ has p in degree 1 and q in degree 2 at b."""
        proj = projective(kronecker, "a", 0, 0, 3)
        assert proj.rep.dims == {"a": (1, 0, 0, 0), "b": (0, 1, 1, 0)}
        assert [str(p) for p in proj.basis[("b", 2)]] == ["q"]
        assert proj.rep.validate() == []

    def test_shifted_projective(self, kronecker):
        """The generator sits in the shift degree."""
        proj = projective(kronecker, "a", 2, 0, 3)
        assert proj.rep.dims["a"] == (0, 0, 1, 0)
        assert proj.rep.dims["b"] == (0, 0, 0, 1)

    def test_shift_outside_window(self, kronecker):
        """The shift must lie inside the window."""
        with pytest.raises(WindowError):
            projective(kronecker, "a", 5, 0, 3)

    def test_element_morphism_is_valid(self, heavy_edge):
        """The morphism determined by an element commutes with every arrow."""
        rep = _edge_rep(heavy_edge)
        proj = projective(heavy_edge, "a", 0, 0, 3)
        morphism = element_morphism(proj, rep, ImmutableMatrix([[3]]))
        assert validate_morphism(morphism) == []
        assert morphism.component("b", 2) == ImmutableMatrix([[3]])

    def test_element_wrong_length(self, heavy_edge):
        """Elements must match the target dimension."""
        proj = projective(heavy_edge, "a", 0, 0, 3)
        with pytest.raises(RepresentationError):
            element_morphism(proj, _edge_rep(heavy_edge), ImmutableMatrix([[1], [2]]))


class TestKernelCokernel:
    """Test kernel() and cokernel()."""

    def test_identity(self, heavy_edge):
        """The identity has zero kernel and zero cokernel."""
        morphism = identity_morphism(_edge_rep(heavy_edge))
        assert kernel(morphism)[0].is_zero()
        assert cokernel(morphism)[0].is_zero()

    def test_cokernel_of_generator(self, kronecker):
        """Quotienting e_a kQ by the submodule generated by p leaves e_a and q."""
        proj = projective(kronecker, "a", 0, 0, 3)
        sub = projective(kronecker, "b", 1, 0, 3)
        morphism = element_morphism(sub, proj.rep, ImmutableMatrix([[1]]))
        assert validate_morphism(morphism) == []

        quotient, projection = cokernel(morphism)
        assert quotient.dims == {"a": (1, 0, 0, 0), "b": (0, 0, 1, 0)}
        assert validate_morphism(projection) == []

        inclusion_kernel, _ = kernel(morphism)
        assert inclusion_kernel.is_zero()


class TestSplitFunctors:
    """Test F, G and the counit on a hand-built representation."""

    def test_f_places_source_at_z(self, heavy_edge):
        """F(M)_z is M_a shifted by one; b' is the identity."""
        context = split_context(heavy_edge, "b1")
        image = functor_F(context, _edge_rep(heavy_edge))
        assert image.dims["z1"] == (0, 1, 0, 0)
        assert image.map("b1'", 0) == ImmutableMatrix([[1]])
        assert image.map("b1''", 1) == ImmutableMatrix([[1]])
        assert image.validate() == []

    def test_g_inverts_f(self, heavy_edge):
        """G(F(M)) = M."""
        context = split_context(heavy_edge, "b1")
        rep = _edge_rep(heavy_edge)
        assert functor_G(context, functor_F(context, rep)) == rep

    def test_counit_on_image_is_identity(self, heavy_edge):
        """eps at F(M) is the identity."""
        context = split_context(heavy_edge, "b1")
        image = functor_F(context, _edge_rep(heavy_edge))
        assert is_identity(counit_eps(context, image))

    def test_single_degree_window(self, heavy_edge):
        """F needs at least two degrees."""
        context = split_context(heavy_edge, "b1")
        with pytest.raises(WindowError):
            functor_F(context, zero_rep(heavy_edge, 0, 0))

    def test_check_split_functors(self, kronecker):
        """All three identities hold on sampled representations."""
        context = split_context(kronecker, "q")
        report = CheckReport(name="functors")
        for stream in np.random.SeedSequence(5).spawn(4):
            rng = np.random.default_rng(stream)
            check_split_functors(context, random_sample(kronecker, 0, 3, rng, 2), report)
        assert report.passed, str(report)
        assert report.checks_run == 12

    def test_tampered_image_detected(self, heavy_edge):
        """Changing b'' in F(M) breaks G(F(M)) = M."""
        context = split_context(heavy_edge, "b1")
        rep = _edge_rep(heavy_edge)
        image = functor_F(context, rep)
        tampered = TruncatedGradedRep(
            image.quiver, image.low, image.high, image.dims,
            {**image.maps, ("b1''", 1): ImmutableMatrix([[2]])},
        )
        assert functor_G(context, tampered) != rep

    def test_functors_on_identity_morphism(self, heavy_edge):
        """F(id) is a morphism, G(F(id)) = id and F commutes with the shift on morphisms."""
        context = split_context(heavy_edge, "b1")
        report = CheckReport(name="functors")
        check_functors_on_morphism(context, identity_morphism(_edge_rep(heavy_edge)), report)
        assert report.passed, str(report)
        assert report.checks_run == 3

    def test_functors_on_sampled_morphisms(self, kronecker):
        """The morphism identities hold for element morphisms into sampled representations."""
        context = split_context(kronecker, "q")
        report = CheckReport(name="functors")
        for stream in np.random.SeedSequence(8).spawn(4):
            rng = np.random.default_rng(stream)
            rep = random_sample(kronecker, 0, 3, rng, 2)
            check_functors_on_morphism(context, random_morphism_into(rep, rng), report)
        assert report.passed, str(report)
        assert report.checks_run == 12

    def test_check_counit_counts(self, heavy_edge):
        """One call records four assertions: validity, G(eps) = id, kernel and cokernel support."""
        context = split_context(heavy_edge, "b1")
        report = CheckReport(name="counit")
        check_counit(context, functor_F(context, _edge_rep(heavy_edge)), report)
        assert report.passed, str(report)
        assert report.checks_run == 4

    def test_check_counit_on_split_samples(self, kronecker):
        """The counit identities hold on sampled representations of the split quiver."""
        context = split_context(kronecker, "q")
        report = CheckReport(name="counit")
        for stream in np.random.SeedSequence(9).spawn(4):
            rng = np.random.default_rng(stream)
            check_counit(context, random_sample(context.split, 0, 3, rng, 2), report)
        assert report.passed, str(report)
        assert report.checks_run == 16


class TestMorphismValidation:
    """Test validate_morphism() as a negative control."""

    def test_perturbed_identity_fails(self, heavy_edge):
        """Scaling one component of the identity breaks the b1 square."""
        rep = _edge_rep(heavy_edge)
        identity = identity_morphism(rep)
        components = dict(identity.components)
        components[("a", 0)] = ImmutableMatrix([[2]])
        perturbed = RepMorphism(rep, rep, components)
        witnesses = validate_morphism(perturbed)
        assert len(witnesses) == 1
        assert witnesses[0].startswith("square for arrow b1 at degree 0")

    def test_perturb_hits_constrained_entry(self, heavy_edge):
        """Both identity components feed the b1 square, so every perturbation is rejected."""
        identity = identity_morphism(_edge_rep(heavy_edge))
        for seed in range(6):
            perturbed = perturb_morphism(identity, np.random.default_rng(seed))
            assert perturbed is not None
            assert perturbed.components != identity.components
            assert validate_morphism(perturbed)

    def test_perturb_unconstrained(self, kronecker):
        """With all spaces zero there is no entry to change."""
        assert perturb_morphism(identity_morphism(zero_rep(kronecker, 0, 3)), np.random.default_rng(0)) is None

    def test_check_perturbation_rejected(self, heavy_edge):
        """The check records one passing assertion for a constrained morphism."""
        report = CheckReport(name="perturbation")
        check_perturbation_rejected(identity_morphism(_edge_rep(heavy_edge)), np.random.default_rng(1), report)
        assert report.passed
        assert report.checks_run == 1

    @pytest.mark.slow
    def test_perturbed_morphisms_rejected_over_corpus(self):
        """Sampled element morphisms and counits are valid and each perturbed copy is rejected."""
        perturbed_count = 0
        for quiver in quiver_corpus(seed=77, size=8, heavy=True):
            heavy = next(arrow for arrow in quiver.arrows if arrow.degree > 1)
            context = split_context(quiver, heavy.name)
            for stream in np.random.SeedSequence(7).spawn(4):
                rng = np.random.default_rng(stream)
                rep = random_sample(quiver, 0, 4, rng, 2)
                target = random_sample(context.split, 0, 4, rng, 2)
                for morphism in (random_morphism_into(rep, rng), counit_eps(context, target)):
                    assert validate_morphism(morphism) == []
                    perturbed = perturb_morphism(morphism, rng)
                    if perturbed is None:
                        continue
                    perturbed_count += 1
                    assert validate_morphism(perturbed), f"{quiver}: perturbed morphism accepted"
        assert perturbed_count > 0


class TestTorsion:
    """Test torsion detection inside a window."""

    def test_threshold(self, heavy_edge):
        """The degree-2 composite is nonzero, so torsion starts at threshold 3."""
        rep = _edge_rep(heavy_edge)
        assert not is_torsion_window(rep, 2)
        assert is_torsion_window(rep, 3)

    def test_zero_is_torsion(self, kronecker):
        """The zero representation is torsion at every threshold."""
        assert is_torsion_window(zero_rep(kronecker, 0, 3), 1)

    def test_transfer(self, heavy_edge):
        """Torsion transfers along F within the degree slack."""
        context = split_context(heavy_edge, "b1")
        report = torsion_transfer_check(context, _edge_rep(heavy_edge), 3)
        assert report.passed
        assert report.checks_run == 2


class TestCheckAdjunction:
    """Test check_adjunction() on small quivers."""

    @pytest.mark.parametrize("fixture", ["heavy_edge", "kronecker", "free_loops"])
    def test_passes(self, fixture, request):
        """All sampled identities hold."""
        report = check_adjunction(
            request.getfixturevalue(fixture), samples=3, window=(0, 3), seed=11, max_dimension=2
        )
        assert report.passed, str(report)
        assert report.checks_run > 0

    def test_deterministic(self, kronecker):
        """The same seed gives the same report."""
        first = check_adjunction(kronecker, samples=2, window=(0, 3), seed=3, max_dimension=2)
        second = check_adjunction(kronecker, samples=2, window=(0, 3), seed=3, max_dimension=2)
        assert first.to_dict() == second.to_dict()

    def test_no_heavy_arrow(self, free_two_letters):
        """A degree-one quiver has nothing to check."""
        quiver = build_ufnarovskii(free_two_letters).quiver
        report = check_adjunction(quiver, samples=2, window=(0, 3))
        assert report.passed
        assert report.checks_run == 0
        assert report.notes
