"""
Truncated graded representations of weighted quivers over the rationals.

A representation M over a degree window [low, high] holds, for each vertex v
and degree d in the window, a space M_v[d] = Q^n and, for each arrow a and
degree d with d + deg(a) <= high, an exact matrix

    M_a[d] : M_{s(a)}[d] -> M_{t(a)}[d + deg(a)]

stored with the column-vector convention (rows index the target). Components
below the window are zero; components above it are not modelled, so
identities are only asserted where both sides lie inside the window.

Splitting an arrow b of Q into b': s(b) -> z and b'': z -> t(b) gives two
functors between representations of Q and of the split quiver Q':

    F(M)_z = M_{s(b)}(-1),  F(M)_{b'} = id,  F(M)_{b''} = M_b
    G(N)_b = N_{b''} . N_{b'}   (z dropped)

with G(F(M)) = M, and a counit eps_N : FG(N) -> N that is the identity away
from z and N_{b'} at z. The check functions here verify these identities on
sampled representations and morphisms with exact equality.
"""

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np
from sympy import ImmutableMatrix, Matrix

from analysis.arrow_split import SplitStep, split_arrow
from analysis.paths import iter_paths
from analysis.rational_linalg import (
    block_diagonal,
    column_space,
    first_difference,
    hstack,
    identity_matrix,
    matrix_from_strings,
    matrix_to_strings,
    null_space,
    quotient_projection,
    random_integer_matrix,
    solve_in_basis,
    zero_matrix,
)
from config import get_pipeline_config
from core.logging_config import get_logger
from core.models import CheckReport, QuiverPath, WeightedQuiver

logger = get_logger(__name__)

MapKey = tuple[str, int]


class WindowError(ValueError):
    """Raised when a degree window is empty or too small for an operation."""


class RepresentationError(ValueError):
    """Raised when representations or morphisms are inconsistent."""

    def __init__(self, errors: list[str]):
        self.errors = errors
        super().__init__("; ".join(errors[:5]))


@dataclass(frozen=True, eq=True)
class TruncatedGradedRep:
    """
    A graded representation truncated to the degrees low..high.

    Attributes:
        quiver: The weighted quiver
        low: Lowest degree in the window
        high: Highest degree in the window
        dims: Vertex -> dimension at each degree low..high
        maps: (arrow, d) -> matrix M_a[d], for every d with d + deg(a) <= high
    """

    quiver: WeightedQuiver
    low: int
    high: int
    dims: Mapping[str, tuple[int, ...]]
    maps: Mapping[MapKey, ImmutableMatrix]

    @property
    def degrees(self) -> range:
        return range(self.low, self.high + 1)

    def in_window(self, degree: int) -> bool:
        return self.low <= degree <= self.high

    def dim(self, vertex: str, degree: int) -> int:
        if not self.in_window(degree):
            return 0
        return self.dims[vertex][degree - self.low]

    def map(self, arrow: str, degree: int) -> ImmutableMatrix:
        """M_a[d]; a zero map when d lies below the window."""
        if degree < self.low:
            a = self.quiver.arrow(arrow)
            return zero_matrix(self.dim(a.target, degree + a.degree), 0)
        return self.maps[(arrow, degree)]

    def map_keys(self) -> Iterable[MapKey]:
        for arrow in self.quiver.arrows:
            for d in range(self.low, self.high - arrow.degree + 1):
                yield arrow.name, d

    def total_dimension(self) -> int:
        return sum(sum(dims) for dims in self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dimension() == 0

    def path_map(self, path: QuiverPath, degree: int) -> Optional[ImmutableMatrix]:
        """Composite of arrow maps along a path starting in the given degree, or None past the window."""
        if degree + path.degree > self.high:
            return None
        matrix = identity_matrix(self.dim(path.start, degree))
        current = degree
        for name in path.arrows:
            arrow = self.quiver.arrow(name)
            matrix = self.map(name, current) * matrix
            current += arrow.degree
        return ImmutableMatrix(matrix)

    def validate(self) -> list[str]:
        errors = []
        if self.high < self.low:
            errors.append(f"empty window [{self.low}, {self.high}]")
        size = self.high - self.low + 1
        for vertex in self.quiver.vertices:
            dims = self.dims.get(vertex)
            if dims is None or len(dims) != size:
                errors.append(f"vertex {vertex}: expected {size} dimensions")
        if errors:
            return errors
        for arrow in self.quiver.arrows:
            for d in range(self.low, self.high - arrow.degree + 1):
                matrix = self.maps.get((arrow.name, d))
                expected = (self.dim(arrow.target, d + arrow.degree), self.dim(arrow.source, d))
                if matrix is None:
                    errors.append(f"arrow {arrow.name} degree {d}: missing map")
                elif matrix.shape != expected:
                    errors.append(
                        f"arrow {arrow.name} degree {d}: shape {matrix.shape}, expected {expected}"
                    )
        return errors


@dataclass(frozen=True, eq=True)
class RepMorphism:
    """
    Degree-preserving morphism of truncated representations over the same quiver and window.

    Attributes:
        source: Domain representation
        target: Codomain representation
        components: (vertex, d) -> matrix phi_v[d] : source_v[d] -> target_v[d]
    """

    source: TruncatedGradedRep
    target: TruncatedGradedRep
    components: Mapping[MapKey, ImmutableMatrix]

    def component(self, vertex: str, degree: int) -> ImmutableMatrix:
        if not self.source.in_window(degree):
            return zero_matrix(0, 0)
        return self.components[(vertex, degree)]


@dataclass(frozen=True)
class SplitContext:
    """A quiver, the arrow split applied to it, and the split quiver."""

    quiver: WeightedQuiver
    split: WeightedQuiver
    step: SplitStep

    @property
    def z(self) -> str:
        return self.step.new_vertex


def split_context(quiver: WeightedQuiver, arrow_name: str) -> SplitContext:
    split, step = split_arrow(quiver, arrow_name)
    return SplitContext(quiver=quiver, split=split, step=step)


def _check_window(low: int, high: int) -> None:
    if high < low:
        raise WindowError(f"empty window [{low}, {high}]")


def zero_rep(quiver: WeightedQuiver, low: int, high: int) -> TruncatedGradedRep:
    _check_window(low, high)
    size = high - low + 1
    dims = {v: (0,) * size for v in quiver.vertices}
    maps = {
        (a.name, d): zero_matrix(0, 0)
        for a in quiver.arrows
        for d in range(low, high - a.degree + 1)
    }
    return TruncatedGradedRep(quiver, low, high, dims, maps)


def identity_morphism(rep: TruncatedGradedRep) -> RepMorphism:
    components = {
        (v, d): identity_matrix(rep.dim(v, d)) for v in rep.quiver.vertices for d in rep.degrees
    }
    return RepMorphism(rep, rep, components)


def compose(second: RepMorphism, first: RepMorphism) -> RepMorphism:
    """second . first"""
    if first.target != second.source:
        raise RepresentationError(["morphisms are not composable"])
    components = {
        key: ImmutableMatrix(second.components[key] * matrix)
        for key, matrix in first.components.items()
    }
    return RepMorphism(first.source, second.target, components)


def is_identity(morphism: RepMorphism) -> bool:
    if morphism.source != morphism.target:
        return False
    return all(
        matrix == identity_matrix(matrix.rows) for matrix in morphism.components.values()
    )


def validate_morphism(morphism: RepMorphism) -> list[str]:
    """
    Check component shapes and every commuting square inside the window.

    Returns:
        Witness descriptions, one per failing square (empty when valid)
    """
    source, target = morphism.source, morphism.target
    witnesses = []
    if source.quiver != target.quiver or (source.low, source.high) != (target.low, target.high):
        return ["source and target differ in quiver or window"]

    for v in source.quiver.vertices:
        for d in source.degrees:
            matrix = morphism.components.get((v, d))
            expected = (target.dim(v, d), source.dim(v, d))
            if matrix is None or matrix.shape != expected:
                witnesses.append(f"component {v} degree {d}: shape mismatch, expected {expected}")
    if witnesses:
        return witnesses

    for arrow in source.quiver.arrows:
        for d in range(source.low, source.high - arrow.degree + 1):
            left = morphism.component(arrow.target, d + arrow.degree) * source.map(arrow.name, d)
            right = target.map(arrow.name, d) * morphism.component(arrow.source, d)
            difference = first_difference(ImmutableMatrix(left), ImmutableMatrix(right))
            if difference:
                witnesses.append(f"square for arrow {arrow.name} at degree {d}: {difference}")
    return witnesses


def shift(rep: TruncatedGradedRep, k: int) -> TruncatedGradedRep:
    """M(k): (M(k))_d = M_{d+k}; the window moves to [low - k, high - k]."""
    maps = {(name, d - k): matrix for (name, d), matrix in rep.maps.items()}
    return TruncatedGradedRep(rep.quiver, rep.low - k, rep.high - k, dict(rep.dims), maps)


def shift_morphism(morphism: RepMorphism, k: int) -> RepMorphism:
    components = {(v, d - k): matrix for (v, d), matrix in morphism.components.items()}
    return RepMorphism(shift(morphism.source, k), shift(morphism.target, k), components)


def direct_sum(first: TruncatedGradedRep, second: TruncatedGradedRep) -> TruncatedGradedRep:
    if first.quiver != second.quiver or (first.low, first.high) != (second.low, second.high):
        raise RepresentationError(["direct summands differ in quiver or window"])
    dims = {
        v: tuple(a + b for a, b in zip(first.dims[v], second.dims[v])) for v in first.quiver.vertices
    }
    maps = {key: block_diagonal(first.maps[key], second.maps[key]) for key in first.maps}
    return TruncatedGradedRep(first.quiver, first.low, first.high, dims, maps)


# Projectives

@dataclass(frozen=True)
class TruncatedProjective:
    """
    The projective (e_v kQ)(-shift) in a window, with its path basis.

    Attributes:
        rep: The representation
        vertex: v
        shift: The element e_v sits in this degree
        basis: (w, d) -> paths v -> w of degree d - shift, in basis order
    """

    rep: TruncatedGradedRep
    vertex: str
    shift: int
    basis: Mapping[MapKey, tuple[QuiverPath, ...]] = field(compare=False)


def projective(
    quiver: WeightedQuiver,
    vertex: str,
    shift_by: int,
    low: int,
    high: int,
) -> TruncatedProjective:
    """
    Build (e_v kQ)(-shift_by) truncated to [low, high].

    The basis at (w, d) is the paths v -> w of degree d - shift_by; an arrow
    a sends the basis path p to p·a.

    Raises:
        WindowError: If shift_by lies outside the window
    """
    _check_window(low, high)
    if not low <= shift_by <= high:
        raise WindowError(f"shift {shift_by} outside window [{low}, {high}]")

    basis: dict[MapKey, list[QuiverPath]] = {(w, d): [] for w in quiver.vertices for d in range(low, high + 1)}
    for path in iter_paths(quiver, max_degree=high - shift_by, start=vertex):
        basis[(path.end, shift_by + path.degree)].append(path)
    ordered = {key: tuple(sorted(paths, key=lambda p: p.sort_key)) for key, paths in basis.items()}
    position = {key: {p: i for i, p in enumerate(paths)} for key, paths in ordered.items()}

    dims = {w: tuple(len(ordered[(w, d)]) for d in range(low, high + 1)) for w in quiver.vertices}
    maps = {}
    for arrow in quiver.arrows:
        step = quiver.arrow_path(arrow.name)
        for d in range(low, high - arrow.degree + 1):
            sources = ordered[(arrow.source, d)]
            targets = position[(arrow.target, d + arrow.degree)]
            matrix = Matrix.zeros(len(targets), len(sources))
            for column, path in enumerate(sources):
                matrix[targets[path.compose(step)], column] = 1
            maps[(arrow.name, d)] = ImmutableMatrix(matrix)

    rep = TruncatedGradedRep(quiver, low, high, dims, maps)
    return TruncatedProjective(rep=rep, vertex=vertex, shift=shift_by, basis=ordered)


def element_morphism(
    proj: TruncatedProjective,
    target: TruncatedGradedRep,
    element: ImmutableMatrix,
) -> RepMorphism:
    """
    The morphism (e_v kQ)(-e) -> M sending e_v to an element m of M_v[e].

    The column for a basis path p is M_p applied to m.
    """
    v, e = proj.vertex, proj.shift
    if element.shape != (target.dim(v, e), 1):
        raise RepresentationError([f"element must be a column of length {target.dim(v, e)}"])

    components = {}
    for (w, d), paths in proj.basis.items():
        columns = []
        for path in paths:
            composite = target.path_map(path, e)
            columns.append(ImmutableMatrix(composite * element))
        components[(w, d)] = hstack(columns, target.dim(w, d))
    return RepMorphism(proj.rep, target, components)


# Kernels and cokernels

def kernel(morphism: RepMorphism) -> tuple[TruncatedGradedRep, RepMorphism]:
    """Kernel representation with its inclusion into the source."""
    source = morphism.source
    bases = {key: null_space(matrix) for key, matrix in morphism.components.items()}
    dims = {v: tuple(bases[(v, d)].cols for d in source.degrees) for v in source.quiver.vertices}
    maps = {}
    for (name, d) in source.map_keys():
        arrow = source.quiver.arrow(name)
        image = ImmutableMatrix(source.maps[(name, d)] * bases[(arrow.source, d)])
        maps[(name, d)] = solve_in_basis(bases[(arrow.target, d + arrow.degree)], image)
    rep = TruncatedGradedRep(source.quiver, source.low, source.high, dims, maps)
    return rep, RepMorphism(rep, source, bases)


def cokernel(morphism: RepMorphism) -> tuple[TruncatedGradedRep, RepMorphism]:
    """Cokernel representation with the projection from the target."""
    target = morphism.target
    projections = {}
    sections = {}
    for key, matrix in morphism.components.items():
        projections[key], sections[key] = quotient_projection(column_space(matrix))
    dims = {
        v: tuple(projections[(v, d)].rows for d in target.degrees) for v in target.quiver.vertices
    }
    maps = {}
    for (name, d) in target.map_keys():
        arrow = target.quiver.arrow(name)
        maps[(name, d)] = ImmutableMatrix(
            projections[(arrow.target, d + arrow.degree)]
            * target.maps[(name, d)]
            * sections[(arrow.source, d)]
        )
    rep = TruncatedGradedRep(target.quiver, target.low, target.high, dims, maps)
    return rep, RepMorphism(target, rep, projections)


# The split functors

def functor_F(context: SplitContext, rep: TruncatedGradedRep) -> TruncatedGradedRep:
    """
    Representation of the split quiver: z carries M_{s(b)}(-1), b' acts as the
    identity, b'' as M_b.

    Raises:
        WindowError: If the window has fewer than two degrees
    """
    if rep.high - rep.low < 1:
        raise WindowError("the window needs at least two degrees to place M_{s(b)}(-1) at z")
    step, z = context.step, context.z
    b = step.arrow

    dims = dict(rep.dims)
    dims[z] = (0,) + rep.dims[b.source][:-1]

    maps = {key: matrix for key, matrix in rep.maps.items() if key[0] != b.name}
    for d in rep.degrees:
        if d + 1 <= rep.high:
            maps[(step.b_prime.name, d)] = identity_matrix(rep.dim(b.source, d))
        if d + b.degree - 1 <= rep.high:
            maps[(step.b_dblprime.name, d)] = rep.map(b.name, d - 1)

    return TruncatedGradedRep(context.split, rep.low, rep.high, dims, maps)


def functor_G(context: SplitContext, rep: TruncatedGradedRep) -> TruncatedGradedRep:
    """Representation of the original quiver: drop z and compose b''·b' for b."""
    step, z = context.step, context.z
    b = step.arrow

    dims = {v: rep.dims[v] for v in context.quiver.vertices}
    maps = {
        key: matrix
        for key, matrix in rep.maps.items()
        if key[0] not in (step.b_prime.name, step.b_dblprime.name)
    }
    for d in range(rep.low, rep.high - b.degree + 1):
        maps[(b.name, d)] = ImmutableMatrix(
            rep.map(step.b_dblprime.name, d + 1) * rep.map(step.b_prime.name, d)
        )
    return TruncatedGradedRep(context.quiver, rep.low, rep.high, dims, maps)


def functor_F_morphism(context: SplitContext, morphism: RepMorphism) -> RepMorphism:
    source = functor_F(context, morphism.source)
    target = functor_F(context, morphism.target)
    components = dict(morphism.components)
    b = context.step.arrow
    for d in source.degrees:
        if d - 1 < source.low:
            components[(context.z, d)] = zero_matrix(0, 0)
        else:
            components[(context.z, d)] = morphism.components[(b.source, d - 1)]
    return RepMorphism(source, target, components)


def functor_G_morphism(context: SplitContext, morphism: RepMorphism) -> RepMorphism:
    components = {key: m for key, m in morphism.components.items() if key[0] != context.z}
    return RepMorphism(
        functor_G(context, morphism.source), functor_G(context, morphism.target), components
    )


def counit_eps(context: SplitContext, rep: TruncatedGradedRep) -> RepMorphism:
    """eps_N : FG(N) -> N, the identity away from z and N_{b'} at z."""
    source = functor_F(context, functor_G(context, rep))
    components = {}
    for v in rep.quiver.vertices:
        for d in rep.degrees:
            if v != context.z:
                components[(v, d)] = identity_matrix(rep.dim(v, d))
            else:
                components[(v, d)] = rep.map(context.step.b_prime.name, d - 1)
    return RepMorphism(source, rep, components)


# Torsion in a window

def _composites_vanish(rep: TruncatedGradedRep, vertex: str, start: int, threshold: int) -> bool:
    """True if every arrow composite from (vertex, start) of total degree >= threshold is zero."""
    reach: dict[MapKey, ImmutableMatrix] = {(vertex, 0): identity_matrix(rep.dim(vertex, start))}
    for offset in range(0, rep.high - start + 1):
        for w in rep.quiver.vertices:
            span = reach.get((w, offset))
            if span is None or span.cols == 0:
                continue
            if offset >= max(threshold, 1):
                return False
            for arrow in rep.quiver.arrows_from(w):
                following = offset + arrow.degree
                if start + following > rep.high:
                    continue
                image = ImmutableMatrix(rep.map(arrow.name, start + offset) * span)
                key = (arrow.target, following)
                existing = reach.get(key)
                joined = image if existing is None else hstack([existing, image], image.rows)
                reach[key] = column_space(joined)
    return True


def is_torsion_window(rep: TruncatedGradedRep, threshold: int) -> bool:
    """
    True iff every arrow composite of total degree >= threshold, starting at
    any vertex and degree of the window and ending inside it, is zero.

    A truncation can never certify that the untruncated module is not torsion.
    """
    for v in rep.quiver.vertices:
        for d in rep.degrees:
            if rep.dim(v, d) and not _composites_vanish(rep, v, d, threshold):
                return False
    return True


def torsion_transfer_check(
    context: SplitContext,
    rep: TruncatedGradedRep,
    threshold: int,
    report: Optional[CheckReport] = None,
) -> CheckReport:
    """
    Check torsion transfer along F in a window.

    Asserts: M torsion at d0 implies F(M) torsion at d0 + deg(b); F(M)
    torsion at d0 implies M torsion at d0. Whether the two sides agree is
    recorded as a note only.
    """
    report = report or CheckReport(name="adjunction.torsion_transfer")
    image = functor_F(context, rep)
    slack = context.step.arrow.degree
    before = is_torsion_window(rep, threshold)
    after = is_torsion_window(image, threshold + slack)
    after_tight = is_torsion_window(image, threshold)

    report.record(not before or after, f"M torsion at {threshold} but F(M) not at {threshold + slack}")
    report.record(not after_tight or before, f"F(M) torsion at {threshold} but M not")
    if before != after:
        report.note(f"torsion at {threshold} vs {threshold + slack}: M={before}, F(M)={after}")
    return report


# Sampling

def random_rep(
    quiver: WeightedQuiver,
    low: int,
    high: int,
    rng: np.random.Generator,
    max_dimension: int,
) -> TruncatedGradedRep:
    """Any family of matrices is a representation of a path algebra."""
    _check_window(low, high)
    dims = {
        v: tuple(int(x) for x in rng.integers(0, max_dimension + 1, size=high - low + 1))
        for v in quiver.vertices
    }
    rep = TruncatedGradedRep(quiver, low, high, dims, {})
    maps = {}
    for name, d in rep.map_keys():
        arrow = quiver.arrow(name)
        maps[(name, d)] = random_integer_matrix(
            rng, rep.dim(arrow.target, d + arrow.degree), rep.dim(arrow.source, d)
        )
    return TruncatedGradedRep(quiver, low, high, dims, maps)


def random_projective(
    quiver: WeightedQuiver,
    low: int,
    high: int,
    rng: np.random.Generator,
    max_dimension: int,
) -> TruncatedProjective:
    """A random shifted projective; falls back to the shift high when dimensions exceed the cap."""
    vertex = quiver.vertices[int(rng.integers(0, len(quiver.vertices)))]
    shift_by = int(rng.integers(low, high + 1))
    proj = projective(quiver, vertex, shift_by, low, high)
    if max(max(dims) for dims in proj.rep.dims.values()) > max_dimension:
        proj = projective(quiver, vertex, high, low, high)
    return proj


def random_element(rep: TruncatedGradedRep, rng: np.random.Generator) -> Optional[tuple[str, int, ImmutableMatrix]]:
    """A random nonzero homogeneous element (vertex, degree, column), or None for the zero rep."""
    support = [(v, d) for v in rep.quiver.vertices for d in rep.degrees if rep.dim(v, d)]
    if not support:
        return None
    v, d = support[int(rng.integers(0, len(support)))]
    column = random_integer_matrix(rng, rep.dim(v, d), 1)
    if all(x == 0 for x in column):
        column = ImmutableMatrix(Matrix.eye(rep.dim(v, d))[:, 0])
    return v, d, column


def random_sample(
    quiver: WeightedQuiver,
    low: int,
    high: int,
    rng: np.random.Generator,
    max_dimension: int,
) -> TruncatedGradedRep:
    """
    A random test representation: a matrix family, a shifted projective, a
    direct sum, or a quotient by the subrepresentation an element generates.
    """
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return random_rep(quiver, low, high, rng, max_dimension)
    if kind == 1:
        return random_projective(quiver, low, high, rng, max_dimension).rep
    if kind == 2:
        return direct_sum(
            random_projective(quiver, low, high, rng, max_dimension).rep,
            random_rep(quiver, low, high, rng, max(1, max_dimension // 2)),
        )

    base = random_projective(quiver, low, high, rng, max_dimension).rep
    element = random_element(base, rng)
    if element is None:
        return base
    v, d, column = element
    generator = projective(quiver, v, d, low, high)
    quotient, _ = cokernel(element_morphism(generator, base, column))
    return quotient


def random_morphism_into(
    target: TruncatedGradedRep,
    rng: np.random.Generator,
) -> RepMorphism:
    """A morphism from a projective, determined by a random element of the target."""
    element = random_element(target, rng)
    if element is None:
        v = target.quiver.vertices[0]
        proj = projective(target.quiver, v, target.high, target.low, target.high)
        return element_morphism(proj, target, zero_matrix(0, 1))
    v, d, column = element
    proj = projective(target.quiver, v, d, target.low, target.high)
    return element_morphism(proj, target, column)


def _detectable_entries(morphism: RepMorphism) -> list[tuple[MapKey, int, int]]:
    """
    Entries (component, row, column) whose change breaks a commuting square.

    Changing entry (i, j) of phi_v[d] alters the square of an arrow a out of
    v by column i of N_a[d], and the square of an arrow c into v by row j of
    M_c[d - deg(c)]; at least one of these must be nonzero.
    """
    source, target = morphism.source, morphism.target
    entries = []
    for (v, d), matrix in sorted(morphism.components.items()):
        if not (matrix.rows and matrix.cols):
            continue
        rows: set[int] = set()
        for arrow in source.quiver.arrows_from(v):
            if d + arrow.degree <= source.high:
                outgoing = target.map(arrow.name, d)
                rows.update(i for i in range(outgoing.cols) if any(x != 0 for x in outgoing.col(i)))
        columns: set[int] = set()
        for arrow in source.quiver.arrows_into(v):
            if d - arrow.degree >= source.low:
                incoming = source.map(arrow.name, d - arrow.degree)
                columns.update(j for j in range(incoming.rows) if any(x != 0 for x in incoming.row(j)))
        entries.extend(
            ((v, d), i, j)
            for i in range(matrix.rows)
            for j in range(matrix.cols)
            if i in rows or j in columns
        )
    return entries


def perturb_morphism(morphism: RepMorphism, rng: np.random.Generator) -> Optional[RepMorphism]:
    """
    Add one to a single random entry that some commuting square depends on.

    Returns None when no entry is constrained (every square is between zero maps).
    """
    entries = _detectable_entries(morphism)
    if not entries:
        return None
    key, i, j = entries[int(rng.integers(0, len(entries)))]
    matrix = Matrix(morphism.components[key])
    matrix[i, j] += 1
    components = dict(morphism.components)
    components[key] = ImmutableMatrix(matrix)
    return RepMorphism(morphism.source, morphism.target, components)


# Checks

def _record_equal(report: CheckReport, left: TruncatedGradedRep, right: TruncatedGradedRep, what: str) -> None:
    if left == right:
        report.record(True)
        return
    witness = f"{what}: dimensions differ"
    if left.dims == right.dims:
        for key in sorted(left.maps):
            difference = first_difference(left.maps[key], right.maps.get(key, zero_matrix(0, 0)))
            if difference:
                witness = f"{what}: map {key[0]} at degree {key[1]}, {difference}"
                break
    report.record(False, witness)


def _record_identity(report: CheckReport, morphism: RepMorphism, what: str) -> None:
    if is_identity(morphism):
        report.record(True)
        return
    witness = f"{what}: not the identity"
    for (v, d), matrix in sorted(morphism.components.items()):
        difference = first_difference(matrix, identity_matrix(matrix.rows))
        if difference:
            witness = f"{what}: component {v} at degree {d}, {difference}"
            break
    report.record(False, witness)


def check_split_functors(
    context: SplitContext,
    rep: TruncatedGradedRep,
    report: CheckReport,
    label: str = "",
) -> None:
    """G(F(M)) = M, eps_{F(M)} = id and F(M(1)) = F(M)(1) for one representation."""
    image = functor_F(context, rep)
    _record_equal(report, functor_G(context, image), rep, f"{label}G(F(M)) != M")
    _record_identity(report, counit_eps(context, image), f"{label}eps_F(M)")
    _record_equal(
        report,
        functor_F(context, shift(rep, 1)),
        shift(image, 1),
        f"{label}F(M(1)) != F(M)(1)",
    )


def check_counit(
    context: SplitContext,
    rep: TruncatedGradedRep,
    report: CheckReport,
    label: str = "",
) -> None:
    """eps_N is a morphism, G(eps_N) = id, Ker and Coker of eps_N live at z only."""
    eps = counit_eps(context, rep)
    witnesses = validate_morphism(eps)
    report.record(not witnesses, f"{label}eps_N {'; '.join(witnesses[:3])}")
    _record_identity(report, functor_G_morphism(context, eps), f"{label}G(eps_N)")

    for name, (part, _) in (("Ker", kernel(eps)), ("Coker", cokernel(eps))):
        stray = [
            (v, d)
            for v in part.quiver.vertices
            if v != context.z
            for d in part.degrees
            if part.dim(v, d)
        ]
        report.record(not stray, f"{label}{name} eps_N is nonzero at {stray[:3]}")


def check_naturality(
    context: SplitContext,
    morphism: RepMorphism,
    report: CheckReport,
    label: str = "",
) -> None:
    """eps_N' . FG(psi) = psi . eps_N for psi : N -> N'."""
    fg = functor_F_morphism(context, functor_G_morphism(context, morphism))
    left = compose(counit_eps(context, morphism.target), fg)
    right = compose(morphism, counit_eps(context, morphism.source))
    for key in sorted(left.components):
        difference = first_difference(left.components[key], right.components[key])
        if difference:
            report.record(False, f"{label}naturality at {key[0]} degree {key[1]}: {difference}")
            return
    report.record(True)


def check_functors_on_morphism(
    context: SplitContext,
    morphism: RepMorphism,
    report: CheckReport,
    label: str = "",
) -> None:
    """F(phi) is a morphism, G(F(phi)) = phi and F(phi(1)) = F(phi)(1)."""
    image = functor_F_morphism(context, morphism)
    witnesses = validate_morphism(image)
    report.record(not witnesses, f"{label}F(phi) {'; '.join(witnesses[:3])}")
    report.record(functor_G_morphism(context, image) == morphism, f"{label}G(F(phi)) != phi")
    report.record(
        functor_F_morphism(context, shift_morphism(morphism, 1)) == shift_morphism(image, 1),
        f"{label}F(phi(1)) != F(phi)(1)",
    )


def check_perturbation_rejected(
    morphism: RepMorphism,
    rng: np.random.Generator,
    report: CheckReport,
    label: str = "",
) -> None:
    """A valid morphism with one constrained entry changed must fail validation."""
    perturbed = perturb_morphism(morphism, rng)
    if perturbed is None:
        return
    report.record(bool(validate_morphism(perturbed)), f"{label}perturbed morphism was accepted")


def check_adjunction(
    quiver: WeightedQuiver,
    arrow_name: Optional[str] = None,
    samples: Optional[int] = None,
    window: Optional[tuple[int, int]] = None,
    seed: Optional[int] = None,
    max_dimension: Optional[int] = None,
) -> CheckReport:
    """
    Check the split functors and the counit on sampled representations.

    For every arrow of degree > 1 (or just the named one) and every sample:
    G(F(M)) = M, eps_{F(M)} = id, F(M(1)) = F(M)(1), the same identities for
    a sampled morphism phi, eps_N is a valid morphism with G(eps_N) = id and
    kernel and cokernel supported at z, eps is natural on a sampled morphism,
    and torsion transfers along F. Perturbed copies of phi and eps_N must be
    rejected by morphism validation.
    Each sample uses its own RNG stream spawned from the seed.
    """
    settings = get_pipeline_config().verification
    samples = settings.trials if samples is None else samples
    low, high = window if window is not None else (settings.window_low, settings.window_high)
    seed = settings.seed if seed is None else seed
    max_dimension = settings.max_dimension if max_dimension is None else max_dimension

    report = CheckReport(name="adjunction")
    if arrow_name is not None:
        arrows = [quiver.arrow(arrow_name)]
    else:
        arrows = [arrow for arrow in quiver.arrows if arrow.degree > 1]
    if not arrows:
        report.note("no arrow of degree > 1: nothing to split")
        return report

    per_arrow = np.random.SeedSequence(seed).spawn(len(arrows))
    for arrow, arrow_seed in zip(arrows, per_arrow):
        context = split_context(quiver, arrow.name)
        for index, stream in enumerate(arrow_seed.spawn(samples)):
            rng = np.random.default_rng(stream)
            label = f"[{arrow.name} #{index}] "

            rep = random_sample(quiver, low, high, rng, max_dimension)
            check_split_functors(context, rep, report, label)
            phi = random_morphism_into(rep, rng)
            check_functors_on_morphism(context, phi, report, label)
            check_perturbation_rejected(phi, rng, report, f"{label}phi: ")

            target = random_sample(context.split, low, high, rng, max_dimension)
            check_counit(context, target, report, label)
            check_perturbation_rejected(counit_eps(context, target), rng, report, f"{label}eps_N: ")

            psi = random_morphism_into(target, rng)
            witnesses = validate_morphism(psi)
            report.record(not witnesses, f"{label}sampled morphism invalid: {witnesses[:1]}")
            if not witnesses:
                check_naturality(context, psi, report, label)

            threshold = int(rng.integers(low + 1, high + 1)) if high > low else low
            torsion_transfer_check(context, rep, threshold, report)

    report.note("torsion is judged inside the window only and never certifies non-torsion")
    logger.info(f"Adjunction checks: {report.checks_run} run, {report.failure_count} failed")
    return report


# Serialization

def rep_to_dict(rep: TruncatedGradedRep) -> dict:
    """Dimension tables plus matrices of "p/q" strings, in quiver order."""
    return {
        "window": [rep.low, rep.high],
        "dimensions": {v: list(rep.dims[v]) for v in rep.quiver.vertices},
        "maps": [
            {"arrow": name, "degree": d, "matrix": matrix_to_strings(rep.maps[(name, d)])}
            for name, d in rep.map_keys()
        ],
    }


def rep_from_dict(quiver: WeightedQuiver, data: dict) -> TruncatedGradedRep:
    low, high = data["window"]
    dims = {v: tuple(data["dimensions"][v]) for v in quiver.vertices}
    rep = TruncatedGradedRep(quiver, low, high, dims, {})
    maps = {}
    for entry in data["maps"]:
        arrow = quiver.arrow(entry["arrow"])
        d = entry["degree"]
        shape = (rep.dim(arrow.target, d + arrow.degree), rep.dim(arrow.source, d))
        maps[(arrow.name, d)] = matrix_from_strings(entry["matrix"], shape)
    rep = TruncatedGradedRep(quiver, low, high, dims, maps)
    errors = rep.validate()
    if errors:
        raise RepresentationError(errors)
    return rep
