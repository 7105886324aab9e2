"""
The weighted Ufnarovskii graph Q(A) of a connected monomial algebra A = k<G>/(F).

With ell + 1 the maximal forbidden length, Q(A) has the legal words of
length ell as vertices and the legal words of length ell + 1 as arrows; the
arrow w runs from its length-ell prefix to its length-ell suffix, is labelled
by its first letter, and has the degree of that letter.

The graded homomorphism f: A -> kQ(A) sends a letter x to the sum of all
arrows labelled x. This module builds Q(A), evaluates f on words, and checks:
- f is a graded algebra map (multiplicative, kills forbidden words)
- a path is determined by its label and target (reconstruction)
- f(label(p)) e_{t(p)} = p for every path p (graded generation)
- paths of length r correspond to legal words of length r + ell
It also classifies the growth of the graph from its cycle structure.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

import networkx as nx
import numpy as np

from analysis.legal_words import (
    UnknownLetterError,
    build_automaton,
    count_by_length,
    enumerate_by_length,
    is_legal,
)
from analysis.paths import iter_paths
from config import get_pipeline_config
from core.logging_config import get_logger
from core.models import (
    Arrow,
    CheckReport,
    MonomialPresentation,
    QuiverPath,
    WeightedQuiver,
    Word,
    spell_word,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class UfnGraph:
    """
    Weighted Ufnarovskii graph with its arrow labelling.

    Attributes:
        presentation: The presentation the graph was built from
        quiver: Vertices are spelled words of L_ell, arrows spelled words of L_{ell+1}
        ell: Vertex word length
        vertex_words: Vertex id -> word
        arrow_words: Arrow id -> word
    """

    presentation: MonomialPresentation
    quiver: WeightedQuiver
    ell: int
    vertex_words: Mapping[str, Word] = field(compare=False)
    arrow_words: Mapping[str, Word] = field(compare=False)

    @cached_property
    def arrow_by_word(self) -> dict[Word, str]:
        return {word: name for name, word in self.arrow_words.items()}

    @cached_property
    def vertex_by_word(self) -> dict[Word, str]:
        return {word: name for name, word in self.vertex_words.items()}

    @cached_property
    def _arrows_by_label(self) -> dict[tuple[str, str], tuple[Arrow, ...]]:
        grouped: dict[tuple[str, str], list[Arrow]] = {}
        for arrow in self.quiver.arrows:
            grouped.setdefault((arrow.source, self.label(arrow.name)), []).append(arrow)
        return {key: tuple(arrows) for key, arrows in grouped.items()}

    def label(self, arrow: str) -> str:
        """The first letter of the arrow's word."""
        return self.arrow_words[arrow][0]

    def path_label(self, path: QuiverPath) -> Word:
        return tuple(self.label(name) for name in path.arrows)

    def arrows_labeled(self, vertex: str, letter: str) -> tuple[Arrow, ...]:
        return self._arrows_by_label.get((vertex, letter), ())


@dataclass(frozen=True)
class LabeledPath:
    """A path in an Ufnarovskii graph together with its label word."""

    path: QuiverPath
    label: Word

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def degree(self) -> int:
        return self.path.degree

    @property
    def source(self) -> str:
        return self.path.start

    @property
    def target(self) -> str:
        return self.path.end


class PathSum:
    """
    Finite formal sum of paths with rational coefficients.

    Zero coefficients are dropped, so PathSum() is the zero element. The
    product is bilinear, extending path composition (non-composable pairs give 0).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[QuiverPath, Union[int, Fraction]]] = None):
        cleaned = {}
        for path, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[path] = coefficient
        self._terms = cleaned

    @classmethod
    def of(cls, paths: Iterable[QuiverPath]) -> "PathSum":
        """Sum of the given paths, each with coefficient 1."""
        terms: dict[QuiverPath, Fraction] = {}
        for path in paths:
            terms[path] = terms.get(path, Fraction(0)) + 1
        return cls(terms)

    @property
    def terms(self) -> dict[QuiverPath, Fraction]:
        return dict(self._terms)

    @property
    def paths(self) -> list[QuiverPath]:
        return sorted(self._terms, key=lambda p: p.sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        """Common degree of all terms; None for zero; raises if inhomogeneous."""
        degrees = {path.degree for path in self._terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"path sum is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def __add__(self, other: "PathSum") -> "PathSum":
        terms = dict(self._terms)
        for path, coefficient in other._terms.items():
            terms[path] = terms.get(path, Fraction(0)) + coefficient
        return PathSum(terms)

    def __mul__(self, other: "PathSum") -> "PathSum":
        terms: dict[QuiverPath, Fraction] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                product = left.compose(right)
                if product is not None:
                    terms[product] = terms.get(product, Fraction(0)) + a * b
        return PathSum(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "PathSum(0)"
        parts = []
        for path in self.paths:
            coefficient = self._terms[path]
            parts.append(str(path) if coefficient == 1 else f"{coefficient}*{path}")
        return f"PathSum({' + '.join(parts)})"


def ell(presentation: MonomialPresentation) -> int:
    """
    Maximal forbidden length minus one.

    For F empty the maximum is taken as 1, so ell = 0 and Q(A) is the
    one-vertex quiver with a loop per letter.
    """
    longest = max((len(word) for word in presentation.forbidden), default=1)
    return longest - 1


def build_ufnarovskii(
    presentation: MonomialPresentation,
    budget: Optional[int] = None,
) -> UfnGraph:
    """
    Build the weighted Ufnarovskii graph.

    Vertices with no incident arrows are kept (Q(A)_0 is all of L_ell).

    Raises:
        BudgetExceededError: If L_ell or L_{ell+1} exceeds the enumeration budget
    """
    automaton = build_automaton(presentation)
    length = ell(presentation)

    vertex_list = enumerate_by_length(automaton, length, budget)
    arrow_list = enumerate_by_length(automaton, length + 1, budget)

    vertex_words = {spell_word(word): word for word in vertex_list}
    by_word = {word: name for name, word in vertex_words.items()}

    arrows = []
    arrow_words = {}
    for word in arrow_list:
        name = spell_word(word)
        arrow_words[name] = word
        arrows.append(
            Arrow(
                name=name,
                source=by_word[word[:length]],
                target=by_word[word[1:]],
                degree=presentation.degree_map[word[0]],
            )
        )

    graph = UfnGraph(
        presentation=presentation,
        quiver=WeightedQuiver(vertices=tuple(vertex_words), arrows=tuple(arrows)),
        ell=length,
        vertex_words=vertex_words,
        arrow_words=arrow_words,
    )
    logger.info(
        f"Built Ufnarovskii graph: {len(vertex_words)} vertices, "
        f"{len(arrows)} arrows, ell={length}"
    )
    return graph


def _check_letters(graph: UfnGraph, word: Iterable[str]) -> Word:
    word = tuple(word)
    known = graph.presentation.degree_map
    for letter in word:
        if letter not in known:
            raise UnknownLetterError(f"unknown letter {letter!r}")
    return word


def path_from_label_target(
    graph: UfnGraph,
    label: Iterable[str],
    vertex: str,
) -> Optional[LabeledPath]:
    """
    Reconstruct the unique path with the given label ending at the given vertex.

    Reading label·word(vertex) as x_1 ... x_{r+ell}, the i-th arrow is the
    window x_i ... x_{i+ell}; the path exists iff every window is an arrow.

    Raises:
        UnknownLetterError: If the label uses letters outside the alphabet
        KeyError: If the vertex is not in the graph
    """
    label = _check_letters(graph, label)
    if vertex not in graph.vertex_words:
        raise KeyError(f"unknown vertex {vertex!r}")

    full = label + graph.vertex_words[vertex]
    names = []
    for i in range(len(label)):
        name = graph.arrow_by_word.get(full[i:i + graph.ell + 1])
        if name is None:
            return None
        names.append(name)

    path = graph.quiver.path(names, start=None if names else vertex)
    return LabeledPath(path=path, label=label)


def enumerate_labeled_paths(graph: UfnGraph, word: Iterable[str]) -> list[QuiverPath]:
    """All paths whose label is the given word (at most one per target vertex)."""
    word = _check_letters(graph, word)
    frontier = [QuiverPath.trivial(v) for v in graph.quiver.vertices]
    for letter in word:
        extended = []
        for path in frontier:
            for arrow in graph.arrows_labeled(path.end, letter):
                extended.append(
                    QuiverPath(path.start, arrow.target, path.arrows + (arrow.name,),
                               path.degree + arrow.degree)
                )
        frontier = extended
    return frontier


def apply_f(graph: UfnGraph, word: Iterable[str]) -> PathSum:
    """
    Evaluate the homomorphism f on a word.

    f(w) is the sum of all paths labelled w (possibly empty, i.e. zero);
    f(ε) is the sum of the vertex idempotents.
    """
    return PathSum.of(enumerate_labeled_paths(graph, word))


def vertex_idempotent(vertex: str) -> PathSum:
    return PathSum.of([QuiverPath.trivial(vertex)])


def _random_word(rng: np.random.Generator, letters: tuple[str, ...], max_length: int) -> Word:
    length = int(rng.integers(0, max_length + 1))
    return tuple(letters[int(i)] for i in rng.integers(0, len(letters), size=length))


def check_f_is_graded_hom(
    graph: UfnGraph,
    trials: Optional[int] = None,
    max_length: Optional[int] = None,
    seed: Optional[int] = None,
) -> CheckReport:
    """
    Check that f is a morphism of graded algebras.

    (i) f(u)·f(v) = f(uv) for random word pairs; (ii) f(w) = 0 for every
    forbidden w; (iii) f(w) is homogeneous of degree deg(w) when nonzero.
    Each trial uses its own RNG stream spawned from the seed.
    """
    settings = get_pipeline_config().verification
    trials = settings.multiplicativity_pairs if trials is None else trials
    max_length = settings.max_word_length if max_length is None else max_length
    seed = settings.seed if seed is None else seed

    presentation = graph.presentation
    report = CheckReport(name="ufgraph.f_graded_hom")

    for word in presentation.forbidden:
        image = apply_f(graph, word)
        report.record(image.is_zero(), f"f({spell_word(word)}) = {image!r}, expected 0")

    identity = apply_f(graph, ())
    for letter in presentation.letters:
        image = apply_f(graph, (letter,))
        report.record(identity * image == image, f"f(ε)·f({letter}) != f({letter})")

    letters = presentation.letters
    if not letters:
        return report

    for stream in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(stream)
        u = _random_word(rng, letters, max_length)
        v = _random_word(rng, letters, max_length)
        product = apply_f(graph, u) * apply_f(graph, v)
        joined = apply_f(graph, u + v)
        report.record(
            product == joined,
            f"f({spell_word(u) or 'ε'})·f({spell_word(v) or 'ε'}) != f({spell_word(u + v) or 'ε'})",
        )
        if not joined.is_zero():
            expected = presentation.degree_of(u + v)
            actual = joined.degree()
            report.record(
                actual == expected,
                f"deg f({spell_word(u + v)}) = {actual}, expected {expected}",
            )

    return report


def check_graded_generation(graph: UfnGraph, max_degree: Optional[int] = None) -> CheckReport:
    """
    Check f(label(p))·e_{t(p)} = p for every path p of degree <= N.

    This holds because a path is determined by its label and its target.
    """
    if max_degree is None:
        max_degree = get_pipeline_config().verification.max_degree

    report = CheckReport(name="ufgraph.graded_generation")
    for path in iter_paths(graph.quiver, max_degree=max_degree):
        label = graph.path_label(path)
        recovered = apply_f(graph, label) * vertex_idempotent(path.end)
        report.record(
            recovered == PathSum.of([path]),
            f"f({spell_word(label) or 'ε'})·e[{path.end}] = {recovered!r}, expected {path}",
        )
    report.note("a path is determined by its label and its ending vertex")
    return report


def check_bijection(graph: UfnGraph, max_length: Optional[int] = None) -> CheckReport:
    """
    Check #paths of length r = |L_{r+ell}| and that p -> label(p)·word(t(p))
    is injective with image L_{r+ell}, for r <= max_length.
    """
    if max_length is None:
        max_length = get_pipeline_config().verification.bijection_max_length

    automaton = build_automaton(graph.presentation)
    report = CheckReport(name="ufgraph.length_bijection")

    by_length: dict[int, list[QuiverPath]] = {}
    for path in iter_paths(graph.quiver, max_length=max_length):
        by_length.setdefault(path.length, []).append(path)

    for r in range(max_length + 1):
        paths = by_length.get(r, [])
        expected = count_by_length(automaton, r + graph.ell)
        report.record(
            len(paths) == expected,
            f"{len(paths)} paths of length {r}, but |L_{r + graph.ell}| = {expected}",
        )
        images = set()
        for path in paths:
            word = graph.path_label(path) + graph.vertex_words[path.end]
            report.record(
                is_legal(automaton, word),
                f"label·target of {path} is illegal: {spell_word(word)}",
            )
            images.add(word)
        report.record(
            len(images) == len(paths),
            f"label·target map is not injective on paths of length {r}",
        )

    return report


def check_round_trip(graph: UfnGraph, max_length: Optional[int] = None) -> CheckReport:
    """Check path_from_label_target(label(p), t(p)) = p for every path of length <= max_length."""
    if max_length is None:
        max_length = get_pipeline_config().verification.round_trip_max_length

    report = CheckReport(name="ufgraph.round_trip")
    for path in iter_paths(graph.quiver, max_length=max_length):
        rebuilt = path_from_label_target(graph, graph.path_label(path), path.end)
        report.record(
            rebuilt is not None and rebuilt.path == path,
            f"reconstruction of {path} from its label and target failed",
        )
    return report


def check_arrow_degrees(graph: UfnGraph) -> CheckReport:
    """Check deg(arrow w) = deg(first letter of w) for every arrow."""
    report = CheckReport(name="ufgraph.arrow_degrees")
    for arrow in graph.quiver.arrows:
        expected = graph.presentation.degree_map[graph.label(arrow.name)]
        report.record(
            arrow.degree == expected,
            f"arrow {arrow.name} has degree {arrow.degree}, label degree {expected}",
        )
    return report


@dataclass(frozen=True)
class Growth:
    """Polynomial growth of a given degree, or exponential growth."""

    exponential: bool
    degree: Optional[int] = None

    def __str__(self) -> str:
        if self.exponential:
            return "Exponential"
        return f"Polynomial({self.degree})"


def classify_growth(graph: Union[UfnGraph, WeightedQuiver]) -> Growth:
    """
    Classify path growth from the strongly connected components.

    Exponential iff some component carries more arrows than vertices while
    having a cycle (two distinct cycles); otherwise Polynomial(d) with d the
    largest number of cycle-bearing components on a chain of the condensation.
    """
    quiver = graph.quiver if isinstance(graph, UfnGraph) else graph

    digraph = nx.DiGraph()
    digraph.add_nodes_from(quiver.vertices)
    digraph.add_edges_from((arrow.source, arrow.target) for arrow in quiver.arrows)

    condensed = nx.condensation(digraph)
    component_of = condensed.graph["mapping"]

    internal = {node: 0 for node in condensed.nodes}
    for arrow in quiver.arrows:
        if component_of[arrow.source] == component_of[arrow.target]:
            internal[component_of[arrow.source]] += 1

    weight = {}
    for node, members in condensed.nodes(data="members"):
        arrows_inside = internal[node]
        if arrows_inside > len(members):
            return Growth(exponential=True)
        # A component with a cycle has exactly as many arrows as vertices here
        weight[node] = 1 if arrows_inside >= 1 else 0

    best: dict[int, int] = {}
    for node in nx.topological_sort(condensed):
        best[node] = weight[node] + max(
            (best[pred] for pred in condensed.predecessors(node)), default=0
        )

    return Growth(exponential=False, degree=max(best.values(), default=0))


def paths_by_length(graph: UfnGraph, max_length: int) -> list[int]:
    """Number of paths of each length 0..max_length (explicit enumeration)."""
    counts = [0] * (max_length + 1)
    for path in iter_paths(graph.quiver, max_length=max_length):
        counts[path.length] += 1
    return counts
