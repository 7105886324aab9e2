"""
Path counting by degree and by length.

Counts are exact Python integers held in numpy object arrays, since path
counts grow exponentially. The degree recurrence is

    C_0 = I,    C_d = sum over k of C_{d-k} @ A_k

where A_k is the adjacency matrix of arrows of degree k, so (C_d)[u, v] is
the number of paths u -> v of degree d.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from analysis.legal_words import DegreeSeries, build_automaton, count_by_degree
from analysis.paths import contains_factor, iter_paths
from core.logging_config import get_logger
from core.models import CheckReport, MonomialPresentation, QuiverMonomialAlgebra, WeightedQuiver

logger = get_logger(__name__)


@dataclass(frozen=True)
class PathCountTable:
    """
    Number of paths u -> v of each degree d <= N.

    Attributes:
        vertices: Row/column order of the count matrices
        counts: Object array of shape (N + 1, |Q_0|, |Q_0|)
    """

    vertices: tuple[str, ...]
    counts: np.ndarray

    @property
    def max_degree(self) -> int:
        return self.counts.shape[0] - 1

    def index(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise KeyError(f"unknown vertex {vertex!r}") from None

    def count(self, source: str, target: str, degree: int) -> int:
        if degree < 0 or degree > self.max_degree:
            return 0
        return int(self.counts[degree, self.index(source), self.index(target)])

    def by_degree(self) -> DegreeSeries:
        """dim_k kQ_d for d = 0..N."""
        return DegreeSeries(tuple(int(layer.sum()) for layer in self.counts))

    def restricted(self, vertices: Iterable[str]) -> DegreeSeries:
        """Series of paths whose endpoints both lie in the given vertex set."""
        rows = [self.index(v) for v in vertices]
        if not rows:
            return DegreeSeries(tuple(0 for _ in range(self.max_degree + 1)))
        block = self.counts[:, rows][:, :, rows]
        return DegreeSeries(tuple(int(layer.sum()) for layer in block))


def _identity(size: int) -> np.ndarray:
    matrix = np.zeros((size, size), dtype=object)
    for i in range(size):
        matrix[i, i] = 1
    return matrix


def _adjacency(quiver: WeightedQuiver, degree: Optional[int] = None) -> np.ndarray:
    size = len(quiver.vertices)
    matrix = np.zeros((size, size), dtype=object)
    position = {v: i for i, v in enumerate(quiver.vertices)}
    for arrow in quiver.arrows:
        if degree is None or arrow.degree == degree:
            matrix[position[arrow.source], position[arrow.target]] += 1
    return matrix


def path_counts(quiver: WeightedQuiver, max_degree: int) -> PathCountTable:
    """
    Count paths between every vertex pair, degree by degree.

    Args:
        quiver: Weighted quiver
        max_degree: Truncation degree N (>= 0)

    Returns:
        PathCountTable covering degrees 0..N
    """
    if max_degree < 0:
        raise ValueError(f"max degree must be non-negative, got {max_degree}")

    size = len(quiver.vertices)
    by_arrow_degree = {
        k: _adjacency(quiver, k)
        for k in sorted({arrow.degree for arrow in quiver.arrows})
        if k <= max_degree
    }

    counts = np.zeros((max_degree + 1, size, size), dtype=object)
    counts[0] = _identity(size)
    for d in range(1, max_degree + 1):
        layer = np.zeros((size, size), dtype=object)
        for k, adjacency in by_arrow_degree.items():
            if k <= d:
                layer = layer + counts[d - k].dot(adjacency)
        counts[d] = layer

    return PathCountTable(vertices=tuple(quiver.vertices), counts=counts)


def path_counts_by_length(quiver: WeightedQuiver, length: int) -> int:
    """Number of paths of the given length (sum of entries of A^length)."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    power = _identity(len(quiver.vertices))
    adjacency = _adjacency(quiver)
    for _ in range(length):
        power = power.dot(adjacency)
    return int(power.sum())


def length_series(quiver: WeightedQuiver, max_length: int) -> DegreeSeries:
    """Path counts for every length 0..max_length."""
    return DegreeSeries(tuple(path_counts_by_length(quiver, r) for r in range(max_length + 1)))


def monomial_path_counts(
    algebra: Union[QuiverMonomialAlgebra, WeightedQuiver],
    max_degree: int,
) -> DegreeSeries:
    """
    dim_k (kQ/I)_d for d = 0..N: paths that contain no relation as a factor.

    A path containing a relation keeps containing it when extended, so those
    branches are pruned during enumeration.
    """
    if isinstance(algebra, WeightedQuiver):
        return path_counts(algebra, max_degree).by_degree()

    quiver, relations = algebra.quiver, algebra.relations
    counts = [0] * (max_degree + 1)
    layer = [p for p in iter_paths(quiver, max_length=0)]
    while layer:
        extended = []
        for path in layer:
            counts[path.degree] += 1
            for arrow in quiver.arrows_from(path.end):
                degree = path.degree + arrow.degree
                if degree > max_degree:
                    continue
                longer = path.compose(quiver.arrow_path(arrow.name))
                if not contains_factor(longer, relations):
                    extended.append(longer)
        layer = extended
    return DegreeSeries(tuple(counts))


def old_vertex_series(table: PathCountTable, vertices: Iterable[str]) -> DegreeSeries:
    """Restriction of a count table to paths between the given (pre-split) vertices."""
    return table.restricted(vertices)


@dataclass
class SeriesComparison:
    """Side-by-side graded dimensions of A and kQ(A) plus the length bijection result."""

    algebra_series: DegreeSeries
    graph_series: DegreeSeries
    difference: DegreeSeries
    report: CheckReport

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra_series.to_list(),
            "path_algebra": self.graph_series.to_list(),
            "difference": self.difference.to_list(),
            "length_bijection": self.report.to_dict(),
        }


def compare_series(
    presentation: MonomialPresentation,
    max_degree: int,
    max_length: Optional[int] = None,
) -> SeriesComparison:
    """
    Compare the graded dimensions of A with those of kQ(A).

    The series difference is diagnostic only; pass/fail covers the length
    bijection #paths of length r = |L_{r+ell}|.
    """
    # Local import keeps hilbert importable from ufnarovskii's checks
    from analysis.ufnarovskii import build_ufnarovskii, check_bijection

    graph = build_ufnarovskii(presentation)
    automaton = build_automaton(presentation)

    algebra_series = count_by_degree(automaton, max_degree)
    graph_series = path_counts(graph.quiver, max_degree).by_degree()
    difference = graph_series.difference(algebra_series)

    report = check_bijection(graph, max_degree if max_length is None else max_length)
    report.name = "hilbert.length_bijection"
    report.note(
        "graded dimensions of A and kQ(A) are compared for information only; "
        "no equality is claimed at any degree"
    )
    logger.info(
        f"Compared series to degree {max_degree}: A={algebra_series.to_list()}, "
        f"kQ(A)={graph_series.to_list()}"
    )
    return SeriesComparison(algebra_series, graph_series, difference, report)


def check_counts_against_enumeration(quiver: WeightedQuiver, max_degree: int) -> CheckReport:
    """Check the count recurrence against explicit path enumeration."""
    table = path_counts(quiver, max_degree)
    enumerated = np.zeros_like(table.counts)
    position = {v: i for i, v in enumerate(quiver.vertices)}
    for path in iter_paths(quiver, max_degree=max_degree):
        enumerated[path.degree, position[path.start], position[path.end]] += 1

    report = CheckReport(name="hilbert.path_counts")
    for d in range(max_degree + 1):
        for u in quiver.vertices:
            for v in quiver.vertices:
                expected = int(enumerated[d, position[u], position[v]])
                actual = table.count(u, v, d)
                report.record(
                    actual == expected,
                    f"{actual} paths {u}->{v} of degree {d} counted, {expected} enumerated",
                )
    return report
