"""
Data models for the monomial quiver pipeline.

Contains immutable dataclasses for the algebras the pipeline moves between
(weighted quivers, quivers with monomial relations, monomial presentations),
paths and words, the five algebra classes, and the report type returned by
every verification check.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional


# A word is a sequence of letter names; multi-character names are allowed.
Word = tuple[str, ...]

EMPTY_WORD: Word = ()


def spell_word(word: Iterable[str]) -> str:
    """
    Render a word as a single string.

    Single-character letters are concatenated ("zxy"); as soon as one letter
    has a longer name the letters are joined with "." so the word can be split
    back unambiguously.
    """
    letters = tuple(word)
    if all(len(letter) == 1 for letter in letters):
        return "".join(letters)
    return ".".join(letters)


def split_word(text: str, single_character: bool) -> Word:
    """Inverse of spell_word for an alphabet of known shape."""
    if not text:
        return EMPTY_WORD
    if single_character:
        return tuple(text)
    return tuple(text.split("."))


@dataclass(frozen=True)
class Arrow:
    """A weighted arrow: name, source vertex, target vertex and degree >= 1."""

    name: str
    source: str
    target: str
    degree: int = 1


@dataclass(frozen=True)
class QuiverPath:
    """
    A path in a quiver.

    The product p·q is defined when p ends where q starts; arrows are listed in
    traversal order, so labels concatenate along the path.

    Attributes:
        start: Source vertex of the first arrow (or the vertex of a trivial path)
        end: Target vertex of the last arrow
        arrows: Arrow names in traversal order (empty for the idempotent e_v)
        degree: Sum of arrow degrees
    """

    start: str
    end: str
    arrows: tuple[str, ...] = ()
    degree: int = 0

    @classmethod
    def trivial(cls, vertex: str) -> "QuiverPath":
        """The length-0 path e_v."""
        return cls(start=vertex, end=vertex)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def sort_key(self) -> tuple:
        return (self.degree, self.length, self.arrows, self.start, self.end)

    def compose(self, other: "QuiverPath") -> Optional["QuiverPath"]:
        """Return self·other, or None when the paths are not composable."""
        if self.end != other.start:
            return None
        return QuiverPath(
            start=self.start,
            end=other.end,
            arrows=self.arrows + other.arrows,
            degree=self.degree + other.degree,
        )

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e[{self.start}]"
        return "·".join(self.arrows)


@dataclass(frozen=True)
class WeightedQuiver:
    """
    Finite directed multigraph with a positive integer degree on every arrow.

    Vertex and arrow order is significant: it is preserved from the input and
    drives every deterministic choice downstream (split order, enumeration
    order, output order).

    Attributes:
        vertices: Ordered vertex ids
        arrows: Ordered arrows
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def validate(self) -> list[str]:
        """
        Validate structural invariants.

        Returns:
            List of error messages. Empty list means all validations passed.
        """
        errors = []

        seen_vertices: set[str] = set()
        for index, vertex in enumerate(self.vertices):
            if vertex in seen_vertices:
                errors.append(f"vertices[{index}]: duplicate vertex id {vertex!r}")
            seen_vertices.add(vertex)

        seen_arrows: set[str] = set()
        for index, arrow in enumerate(self.arrows):
            if arrow.name in seen_arrows:
                errors.append(f"arrows[{index}].name: duplicate arrow id {arrow.name!r}")
            seen_arrows.add(arrow.name)
            if arrow.source not in seen_vertices:
                errors.append(f"arrows[{index}].source: unknown vertex {arrow.source!r}")
            if arrow.target not in seen_vertices:
                errors.append(f"arrows[{index}].target: unknown vertex {arrow.target!r}")
            if arrow.degree < 1:
                errors.append(f"arrows[{index}].degree: degree must be ≥ 1")

        return errors

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {arrow.name: arrow for arrow in self.arrows}

    @cached_property
    def _outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        outgoing: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for arrow in self.arrows:
            outgoing.setdefault(arrow.source, []).append(arrow)
        return {v: tuple(arrows) for v, arrows in outgoing.items()}

    @cached_property
    def _incoming(self) -> dict[str, tuple[Arrow, ...]]:
        incoming: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for arrow in self.arrows:
            incoming.setdefault(arrow.target, []).append(arrow)
        return {v: tuple(arrows) for v, arrows in incoming.items()}

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(arrow.name for arrow in self.arrows)

    @property
    def max_degree(self) -> int:
        return max((arrow.degree for arrow in self.arrows), default=0)

    @property
    def all_degree_one(self) -> bool:
        return all(arrow.degree == 1 for arrow in self.arrows)

    @property
    def weight_discrepancy(self) -> int:
        """D(kQ) = sum of arrow degrees minus the number of arrows."""
        return sum(arrow.degree for arrow in self.arrows) - len(self.arrows)

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._outgoing

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def arrows_from(self, vertex: str) -> tuple[Arrow, ...]:
        return self._outgoing.get(vertex, ())

    def arrows_into(self, vertex: str) -> tuple[Arrow, ...]:
        return self._incoming.get(vertex, ())

    def arrow_path(self, name: str) -> QuiverPath:
        arrow = self.arrow(name)
        return QuiverPath(arrow.source, arrow.target, (arrow.name,), arrow.degree)

    def path(self, names: Iterable[str], start: Optional[str] = None) -> QuiverPath:
        """
        Build a path from arrow names.

        Args:
            names: Arrow names in traversal order
            start: Vertex for the trivial path when names is empty

        Raises:
            ValueError: If consecutive arrows are not composable
            KeyError: If an arrow name is unknown
        """
        names = tuple(names)
        if not names:
            if start is None or not self.has_vertex(start):
                raise ValueError("a trivial path needs a known start vertex")
            return QuiverPath.trivial(start)

        path = self.arrow_path(names[0])
        for name in names[1:]:
            composed = path.compose(self.arrow_path(name))
            if composed is None:
                raise ValueError(
                    f"arrows {path.arrows[-1]!r} and {name!r} are not composable"
                )
            path = composed
        if start is not None and path.start != start:
            raise ValueError(f"path starts at {path.start!r}, not {start!r}")
        return path


@dataclass(frozen=True)
class Generator:
    """A letter of a monomial presentation with its positive degree."""

    name: str
    degree: int = 1


@dataclass(frozen=True)
class MonomialPresentation:
    """
    Connected monomial algebra k<G>/(F).

    Attributes:
        generators: Ordered letters with degrees
        forbidden: Forbidden words in input order (duplicates removed by the parser)
    """

    generators: tuple[Generator, ...]
    forbidden: tuple[Word, ...] = ()

    def validate(self) -> list[str]:
        """
        Validate letters, degrees and forbidden words.

        Returns:
            List of error messages. Empty list means all validations passed.
        """
        errors = []
        seen: set[str] = set()
        for index, generator in enumerate(self.generators):
            if generator.name in seen:
                errors.append(f"generators[{index}].name: duplicate letter {generator.name!r}")
            if not generator.name:
                errors.append(f"generators[{index}].name: letter name must be nonempty")
            seen.add(generator.name)
            if generator.degree < 1:
                errors.append(f"generators[{index}].degree: degree must be ≥ 1")

        for index, word in enumerate(self.forbidden):
            if not word:
                errors.append(f"forbidden[{index}]: forbidden words must be nonempty")
            for letter in word:
                if letter not in seen:
                    errors.append(f"forbidden[{index}]: unknown letter {letter!r}")

        return errors

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(generator.name for generator in self.generators)

    @cached_property
    def degree_map(self) -> dict[str, int]:
        return {generator.name: generator.degree for generator in self.generators}

    @property
    def single_character(self) -> bool:
        return all(len(letter) == 1 for letter in self.letters)

    @property
    def all_degree_one(self) -> bool:
        return all(generator.degree == 1 for generator in self.generators)

    def degree_of(self, word: Iterable[str]) -> int:
        """Degree of a word: the sum of its letter degrees."""
        return sum(self.degree_map[letter] for letter in word)

    def spell(self, word: Iterable[str]) -> str:
        return spell_word(word)

    def parse_word(self, text: str) -> Word:
        return split_word(text, self.single_character)


@dataclass(frozen=True)
class QuiverMonomialAlgebra:
    """
    Monomial algebra kQ/I with I generated by finitely many paths.

    Attributes:
        quiver: The weighted quiver
        relations: Each relation as the arrow names of a path of length >= 1
    """

    quiver: WeightedQuiver
    relations: tuple[tuple[str, ...], ...] = ()

    def validate(self) -> list[str]:
        errors = self.quiver.validate()
        if errors:
            return errors
        for index, relation in enumerate(self.relations):
            if not relation:
                errors.append(f"relations[{index}]: relation paths must have length ≥ 1")
                continue
            unknown = [name for name in relation if name not in self.quiver.arrow_map]
            if unknown:
                errors.append(f"relations[{index}]: unknown arrow {unknown[0]!r}")
                continue
            try:
                self.quiver.path(relation)
            except ValueError as exc:
                errors.append(f"relations[{index}]: {exc}")
        return errors


class AlgebraClass(str, Enum):
    """The five classes of graded algebras the pipeline connects."""

    PA1 = "PA1"
    WPA = "WPA"
    MA = "MA"
    CMA = "CMA"
    CMA1 = "CMA1"


# Most specific first; used for primary-label choice and for display order.
CLASS_ORDER = (
    AlgebraClass.PA1,
    AlgebraClass.CMA1,
    AlgebraClass.WPA,
    AlgebraClass.CMA,
    AlgebraClass.MA,
)


@dataclass(frozen=True)
class Classification:
    """Most specific class plus every class the algebra belongs to."""

    primary: AlgebraClass
    labels: frozenset[AlgebraClass]

    @property
    def ordered_labels(self) -> list[AlgebraClass]:
        return [label for label in CLASS_ORDER if label in self.labels]

    def describe(self) -> str:
        """Return e.g. 'CMA (also MA)'."""
        others = [label.value for label in self.ordered_labels if label != self.primary]
        if not others:
            return self.primary.value
        return f"{self.primary.value} (also {', '.join(others)})"


@dataclass
class CheckReport:
    """
    Outcome of one verification check.

    Attributes:
        name: Check name (e.g. "ufgraph.bijection")
        passed: False as soon as one failure is recorded
        checks_run: Number of individual assertions evaluated
        failures: Witness descriptions, capped at max_failures
        failure_count: Total number of failures, including those not stored
        notes: Diagnostic remarks that are not pass/fail claims
    """

    name: str
    passed: bool = True
    checks_run: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)
    max_failures: int = 20

    def record(self, ok: bool, witness: str = "") -> bool:
        """Count one assertion; store the witness when it fails."""
        self.checks_run += 1
        if not ok:
            self.passed = False
            self.failure_count += 1
            if len(self.failures) < self.max_failures:
                self.failures.append(witness)
        return ok

    def note(self, message: str) -> None:
        self.notes.append(message)

    def absorb(self, other: "CheckReport") -> None:
        """Fold another report's counts, witnesses and notes into this one."""
        self.checks_run += other.checks_run
        self.failure_count += other.failure_count
        self.passed = self.passed and other.passed
        room = self.max_failures - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        self.notes.extend(other.notes)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks_run": self.checks_run,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.name}: {self.checks_run} checks"
        if not self.passed:
            line += f", {self.failure_count} failed; first: {self.failures[0]}"
        return line
