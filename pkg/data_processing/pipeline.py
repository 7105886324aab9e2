"""
Pipeline between the five algebra classes.

Three constructions move an algebra from one class to another:
- connectify: quiver (with or without relations) -> connected presentation
- ufgraph: connected presentation -> its weighted Ufnarovskii graph
- normalize: weighted quiver -> degree-1 quiver by arrow splitting

run_pipeline() searches breadth-first for the shortest chain of
constructions that reaches the requested class, runs each one, and verifies
each step with the matching checks. The pipeline integrates with:
- data_processing/transforms.py: classify(), connectify(), reduce_forbidden()
- analysis/ufnarovskii.py: build_ufnarovskii()
- analysis/arrow_split.py: normalize_to_degree_one()
- analysis/suites.py: the per-step verification checks
"""

from collections import deque
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Union

from analysis.arrow_split import SplitTrace, check_normalization, normalize_to_degree_one
from analysis.suites import check_connectify, ufgraph_suite
from analysis.ufnarovskii import build_ufnarovskii
from config import get_pipeline_config
from core.logging_config import get_logger
from core.models import (
    AlgebraClass,
    CheckReport,
    Classification,
    MonomialPresentation,
    QuiverMonomialAlgebra,
    WeightedQuiver,
)
from data_processing.parsing import to_document
from data_processing.transforms import classify, connectify, reduce_forbidden

logger = get_logger(__name__)

AlgebraInput = Union[WeightedQuiver, MonomialPresentation, QuiverMonomialAlgebra]


class UnreachableTargetError(ValueError):
    """Raised when no chain of constructions reaches the requested class."""


@dataclass
class PipelineStep:
    """
    One executed construction.

    Attributes:
        name: connectify / ufgraph / normalize
        construction: What the step builds, in words
        before: Classification of the input to the step
        after: Classification of the produced artifact
        artifact: The produced algebra or quiver
        trace: Split trace (normalize steps only)
        reports: Verification reports for this step
    """

    name: str
    construction: str
    before: Classification
    after: Classification
    artifact: AlgebraInput
    trace: Optional[SplitTrace] = None
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def to_dict(self) -> dict:
        data = {
            "step": self.name,
            "construction": self.construction,
            "from": self.before.primary.value,
            "to": self.after.primary.value,
            "artifact": to_document(self.artifact),
            "verification": [report.to_dict() for report in self.reports],
        }
        if self.trace is not None:
            data["trace"] = self.trace.to_list()
        return data


@dataclass
class PipelineReport:
    """Input class, executed steps with their artifacts, and verification summaries."""

    input_class: Classification
    target: AlgebraClass
    steps: list[PipelineStep] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    @property
    def final(self) -> Optional[AlgebraInput]:
        return self.steps[-1].artifact if self.steps else None

    def to_dict(self) -> dict:
        return {
            "input_class": self.input_class.describe(),
            "target": self.target.value,
            "passed": self.passed,
            "steps": [step.to_dict() for step in self.steps],
        }

    def __str__(self) -> str:
        lines = [f"input class: {self.input_class.describe()}", f"target: {self.target.value}"]
        if not self.steps:
            lines.append("no steps needed")
        for index, step in enumerate(self.steps, 1):
            status = "PASS" if step.passed else "FAIL"
            lines.append(
                f"{index}. {step.name}: {step.before.primary.value} -> "
                f"{step.after.primary.value} [{status}] ({step.construction})"
            )
            lines.extend(f"   {report}" for report in step.reports)
        return "\n".join(lines)


@dataclass(frozen=True)
class _Move:
    name: str
    construction: str
    applies: Callable[[AlgebraInput], bool]


def _has_arrows(value: AlgebraInput) -> bool:
    if isinstance(value, QuiverMonomialAlgebra):
        return bool(value.quiver.arrows)
    return isinstance(value, WeightedQuiver) and bool(value.arrows)


MOVES = (
    _Move("connectify", "connected algebra k + A_{>=1} with arrows as generators", _has_arrows),
    _Move(
        "ufgraph",
        "weighted Ufnarovskii graph Q(A) on legal words",
        lambda value: isinstance(value, MonomialPresentation),
    ),
    _Move(
        "normalize",
        "degree-one quiver by splitting arrows of degree > 1",
        lambda value: isinstance(value, WeightedQuiver) and value.weight_discrepancy > 0,
    ),
)


def _apply(move: str, value: AlgebraInput, reduce: bool) -> tuple[AlgebraInput, Optional[SplitTrace]]:
    if move == "connectify":
        presentation = connectify(value)
        return (reduce_forbidden(presentation) if reduce else presentation), None
    if move == "ufgraph":
        return build_ufnarovskii(value).quiver, None
    normalized, trace = normalize_to_degree_one(value)
    return normalized, trace


def plan_route(value: AlgebraInput, target: AlgebraClass, reduce: bool = False) -> list[tuple[str, AlgebraInput, Optional[SplitTrace]]]:
    """
    Shortest chain of constructions from the input to an algebra of the target class.

    Returns:
        (move name, artifact, trace) for each step; empty if the input is already in the class

    Raises:
        UnreachableTargetError: If no chain reaches the target
    """
    start = classify(value)
    if target in start.labels:
        return []

    queue: deque[tuple[AlgebraInput, list]] = deque([(value, [])])
    seen = {start.primary}
    while queue:
        current, route = queue.popleft()
        for move in MOVES:
            if not move.applies(current):
                continue
            artifact, trace = _apply(move.name, current, reduce)
            extended = route + [(move.name, artifact, trace)]
            classification = classify(artifact)
            if target in classification.labels:
                return extended
            if classification.primary not in seen:
                seen.add(classification.primary)
                queue.append((artifact, extended))

    raise UnreachableTargetError(
        f"no chain of constructions leads from {start.primary.value} to {target.value}"
    )


def run_pipeline(
    value: AlgebraInput,
    target: AlgebraClass,
    max_degree: Optional[int] = None,
    seed: Optional[int] = None,
    reduce: Optional[bool] = None,
) -> PipelineReport:
    """
    Transform an algebra into the target class and verify every step.

    Args:
        value: Validated input
        target: Requested algebra class
        max_degree: Degree bound N for the checks (defaults to verification.max_degree)
        seed: Seed for randomized checks (defaults to verification.seed)
        reduce: Reduce forbidden sets produced by connectify

    Returns:
        PipelineReport with one entry per construction
    """
    config = get_pipeline_config()
    settings = config.verification
    if max_degree is not None:
        settings = replace(settings, max_degree=max_degree)
    if seed is not None:
        settings = replace(settings, seed=seed)
    reduce = config.enumeration.reduce_forbidden if reduce is None else reduce

    report = PipelineReport(input_class=classify(value), target=target)
    constructions = {move.name: move.construction for move in MOVES}

    current = value
    for name, artifact, trace in plan_route(value, target, reduce):
        step = PipelineStep(
            name=name,
            construction=constructions[name],
            before=classify(current),
            after=classify(artifact),
            artifact=artifact,
            trace=trace,
        )
        if name == "connectify":
            step.reports.append(check_connectify(current, settings.max_degree))
        elif name == "ufgraph":
            step.reports.extend(ufgraph_suite(current, settings))
        else:
            step.reports.append(check_normalization(current, settings.split_max_degree))
        report.steps.append(step)
        logger.info(f"Pipeline step {name}: {step.before.primary.value} -> {step.after.primary.value}")
        current = artifact

    return report
