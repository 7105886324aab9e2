"""
Arrow splitting and normalization of weighted quivers to degree one.

Splitting an arrow b of degree > 1 adds a fresh vertex z and replaces b by
b': s(b) -> z of degree 1 and b'': z -> t(b) of degree deg(b) - 1. Each split
lowers the weight discrepancy D = sum(deg a) - |Q_1| by exactly one, so
repeated splitting reaches a quiver with all arrows of degree 1 after D steps.
"""

from dataclasses import dataclass
from typing import Optional

from analysis.hilbert import old_vertex_series, path_counts
from analysis.paths import iter_paths
from config import SPLIT_POLICIES, get_pipeline_config
from core.logging_config import get_logger
from core.models import Arrow, CheckReport, QuiverPath, WeightedQuiver

logger = get_logger(__name__)


class SplitError(ValueError):
    """Raised when an arrow cannot be split (unknown, or already of degree 1)."""


@dataclass(frozen=True)
class SplitStep:
    """
    One arrow split.

    Attributes:
        arrow: The arrow b that was replaced
        new_vertex: Fresh vertex z
        b_prime: s(b) -> z, degree 1
        b_dblprime: z -> t(b), degree deg(b) - 1
    """

    arrow: Arrow
    new_vertex: str
    b_prime: Arrow
    b_dblprime: Arrow

    def to_dict(self) -> dict:
        return {
            "arrow": self.arrow.name,
            "new_vertex": self.new_vertex,
            "b_prime": self.b_prime.name,
            "b_dblprime": self.b_dblprime.name,
        }


@dataclass(frozen=True)
class SplitTrace:
    """Ordered split steps from a weighted quiver to its degree-1 normalization."""

    steps: tuple[SplitStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def new_vertices(self) -> tuple[str, ...]:
        return tuple(step.new_vertex for step in self.steps)

    def to_list(self) -> list[dict]:
        return [step.to_dict() for step in self.steps]


def weight_discrepancy(quiver: WeightedQuiver) -> int:
    """D(kQ) = sum of arrow degrees minus the number of arrows; 0 iff all degrees are 1."""
    return quiver.weight_discrepancy


def _fresh_vertex(quiver: WeightedQuiver, prefix: str, start: int) -> tuple[str, int]:
    index = start
    while quiver.has_vertex(f"{prefix}{index}"):
        index += 1
    return f"{prefix}{index}", index


def _fresh_arrow_name(taken: set[str], name: str) -> str:
    if name not in taken:
        return name
    suffix = 2
    while f"{name}#{suffix}" in taken:
        suffix += 1
    return f"{name}#{suffix}"


def split_arrow(
    quiver: WeightedQuiver,
    arrow_name: str,
    new_vertex: Optional[str] = None,
    vertex_prefix: Optional[str] = None,
) -> tuple[WeightedQuiver, SplitStep]:
    """
    Split one arrow of degree > 1.

    The new arrows take b's position in the arrow order (b' then b''); all
    other vertices and arrows are unchanged.

    Args:
        quiver: Weighted quiver
        arrow_name: The arrow b to split
        new_vertex: Name for z (defaults to the first free prefix + counter)
        vertex_prefix: Prefix for generated vertex names (defaults to split.vertex_prefix)

    Raises:
        SplitError: If b is unknown, has degree 1, or new_vertex is taken
    """
    try:
        arrow = quiver.arrow(arrow_name)
    except KeyError as exc:
        raise SplitError(str(exc.args[0])) from None
    if arrow.degree <= 1:
        raise SplitError(f"arrow {arrow_name!r} has degree {arrow.degree}; only arrows of degree > 1 split")

    if new_vertex is None:
        prefix = vertex_prefix or get_pipeline_config().split.vertex_prefix
        new_vertex, _ = _fresh_vertex(quiver, prefix, 1)
    elif quiver.has_vertex(new_vertex):
        raise SplitError(f"vertex {new_vertex!r} already exists")

    taken = set(quiver.arrow_names) - {arrow.name}
    prime_name = _fresh_arrow_name(taken, f"{arrow.name}'")
    taken.add(prime_name)
    dblprime_name = _fresh_arrow_name(taken, f"{arrow.name}''")

    b_prime = Arrow(prime_name, arrow.source, new_vertex, 1)
    b_dblprime = Arrow(dblprime_name, new_vertex, arrow.target, arrow.degree - 1)

    arrows = []
    for existing in quiver.arrows:
        if existing.name == arrow.name:
            arrows.extend((b_prime, b_dblprime))
        else:
            arrows.append(existing)

    split = WeightedQuiver(vertices=quiver.vertices + (new_vertex,), arrows=tuple(arrows))
    step = SplitStep(arrow=arrow, new_vertex=new_vertex, b_prime=b_prime, b_dblprime=b_dblprime)
    logger.debug(f"Split {arrow.name} (degree {arrow.degree}) through {new_vertex}")
    return split, step


def _next_arrow(quiver: WeightedQuiver, policy: str) -> Optional[Arrow]:
    heavy = [arrow for arrow in quiver.arrows if arrow.degree > 1]
    if not heavy:
        return None
    return heavy[0] if policy == "lowest" else heavy[-1]


def normalize_to_degree_one(
    quiver: WeightedQuiver,
    policy: Optional[str] = None,
    vertex_prefix: Optional[str] = None,
) -> tuple[WeightedQuiver, SplitTrace]:
    """
    Split arrows until every arrow has degree 1.

    Args:
        quiver: Weighted quiver
        policy: "lowest" splits the first arrow of degree > 1 in arrow order,
                "highest" the last (defaults to split.policy)
        vertex_prefix: Fresh vertices are prefix1, prefix2, ... skipping taken names

    Returns:
        (Q-bar, trace) with len(trace) == D(kQ)
    """
    settings = get_pipeline_config().split
    policy = policy or settings.policy
    prefix = vertex_prefix or settings.vertex_prefix
    if policy not in SPLIT_POLICIES:
        raise SplitError(f"unknown split policy {policy!r}; expected one of {', '.join(SPLIT_POLICIES)}")

    steps = []
    counter = 1
    current = quiver
    while (arrow := _next_arrow(current, policy)) is not None:
        vertex, counter = _fresh_vertex(current, prefix, counter)
        current, step = split_arrow(current, arrow.name, new_vertex=vertex)
        steps.append(step)
        counter += 1

    logger.info(
        f"Normalized quiver in {len(steps)} splits: "
        f"{len(current.vertices)} vertices, {len(current.arrows)} arrows"
    )
    return current, SplitTrace(tuple(steps))


def transfer_path(step: SplitStep, path: QuiverPath) -> QuiverPath:
    """Replace every occurrence of b by b'·b''; endpoints and degree are kept."""
    arrows: list[str] = []
    for name in path.arrows:
        if name == step.arrow.name:
            arrows.extend((step.b_prime.name, step.b_dblprime.name))
        else:
            arrows.append(name)
    return QuiverPath(path.start, path.end, tuple(arrows), path.degree)


def transfer_path_through(trace: SplitTrace, path: QuiverPath) -> QuiverPath:
    for step in trace:
        path = transfer_path(step, path)
    return path


def _untransfer(step: SplitStep, path: QuiverPath) -> Optional[QuiverPath]:
    """Inverse of transfer_path, or None if b' and b'' do not occur as a pair."""
    arrows: list[str] = []
    names = path.arrows
    i = 0
    while i < len(names):
        name = names[i]
        if name == step.b_prime.name:
            if i + 1 >= len(names) or names[i + 1] != step.b_dblprime.name:
                return None
            arrows.append(step.arrow.name)
            i += 2
            continue
        if name == step.b_dblprime.name:
            return None
        arrows.append(name)
        i += 1
    return QuiverPath(path.start, path.end, tuple(arrows), path.degree)


def _is_path_of(quiver: WeightedQuiver, path: QuiverPath) -> bool:
    try:
        rebuilt = quiver.path(path.arrows, start=path.start)
    except (KeyError, ValueError):
        return False
    return rebuilt == path


def check_split_step(
    quiver: WeightedQuiver,
    step: SplitStep,
    split: WeightedQuiver,
    max_degree: Optional[int] = None,
) -> CheckReport:
    """
    Check one split against the quiver it came from.

    - D drops by one; one vertex and one arrow are added
    - b' and b'' have the expected endpoints and degrees
    - transfer_path maps every path of degree <= N to a path of the split quiver
    - every split-quiver path between old vertices comes from a path of Q
    - per-degree path counts between old vertices agree
    """
    if max_degree is None:
        max_degree = get_pipeline_config().verification.split_max_degree

    report = CheckReport(name=f"split.step[{step.arrow.name}]")
    report.record(
        weight_discrepancy(split) == weight_discrepancy(quiver) - 1,
        f"D went from {weight_discrepancy(quiver)} to {weight_discrepancy(split)}",
    )
    report.record(
        len(split.vertices) == len(quiver.vertices) + 1 and len(split.arrows) == len(quiver.arrows) + 1,
        f"expected {len(quiver.vertices) + 1} vertices and {len(quiver.arrows) + 1} arrows, "
        f"got {len(split.vertices)} and {len(split.arrows)}",
    )

    b = step.arrow
    expected_prime = Arrow(step.b_prime.name, b.source, step.new_vertex, 1)
    expected_dblprime = Arrow(step.b_dblprime.name, step.new_vertex, b.target, b.degree - 1)
    for expected in (expected_prime, expected_dblprime):
        actual = split.arrow_map.get(expected.name)
        report.record(actual == expected, f"arrow {expected.name} is {actual}, expected {expected}")

    for path in iter_paths(quiver, max_degree=max_degree):
        image = transfer_path(step, path)
        report.record(_is_path_of(split, image), f"image of {path} is not a path: {image}")

    old = set(quiver.vertices)
    for path in iter_paths(split, max_degree=max_degree):
        if path.start not in old or path.end not in old:
            continue
        preimage = _untransfer(step, path)
        report.record(
            preimage is not None and _is_path_of(quiver, preimage),
            f"path {path} between old vertices has no preimage",
        )

    before = path_counts(quiver, max_degree)
    after = path_counts(split, max_degree)
    for d in range(max_degree + 1):
        for u in quiver.vertices:
            for v in quiver.vertices:
                if not split.has_vertex(u) or not split.has_vertex(v):
                    continue
                report.record(
                    before.count(u, v, d) == after.count(u, v, d),
                    f"{u}->{v} degree {d}: {before.count(u, v, d)} paths before, "
                    f"{after.count(u, v, d)} after",
                )
    return report


def check_normalization(
    quiver: WeightedQuiver,
    max_degree: Optional[int] = None,
    policy: Optional[str] = None,
) -> CheckReport:
    """Normalize and check every step, then the final quiver's shape."""
    normalized, trace = normalize_to_degree_one(quiver, policy=policy)
    report = CheckReport(name="split.normalize")
    discrepancy = weight_discrepancy(quiver)

    current = quiver
    for step in trace:
        following, replayed = split_arrow(current, step.arrow.name, new_vertex=step.new_vertex)
        report.absorb(check_split_step(current, replayed, following, max_degree))
        current = following

    report.record(len(trace) == discrepancy, f"trace length {len(trace)} != D = {discrepancy}")
    report.record(normalized.all_degree_one, "normalized quiver has an arrow of degree > 1")
    report.record(
        len(normalized.vertices) == len(quiver.vertices) + discrepancy,
        f"{len(normalized.vertices)} vertices, expected {len(quiver.vertices) + discrepancy}",
    )
    report.record(
        len(normalized.arrows) == len(quiver.arrows) + discrepancy,
        f"{len(normalized.arrows)} arrows, expected {len(quiver.arrows) + discrepancy}",
    )
    return report


def check_order_independence(quiver: WeightedQuiver, max_degree: Optional[int] = None) -> CheckReport:
    """Compare the "lowest" and "highest" normalizations: sizes and old-vertex path counts."""
    if max_degree is None:
        max_degree = get_pipeline_config().verification.split_max_degree

    report = CheckReport(name="split.order_independence")
    low, _ = normalize_to_degree_one(quiver, policy="lowest")
    high, _ = normalize_to_degree_one(quiver, policy="highest")
    report.record(
        (len(low.vertices), len(low.arrows)) == (len(high.vertices), len(high.arrows)),
        f"lowest gives {len(low.vertices)}/{len(low.arrows)}, "
        f"highest gives {len(high.vertices)}/{len(high.arrows)} vertices/arrows",
    )

    old = quiver.vertices
    low_series = old_vertex_series(path_counts(low, max_degree), old)
    high_series = old_vertex_series(path_counts(high, max_degree), old)
    report.record(
        low_series == high_series,
        f"old-vertex series differ: {low_series.to_list()} vs {high_series.to_list()}",
    )
    return report


def check_against_golden(
    quiver: WeightedQuiver,
    trace: SplitTrace,
    golden: WeightedQuiver,
    max_degree: Optional[int] = None,
) -> CheckReport:
    """
    Check a stored normalization against the quiver it claims to normalize.

    Every path of Q of degree <= N, transferred through the trace, must be a
    path of the golden quiver; golden paths between old vertices must come
    back; per-degree counts between old vertices must agree.
    """
    if max_degree is None:
        max_degree = get_pipeline_config().verification.split_max_degree

    report = CheckReport(name="split.golden")
    report.record(golden.all_degree_one, "golden quiver has an arrow of degree > 1")

    for path in iter_paths(quiver, max_degree=max_degree):
        image = transfer_path_through(trace, path)
        report.record(_is_path_of(golden, image), f"path {path} maps to {image}, not a golden path")

    old = set(quiver.vertices)
    missing = [v for v in quiver.vertices if not golden.has_vertex(v)]
    report.record(not missing, f"golden quiver lacks vertices {missing}")
    if missing:
        return report

    for path in iter_paths(golden, max_degree=max_degree):
        if path.start not in old or path.end not in old:
            continue
        preimage: Optional[QuiverPath] = path
        for step in reversed(trace.steps):
            preimage = _untransfer(step, preimage)
            if preimage is None:
                break
        report.record(
            preimage is not None and _is_path_of(quiver, preimage),
            f"golden path {path} between old vertices has no preimage",
        )

    before = old_vertex_series(path_counts(quiver, max_degree), quiver.vertices)
    after = old_vertex_series(path_counts(golden, max_degree), quiver.vertices)
    report.record(
        before == after,
        f"old-vertex series differ: {before.to_list()} vs {after.to_list()}",
    )
    return report
