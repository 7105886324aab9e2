"""
Explicit path enumeration in weighted quivers.

Paths compose left to right (p·q is defined when p ends where q starts).
Enumeration is bounded by degree and/or length, since quivers with cycles
have infinitely many paths. These explicit lists are the brute-force oracle
for the counting recurrences in analysis.hilbert and the bases of the
truncated projectives in analysis.graded_reps.
"""

from typing import Iterator, Optional

from core.models import QuiverPath, WeightedQuiver


def iter_paths(
    quiver: WeightedQuiver,
    max_degree: Optional[int] = None,
    max_length: Optional[int] = None,
    start: Optional[str] = None,
) -> Iterator[QuiverPath]:
    """
    Yield every path within the bounds, shortest first.

    Args:
        quiver: Weighted quiver
        max_degree: Keep paths of degree <= max_degree
        max_length: Keep paths of length <= max_length
        start: Only paths starting at this vertex

    Raises:
        ValueError: If neither bound is given
    """
    if max_degree is None and max_length is None:
        raise ValueError("path enumeration needs a degree or length bound")

    vertices = (start,) if start is not None else quiver.vertices
    layer = [QuiverPath.trivial(v) for v in vertices]
    length = 0
    while layer:
        yield from layer
        length += 1
        if max_length is not None and length > max_length:
            return
        extended = []
        for path in layer:
            for arrow in quiver.arrows_from(path.end):
                degree = path.degree + arrow.degree
                if max_degree is not None and degree > max_degree:
                    continue
                extended.append(
                    QuiverPath(path.start, arrow.target, path.arrows + (arrow.name,), degree)
                )
        layer = extended


def contains_factor(path: QuiverPath, relations: tuple[tuple[str, ...], ...]) -> bool:
    """True if some relation occurs as a run of consecutive arrows of the path."""
    arrows = path.arrows
    for relation in relations:
        size = len(relation)
        for offset in range(len(arrows) - size + 1):
            if arrows[offset:offset + size] == relation:
                return True
    return False
