"""
Graphviz DOT export for weighted quivers and Ufnarovskii graphs.

Output is plain text in quiver order (vertices, then arrows), so the same
graph always produces the same bytes.
"""

from typing import Optional

from analysis.ufnarovskii import UfnGraph
from core.logging_config import get_logger
from core.models import WeightedQuiver

logger = get_logger(__name__)

# ---------------------------------------------------------------------------
# Shared styling constants
# ---------------------------------------------------------------------------

GRAPH_ATTRIBUTES = 'rankdir=LR; node [shape=circle, fontname="Helvetica"];'
EMPTY_WORD_LABEL = "ε"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _vertex_label(vertex: str) -> str:
    return vertex or EMPTY_WORD_LABEL


def quiver_to_dot(quiver: WeightedQuiver, name: str = "Q", highlight: Optional[set[str]] = None) -> str:
    """
    Render a weighted quiver; arrows are labelled "name:degree".

    Args:
        quiver: Quiver to render
        name: Graph name
        highlight: Vertices drawn with a double circle (e.g. split vertices)
    """
    highlight = highlight or set()
    lines = [f"digraph {_quote(name)} {{", f"  {GRAPH_ATTRIBUTES}"]
    for vertex in quiver.vertices:
        shape = ", shape=doublecircle" if vertex in highlight else ""
        lines.append(f"  {_quote(vertex)} [label={_quote(_vertex_label(vertex))}{shape}];")
    for arrow in quiver.arrows:
        lines.append(
            f"  {_quote(arrow.source)} -> {_quote(arrow.target)} "
            f"[label={_quote(f'{arrow.name}:{arrow.degree}')}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def ufgraph_to_dot(graph: UfnGraph, name: str = "QA") -> str:
    """
    Render Q(A): vertex labels are words, arrow labels "word/letter:degree"
    (for example "zxyy/z:1").
    """
    lines = [f"digraph {_quote(name)} {{", f"  {GRAPH_ATTRIBUTES}"]
    for vertex in graph.quiver.vertices:
        lines.append(f"  {_quote(vertex)} [label={_quote(_vertex_label(vertex))}];")
    for arrow in graph.quiver.arrows:
        label = f"{arrow.name}/{graph.label(arrow.name)}:{arrow.degree}"
        lines.append(
            f"  {_quote(arrow.source)} -> {_quote(arrow.target)} [label={_quote(label)}];"
        )
    lines.append("}")
    logger.debug(f"Rendered DOT for {len(graph.quiver.vertices)} vertices")
    return "\n".join(lines) + "\n"
