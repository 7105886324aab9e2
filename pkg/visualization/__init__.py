"""
Visualization package for quivers and series.

This package renders pipeline artifacts as text:
- dot_export: Graphviz DOT for weighted quivers and Ufnarovskii graphs
- tables: aligned plain-text tables of series and check results
"""

from visualization.dot_export import quiver_to_dot, ufgraph_to_dot
from visualization.tables import (
    comparison_table,
    report_table,
    series_frame,
    series_table,
)

__all__ = [
    "quiver_to_dot",
    "ufgraph_to_dot",
    "comparison_table",
    "report_table",
    "series_frame",
    "series_table",
]
