"""
Aligned plain-text tables for series and verification reports.

Tables are pandas DataFrames rendered with to_string(), indexed by degree.
"""

from typing import Mapping, Sequence

import pandas as pd

from analysis.hilbert import SeriesComparison
from analysis.legal_words import DegreeSeries
from core.models import CheckReport


def series_frame(columns: Mapping[str, DegreeSeries]) -> pd.DataFrame:
    """One column per series, indexed by degree; shorter series are padded with blanks."""
    frame = pd.DataFrame(
        {name: pd.Series(list(series), dtype=object) for name, series in columns.items()}
    ).fillna("")
    frame.index.name = "degree"
    return frame


def series_table(columns: Mapping[str, DegreeSeries]) -> str:
    return series_frame(columns).to_string()


def comparison_table(comparison: SeriesComparison) -> str:
    """Side-by-side dim A_d, dim kQ(A)_d and their difference."""
    return series_table(
        {
            "A": comparison.algebra_series,
            "kQ(A)": comparison.graph_series,
            "difference": comparison.difference,
        }
    )


def report_frame(reports: Sequence[CheckReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "check": report.name,
                "status": "PASS" if report.passed else "FAIL",
                "checks": report.checks_run,
                "failed": report.failure_count,
            }
            for report in reports
        ],
        columns=["check", "status", "checks", "failed"],
    )


def report_table(reports: Sequence[CheckReport]) -> str:
    return report_frame(reports).to_string(index=False)
