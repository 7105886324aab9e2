"""
Core module for the monomial quiver pipeline.

Contains configuration, domain models, and shared utilities used across the application.
"""

from core.config import PathConfig
from core.models import (
    AlgebraClass,
    Arrow,
    CheckReport,
    Classification,
    Generator,
    MonomialPresentation,
    QuiverMonomialAlgebra,
    QuiverPath,
    WeightedQuiver,
    Word,
)
from core.logging_config import setup_logging, get_logger

__all__ = [
    "PathConfig",
    "AlgebraClass",
    "Arrow",
    "CheckReport",
    "Classification",
    "Generator",
    "MonomialPresentation",
    "QuiverMonomialAlgebra",
    "QuiverPath",
    "WeightedQuiver",
    "Word",
    "setup_logging",
    "get_logger",
]
