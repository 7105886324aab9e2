"""
Data processing module for the monomial quiver pipeline.

Handles reading and writing algebra inputs and the transformations between
algebra classes.

Submodules:
    parsing: JSON input schema, validation and deterministic emission
    transforms: classify, connectify and reduce_forbidden
    pipeline: chained constructions between classes (import directly:
              it depends on the analysis package, which depends on this one)
"""

from data_processing.parsing import (
    AlgebraInput,
    InputValidationError,
    ParseError,
    emit_json,
    load_input,
    parse_input,
    to_document,
)
from data_processing.transforms import (
    ConnectifyError,
    classify,
    connectify,
    reduce_forbidden,
)

__all__ = [
    # Parsing
    "AlgebraInput",
    "InputValidationError",
    "ParseError",
    "emit_json",
    "load_input",
    "parse_input",
    "to_document",
    # Transforms
    "ConnectifyError",
    "classify",
    "connectify",
    "reduce_forbidden",
]
