"""Parsing and emission of pipeline inputs.

Two JSON document kinds are accepted:

    {"kind": "monomial", "generators": [{"name": "x", "degree": 1}, ...],
     "forbidden": ["yx", "xxx"]}

    {"kind": "quiver", "vertices": ["v1", ...],
     "arrows": [{"name": "a", "source": "v1", "target": "v2", "degree": 1}, ...],
     "relations": [["a", "b"], ...]}

Forbidden words are strings of single-character letters or arrays of letter
names. Shape and type problems raise ParseError; semantic problems (unknown
references, duplicate ids, degrees below one) raise InputValidationError.
Every emitter round-trips: parse_input(emit_json(x)) == x.
"""

import json
from pathlib import Path
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, TypeAdapter
from pydantic import ValidationError as SchemaValidationError

from core.logging_config import get_logger
from core.models import (
    Arrow,
    Generator,
    MonomialPresentation,
    QuiverMonomialAlgebra,
    WeightedQuiver,
    Word,
    spell_word,
)

logger = get_logger(__name__)

AlgebraInput = Union[WeightedQuiver, MonomialPresentation, QuiverMonomialAlgebra]


class ParseError(ValueError):
    """Raised when input is not JSON or does not match the document schema."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class InputValidationError(ValueError):
    """Raised when a well-formed document violates a semantic constraint."""

    def __init__(self, errors: list[str]):
        self.errors = errors
        super().__init__("; ".join(errors))


class _GeneratorSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: StrictStr
    degree: StrictInt


class _PresentationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["monomial"]
    generators: list[_GeneratorSpec]
    forbidden: list[Union[StrictStr, list[StrictStr]]] = []


class _ArrowSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: StrictStr
    source: StrictStr
    target: StrictStr
    degree: StrictInt = 1


class _QuiverDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["quiver"]
    vertices: list[StrictStr]
    arrows: list[_ArrowSpec] = []
    relations: list[list[StrictStr]] = []


_InputDocument = Annotated[
    Union[_PresentationDocument, _QuiverDocument],
    Field(discriminator="kind"),
]
_document_adapter = TypeAdapter(_InputDocument)


def _format_location(loc: tuple) -> str:
    # Drop the discriminator tag pydantic prepends to union member errors
    parts = [str(part) for part in loc]
    if parts and parts[0] in ("monomial", "quiver"):
        parts = parts[1:]
    location = ""
    for part in parts:
        if part.isdigit():
            location += f"[{part}]"
        else:
            location += f".{part}" if location else part
    return location


def _presentation_from_document(doc: _PresentationDocument) -> MonomialPresentation:
    generators = tuple(Generator(item.name, item.degree) for item in doc.generators)
    # Strings split into characters; arrays carry multi-character letter names
    words: list[Word] = []
    for raw in doc.forbidden:
        word: Word = tuple(raw)
        if word not in words:
            words.append(word)

    presentation = MonomialPresentation(generators=generators, forbidden=tuple(words))
    errors = presentation.validate()
    if errors:
        raise InputValidationError(errors)
    return presentation


def _quiver_from_document(doc: _QuiverDocument) -> Union[WeightedQuiver, QuiverMonomialAlgebra]:
    quiver = WeightedQuiver(
        vertices=tuple(doc.vertices),
        arrows=tuple(
            Arrow(item.name, item.source, item.target, item.degree) for item in doc.arrows
        ),
    )
    if not doc.relations:
        errors = quiver.validate()
        if errors:
            raise InputValidationError(errors)
        return quiver

    relations: list[tuple[str, ...]] = []
    for relation in doc.relations:
        if tuple(relation) not in relations:
            relations.append(tuple(relation))
    algebra = QuiverMonomialAlgebra(quiver=quiver, relations=tuple(relations))
    errors = algebra.validate()
    if errors:
        raise InputValidationError(errors)
    return algebra


def parse_input(text: Union[bytes, str]) -> AlgebraInput:
    """
    Parse and validate a JSON input document.

    Args:
        text: Raw document bytes or text

    Returns:
        MonomialPresentation, WeightedQuiver (no relations) or
        QuiverMonomialAlgebra (at least one relation), with input order preserved.

    Raises:
        ParseError: Malformed JSON or schema violation (with location)
        InputValidationError: Unknown letter/vertex, degree < 1, duplicate id
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc

    try:
        doc = _document_adapter.validate_python(data)
    except SchemaValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], _format_location(tuple(first["loc"]))) from exc

    if isinstance(doc, _PresentationDocument):
        value: AlgebraInput = _presentation_from_document(doc)
        logger.debug(
            f"Parsed presentation: {len(value.generators)} generators, "
            f"{len(value.forbidden)} forbidden words"
        )
    else:
        value = _quiver_from_document(doc)
        logger.debug(f"Parsed quiver input of type {type(value).__name__}")
    return value


def load_input(path: Path) -> AlgebraInput:
    """Read and parse an input file."""
    return parse_input(Path(path).read_bytes())


def _emit_word(word: Word, single_character: bool) -> Union[str, list[str]]:
    if single_character:
        return spell_word(word)
    return list(word)


def to_document(value: AlgebraInput) -> dict:
    """Convert a validated value back into its JSON document."""
    if isinstance(value, MonomialPresentation):
        single = value.single_character
        return {
            "kind": "monomial",
            "generators": [{"name": g.name, "degree": g.degree} for g in value.generators],
            "forbidden": [_emit_word(word, single) for word in value.forbidden],
        }

    if isinstance(value, QuiverMonomialAlgebra):
        quiver, relations = value.quiver, value.relations
    else:
        quiver, relations = value, ()

    return {
        "kind": "quiver",
        "vertices": list(quiver.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target, "degree": a.degree}
            for a in quiver.arrows
        ],
        "relations": [list(relation) for relation in relations],
    }


def emit_json(value: AlgebraInput, indent: int = 2) -> str:
    """Serialize a value as a deterministic JSON document."""
    return json.dumps(to_document(value), indent=indent, ensure_ascii=False) + "\n"
