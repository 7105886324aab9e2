"""
Transformations between algebra presentations.

- classify(): assign the five algebra classes PA1 / WPA / MA / CMA / CMA1
- connectify(): present k + (kQ/I)_{>=1} as a one-vertex monomial algebra
- reduce_forbidden(): drop forbidden words that contain another forbidden word

These functions are pure: inputs are immutable and new values are returned.
"""

from typing import Union

from core.logging_config import get_logger
from core.models import (
    AlgebraClass,
    Classification,
    Generator,
    MonomialPresentation,
    QuiverMonomialAlgebra,
    WeightedQuiver,
    Word,
)

logger = get_logger(__name__)

AlgebraInput = Union[WeightedQuiver, MonomialPresentation, QuiverMonomialAlgebra]


class ConnectifyError(ValueError):
    """Raised when connectification has no generators to work with."""


def classify(value: AlgebraInput) -> Classification:
    """
    Classify a validated input.

    - quiver, no relations, all degrees 1: PA1, WPA, MA
    - quiver, no relations: WPA, MA
    - quiver with path relations: MA
    - monomial presentation, all degrees 1: CMA1, CMA, MA
    - monomial presentation: CMA, MA

    Returns:
        Classification with the most specific label as primary
    """
    if isinstance(value, MonomialPresentation):
        if value.all_degree_one:
            labels = {AlgebraClass.CMA1, AlgebraClass.CMA, AlgebraClass.MA}
            primary = AlgebraClass.CMA1
        else:
            labels = {AlgebraClass.CMA, AlgebraClass.MA}
            primary = AlgebraClass.CMA
    elif isinstance(value, QuiverMonomialAlgebra) and value.relations:
        labels = {AlgebraClass.MA}
        primary = AlgebraClass.MA
    else:
        quiver = value.quiver if isinstance(value, QuiverMonomialAlgebra) else value
        if quiver.all_degree_one:
            labels = {AlgebraClass.PA1, AlgebraClass.WPA, AlgebraClass.MA}
            primary = AlgebraClass.PA1
        else:
            labels = {AlgebraClass.WPA, AlgebraClass.MA}
            primary = AlgebraClass.WPA

    return Classification(primary=primary, labels=frozenset(labels))


def connectify(value: Union[QuiverMonomialAlgebra, WeightedQuiver]) -> MonomialPresentation:
    """
    Present the connected algebra k + A_{>=1} of a monomial algebra A = kQ/I.

    One generator per arrow, carrying the arrow's degree, in arrow order.
    Forbidden words: every non-composable ordered pair ab (t(a) != s(b)),
    in arrow-pair order, followed by each relation path read as a word.

    Raises:
        ConnectifyError: If the quiver has no arrows
    """
    if isinstance(value, WeightedQuiver):
        value = QuiverMonomialAlgebra(quiver=value)
    quiver = value.quiver

    if not quiver.arrows:
        raise ConnectifyError(
            "quiver has no arrows: k + A_{>=1} is k itself and has no generators"
        )

    generators = tuple(Generator(arrow.name, arrow.degree) for arrow in quiver.arrows)

    forbidden: list[Word] = []
    for first in quiver.arrows:
        for second in quiver.arrows:
            if first.target != second.source:
                forbidden.append((first.name, second.name))

    for relation in value.relations:
        word = tuple(relation)
        if word not in forbidden:
            forbidden.append(word)

    presentation = MonomialPresentation(generators=generators, forbidden=tuple(forbidden))
    logger.info(
        f"Connectified {len(quiver.vertices)}-vertex quiver: "
        f"{len(generators)} generators, {len(forbidden)} forbidden words"
    )
    return presentation


def _is_proper_factor(inner: Word, outer: Word) -> bool:
    size = len(inner)
    if size >= len(outer):
        return False
    return any(outer[i:i + size] == inner for i in range(len(outer) - size + 1))


def reduce_forbidden(presentation: MonomialPresentation) -> MonomialPresentation:
    """
    Remove every forbidden word that has another forbidden word as a proper factor.

    The ideal (F) is unchanged, so legality of every word is unchanged.
    Idempotent; order of the surviving words is preserved.
    """
    words = presentation.forbidden
    kept = tuple(
        word
        for word in words
        if not any(_is_proper_factor(other, word) for other in words if other != word)
    )
    if len(kept) != len(words):
        logger.debug(f"Reduced forbidden set from {len(words)} to {len(kept)} words")
    return MonomialPresentation(generators=presentation.generators, forbidden=kept)
