"""
Seeded random corpora of presentations and weighted quivers.

Every item draws from its own numpy Generator spawned from one SeedSequence,
so a corpus is reproducible from (seed, size) alone and items do not depend
on how many draws earlier items made.
"""

from typing import Optional

import numpy as np

from core.models import Arrow, Generator, MonomialPresentation, WeightedQuiver, Word

LETTERS = ("x", "y", "z")


def random_presentation(
    rng: np.random.Generator,
    max_letters: int = 3,
    max_forbidden: int = 4,
    max_length: int = 4,
    max_degree: int = 1,
) -> MonomialPresentation:
    """
    A random connected monomial presentation.

    Forbidden words have length 2..max_length (length-1 words would just
    remove a letter); duplicates are dropped.
    """
    count = int(rng.integers(1, max_letters + 1))
    letters = LETTERS[:count]
    generators = tuple(
        Generator(letter, int(rng.integers(1, max_degree + 1))) for letter in letters
    )

    forbidden: list[Word] = []
    for _ in range(int(rng.integers(0, max_forbidden + 1))):
        length = int(rng.integers(2, max_length + 1))
        word = tuple(letters[int(i)] for i in rng.integers(0, count, size=length))
        if word not in forbidden:
            forbidden.append(word)
    return MonomialPresentation(generators=generators, forbidden=tuple(forbidden))


def random_quiver(
    rng: np.random.Generator,
    max_vertices: int = 3,
    max_arrows: int = 4,
    max_degree: int = 3,
    min_arrows: int = 1,
) -> WeightedQuiver:
    """A random weighted quiver; loops and parallel arrows are allowed."""
    vertices = tuple(f"v{i}" for i in range(1, int(rng.integers(1, max_vertices + 1)) + 1))
    arrows = []
    for index in range(int(rng.integers(min_arrows, max_arrows + 1))):
        source, target = (vertices[int(i)] for i in rng.integers(0, len(vertices), size=2))
        arrows.append(Arrow(f"a{index + 1}", source, target, int(rng.integers(1, max_degree + 1))))
    return WeightedQuiver(vertices=vertices, arrows=tuple(arrows))


def presentation_corpus(seed: int, size: int, **limits) -> list[MonomialPresentation]:
    streams = np.random.SeedSequence(seed).spawn(size)
    return [random_presentation(np.random.default_rng(s), **limits) for s in streams]


def quiver_corpus(seed: int, size: int, heavy: Optional[bool] = None, **limits) -> list[WeightedQuiver]:
    """
    A list of random quivers.

    Args:
        seed: Root seed
        size: Number of quivers
        heavy: If True, make sure every quiver has an arrow of degree > 1
    """
    streams = np.random.SeedSequence(seed).spawn(size)
    quivers = []
    for stream in streams:
        rng = np.random.default_rng(stream)
        quiver = random_quiver(rng, **limits)
        if heavy and quiver.all_degree_one:
            first, *rest = quiver.arrows
            bumped = Arrow(first.name, first.source, first.target, 2)
            quiver = WeightedQuiver(vertices=quiver.vertices, arrows=(bumped, *rest))
        quivers.append(quiver)
    return quivers
