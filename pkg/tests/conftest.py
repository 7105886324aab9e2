"""
Pytest configuration and fixtures for the test suite.

This module provides shared fixtures used across multiple test modules.
"""

import tempfile
from pathlib import Path
from typing import Generator as GeneratorType

import pytest

import config as pipeline_config
from core.config import PathConfig
from core.models import Arrow, Generator, MonomialPresentation, WeightedQuiver


@pytest.fixture
def temp_dir() -> GeneratorType[Path, None, None]:
    """Create a temporary directory that is cleaned up after the test."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def reset_config_cache() -> GeneratorType[None, None, None]:
    """Drop the cached pipeline configuration around each test."""
    pipeline_config._cached_config = None
    yield
    pipeline_config._cached_config = None


@pytest.fixture
def paths() -> PathConfig:
    """PathConfig pointing at the bundled example inputs."""
    return PathConfig()


@pytest.fixture
def mock_data_dir(temp_dir: Path) -> Path:
    """
    Create a mock data directory with empty example files.

    Creates the expected directory structure and empty placeholder files
    so that PathConfig.validate() can pass file existence checks.
    """
    data_dir = temp_dir / "data"
    data_dir.mkdir()

    for filename in [
        "three_letter_presentation.json",
        "weighted_xy_presentation.json",
        "free_loops_quiver.json",
    ]:
        (data_dir / filename).touch()

    return data_dir


@pytest.fixture
def three_letter() -> MonomialPresentation:
    """k<x,y,z>/(xx, yx, zy, xz, zz, yyyy), all letters of degree 1."""
    return MonomialPresentation(
        generators=(Generator("x"), Generator("y"), Generator("z")),
        forbidden=(
            ("x", "x"),
            ("y", "x"),
            ("z", "y"),
            ("x", "z"),
            ("z", "z"),
            ("y", "y", "y", "y"),
        ),
    )


@pytest.fixture
def weighted_xy() -> MonomialPresentation:
    """k<x,y>/(yx, xxx) with deg x = 1 and deg y = 2."""
    return MonomialPresentation(
        generators=(Generator("x", 1), Generator("y", 2)),
        forbidden=(("y", "x"), ("x", "x", "x")),
    )


@pytest.fixture
def free_two_letters() -> MonomialPresentation:
    """Free algebra k<x,y> in degree 1 (no forbidden words)."""
    return MonomialPresentation(generators=(Generator("x"), Generator("y")))


@pytest.fixture
def free_loops() -> WeightedQuiver:
    """One vertex with loops of degrees 1, 2 and 3."""
    return WeightedQuiver(
        vertices=("v",),
        arrows=(
            Arrow("x1", "v", "v", 1),
            Arrow("x2", "v", "v", 2),
            Arrow("x3", "v", "v", 3),
        ),
    )


@pytest.fixture
def heavy_edge() -> WeightedQuiver:
    """Two vertices joined by a single arrow of degree 2."""
    return WeightedQuiver(vertices=("a", "b"), arrows=(Arrow("b1", "a", "b", 2),))


@pytest.fixture
def kronecker() -> WeightedQuiver:
    """Two vertices with a degree-1 and a degree-2 arrow between them."""
    return WeightedQuiver(
        vertices=("a", "b"),
        arrows=(Arrow("p", "a", "b", 1), Arrow("q", "a", "b", 2)),
    )
