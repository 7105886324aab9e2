"""
Configuration module for the monomial quiver pipeline.

Contains PathConfig dataclass for centralizing all file path references.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional


@dataclass
class PathConfig:
    """
    Centralizes all file paths used across the application.

    Attributes:
        base_dir: Root directory of the application (defaults to the project root)
        data_dir: Directory containing the bundled example inputs
    """

    base_dir: Path = field(default_factory=lambda: Path(__file__).resolve().parents[1])
    _data_dir: Optional[Path] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        """Set default subdirectories relative to base_dir if not provided."""
        if self._data_dir is None:
            self._data_dir = self.base_dir / "data"

    @property
    def data_dir(self) -> Path:
        """Directory containing the bundled example inputs."""
        # _data_dir is always set after __post_init__
        assert self._data_dir is not None
        return self._data_dir

    # Bundled example inputs
    @property
    def three_letter_presentation(self) -> Path:
        """k<x,y,z>/(x², yx, zy, xz, z², y⁴): six-vertex, eight-arrow Ufnarovskii graph."""
        return self.data_dir / "three_letter_presentation.json"

    @property
    def weighted_xy_presentation(self) -> Path:
        """k<x,y>/(yx, x³) with deg y = 2: three-vertex weighted graph."""
        return self.data_dir / "weighted_xy_presentation.json"

    @property
    def free_loops_quiver(self) -> Path:
        """One vertex with loops of degrees 1, 2, 3 (free algebra, D = 3)."""
        return self.data_dir / "free_loops_quiver.json"

    @property
    def example_files(self) -> list[Path]:
        return [
            self.three_letter_presentation,
            self.weighted_xy_presentation,
            self.free_loops_quiver,
        ]

    def validate(self) -> list[str]:
        """
        Validate that the data directory and bundled examples exist.

        Returns:
            List of error messages. Empty list means all validations passed.
        """
        errors = []

        if not self.data_dir.exists():
            errors.append(f"Data directory not found: {self.data_dir}")
            return errors

        for file_path in self.example_files:
            if not file_path.exists():
                errors.append(f"Example input not found: {file_path}")

        return errors

