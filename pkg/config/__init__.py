"""
Configuration module for the monomial quiver pipeline.

This module provides access to configuration settings loaded from TOML files.
Primary configuration file: config/defaults.toml

Usage:
    from config import get_pipeline_config

    config = get_pipeline_config()
    print(config.enumeration.budget)
    print(config.verification.seed)
"""

from pathlib import Path
from dataclasses import dataclass, field
from typing import Optional
try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib


SPLIT_POLICIES = ("lowest", "highest")


@dataclass
class EnumerationConfig:
    """Word enumeration settings."""
    budget: int = 1_000_000
    reduce_forbidden: bool = False


@dataclass
class VerificationConfig:
    """Defaults for the verification suites."""
    max_degree: int = 8
    trials: int = 100
    seed: int = 0
    bijection_max_length: int = 8
    round_trip_max_length: int = 6
    multiplicativity_pairs: int = 1000
    max_word_length: int = 6
    window_low: int = 0
    window_high: int = 8
    max_dimension: int = 4
    split_max_degree: int = 10


@dataclass
class SplitConfig:
    """Arrow-splitting settings."""
    policy: str = "lowest"
    vertex_prefix: str = "z"


@dataclass
class OutputConfig:
    """Artifact formatting settings."""
    indent: int = 2


@dataclass
class PipelineConfig:
    """Complete pipeline configuration."""
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    split: SplitConfig = field(default_factory=SplitConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def validate(self) -> list[str]:
        """
        Validate the configuration.

        Returns:
            List of error messages (empty if valid).
        """
        errors = []

        if self.enumeration.budget < 1:
            errors.append("enumeration.budget must be at least 1")

        verification = self.verification
        for name in (
            "max_degree",
            "trials",
            "bijection_max_length",
            "round_trip_max_length",
            "multiplicativity_pairs",
            "max_word_length",
            "split_max_degree",
        ):
            if getattr(verification, name) < 0:
                errors.append(f"verification.{name} must be non-negative")

        if verification.window_high - verification.window_low < 1:
            errors.append("verification window must span at least two degrees")

        if verification.max_dimension < 1:
            errors.append("verification.max_dimension must be at least 1")

        if self.split.policy not in SPLIT_POLICIES:
            errors.append(f"Invalid split policy: {self.split.policy}")

        if not self.split.vertex_prefix:
            errors.append("split.vertex_prefix must be nonempty")

        return errors


def load_pipeline_config(config_path: Optional[Path] = None) -> PipelineConfig:
    """
    Load pipeline configuration from a TOML file.

    Args:
        config_path: Path to the TOML config file. Defaults to config/defaults.toml
                     next to this module.

    Returns:
        PipelineConfig dataclass with all settings.

    Raises:
        tomllib.TOMLDecodeError: If the TOML is invalid.
    """
    if config_path is None:
        config_path = Path(__file__).parent / "defaults.toml"

    if not config_path.exists():
        # Return default config if file doesn't exist
        return PipelineConfig()

    with open(config_path, "rb") as f:
        data = tomllib.load(f)

    defaults = PipelineConfig()

    enum_data = data.get("enumeration", {})
    enumeration = EnumerationConfig(
        budget=enum_data.get("budget", defaults.enumeration.budget),
        reduce_forbidden=enum_data.get("reduce_forbidden", defaults.enumeration.reduce_forbidden),
    )

    verify_data = data.get("verification", {})
    verification = VerificationConfig(
        **{
            name: verify_data.get(name, getattr(defaults.verification, name))
            for name in VerificationConfig.__dataclass_fields__
        }
    )

    split_data = data.get("split", {})
    split = SplitConfig(
        policy=split_data.get("policy", defaults.split.policy),
        vertex_prefix=split_data.get("vertex_prefix", defaults.split.vertex_prefix),
    )

    output_data = data.get("output", {})
    output = OutputConfig(indent=output_data.get("indent", defaults.output.indent))

    return PipelineConfig(
        enumeration=enumeration,
        verification=verification,
        split=split,
        output=output,
    )


# Module-level cached config (loaded on first access)
_cached_config: Optional[PipelineConfig] = None


def get_pipeline_config() -> PipelineConfig:
    """
    Get the pipeline configuration (cached after first load).

    Returns:
        PipelineConfig dataclass with all settings.
    """
    global _cached_config
    if _cached_config is None:
        _cached_config = load_pipeline_config()
    return _cached_config


def reload_pipeline_config(config_path: Optional[Path] = None) -> PipelineConfig:
    """
    Reload the pipeline configuration from disk.

    Args:
        config_path: Alternative TOML file (defaults to config/defaults.toml)

    Returns:
        PipelineConfig dataclass with all settings.
    """
    global _cached_config
    _cached_config = load_pipeline_config(config_path)
    return _cached_config


# Export public API
__all__ = [
    "PipelineConfig",
    "EnumerationConfig",
    "VerificationConfig",
    "SplitConfig",
    "OutputConfig",
    "SPLIT_POLICIES",
    "load_pipeline_config",
    "get_pipeline_config",
    "reload_pipeline_config",
]
