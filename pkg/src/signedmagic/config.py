"""Configuration classes for signedmagic."""

from dataclasses import dataclass
from typing import Optional, Tuple

from .search import SearchBudget

OUTPUT_FORMATS = ("text", "csv", "json")


@dataclass
class SearchConfig:
    """Search limits and admissibility handling."""

    max_nodes: int = 10_000_000
    max_millis: int = 60_000
    allow_inadmissible: bool = False

    @classmethod
    def from_cli_args(cls, **kwargs) -> "SearchConfig":
        """Create SearchConfig from CLI arguments."""
        return cls(
            max_nodes=kwargs.get("budget_nodes") or 10_000_000,
            max_millis=kwargs.get("budget_ms") or 60_000,
            allow_inadmissible=kwargs.get("allow_inadmissible", False),
        )

    def budget(self) -> SearchBudget:
        return SearchBudget(max_nodes=self.max_nodes, max_millis=self.max_millis)


@dataclass
class OutputConfig:
    """Output handling configuration."""

    output_path: Optional[str] = None
    output_format: str = "text"
    quiet: bool = False

    @classmethod
    def from_cli_args(cls, **kwargs) -> "OutputConfig":
        """Create OutputConfig from CLI arguments."""
        output_format = (kwargs.get("format") or "text").lower()
        if output_format not in OUTPUT_FORMATS:
            output_format = "text"
        return cls(
            output_path=kwargs.get("output"),
            output_format=output_format,
            quiet=kwargs.get("quiet", False),
        )


@dataclass
class ParallelConfig:
    """Parallel processing configuration."""

    max_workers: int = 1

    @classmethod
    def from_cli_args(cls, **kwargs) -> "ParallelConfig":
        """Create ParallelConfig from CLI arguments."""
        return cls(
            max_workers=max(1, kwargs.get("proc") or 1),
        )


class ConfigBuilder:
    """Build all configuration objects from CLI arguments."""

    @staticmethod
    def build_all_configs(
        **kwargs,
    ) -> Tuple[SearchConfig, OutputConfig, ParallelConfig]:
        """
        Build all configuration objects from CLI arguments.

        Returns:
            Tuple of all configuration objects
        """
        return (
            SearchConfig.from_cli_args(**kwargs),
            OutputConfig.from_cli_args(**kwargs),
            ParallelConfig.from_cli_args(**kwargs),
        )
