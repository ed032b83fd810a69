"""Pydantic models for configuration management."""
from enum import Enum
from typing import Any, Dict

from pydantic import Field
from pydantic_settings import BaseSettings


class OutputFormat(str, Enum):
    """Rendering of command results."""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"  # Markdown heading with a YAML block


class DenumerantConfig(BaseSettings):
    """Runtime settings, overridable through DENUMERANT_* environment variables."""
    workers: int = Field(1, ge=1, description="Default degree of parallelism for sweeps")
    output_format: OutputFormat = Field(OutputFormat.TEXT, description="Command output format")
    dp_budget: int = Field(2_000_000, ge=1, description="Largest argument the oracle evaluates by direct DP")
    search_budget: int = Field(50_000_000, ge=1, description="Bound on x_max + y_max for brute-force searches")
    pell_search_bound: int = Field(1_000_000, ge=1, description="Fundamental-domain bound for conic solving")
    curve_x_bound: int = Field(100_000, ge=1, description="Default |X| bound for integral point enumeration")
    square_check_bound: int = Field(10_000, ge=1, description="Default n bound for no-square-value checks")
    seed: int = Field(0, description="Seed for randomised property checks")
    log_level: str = Field("WARNING", description="Logging level name")

    class Config:
        """Pydantic configuration for environment variables and JSON files."""
        env_prefix = "DENUMERANT_"
        case_sensitive = False
        extra = "ignore"

    def to_config_dict(self) -> Dict[str, Any]:
        """Non-default fields, JSON-ready."""
        return self.model_dump(mode="json", exclude_defaults=True)
