"""Configuration settings for the distance-3 code constructor."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    """Application settings with fixed defaults.

    Environment variables are never consulted; the CLI overrides fields
    by assignment, which is validated.
    """

    model_config = ConfigDict(validate_assignment=True)

    # Logging
    log_level: str = Field("WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR)$")

    # Enumeration and verification caps
    weight_enumeration_cap: int = Field(24, ge=1, le=40)
    exhaustive_verify_cap: int = Field(32768, ge=5)
    exact_distance_max_n: int = Field(64, ge=3)

    # Construction
    alignment_max_rows: int = Field(7, ge=1, le=9)
    eight_block_golden: bool = True

    def construction_key(self) -> Tuple[int, bool, int]:
        """Fields that change what the cached builders return."""
        return (self.alignment_max_rows, self.eight_block_golden, self.exhaustive_verify_cap)


# Global settings instance
settings = Settings()
