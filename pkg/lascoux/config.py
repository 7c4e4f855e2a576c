"""
Configuration Management

pydantic-settings configuration read from LASCOUX_* environment variables
and an optional .env file.
"""

import os
from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def _default_workers() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1))


class LascouxSettings(BaseSettings):
    """Runtime settings with validation."""

    model_config = SettingsConfigDict(
        env_prefix="LASCOUX_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(default="pretty", description="Log format: json or pretty")
    log_file: Optional[str] = Field(default=None, description="File receiving a copy of every log record")

    # Verification
    workers: int = Field(
        default_factory=_default_workers,
        ge=1,
        description="Worker processes used by the verify suites",
    )
    verify_identities: bool = Field(
        default=True,
        description="Check every expansion against the product it expands",
    )
    default_seed: int = Field(default=1, description="Seed for randomized property checks")
    default_trials: int = Field(default=1000, ge=0, description="Random trials per property")
    anti_rectify_cap_factor: int = Field(
        default=4,
        ge=1,
        description="Multiplier of the anti-rectification iteration cap",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v_upper

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format."""
        v_lower = v.lower()
        if v_lower not in ("json", "pretty"):
            raise ValueError("Log format must be 'json' or 'pretty'")
        return v_lower


@lru_cache(maxsize=1)
def get_settings() -> LascouxSettings:
    """Return the process-wide settings instance."""
    return LascouxSettings()


def reset_settings() -> None:
    """Drop the cached settings so the environment is read again."""
    get_settings.cache_clear()
