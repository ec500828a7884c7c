"""Process-wide settings, read from the environment (and a .env file if present)."""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

# Load environment variables
load_dotenv()

HARD_CAP = 26


class Settings(BaseModel):
    """Runtime knobs shared by every module."""

    cap: int = Field(
        default=22,
        description="Largest ground set a rank table may be built for",
    )
    log_level: str = Field(default="WARNING", description="structlog/logging level")
    artifact_dir: Path = Field(
        default=Path("artifacts"),
        description="Directory receiving counterexample artifacts",
    )
    tip_check_limit: int = Field(
        default=16,
        description="Largest n for which the tip property is rescanned exhaustively",
    )
    oracle_limit: int = Field(
        default=12,
        description="Largest n accepted by the brute-force pair-partition oracle",
    )
    deep_verify: bool = Field(
        default=False,
        description="Run the full structure checks on every quotient and lift built",
    )

    @field_validator("cap")
    @classmethod
    def _cap_in_range(cls, value: int) -> int:
        if not 1 <= value <= HARD_CAP:
            raise ValueError(f"cap must lie in 1..{HARD_CAP}, got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


def _from_environment() -> Settings:
    values = {
        "cap": os.getenv("SPIKES_CAP"),
        "log_level": os.getenv("SPIKES_LOG_LEVEL"),
        "artifact_dir": os.getenv("SPIKES_ARTIFACT_DIR"),
        "tip_check_limit": os.getenv("SPIKES_TIP_CHECK_LIMIT"),
        "oracle_limit": os.getenv("SPIKES_ORACLE_LIMIT"),
        "deep_verify": os.getenv("SPIKES_DEEP_VERIFY"),
    }
    return Settings(**{key: value for key, value in values.items() if value})


_settings = _from_environment()


def get_settings() -> Settings:
    """Return the current process-wide settings."""
    return _settings


def override_settings(**changes) -> Settings:
    """Replace some settings fields (validated) and return the new settings."""
    global _settings
    _settings = Settings(**{**_settings.model_dump(), **changes})
    return _settings
