"""
Runtime settings read from the environment (and an optional .env file).
"""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from src.core.errors import ConfigError

load_dotenv()


@dataclass(frozen=True)
class Settings:
    """
    Knobs that change speed and verbosity, never results.

    threads: worker cap for exact enumeration chunks and MC blocks
    chunk_cells: submatrices classified per vectorized numpy chunk
    log_level: logging level name used by the CLI when -v is not given
    """
    threads: int = 1
    chunk_cells: int = 2 ** 18
    log_level: str = "WARNING"


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


def get_settings() -> Settings:
    """Build settings from LATINQ_* environment variables."""
    return Settings(
        threads=_int_setting("LATINQ_THREADS", Settings.threads),
        chunk_cells=_int_setting("LATINQ_CHUNK_CELLS", Settings.chunk_cells),
        log_level=os.getenv("LATINQ_LOG_LEVEL", Settings.log_level).upper(),
    )
