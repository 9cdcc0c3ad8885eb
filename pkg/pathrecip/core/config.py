from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

from pathrecip.core.errors import DimensionError


class Settings(BaseSettings):
    # App Settings
    app_name: str = "pathrecip"
    debug: bool = False
    port: int = 8000

    # Brute-force oracles refuse instances above this many candidates
    oracle_capacity: int = 10_000_000

    # Reciprocity engine matrix cache
    cache_size: int = 256

    # Checks
    default_nmax: int = 5

    # Logging
    log_level: str = "INFO"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="PATHRECIP_")


settings = Settings()


def resolve_nmax(n_max: Optional[int]) -> int:
    """The check range 1..n_max; None means the configured default, 0 an empty check."""
    if n_max is None:
        return settings.default_nmax
    if n_max < 0:
        raise DimensionError(f"nmax must be >= 0, got {n_max}")
    return n_max
