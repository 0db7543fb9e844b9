"""
Application configuration.
"""

from dataclasses import dataclass
from typing import Optional
import os

from dotenv import load_dotenv

from praset.utils.config import Config, ConfigValidationError
from praset.utils.logger import logger

LIMIT_ENV = "PRASET_LIMIT"


@dataclass
class AppConfig:
    """Typed view of the merged settings."""
    app_name: str = "praset"
    log_level: str = "WARNING"

    # Resource bound on saturation and attack closure
    structure_limit: int = 200000

    # Corpus runs
    workers: int = 4
    output_dir: str = "praset-out"

    # Random program generator
    max_rules: int = 10
    max_body: int = 3
    preference_density: float = 0.3

    def __post_init__(self):
        """Apply environment overrides."""
        raw = os.getenv(LIMIT_ENV)
        if raw is not None:
            self.structure_limit = parse_limit(raw)


def parse_limit(raw: str) -> int:
    """Parse a structure limit.

    Raises:
        ConfigValidationError: If the value is not a positive integer
    """
    try:
        value = int(str(raw).strip())
    except ValueError:
        raise ConfigValidationError(f"{LIMIT_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigValidationError(f"{LIMIT_ENV} must be positive, got {value}")
    return value


def load_app_config(env: Optional[str] = None, config_dir: Optional[str] = None) -> AppConfig:
    """Build the application config from JSON files, `.env` and env vars."""
    load_dotenv()
    settings = Config(config_dir=config_dir, env=env).load_config()
    known = {k: v for k, v in settings.items() if k in AppConfig.__dataclass_fields__}
    config = AppConfig(**known)
    logger.debug(f"structure limit {config.structure_limit}, workers {config.workers}")
    return config
