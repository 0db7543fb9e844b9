"""
Layered JSON settings for praset.

``config.base.json`` is read first and ``config.<env>.json`` is laid over it.
The merged settings are checked for required keys and for the type and
range of every setting praset knows about; unknown keys pass through.
"""

from typing import Any, Callable, Dict, List, Optional, Set, Tuple
import json
import os
from pathlib import Path
from dataclasses import dataclass
from enum import Enum

from praset.utils.logger import logger

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent.parent / "config"
ENV_VARIABLE = "PRASET_ENV"
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Environment(Enum):
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


@dataclass
class ConfigValidationError(Exception):
    """Raised when configuration validation fails."""
    message: str
    missing_keys: Optional[Set[str]] = None

    def __str__(self) -> str:
        return self.message


def _positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _body_bound(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and 0 <= value <= 3


def _fraction(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and 0.0 <= value <= 1.0


def _log_level(value: Any) -> bool:
    return isinstance(value, str) and value.upper() in LOG_LEVELS


# setting -> (check, what a valid value looks like)
SETTING_CHECKS: Dict[str, Tuple[Callable[[Any], bool], str]] = {
    "log_level": (_log_level, f"one of {', '.join(LOG_LEVELS)}"),
    "structure_limit": (_positive_int, "a positive integer"),
    "workers": (_positive_int, "a positive integer"),
    "max_rules": (_positive_int, "a positive integer"),
    "max_body": (_body_bound, "an integer from 0 to 3"),
    "preference_density": (_fraction, "a number from 0 to 1"),
    "output_dir": (lambda v: isinstance(v, str) and bool(v), "a nonempty path"),
}


def read_layer(path: Path) -> Dict[str, Any]:
    """Read one settings file; a missing file is an empty layer."""
    if not path.exists():
        logger.debug(f"no settings at {path}")
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            layer = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigValidationError(f"{path.name}: invalid JSON at line {e.lineno}")
    if not isinstance(layer, dict):
        raise ConfigValidationError(f"{path.name}: expected a JSON object")
    return layer


def check_settings(settings: Dict[str, Any]) -> List[str]:
    """Problems with the known settings, in key order."""
    problems = []
    for key in sorted(settings):
        if key not in SETTING_CHECKS:
            continue
        check, expected = SETTING_CHECKS[key]
        if not check(settings[key]):
            problems.append(f"{key} must be {expected}, got {settings[key]!r}")
    return problems


class Config:
    """Merged settings for one environment.

    Args:
        config_dir: Directory holding the ``config.*.json`` files
        env: Environment name; defaults to ``$PRASET_ENV`` or development
    """

    REQUIRED_SETTINGS = {
        'app_name',
        'log_level',
        'structure_limit',
    }

    def __init__(self, config_dir: Optional[Path] = None, env: Optional[str] = None):
        self.config_dir = Path(config_dir) if config_dir else DEFAULT_CONFIG_DIR
        self.env = env or os.getenv(ENV_VARIABLE, Environment.DEVELOPMENT.value)
        self.settings: Dict[str, Any] = {}
        self.layers: List[Path] = []

    @property
    def layer_paths(self) -> List[Path]:
        return [self.config_dir / "config.base.json", self.config_dir / f"config.{self.env}.json"]

    def load_config(self) -> Dict[str, Any]:
        """Merge the layers and validate the result.

        Raises:
            ConfigValidationError: If a required key is missing or a setting is invalid
        """
        self.settings = {}
        self.layers = []
        for path in self.layer_paths:
            layer = read_layer(path)
            if layer:
                self.layers.append(path)
            self.settings.update(layer)

        missing = self.REQUIRED_SETTINGS - set(self.settings)
        if missing:
            raise ConfigValidationError(
                f"Missing required configuration keys: {sorted(missing)}",
                missing_keys=missing,
            )
        problems = check_settings(self.settings)
        if problems:
            raise ConfigValidationError("; ".join(problems))

        logger.debug(f"settings for {self.env} from {[p.name for p in self.layers]}")
        return self.settings

    def get(self, key: str, default: Any = None) -> Any:
        return self.settings.get(key, default)

    def get_required(self, key: str) -> Any:
        """
        Raises:
            KeyError: If key not found
        """
        if key not in self.settings:
            raise KeyError(f"Required configuration key not found: {key}")
        return self.settings[key]
