"""
Logging configuration and utilities.
Provides consistent logging across the package. Everything goes to stderr
so that command output on stdout stays deterministic.
"""

import sys

from loguru import logger as _loguru

_FORMAT = "{level} - {time:YYYY-MM-DD HH:mm:ss} - {message}"


class Logger:
    def __init__(self, level: str = "WARNING"):
        self._logger = _loguru.bind(component="praset")
        self.level = level
        self.configure(level)

    def configure(self, level: str) -> None:
        """Replace the sinks with a single stderr sink at ``level``."""
        self.level = level.upper()
        _loguru.remove()
        _loguru.add(sys.__stderr__ or sys.stderr, level=self.level, format=_FORMAT)

    def debug(self, message):
        self._logger.debug(message)

    def info(self, message):
        self._logger.info(message)

    def warning(self, message):
        self._logger.warning(message)

    def error(self, message):
        self._logger.error(message)


# Create a singleton instance
logger = Logger()
