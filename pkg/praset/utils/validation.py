"""Utility module for input validation."""

import re
from typing import Optional

from praset.error_handling import EXIT_INPUT, PrasetError

ATOM_PATTERN = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
RULE_NAME_PATTERN = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*\Z")
RESERVED_WORDS = {"not", "prefer"}


class ValidationError(PrasetError, ValueError):
    """Exception for malformed identifiers and option values"""
    exit_code = EXIT_INPUT

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message, error_code="VALIDATION_ERROR", details=details)


class InputValidator:
    """Centralized input validation utilities."""

    @staticmethod
    def validate_atom_name(name: str) -> None:
        """Validate an atom identifier.

        Args:
            name: Identifier to validate

        Raises:
            ValidationError: If the name is empty, not propositional or reserved
        """
        if not isinstance(name, str) or not ATOM_PATTERN.match(name):
            raise ValidationError(
                f"invalid atom name {name!r}",
                details={"name": name, "pattern": ATOM_PATTERN.pattern}
            )
        if name in RESERVED_WORDS:
            raise ValidationError(f"'{name}' is a reserved word", details={"name": name})

    @staticmethod
    def validate_rule_name(name: str) -> None:
        """Validate a rule name.

        Raises:
            ValidationError: If the name is not an identifier
        """
        if not isinstance(name, str) or not RULE_NAME_PATTERN.match(name):
            raise ValidationError(
                f"invalid rule name {name!r}",
                details={"name": name, "pattern": RULE_NAME_PATTERN.pattern}
            )
        if name in RESERVED_WORDS:
            raise ValidationError(f"'{name}' is a reserved word", details={"name": name})

    @staticmethod
    def validate_range(value: int, name: str, minimum: int, maximum: Optional[int] = None) -> None:
        """Validate a numeric option.

        Raises:
            ValidationError: If value is outside the allowed range
        """
        if value < minimum or (maximum is not None and value > maximum):
            bound = f"[{minimum}, {maximum}]" if maximum is not None else f">= {minimum}"
            raise ValidationError(
                f"{name} must be {bound}",
                details={name: value}
            )
