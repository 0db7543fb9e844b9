"""
Centralized error handling for praset.
Provides the error hierarchy, a serializable error response and the
decorator that turns errors into CLI exit codes.
"""

import json
import sys
from dataclasses import dataclass
from functools import wraps
from typing import Any, Dict, List, Optional

import click

from praset.utils.logger import logger

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_PRINCIPLE = 4


@dataclass
class ErrorResponse:
    """Standardized error response structure"""
    error_code: str
    message: str
    exit_code: int
    details: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert error response to dictionary format"""
        return {
            "schema": 1,
            "error": {
                "code": self.error_code,
                "message": self.message,
                "details": self.details or {}
            }
        }


class PrasetError(Exception):
    """Base exception class for praset"""
    exit_code = EXIT_INTERNAL

    def __init__(
        self,
        message: str,
        error_code: str = "INTERNAL_ERROR",
        exit_code: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.error_response = ErrorResponse(
            error_code=error_code,
            message=message,
            exit_code=self.exit_code if exit_code is None else exit_code,
            details=details
        )


class ProgramSyntaxError(PrasetError):
    """Program text does not follow the surface syntax."""
    exit_code = EXIT_INPUT

    def __init__(self, line: int, column: int, expected: List[str]):
        self.line = line
        self.column = column
        self.expected = sorted(expected)
        shown = ", ".join(self.expected) or "end of input"
        super().__init__(
            f"syntax error at line {line}, column {column}: expected {shown}",
            error_code="SYNTAX_ERROR",
            details={"line": line, "column": column, "expected": self.expected}
        )


class DuplicateRuleName(PrasetError):
    """Two rules share a name."""
    exit_code = EXIT_INPUT

    def __init__(self, name: str):
        self.name = name
        super().__init__(
            f"duplicate rule name '{name}'",
            error_code="DUPLICATE_RULE_NAME",
            details={"name": name}
        )


class UnknownRuleInPrefer(PrasetError):
    """A preference mentions a rule that does not exist."""
    exit_code = EXIT_INPUT

    def __init__(self, name: str):
        self.name = name
        super().__init__(
            f"preference refers to unknown rule '{name}'",
            error_code="UNKNOWN_RULE_IN_PREFER",
            details={"name": name}
        )


class PreferenceCycle(PrasetError):
    """The transitive closure of the preferences is not irreflexive."""
    exit_code = EXIT_INPUT

    def __init__(self, names: List[str]):
        self.names = list(names)
        super().__init__(
            "preferences form a cycle: " + " < ".join(self.names + self.names[:1]),
            error_code="PREFERENCE_CYCLE",
            details={"cycle": self.names}
        )


class UnknownAnswerSet(PrasetError):
    """An answer-set selector matches nothing."""
    exit_code = EXIT_INPUT

    def __init__(self, selector: str):
        super().__init__(
            f"no answer set matches '{selector}'",
            error_code="UNKNOWN_ANSWER_SET",
            details={"selector": selector}
        )


class NotTotal(PrasetError):
    """An interpretation is not total over the program signature."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_code="NOT_TOTAL", details=details)


class PreconditionViolation(PrasetError):
    """A derivation rule was applied outside its domain."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_code="PRECONDITION_VIOLATION", details=details)


class InvariantViolation(PrasetError):
    """A constructed structure failed the dependency-structure re-check."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, error_code="INVARIANT_VIOLATION", details=details)


class ResourceLimit(PrasetError):
    """The program exceeds the configured structure or attack limit."""
    exit_code = EXIT_RESOURCE

    def __init__(self, limit: int, what: str = "structures"):
        self.limit = limit
        super().__init__(
            f"more than {limit} {what}; raise PRASET_LIMIT to continue",
            error_code="RESOURCE_LIMIT",
            details={"limit": limit, "kind": what}
        )


def error_handler(f):
    """Decorator for CLI commands: report PrasetError and exit with its code."""
    @wraps(f)
    def wrapped(*args, **kwargs):
        as_json = bool(kwargs.get("as_json"))
        try:
            return f(*args, **kwargs)
        except PrasetError as e:
            logger.error(f"{e.error_response.error_code}: {e}")
            _emit(e.error_response, as_json)
            sys.exit(e.error_response.exit_code)
        except (click.exceptions.Exit, click.ClickException, SystemExit):
            raise
        except Exception as e:
            logger.error(f"Unexpected error: {e!r}")
            error = ErrorResponse(
                error_code="INTERNAL_ERROR",
                message=str(e),
                exit_code=EXIT_INTERNAL
            )
            _emit(error, as_json)
            sys.exit(error.exit_code)
    return wrapped


def _emit(error: ErrorResponse, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(error.to_dict(), sort_keys=True), err=True)
    else:
        click.echo(f"error: {error.error_code}: {error.message}", err=True)
