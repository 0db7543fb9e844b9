"""Shared utilities: logging, configuration loading and input validation."""
