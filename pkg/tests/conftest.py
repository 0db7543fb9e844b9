"""
Shared fixtures: the published example programs and a clean environment.
"""

from pathlib import Path

import pytest

from praset.lang import obj, parse_program
from praset.semantics import AnswerSet

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def testing_environment(monkeypatch):
    """Run every test against the testing configuration."""
    monkeypatch.setenv("PRASET_ENV", "testing")
    monkeypatch.delenv("PRASET_LIMIT", raising=False)


@pytest.fixture
def fixture_path():
    def _path(name: str) -> Path:
        return FIXTURES / f"{name}.lp"
    return _path


@pytest.fixture
def load_program(fixture_path):
    def _load(name: str):
        return parse_program(fixture_path(name).read_text(encoding="utf-8"))
    return _load


@pytest.fixture
def answer_set():
    """Answer set of a program given its objective part."""
    def _build(program, *literals: str) -> AnswerSet:
        return AnswerSet.of(program, [obj(l) for l in literals])
    return _build
