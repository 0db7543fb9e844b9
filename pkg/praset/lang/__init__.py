"""
Language core: literals, rules, prioritized programs, the surface parser
and preference-order validation.
"""

from praset.lang.syntax import (
    Atom,
    Literal,
    ObjectiveLiteral,
    PrioritizedProgram,
    Rule,
    complement,
    is_consistent,
    lit,
    make_program,
    obj,
    render_program,
    render_set,
    sort_literals,
)
from praset.lang.parser import parse_program
from praset.lang.preferences import validate_preferences

__all__ = [
    "Atom",
    "Literal",
    "ObjectiveLiteral",
    "PrioritizedProgram",
    "Rule",
    "complement",
    "is_consistent",
    "lit",
    "make_program",
    "obj",
    "parse_program",
    "render_program",
    "render_set",
    "sort_literals",
    "validate_preferences",
]
