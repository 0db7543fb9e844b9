"""
Surface syntax for prioritized programs.

    % comment
    r1: b :- a, not -b.
    r2: -b :- not b.
    r3: a.
    prefer r1 > r2.        % r1 is more preferred: (r2, r1) in the order
"""

from typing import List, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from praset.error_handling import DuplicateRuleName, PrasetError, ProgramSyntaxError, UnknownRuleInPrefer
from praset.lang.syntax import Atom, Literal, ObjectiveLiteral, PrioritizedProgram, Rule
from praset.utils.validation import RESERVED_WORDS

GRAMMAR = r"""
    start: _statement*

    _statement: rule
              | preference

    rule: RULE_NAME ":" objective body? "."
    body: ":-" [literal ("," literal)*]
    literal: NOT? objective
    objective: STRONG_NEG? ATOM
    preference: "prefer" RULE_NAME ">" RULE_NAME "."

    NOT: "not"
    STRONG_NEG: "-"
    RULE_NAME: /[a-zA-Z_][a-zA-Z0-9_]*/
    ATOM: /[a-z][a-zA-Z0-9_]*/

    COMMENT: /%[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

# Friendly names for terminals in error messages
_TERMINALS = {
    "RULE_NAME": "rule name",
    "ATOM": "atom",
    "NOT": "'not'",
    "STRONG_NEG": "'-'",
    "COLON": "':'",
    "DOT": "'.'",
    "COMMA": "','",
    "MORE_THAN": "'>'",
    "__ANON_0": "':-'",
    "PREFER": "'prefer'",
    "$END": "end of input",
}


def _check_reserved(token) -> None:
    if str(token) in RESERVED_WORDS:
        raise ProgramSyntaxError(token.line, token.column, ["identifier"])


@v_args(inline=True)
class ProgramTransformer(Transformer):
    """Builds rules and preference pairs from the parse tree."""

    def start(self, *statements):
        return list(statements)

    def rule(self, name, head, body=None):
        _check_reserved(name)
        return Rule(str(name), head, frozenset(body or ()))

    def body(self, *literals):
        return [l for l in literals if l is not None]

    def literal(self, *parts):
        return Literal(parts[-1], len(parts) == 2)

    def objective(self, *parts):
        _check_reserved(parts[-1])
        return ObjectiveLiteral(Atom(str(parts[-1])), len(parts) == 2)

    def preference(self, more, less):
        return (str(less), str(more))


_parser = Lark(GRAMMAR, parser="lalr", maybe_placeholders=True)


def parse_program(text: str) -> PrioritizedProgram:
    """Parse program text.

    Rule order is preserved and preferences are stored as ``(less, more)``
    pairs without closing them.

    Raises:
        ProgramSyntaxError: If the text does not follow the grammar
        DuplicateRuleName: If two rules share a name
        UnknownRuleInPrefer: If a preference names a missing rule
    """
    try:
        tree = _parser.parse(text)
        statements = ProgramTransformer().transform(tree)
    except UnexpectedInput as e:
        raise _syntax_error(e, text) from None
    except VisitError as e:
        if isinstance(e.orig_exc, PrasetError):
            raise e.orig_exc from None
        raise

    rules: List[Rule] = []
    prefers: List[Tuple[str, str]] = []
    seen = set()
    for statement in statements:
        if isinstance(statement, Rule):
            if statement.name in seen:
                raise DuplicateRuleName(statement.name)
            seen.add(statement.name)
            rules.append(statement)
        else:
            prefers.append(statement)

    for pair in prefers:
        for name in pair:
            if name not in seen:
                raise UnknownRuleInPrefer(name)

    return PrioritizedProgram(tuple(rules), frozenset(prefers))


def _syntax_error(error: UnexpectedInput, text: str) -> ProgramSyntaxError:
    if isinstance(error, UnexpectedEOF):
        lines = text.split("\n")
        line, column = len(lines), len(lines[-1]) + 1
        expected = error.expected
    elif isinstance(error, UnexpectedToken):
        line, column = error.line, error.column
        expected = error.expected
    elif isinstance(error, UnexpectedCharacters):
        line, column = error.line, error.column
        expected = error.allowed or ()
    else:
        line, column, expected = getattr(error, "line", 0), getattr(error, "column", 0), ()
    return ProgramSyntaxError(line, column, sorted({_TERMINALS.get(t, t) for t in expected}))
