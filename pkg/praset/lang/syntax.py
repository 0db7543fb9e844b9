"""
Data model for prioritized extended logic programs.

Literals are value objects: two literals are equal when they name the same
atom with the same negations. Everything here is immutable.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from praset.utils.validation import InputValidator


@dataclass(frozen=True, order=True)
class Atom:
    name: str

    def __post_init__(self):
        InputValidator.validate_atom_name(self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class ObjectiveLiteral:
    """An atom or its strong negation."""
    atom: Atom
    strong_neg: bool = False

    def complement(self) -> "ObjectiveLiteral":
        return ObjectiveLiteral(self.atom, not self.strong_neg)

    def as_literal(self) -> "Literal":
        return Literal(self, False)

    def default(self) -> "Literal":
        """The default literal ``not L``."""
        return Literal(self, True)

    def __str__(self) -> str:
        return ("-" if self.strong_neg else "") + self.atom.name


@dataclass(frozen=True, order=True)
class Literal:
    """An objective literal, possibly under default negation."""
    objective: ObjectiveLiteral
    default_neg: bool = False

    @property
    def is_default(self) -> bool:
        return self.default_neg

    def __str__(self) -> str:
        return ("not " if self.default_neg else "") + str(self.objective)


AnyLiteral = Union[ObjectiveLiteral, Literal]


def lit(text: str) -> Literal:
    """Build a literal from its surface form, e.g. ``"not -a"``."""
    text = text.strip()
    default_neg = text.startswith("not ")
    if default_neg:
        text = text[4:].strip()
    return Literal(obj(text), default_neg)


def obj(text: str) -> ObjectiveLiteral:
    """Build an objective literal from its surface form, e.g. ``"-a"``."""
    text = text.strip()
    strong_neg = text.startswith("-")
    return ObjectiveLiteral(Atom(text.lstrip("-").strip()), strong_neg)


def complement(literal: ObjectiveLiteral) -> ObjectiveLiteral:
    return literal.complement()


def _as_literal(item: AnyLiteral) -> Literal:
    return item.as_literal() if isinstance(item, ObjectiveLiteral) else item


def is_consistent(literals: Iterable[AnyLiteral]) -> bool:
    """True iff there is no pair {L, -L} and no pair {L, not L}."""
    items = {_as_literal(item) for item in literals}
    objective = {l.objective for l in items if not l.default_neg}
    for literal in objective:
        if literal.complement() in objective:
            return False
    return not any(l.default_neg and l.objective in objective for l in items)


def positive_part(literals: Iterable[Literal]) -> FrozenSet[ObjectiveLiteral]:
    """pos(X): the objective literals L with ``not L`` in X."""
    return frozenset(l.objective for l in literals if l.default_neg)


def defaults_of(literals: Iterable[ObjectiveLiteral]) -> FrozenSet[Literal]:
    return frozenset(l.default() for l in literals)


def sort_literals(literals: Iterable[AnyLiteral]) -> List[AnyLiteral]:
    """Canonical order: by atom, positive before strong negation, objective first."""
    return sorted(literals, key=literal_key)


def literal_key(item: AnyLiteral) -> Tuple[str, bool, bool]:
    l = _as_literal(item)
    return (l.objective.atom.name, l.objective.strong_neg, l.default_neg)


def render_set(literals: Iterable[AnyLiteral]) -> str:
    return "{" + ", ".join(str(l) for l in sort_literals(literals)) + "}"


@dataclass(frozen=True)
class Rule:
    name: str
    head: ObjectiveLiteral
    body: FrozenSet[Literal] = field(default_factory=frozenset)

    def __post_init__(self):
        InputValidator.validate_rule_name(self.name)

    @property
    def positive_body(self) -> FrozenSet[ObjectiveLiteral]:
        """body⁺(r)"""
        return frozenset(l.objective for l in self.body if not l.default_neg)

    @property
    def negative_body(self) -> FrozenSet[Literal]:
        """body⁻(r), kept as default literals."""
        return frozenset(l for l in self.body if l.default_neg)

    def positive_form(self) -> "Rule":
        """r⁺: the rule with its default literals dropped."""
        return Rule(self.name, self.head, frozenset(l.as_literal() for l in self.positive_body))

    def render(self) -> str:
        body = ", ".join(str(l) for l in sort_literals(self.body))
        if not body:
            return f"{self.name}: {self.head}."
        return f"{self.name}: {self.head} :- {body}."


@dataclass(frozen=True)
class PrioritizedProgram:
    """Named rules plus preference pairs ``(less, more)``."""
    rules: Tuple[Rule, ...] = ()
    prefers: FrozenSet[Tuple[str, str]] = frozenset()

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)

    def index(self, name: str) -> int:
        for i, r in enumerate(self.rules):
            if r.name == name:
                return i
        raise KeyError(name)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(r.name for r in self.rules)

    def atoms(self) -> Tuple[Atom, ...]:
        """At(P): atoms occurring anywhere in the program, sorted."""
        found = set()
        for r in self.rules:
            found.add(r.head.atom)
            found.update(l.objective.atom for l in r.body)
        return tuple(sorted(found))

    def objective_signature(self) -> FrozenSet[ObjectiveLiteral]:
        """Obj(P) = {A, -A | A in At(P)}."""
        return frozenset(
            ObjectiveLiteral(a, neg) for a in self.atoms() for neg in (False, True)
        )

    def default_signature(self) -> FrozenSet[Literal]:
        """Def(P) = {not L | L in Obj(P)}."""
        return defaults_of(self.objective_signature())

    def without(self, name: str) -> "PrioritizedProgram":
        """The program minus one rule, preferences restricted accordingly."""
        return PrioritizedProgram(
            tuple(r for r in self.rules if r.name != name),
            frozenset(p for p in self.prefers if name not in p),
        )

    def render(self) -> str:
        lines = [r.render() for r in self.rules]
        lines += [f"prefer {more} > {less}." for less, more in sorted(self.prefers)]
        return "\n".join(lines) + ("\n" if lines else "")


def make_program(rules: Sequence[Rule], prefers: Iterable[Tuple[str, str]] = ()) -> PrioritizedProgram:
    return PrioritizedProgram(tuple(rules), frozenset(prefers))


def render_program(program: PrioritizedProgram) -> str:
    """Canonical surface text; parsing it gives back an equal program."""
    return program.render()
