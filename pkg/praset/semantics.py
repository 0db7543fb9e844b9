"""
Answer-set semantics of extended logic programs.

Answer sets are found by guessing the objective part among rule heads and
keeping the guesses that equal the least model of their reduct. The
consequence operator works on assumption sets: Cn(W) is W plus the least
model of the rules whose default body is assumed by W.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from praset.error_handling import NotTotal
from praset.lang.syntax import (
    Literal,
    ObjectiveLiteral,
    PrioritizedProgram,
    Rule,
    defaults_of,
    is_consistent,
    render_set,
    sort_literals,
    literal_key,
)
from praset.utils.logger import logger


@dataclass(frozen=True)
class Interpretation:
    literals: FrozenSet[Literal]

    @property
    def positive(self) -> FrozenSet[ObjectiveLiteral]:
        return frozenset(l.objective for l in self.literals if not l.default_neg)

    @property
    def negative(self) -> FrozenSet[Literal]:
        return frozenset(l for l in self.literals if l.default_neg)

    def is_consistent(self) -> bool:
        return is_consistent(self.literals)

    def is_total(self, signature: Iterable[ObjectiveLiteral]) -> bool:
        """Exactly one of L, not L for every L of the signature."""
        for literal in signature:
            has_positive = literal.as_literal() in self.literals
            has_default = literal.default() in self.literals
            if has_positive == has_default:
                return False
        return True

    @classmethod
    def total(cls, program: PrioritizedProgram, positive: Iterable[ObjectiveLiteral]) -> "Interpretation":
        """The total interpretation whose objective part is ``positive``."""
        positive = frozenset(positive)
        absent = program.objective_signature() - positive
        return cls(frozenset(l.as_literal() for l in positive) | defaults_of(absent))


@dataclass(frozen=True)
class AnswerSet:
    """A total answer set, kept as S⁺ and S⁻."""
    positive: FrozenSet[ObjectiveLiteral]
    negative: FrozenSet[Literal]

    @classmethod
    def of(cls, program: PrioritizedProgram, positive: Iterable[ObjectiveLiteral]) -> "AnswerSet":
        """Build and check an answer set from its objective part.

        Raises:
            ValueError: If ``positive`` is not the least model of its reduct
        """
        total = Interpretation.total(program, positive)
        if not total.is_consistent() or least_model(reduct(program, total)) != total.positive:
            raise ValueError(f"{render_set(total.positive)} is not an answer set")
        return cls(total.positive, total.negative)

    @property
    def total(self) -> Interpretation:
        return Interpretation(self.literals)

    @property
    def literals(self) -> FrozenSet[Literal]:
        return frozenset(l.as_literal() for l in self.positive) | self.negative

    def sort_key(self) -> Tuple:
        return tuple(literal_key(l) for l in sort_literals(self.positive))

    def render(self, total: bool = False) -> str:
        return render_set(self.literals if total else self.positive)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class GeneratingSet:
    rules: FrozenSet[str]
    answer_set: AnswerSet
    minimal: bool = False

    def ordered(self, program: PrioritizedProgram) -> List[Rule]:
        """Member rules in program order."""
        return [r for r in program.rules if r.name in self.rules]

    def sort_key(self, program: PrioritizedProgram) -> Tuple[int, ...]:
        return tuple(sorted(program.index(name) for name in self.rules))

    def render(self, program: PrioritizedProgram) -> str:
        return "{" + ", ".join(r.name for r in self.ordered(program)) + "}"


def _require_total(program: PrioritizedProgram, interpretation: Interpretation) -> None:
    if not interpretation.is_total(program.objective_signature()):
        raise NotTotal(
            "interpretation is not total over the program signature",
            details={"interpretation": render_set(interpretation.literals)}
        )


def reduct(program: PrioritizedProgram, interpretation: Interpretation) -> Tuple[Rule, ...]:
    """P⁺ = {r⁺ | body⁻(r) ⊆ S}.

    Raises:
        NotTotal: If the interpretation is not total over Obj(P)
    """
    _require_total(program, interpretation)
    return tuple(
        r.positive_form() for r in program.rules
        if r.negative_body <= interpretation.literals
    )


def least_model(rules: Sequence[Rule], facts: Iterable[ObjectiveLiteral] = ()) -> FrozenSet[ObjectiveLiteral]:
    """Least model of a definite program (default literals in bodies are ignored)."""
    model = set(facts)
    pending = list(rules)
    changed = True
    while changed:
        changed = False
        remaining = []
        for r in pending:
            if r.positive_body <= model:
                model.add(r.head)
                changed = True
            else:
                remaining.append(r)
        pending = remaining
    return frozenset(model)


def answer_sets(program: PrioritizedProgram) -> List[AnswerSet]:
    """All consistent answer sets in canonical order; a program without rules has none."""
    if not program.rules:
        logger.debug("no rules, no answer sets")
        return []
    heads = sorted({r.head.atom for r in program.rules})
    choices = []
    for atom in heads:
        options: List[Optional[ObjectiveLiteral]] = [None]
        options += sorted({r.head for r in program.rules if r.head.atom == atom})
        choices.append(options)

    found = []
    for guess in product(*choices):
        positive = frozenset(l for l in guess if l is not None)
        total = Interpretation.total(program, positive)
        if least_model(reduct(program, total)) == positive:
            found.append(AnswerSet(total.positive, total.negative))
    found.sort(key=AnswerSet.sort_key)
    logger.debug(f"{len(found)} answer sets over {len(heads)} head atoms")
    return found


class Reasoner:
    """Consequence operator for one program, memoized per (W, Z)."""

    def __init__(self, program: PrioritizedProgram):
        self.program = program
        self._cache: Dict[Tuple[FrozenSet[Literal], FrozenSet[ObjectiveLiteral]], FrozenSet[Literal]] = {}

    def consequences(
        self,
        assumptions: FrozenSet[Literal],
        conditions: FrozenSet[ObjectiveLiteral] = frozenset(),
    ) -> FrozenSet[Literal]:
        """Cn_{P ∪ Z}(W)."""
        key = (frozenset(assumptions), frozenset(conditions))
        if key not in self._cache:
            applicable = [r for r in self.program.rules if r.negative_body <= key[0]]
            model = least_model(applicable, facts=key[1])
            self._cache[key] = key[0] | frozenset(l.as_literal() for l in model)
        return self._cache[key]

    def is_self_consistent(self, assumptions: FrozenSet[Literal]) -> bool:
        return is_consistent(self.consequences(assumptions))


def consequences(
    program: PrioritizedProgram,
    extra_facts: Iterable[ObjectiveLiteral],
    assumptions: Iterable[Literal],
) -> FrozenSet[Literal]:
    """Cn_{P ∪ extra_facts}(W)."""
    return Reasoner(program).consequences(frozenset(assumptions), frozenset(extra_facts))


def is_self_consistent(program: PrioritizedProgram, assumptions: Iterable[Literal]) -> bool:
    return Reasoner(program).is_self_consistent(frozenset(assumptions))


def generating_rules(program: PrioritizedProgram, answer_set: AnswerSet) -> GeneratingSet:
    """The full set of rules whose body holds in S."""
    literals = answer_set.literals
    names = frozenset(r.name for r in program.rules if r.body <= literals)
    return GeneratingSet(names, answer_set, minimal=False)


def _regenerates(program: PrioritizedProgram, names: Iterable[str], answer_set: AnswerSet) -> bool:
    chosen = [program.rule(name).positive_form() for name in names]
    return least_model(chosen) == answer_set.positive


def sufficient_generating_sets(program: PrioritizedProgram, answer_set: AnswerSet) -> List[GeneratingSet]:
    """Every subset of the generating rules that rebuilds S⁺, smallest first."""
    full = [r.name for r in generating_rules(program, answer_set).ordered(program)]
    found: List[FrozenSet[str]] = []
    for size in range(len(full) + 1):
        for names in combinations(full, size):
            if _regenerates(program, names, answer_set):
                found.append(frozenset(names))
    result = []
    for names in found:
        minimal = not any(other < names for other in found)
        result.append(GeneratingSet(names, answer_set, minimal=minimal))
    return result


def minimal_generating_sets(program: PrioritizedProgram, answer_set: AnswerSet) -> List[GeneratingSet]:
    """⊆-minimal subsets of the generating rules that rebuild S⁺."""
    full = [r.name for r in generating_rules(program, answer_set).ordered(program)]
    found: List[FrozenSet[str]] = []
    for size in range(len(full) + 1):
        for names in combinations(full, size):
            candidate = frozenset(names)
            if any(kept <= candidate for kept in found):
                continue
            if _regenerates(program, names, answer_set):
                found.append(candidate)
    sets = [GeneratingSet(names, answer_set, minimal=True) for names in found]
    return sorted(sets, key=lambda g: g.sort_key(program))
