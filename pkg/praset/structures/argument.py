"""
Dependency structures ⟨Y ↩ X; Z⟩ and the derivation rules over them.

Y are conclusions, X the assumed default literals and Z the open
conditions still to be unfolded. A structure with Z = ∅ is condition-free.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Tuple

from praset.error_handling import InvariantViolation, PreconditionViolation
from praset.lang.syntax import (
    Literal,
    ObjectiveLiteral,
    PrioritizedProgram,
    Rule,
    is_consistent,
    literal_key,
    positive_part,
    render_set,
    sort_literals,
)
from praset.semantics import AnswerSet, Reasoner


@dataclass(frozen=True)
class ArgStructure:
    conclusions: FrozenSet[ObjectiveLiteral]
    assumptions: FrozenSet[Literal]
    conditions: FrozenSet[ObjectiveLiteral] = field(default_factory=frozenset)

    @property
    def condition_free(self) -> bool:
        return not self.conditions

    def key(self) -> Tuple:
        """Canonical sort key."""
        return (
            tuple(literal_key(l) for l in sort_literals(self.conclusions)),
            tuple(literal_key(l) for l in sort_literals(self.assumptions)),
            tuple(literal_key(l) for l in sort_literals(self.conditions)),
        )

    def render(self) -> str:
        text = f"<{render_set(self.conclusions)} <- {render_set(self.assumptions)}"
        if self.conditions:
            text += f"; {render_set(self.conditions)}"
        return text + ">"

    def __str__(self) -> str:
        return self.render()

    def aligned_with(self, answer_set: AnswerSet) -> bool:
        """Y ⊆ S⁺ and X ⊆ S⁻ for a condition-free structure."""
        return (
            self.condition_free
            and self.conclusions <= answer_set.positive
            and self.assumptions <= answer_set.negative
        )


def complete_structure(answer_set: AnswerSet) -> ArgStructure:
    """⟨S⁺ ↩ S⁻⟩"""
    return ArgStructure(answer_set.positive, answer_set.negative)


class StructureBuilder:
    """Applies the derivation rules for one program and re-checks every result."""

    def __init__(self, program: PrioritizedProgram, reasoner: Optional[Reasoner] = None):
        self.program = program
        self.reasoner = reasoner or Reasoner(program)
        self.signature = program.objective_signature()
        self._basics = {}
        for r in program.rules:
            self._basics[r.name] = self._basic(r)

    def basic(self, rule: Rule) -> Optional[ArgStructure]:
        if rule.name in self._basics:
            return self._basics[rule.name]
        return self._basic(rule)

    def _basic(self, rule: Rule) -> Optional[ArgStructure]:
        assumptions = rule.negative_body
        if not self.reasoner.is_self_consistent(assumptions):
            return None
        if positive_part(assumptions) & rule.positive_body:
            return None
        return self.validate(ArgStructure(frozenset([rule.head]), assumptions, rule.positive_body))

    def is_basic_shaped(self, structure: ArgStructure) -> bool:
        return structure in self._basics.values()

    def unfold(self, first: ArgStructure, second: ArgStructure) -> Optional[ArgStructure]:
        """R1: replace the condition head(r2) of ``first`` by the body of r2.

        Raises:
            PreconditionViolation: If ``first`` does not have one conclusion,
                ``second`` is not a basic structure, or head(r2) is not a condition
        """
        if len(first.conclusions) != 1:
            raise PreconditionViolation(
                "R1 unfolds structures with a single conclusion",
                details={"structure": first.render()}
            )
        if len(second.conclusions) != 1 or not self.is_basic_shaped(second):
            raise PreconditionViolation(
                "R1 unfolds with a basic structure",
                details={"structure": second.render()}
            )
        (supplied,) = second.conclusions
        if supplied not in first.conditions:
            raise PreconditionViolation(
                f"{supplied} is not a condition of {first.render()}",
                details={"structure": first.render(), "literal": str(supplied)}
            )
        assumptions = first.assumptions | second.assumptions
        conditions = (first.conditions - {supplied}) | second.conditions
        touched = set(assumptions) | set(first.conditions) | set(second.conditions) | set(first.conclusions)
        if not is_consistent(touched):
            return None
        if not self.reasoner.is_self_consistent(assumptions):
            return None
        return self.validate(ArgStructure(first.conclusions, assumptions, conditions))

    def union(self, first: ArgStructure, second: ArgStructure) -> Optional[ArgStructure]:
        """R2: join two condition-free structures.

        Raises:
            PreconditionViolation: If a premise has open conditions
        """
        self._require_condition_free("R2", first, second)
        assumptions = first.assumptions | second.assumptions
        conclusions = first.conclusions | second.conclusions
        if not is_consistent(set(assumptions) | set(conclusions)):
            return None
        if not self.reasoner.is_self_consistent(assumptions):
            return None
        return self.validate(ArgStructure(conclusions, assumptions))

    def extend(self, structure: ArgStructure, extra: Iterable[Literal]) -> Optional[ArgStructure]:
        """R3: add the default literals ``extra`` to the assumptions.

        Raises:
            PreconditionViolation: If the structure has open conditions or
                ``extra`` holds an objective literal
        """
        self._require_condition_free("R3", structure)
        extra = frozenset(extra)
        if any(not l.default_neg for l in extra):
            raise PreconditionViolation(
                "R3 only adds default literals",
                details={"extension": render_set(extra)}
            )
        assumptions = structure.assumptions | extra
        if not is_consistent(set(assumptions) | set(structure.conclusions)):
            return None
        if not self.reasoner.is_self_consistent(assumptions):
            return None
        return self.validate(ArgStructure(structure.conclusions, assumptions))

    def is_complete(self, structure: ArgStructure) -> bool:
        if not structure.condition_free:
            return False
        return all(
            l in structure.conclusions or l.default() in structure.assumptions
            for l in self.signature
        )

    def is_dependency_structure(self, structure: ArgStructure) -> bool:
        """Y consistent, X self-consistent, pos(X) ∩ Z = ∅ and Y ⊆ Cn_{P∪Z}(X)."""
        if not is_consistent(structure.conclusions):
            return False
        if not self.reasoner.is_self_consistent(structure.assumptions):
            return False
        if positive_part(structure.assumptions) & structure.conditions:
            return False
        derived = self.reasoner.consequences(structure.assumptions, structure.conditions)
        return all(l.as_literal() in derived for l in structure.conclusions)

    def validate(self, structure: ArgStructure) -> ArgStructure:
        if not self.is_dependency_structure(structure):
            raise InvariantViolation(
                f"{structure.render()} is not a dependency structure",
                details={"structure": structure.render()}
            )
        return structure

    @staticmethod
    def _require_condition_free(rule: str, *structures: ArgStructure) -> None:
        for s in structures:
            if not s.condition_free:
                raise PreconditionViolation(
                    f"{rule} applies to condition-free structures",
                    details={"structure": s.render()}
                )


def contradicts(first: ArgStructure, second: ArgStructure) -> bool:
    """Some conclusion L of ``first`` has ``not L`` among the assumptions of ``second``."""
    return any(l.default() in second.assumptions for l in first.conclusions)


def basic_structure(program: PrioritizedProgram, rule: Rule) -> Optional[ArgStructure]:
    return StructureBuilder(program).basic(rule)


def apply_R1(program: PrioritizedProgram, first: ArgStructure, second: ArgStructure) -> Optional[ArgStructure]:
    return StructureBuilder(program).unfold(first, second)


def apply_R2(program: PrioritizedProgram, first: ArgStructure, second: ArgStructure) -> Optional[ArgStructure]:
    return StructureBuilder(program).union(first, second)


def apply_R3(program: PrioritizedProgram, structure: ArgStructure, extra: Iterable[Literal]) -> Optional[ArgStructure]:
    return StructureBuilder(program).extend(structure, extra)


def is_complete(program: PrioritizedProgram, structure: ArgStructure) -> bool:
    return StructureBuilder(program).is_complete(structure)
