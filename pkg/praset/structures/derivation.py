"""
Canonical derivations of complete argumentation structures.

One derivation is built per generating set of an answer set: the rules are
ordered so that positive bodies are satisfied progressively, every rule's
basic structure is unfolded down to a condition-free structure, the results
are joined with cumulative unions, and a final extension reaches ⟨S⁺ ↩ S⁻⟩.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from praset.lang.syntax import Literal, PrioritizedProgram, Rule, render_set, sort_literals
from praset.semantics import (
    AnswerSet,
    GeneratingSet,
    minimal_generating_sets,
    sufficient_generating_sets,
)
from praset.structures.argument import ArgStructure, StructureBuilder


class DerivationRule(Enum):
    BASIC = "Basic"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


@dataclass(frozen=True)
class Step:
    structure: ArgStructure
    rule: DerivationRule
    premises: Tuple[int, ...] = ()
    rule_name: Optional[str] = None
    extension: FrozenSet[Literal] = field(default_factory=frozenset)

    def describe(self) -> str:
        if self.rule is DerivationRule.BASIC:
            return f"Basic({self.rule_name})" if self.rule_name else "Basic(empty)"
        if self.rule is DerivationRule.R3:
            return f"R3({self.premises[0] + 1}, {render_set(self.extension)})"
        return f"{self.rule.value}({', '.join(str(i + 1) for i in self.premises)})"


@dataclass(frozen=True)
class Derivation:
    """A repetition-free derivation; premises refer to earlier step indices."""
    steps: Tuple[Step, ...]
    generating_set: GeneratingSet

    @property
    def final(self) -> ArgStructure:
        return self.steps[-1].structure

    @property
    def structures(self) -> List[ArgStructure]:
        return [step.structure for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def is_well_formed(self) -> bool:
        """Step 1 is basic and every premise precedes its step."""
        if not self.steps or self.steps[0].rule is not DerivationRule.BASIC:
            return False
        return all(p < i for i, step in enumerate(self.steps) for p in step.premises)

    def render(self) -> List[str]:
        return [
            f"{i + 1}. {step.structure.render()}  [{step.describe()}]"
            for i, step in enumerate(self.steps)
        ]


class _DerivationWriter:
    """Accumulates steps, reusing the index of a structure already present."""

    def __init__(self):
        self.steps: List[Step] = []
        self._index: Dict[ArgStructure, int] = {}

    def add(self, step: Step) -> int:
        known = self._index.get(step.structure)
        if known is not None:
            return known
        self.steps.append(step)
        self._index[step.structure] = len(self.steps) - 1
        return len(self.steps) - 1


def order_rules(program: PrioritizedProgram, names: FrozenSet[str]) -> List[Rule]:
    """Repeatedly take the lowest-index rule whose positive body is already derived."""
    pending = [r for r in program.rules if r.name in names]
    derived = set()
    ordered: List[Rule] = []
    while pending:
        ready = next((r for r in pending if r.positive_body <= derived), None)
        if ready is None:
            break
        ordered.append(ready)
        derived.add(ready.head)
        pending.remove(ready)
    return ordered


def build_derivation(builder: StructureBuilder, generating_set: GeneratingSet) -> Derivation:
    program = builder.program
    answer_set = generating_set.answer_set
    writer = _DerivationWriter()
    ordered = order_rules(program, generating_set.rules)

    basic_steps: Dict[str, int] = {}
    supplier: Dict = {}
    unfolded: List[int] = []
    for rule in ordered:
        structure = builder.basic(rule)
        current = writer.add(Step(structure, DerivationRule.BASIC, rule_name=rule.name))
        basic_steps[rule.name] = current
        supplier.setdefault(rule.head, rule)
        while writer.steps[current].structure.conditions:
            structure = writer.steps[current].structure
            condition = sort_literals(structure.conditions)[0]
            source = supplier[condition]
            result = builder.unfold(structure, builder.basic(source))
            current = writer.add(Step(result, DerivationRule.R1, (current, basic_steps[source.name])))
        unfolded.append(current)

    if not unfolded:
        current = writer.add(Step(ArgStructure(frozenset(), frozenset()), DerivationRule.BASIC))
    else:
        current = unfolded[0]
        for other in unfolded[1:]:
            joined = builder.union(writer.steps[current].structure, writer.steps[other].structure)
            current = writer.add(Step(joined, DerivationRule.R2, (current, other)))

    missing = answer_set.negative - writer.steps[current].structure.assumptions
    if missing:
        extended = builder.extend(writer.steps[current].structure, missing)
        current = writer.add(Step(extended, DerivationRule.R3, (current,), extension=missing))
    return Derivation(tuple(writer.steps), generating_set)


def canonical_derivations(program: PrioritizedProgram, answer_set: AnswerSet,
                          widen: bool = False,
                          builder: Optional[StructureBuilder] = None) -> List[Derivation]:
    """One derivation per minimal generating set of S (every sufficient set when ``widen``)."""
    builder = builder or StructureBuilder(program)
    if widen:
        sets = sufficient_generating_sets(program, answer_set)
    else:
        sets = minimal_generating_sets(program, answer_set)
    return [build_derivation(builder, g) for g in sets]
